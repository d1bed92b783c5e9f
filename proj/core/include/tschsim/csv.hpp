#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tschsim {

inline constexpr std::string_view kCsvHeader =
    "experiment,policy,replication_count,sweep_param,sweep_value,cycle,overall_throughput,avg_throughput,"
    "cumulative_regret,avg_regret";

/// One output row; optional fields are emitted as empty columns.
struct CsvRow {
  std::string experiment;
  std::string policy;
  int replication_count = 0;
  std::string sweep_param;
  std::optional<double> sweep_value;
  std::optional<std::uint64_t> cycle;
  std::optional<double> overall_throughput;
  std::optional<double> avg_throughput;
  std::optional<double> cumulative_regret;
  std::optional<double> avg_regret;
};

/// Shortest decimal form that round-trips the exact double (std::to_chars).
std::string format_double(double value);

std::string csv_to_string(std::span<const CsvRow> rows);

/// Writes header plus rows. The whole file is composed in memory first, so a
/// failure never leaves a partial file behind.
void write_csv(const std::string& path, std::span<const CsvRow> rows);

/// Parses a file produced by write_csv; throws std::runtime_error on any
/// schema mismatch.
std::vector<CsvRow> read_csv(const std::string& path);

}  // namespace tschsim
