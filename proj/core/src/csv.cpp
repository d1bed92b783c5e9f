#include "tschsim/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tschsim {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

namespace {

std::string opt_double(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::optional<double> parse_opt_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::runtime_error("bad CSV number: " + s);
  return v;
}

}  // namespace

std::string csv_to_string(std::span<const CsvRow> rows) {
  std::string out;
  out += kCsvHeader;
  out += '\n';
  for (const CsvRow& r : rows) {
    out += r.experiment;
    out += ',';
    out += r.policy;
    out += ',';
    out += std::to_string(r.replication_count);
    out += ',';
    out += r.sweep_param;
    out += ',';
    out += opt_double(r.sweep_value);
    out += ',';
    out += r.cycle ? std::to_string(*r.cycle) : std::string();
    out += ',';
    out += opt_double(r.overall_throughput);
    out += ',';
    out += opt_double(r.avg_throughput);
    out += ',';
    out += opt_double(r.cumulative_regret);
    out += ',';
    out += opt_double(r.avg_regret);
    out += '\n';
  }
  return out;
}

void write_csv(const std::string& path, std::span<const CsvRow> rows) {
  const std::string body = csv_to_string(rows);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write CSV file: " + path);
  out << body;
  if (!out) throw std::runtime_error("short write on CSV file: " + path);
}

std::vector<CsvRow> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open CSV file: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("bad CSV header in " + path);

  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 10) throw std::runtime_error("bad CSV row in " + path + ": " + line);
    CsvRow r;
    r.experiment = fields[0];
    r.policy = fields[1];
    r.replication_count = std::stoi(fields[2]);
    r.sweep_param = fields[3];
    r.sweep_value = parse_opt_double(fields[4]);
    r.cycle = fields[5].empty() ? std::nullopt : std::optional<std::uint64_t>(std::stoull(fields[5]));
    r.overall_throughput = parse_opt_double(fields[6]);
    r.avg_throughput = parse_opt_double(fields[7]);
    r.cumulative_regret = parse_opt_double(fields[8]);
    r.avg_regret = parse_opt_double(fields[9]);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace tschsim
