#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tschsim/config.hpp"
#include "tschsim/csv.hpp"
#include "tschsim/engine.hpp"
#include "tschsim/errors.hpp"
#include "tschsim/presets.hpp"

namespace {

// Exit codes: 0 success, 1 runtime failure, 2 usage error, 3 missing file,
// 4 unknown config key, 5 out-of-range config value.
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMissingFile = 3;
constexpr int kExitUnknownKey = 4;
constexpr int kExitOutOfRange = 5;

int config_error_code(const tschsim::ConfigError& e) {
  switch (e.kind) {
    case tschsim::ConfigError::Kind::missing_file: return kExitMissingFile;
    case tschsim::ConfigError::Kind::unknown_key: return kExitUnknownKey;
    case tschsim::ConfigError::Kind::out_of_range: return kExitOutOfRange;
  }
  return kExitRuntime;
}

void print_summary(const std::vector<tschsim::CsvRow>& rows, const tschsim::SimulationConfig& cfg) {
  const double frame_seconds =
      static_cast<double>(cfg.radio.n_slots) * cfg.radio.slot_duration_ms / 1000.0;
  std::string last_policy;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (!it->cycle || !it->avg_throughput) continue;
    if (it->policy == last_policy) continue;
    last_policy = it->policy;
    const double per_frame = *it->avg_throughput;
    std::cout << "  " << it->policy << ": avg throughput " << per_frame << " packets/slot-frame ("
              << per_frame / frame_seconds << " packets/s)\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TSCH slot-frame scheduling simulator"};

  std::string config_path;
  std::string preset_name;
  std::string out_path = "results.csv";
  std::string policy_arg;
  tschsim::ConfigOverrides overrides;
  std::optional<std::uint64_t> seed;
  std::optional<int> nodes, slots, channels, cycles, replications;

  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--preset", preset_name,
                 "experiment preset: convergence, regret, node_sweep, channel_sweep, slot_sweep, fairness");
  app.add_option("--seed", seed, "master RNG seed (fallback: config file, then TSCHSIM_SEED)");
  app.add_option("--out", out_path, "output CSV path");
  app.add_option("--nodes", nodes, "number of nodes");
  app.add_option("--slots", slots, "time slots per slot-frame");
  app.add_option("--channels", channels, "channel offsets per slot-frame");
  app.add_option("--cycles", cycles, "slot-frame cycles per replication");
  app.add_option("--replications", replications, "independent replications");
  app.add_option("--policy", policy_arg, "policy name or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  overrides.nodes = nodes;
  overrides.slots = slots;
  overrides.channels = channels;
  overrides.cycles = cycles;
  overrides.replications = replications;
  overrides.seed = seed;

  bool all_policies = policy_arg == "all";
  if (!policy_arg.empty() && !all_policies) {
    try {
      tschsim::parse_policy(policy_arg);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    overrides.policy = policy_arg;
  }

  try {
    std::optional<tschsim::ExperimentPreset> preset;
    tschsim::SimulationConfig base;
    if (!preset_name.empty()) {
      try {
        preset = tschsim::make_preset(preset_name);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      base = tschsim::preset_base_config(*preset, base);
    }

    const tschsim::SimulationConfig cfg = tschsim::parse_config(base, config_path, overrides);

    std::vector<tschsim::CsvRow> rows;
    if (preset) {
      if (all_policies) {
        preset->policies = {tschsim::PolicyKind::perfect_csi, tschsim::PolicyKind::statistical,
                            tschsim::PolicyKind::cmab_llr, tschsim::PolicyKind::static_csi,
                            tschsim::PolicyKind::erroneous_csi};
      } else if (overrides.policy) {
        preset->policies = {cfg.policy.kind};
      }
      rows = tschsim::run_preset_rows(*preset, cfg);
    } else {
      std::vector<tschsim::PolicyKind> policies;
      if (all_policies) {
        policies = {tschsim::PolicyKind::perfect_csi, tschsim::PolicyKind::statistical,
                    tschsim::PolicyKind::cmab_llr, tschsim::PolicyKind::static_csi,
                    tschsim::PolicyKind::erroneous_csi};
      } else {
        policies = {cfg.policy.kind};
      }
      rows = tschsim::run_plain_rows(cfg, policies);
    }

    tschsim::write_csv(out_path, rows);
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
    print_summary(rows, cfg);
    return 0;
  } catch (const tschsim::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return config_error_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
