#pragma once

#include <string>
#include <vector>

#include "tschsim/csv.hpp"
#include "tschsim/engine.hpp"

namespace tschsim {

/// Canned experiment: which policies to run, what to sweep, and whether the
/// output is one row per cycle or one row per sweep point.
struct ExperimentPreset {
  std::string name;
  std::vector<PolicyKind> policies;
  std::string sweep_param;        // "nodes", "channels", "slots", "link", or empty
  std::vector<int> sweep_values;  // empty for per-cycle experiments
  bool per_cycle_rows = false;
};

/// Known presets: convergence, regret, node_sweep, channel_sweep, slot_sweep,
/// fairness. Throws std::invalid_argument for anything else.
ExperimentPreset make_preset(const std::string& name);

/// Preset-specific base configuration (cycle counts, replication counts, and
/// the fixture sizes each experiment calls for). Config files and flags
/// overlay these afterwards.
SimulationConfig preset_base_config(const ExperimentPreset& preset, SimulationConfig base);

/// Runs every (policy, sweep point) combination and returns the CSV rows.
std::vector<CsvRow> run_preset_rows(const ExperimentPreset& preset, const SimulationConfig& config);

/// run_preset_rows plus an atomic CSV write to out_path.
void run_preset(const ExperimentPreset& preset, const SimulationConfig& config, const std::string& out_path);

/// Per-cycle series for an explicit policy list, without preset defaults
/// (experiment column "run").
std::vector<CsvRow> run_plain_rows(const SimulationConfig& config, const std::vector<PolicyKind>& policies);

}  // namespace tschsim
