#include "tschsim/presets.hpp"

#include <stdexcept>

namespace tschsim {
namespace {

const std::vector<PolicyKind> kAllPolicies = {PolicyKind::perfect_csi, PolicyKind::statistical,
                                              PolicyKind::cmab_llr, PolicyKind::static_csi,
                                              PolicyKind::erroneous_csi};

std::vector<CsvRow> per_cycle_rows(const std::string& experiment, const SimulationConfig& config,
                                   const std::vector<PolicyKind>& policies) {
  std::vector<CsvRow> rows;
  for (PolicyKind kind : policies) {
    SimulationConfig cfg = config;
    cfg.policy.kind = kind;
    const MetricsSeries series = run_simulation(cfg);
    for (const MetricsRecord& rec : series.records) {
      CsvRow row;
      row.experiment = experiment;
      row.policy = policy_name(kind);
      row.replication_count = series.replications;
      row.cycle = rec.cycle;
      row.overall_throughput = rec.overall_throughput;
      row.avg_throughput = rec.avg_throughput;
      row.cumulative_regret = rec.cumulative_regret;
      row.avg_regret = rec.avg_regret;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

ExperimentPreset make_preset(const std::string& name) {
  ExperimentPreset p;
  p.name = name;
  if (name == "convergence") {
    p.policies = kAllPolicies;
    p.per_cycle_rows = true;
  } else if (name == "regret") {
    p.policies = {PolicyKind::cmab_llr};
    p.per_cycle_rows = true;
  } else if (name == "node_sweep") {
    // The learner is left out: its initialization needs one cycle per
    // bipartite edge, which does not fit at the top of this sweep.
    p.policies = {PolicyKind::perfect_csi, PolicyKind::statistical, PolicyKind::static_csi,
                  PolicyKind::erroneous_csi};
    p.sweep_param = "nodes";
    p.sweep_values = {10, 20, 30, 40, 50, 60, 70, 80, 90, 100};
  } else if (name == "channel_sweep") {
    p.policies = kAllPolicies;
    p.sweep_param = "channels";
    p.sweep_values = {1, 2, 3, 4, 5};
  } else if (name == "slot_sweep") {
    p.policies = kAllPolicies;
    p.sweep_param = "slots";
    p.sweep_values = {2, 3, 4, 5, 6, 7, 8, 9, 10};
  } else if (name == "fairness") {
    p.policies = {PolicyKind::statistical, PolicyKind::cmab_llr};
    p.sweep_param = "link";
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return p;
}

SimulationConfig preset_base_config(const ExperimentPreset& preset, SimulationConfig base) {
  if (preset.name == "convergence" || preset.name == "regret") {
    base.n_cycles = 5000;
    base.n_replications = 10;
  } else if (preset.name == "node_sweep") {
    base.n_cycles = 300;
    base.n_replications = 3;
  } else if (preset.name == "channel_sweep") {
    base.n_cycles = 5000;
    base.n_replications = 5;
  } else if (preset.name == "slot_sweep") {
    base.n_nodes = 10;
    base.comm_range = 40.0;
    base.radio.n_frequencies = 3;
    base.n_cycles = 2000;
    base.n_replications = 5;
  } else if (preset.name == "fairness") {
    base.n_nodes = 5;
    base.comm_range = 100.0;
    base.n_cycles = 2000;
    base.n_replications = 10;
  }
  return base;
}

std::vector<CsvRow> run_preset_rows(const ExperimentPreset& preset, const SimulationConfig& config) {
  if (preset.per_cycle_rows) return per_cycle_rows(preset.name, config, preset.policies);

  std::vector<CsvRow> rows;
  if (preset.sweep_param == "link") {
    for (PolicyKind kind : preset.policies) {
      SimulationConfig cfg = config;
      cfg.policy.kind = kind;
      const MetricsSeries series = run_simulation(cfg);
      for (std::size_t link = 0; link < series.link_avg_packets.size(); ++link) {
        CsvRow row;
        row.experiment = preset.name;
        row.policy = policy_name(kind);
        row.replication_count = series.replications;
        row.sweep_param = "link";
        row.sweep_value = static_cast<double>(link);
        row.avg_throughput = series.link_avg_packets[link];
        rows.push_back(std::move(row));
      }
    }
    return rows;
  }

  for (PolicyKind kind : preset.policies) {
    for (int value : preset.sweep_values) {
      SimulationConfig cfg = config;
      cfg.policy.kind = kind;
      if (preset.sweep_param == "nodes")
        cfg.n_nodes = value;
      else if (preset.sweep_param == "channels")
        cfg.radio.n_frequencies = value;
      else if (preset.sweep_param == "slots")
        cfg.radio.n_slots = value;
      else
        throw std::invalid_argument("unknown sweep parameter: " + preset.sweep_param);
      const MetricsSeries series = run_simulation(cfg);
      CsvRow row;
      row.experiment = preset.name;
      row.policy = policy_name(kind);
      row.replication_count = series.replications;
      row.sweep_param = preset.sweep_param;
      row.sweep_value = static_cast<double>(value);
      row.avg_throughput = series.records.back().avg_throughput;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void run_preset(const ExperimentPreset& preset, const SimulationConfig& config, const std::string& out_path) {
  const std::vector<CsvRow> rows = run_preset_rows(preset, config);
  write_csv(out_path, rows);
}

std::vector<CsvRow> run_plain_rows(const SimulationConfig& config, const std::vector<PolicyKind>& policies) {
  return per_cycle_rows("run", config, policies);
}

}  // namespace tschsim
