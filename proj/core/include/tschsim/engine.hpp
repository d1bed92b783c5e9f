#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tschsim/channel.hpp"
#include "tschsim/matching.hpp"
#include "tschsim/schedulers.hpp"
#include "tschsim/topology.hpp"

namespace tschsim {

/// Full experiment configuration. Radio defaults follow the reference
/// parameter table (35 nodes, 8 slots, 3 channel offsets, 10 mW, 5000-bit
/// packets, 15 ms cells); geometry defaults keep the collision graph dense
/// enough for exact independent-set enumeration.
struct SimulationConfig {
  int n_nodes = 35;
  double area_width = 100.0;
  double area_height = 100.0;
  double comm_range = 15.0;
  double interference_range = 150.0;
  std::size_t catalog_cap = 20000;
  RadioParams radio;
  ChannelStateSpace space = ChannelStateSpace::default_eight_level();
  PolicyConfig policy;
  int n_cycles = 5000;
  int n_replications = 10;
  /// Trailing window used for the per-replication converged-throughput
  /// summary (clamped to n_cycles).
  int tail_window = 500;
  std::uint64_t master_seed = 1;
  /// Optional plain-text topology file; overrides random generation.
  std::string topology_file;
  /// Direct overrides, used by tests and presets.
  std::optional<NetworkTopology> topology;
  std::optional<LinkChannelDistribution> distributions;

  void validate() const;
};

/// Everything derived from a config before any cycle runs: the instance the
/// policies compete on.
struct Scenario {
  NetworkTopology topology;
  CollisionGraph collisions;
  IndependentSetCatalog catalog;
  ChannelStateSpace space;
  RadioParams radio;
  LinkChannelDistribution distributions;
  std::vector<double> set_mean_weights;
  BipartiteSchedulingGraph mean_graph;
  double u_star = 0.0;            // optimal mean packets per slot-frame
  double normalization_max = 0.0;
  double mean_edge_weight = 0.0;
  double sigma = 0.0;             // resolved erroneous-CSI noise stdev
  double exploration_constant = 0.0;
};

Scenario build_scenario(const SimulationConfig& config);

/// Hungarian total on the true mean weights: the regret benchmark.
double compute_optimal_mean(const BipartiteSchedulingGraph& mean_graph);

struct MetricsRecord {
  std::uint64_t cycle = 0;
  double overall_throughput = 0.0;  // packets per slot-frame this cycle
  double avg_throughput = 0.0;      // running mean up to this cycle
  double cumulative_regret = 0.0;
  double avg_regret = 0.0;
};

/// Appends the record for cycle records.size()+1, maintaining the running
/// average incrementally and the regret against u_star.
void update_metrics(std::vector<MetricsRecord>& records, double overall_throughput, double u_star);

/// Replication-averaged per-cycle series plus per-link totals and scenario
/// dimensions.
struct MetricsSeries {
  std::vector<MetricsRecord> records;
  std::vector<double> link_avg_packets;  // mean packets per cycle, per link
  /// Per-replication summaries, indexed by replication: the final running
  /// average and the mean throughput over the trailing tail_window cycles.
  std::vector<double> replication_final_avg;
  std::vector<double> replication_tail_mean;
  double u_star = 0.0;
  std::size_t n_links = 0;
  std::size_t n_sets = 0;
  std::size_t n_cells = 0;
  std::size_t n_edges = 0;
  int replications = 0;
};

struct CycleOutcome {
  double overall_throughput = 0.0;
  CycleEvaluation evaluation;
};

/// One slot-frame cycle: sample a realization, let the policy decide (the
/// CSI-aware baselines peek at it), evaluate, and feed the rewards back.
CycleOutcome run_cycle(CyclePolicy& policy, const Scenario& scenario, Rng& channel_rng, Rng& noise_rng);

/// Replication loop: independent channel/noise streams derived from the
/// master seed, metrics averaged across replications in index order.
MetricsSeries run_simulation(const SimulationConfig& config);

}  // namespace tschsim
