#include "tschsim/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tschsim/errors.hpp"

namespace tschsim {

void SimulationConfig::validate() const {
  radio.validate();
  space.validate();
  if (topology_file.empty() && !topology.has_value()) {
    if (n_nodes < 2) throw std::invalid_argument("n_nodes must be >= 2");
    if (area_width <= 0.0 || area_height <= 0.0) throw std::invalid_argument("area must be positive");
    if (comm_range <= 0.0 || interference_range <= 0.0) throw std::invalid_argument("ranges must be positive");
  }
  if (catalog_cap == 0) throw std::invalid_argument("catalog_cap must be positive");
  if (n_cycles < 1) throw std::invalid_argument("n_cycles must be >= 1");
  if (n_replications < 1) throw std::invalid_argument("n_replications must be >= 1");
  if (policy.error_sigma < 0.0 || policy.error_sigma_factor < 0.0)
    throw std::invalid_argument("error sigma must be >= 0");
  if (policy.normalization_max < 0.0 || policy.exploration_constant < 0.0)
    throw std::invalid_argument("normalization and exploration constants must be >= 0");
}

Scenario build_scenario(const SimulationConfig& config) {
  config.validate();

  Scenario s;
  if (config.topology.has_value()) {
    s.topology = *config.topology;
    s.topology.validate();
  } else if (!config.topology_file.empty()) {
    s.topology = load_topology(config.topology_file);
  } else {
    s.topology = generate_topology(config.n_nodes, config.area_width, config.area_height, config.comm_range,
                                   config.interference_range, Rng::derive(config.master_seed, 0).next_u64());
  }

  s.collisions = build_collision_graph(s.topology);
  s.catalog = enumerate_independent_sets(s.collisions, config.catalog_cap);
  s.space = config.space;
  s.radio = config.radio;

  if (config.distributions.has_value()) {
    s.distributions = *config.distributions;
    s.distributions.validate();
    if (s.distributions.n_links() != s.topology.links.size())
      throw std::invalid_argument("distribution link count does not match the topology");
    if (s.distributions.n_frequencies() != static_cast<std::size_t>(config.radio.n_frequencies))
      throw std::invalid_argument("distribution frequency count does not match n_frequencies");
    if (s.distributions.n_states() != s.space.n_states())
      throw std::invalid_argument("distribution state count does not match the state space");
  } else {
    s.distributions = generate_distributions(s.topology, s.space, config.radio.n_frequencies,
                                             Rng::derive(config.master_seed, 1).next_u64());
  }

  std::vector<double> link_means(s.topology.links.size(), 0.0);
  for (std::size_t e = 0; e < link_means.size(); ++e)
    link_means[e] = mean_capacity(e, s.distributions, s.space, s.radio);

  s.set_mean_weights.assign(s.catalog.size(), 0.0);
  for (std::size_t r = 0; r < s.catalog.size(); ++r) {
    double sum = 0.0;
    for (int link : s.catalog.sets[r]) sum += link_means[static_cast<std::size_t>(link)];
    s.set_mean_weights[r] = sum;
  }

  s.mean_graph = build_bipartite(s.catalog, s.radio.n_slots, s.radio.n_frequencies, s.set_mean_weights);
  s.u_star = compute_optimal_mean(s.mean_graph);

  s.normalization_max = config.policy.normalization_max > 0.0
                            ? config.policy.normalization_max
                            : compute_normalization(s.catalog, s.space, s.radio);

  double weight_sum = 0.0;
  for (double w : s.set_mean_weights) weight_sum += w;
  s.mean_edge_weight = s.catalog.size() > 0 ? weight_sum / static_cast<double>(s.catalog.size()) : 0.0;
  s.sigma = config.policy.error_sigma > 0.0 ? config.policy.error_sigma
                                            : config.policy.error_sigma_factor * s.mean_edge_weight;
  s.exploration_constant = config.policy.exploration_constant > 0.0
                               ? config.policy.exploration_constant
                               : static_cast<double>(s.mean_graph.n_edges()) + 1.0;
  return s;
}

double compute_optimal_mean(const BipartiteSchedulingGraph& mean_graph) {
  return hungarian_max_weight(mean_graph.weights()).total_weight;
}

void update_metrics(std::vector<MetricsRecord>& records, double overall_throughput, double u_star) {
  MetricsRecord rec;
  rec.cycle = records.size() + 1;
  rec.overall_throughput = overall_throughput;
  const double tau = static_cast<double>(rec.cycle);
  const double prev_avg = records.empty() ? 0.0 : records.back().avg_throughput;
  rec.avg_throughput = (1.0 - 1.0 / tau) * prev_avg + overall_throughput / tau;
  const double prev_z = records.empty() ? 0.0 : records.back().cumulative_regret;
  rec.cumulative_regret = prev_z + (u_star - overall_throughput);
  rec.avg_regret = rec.cumulative_regret / tau;
  records.push_back(rec);
}

CycleOutcome run_cycle(CyclePolicy& policy, const Scenario& scenario, Rng& channel_rng, Rng& noise_rng) {
  const CycleRealization realization =
      sample_cycle(scenario.distributions, scenario.space, scenario.radio.n_slots, channel_rng);
  const Assignment assignment = policy.decide(realization, noise_rng);
  CycleOutcome outcome;
  outcome.evaluation = evaluate_cycle(assignment, scenario.mean_graph, scenario.catalog, realization,
                                      scenario.space, scenario.radio, scenario.normalization_max);
  outcome.overall_throughput = outcome.evaluation.total_packets;
  policy.observe(outcome.evaluation.edge_rewards);
  return outcome;
}

MetricsSeries run_simulation(const SimulationConfig& config) {
  const Scenario scenario = build_scenario(config);

  if (config.policy.kind == PolicyKind::cmab_llr &&
      static_cast<std::size_t>(config.n_cycles) < scenario.mean_graph.n_edges())
    throw std::invalid_argument("n_cycles (" + std::to_string(config.n_cycles) +
                                ") is below the bipartite edge count (" +
                                std::to_string(scenario.mean_graph.n_edges()) +
                                "); the learner cannot finish initialization");

  MetricsSeries series;
  series.u_star = scenario.u_star;
  series.n_links = scenario.topology.links.size();
  series.n_sets = scenario.catalog.size();
  series.n_cells = scenario.mean_graph.n_real_cells();
  series.n_edges = scenario.mean_graph.n_edges();
  series.replications = config.n_replications;
  series.records.assign(static_cast<std::size_t>(config.n_cycles), MetricsRecord{});
  series.link_avg_packets.assign(series.n_links, 0.0);

  for (int rep = 0; rep < config.n_replications; ++rep) {
    Rng channel_rng = Rng::derive(config.master_seed, 0x1000 + static_cast<std::uint64_t>(rep));
    Rng noise_rng = Rng::derive(config.master_seed, 0x2000 + static_cast<std::uint64_t>(rep));
    auto policy = make_policy(config.policy.kind, scenario.catalog, scenario.mean_graph, scenario.space,
                              scenario.radio, scenario.sigma, scenario.exploration_constant);

    std::vector<MetricsRecord> records;
    records.reserve(static_cast<std::size_t>(config.n_cycles));
    std::vector<double> link_totals(series.n_links, 0.0);
    for (int cycle = 0; cycle < config.n_cycles; ++cycle) {
      const CycleOutcome outcome = run_cycle(*policy, scenario, channel_rng, noise_rng);
      update_metrics(records, outcome.overall_throughput, scenario.u_star);
      for (std::size_t e = 0; e < series.n_links; ++e)
        link_totals[e] += outcome.evaluation.link_packets[e];
    }

    series.replication_final_avg.push_back(records.back().avg_throughput);
    const std::size_t window = std::min<std::size_t>(static_cast<std::size_t>(std::max(config.tail_window, 1)),
                                                     records.size());
    double tail_sum = 0.0;
    for (std::size_t i = records.size() - window; i < records.size(); ++i)
      tail_sum += records[i].overall_throughput;
    series.replication_tail_mean.push_back(tail_sum / static_cast<double>(window));

    const double inv_reps = 1.0 / static_cast<double>(config.n_replications);
    for (std::size_t i = 0; i < records.size(); ++i) {
      series.records[i].cycle = records[i].cycle;
      series.records[i].overall_throughput += records[i].overall_throughput * inv_reps;
      series.records[i].avg_throughput += records[i].avg_throughput * inv_reps;
      series.records[i].cumulative_regret += records[i].cumulative_regret * inv_reps;
      series.records[i].avg_regret += records[i].avg_regret * inv_reps;
    }
    for (std::size_t e = 0; e < series.n_links; ++e)
      series.link_avg_packets[e] += link_totals[e] / static_cast<double>(config.n_cycles) * inv_reps;
  }
  return series;
}

}  // namespace tschsim
