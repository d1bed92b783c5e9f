#include "tschsim/schedulers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tschsim {

PolicyKind parse_policy(const std::string& name) {
  if (name == "statistical") return PolicyKind::statistical;
  if (name == "cmab_llr") return PolicyKind::cmab_llr;
  if (name == "perfect_csi") return PolicyKind::perfect_csi;
  if (name == "static_csi") return PolicyKind::static_csi;
  if (name == "erroneous_csi") return PolicyKind::erroneous_csi;
  throw std::invalid_argument("unknown policy: " + name);
}

std::string policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::statistical: return "statistical";
    case PolicyKind::cmab_llr: return "cmab_llr";
    case PolicyKind::perfect_csi: return "perfect_csi";
    case PolicyKind::static_csi: return "static_csi";
    case PolicyKind::erroneous_csi: return "erroneous_csi";
  }
  return "unknown";
}

double compute_normalization(const IndependentSetCatalog& catalog, const ChannelStateSpace& space,
                             const RadioParams& params) {
  const double best = capacity(space.levels_db.back(), params);
  const double largest = static_cast<double>(catalog.max_set_size());
  return best > 0.0 && largest > 0.0 ? best * largest : 1.0;
}

namespace {

/// Realized packets/slot of one catalog set at one slot, averaged over all
/// frequencies the cell visits during the cycle.
double realized_set_packets(const std::vector<int>& set, const CycleRealization& realization,
                            const ChannelStateSpace& space, const RadioParams& params, int slot) {
  double total = 0.0;
  const std::size_t n_freq = static_cast<std::size_t>(params.n_frequencies);
  for (std::size_t f = 0; f < n_freq; ++f) {
    for (int link : set) {
      const int state = realization[static_cast<std::size_t>(link)].state[f][static_cast<std::size_t>(slot)];
      total += capacity(space.levels_db[static_cast<std::size_t>(state)], params);
    }
  }
  return total / static_cast<double>(n_freq);
}

}  // namespace

WeightMatrix realized_weight_matrix(const IndependentSetCatalog& catalog, const BipartiteSchedulingGraph& graph,
                                    const CycleRealization& realization, const ChannelStateSpace& space,
                                    const RadioParams& params) {
  // Weight depends on the cell only through its slot; compute per (set, slot)
  // once and fan out across offsets.
  const std::size_t n_sets = graph.n_real_sets();
  std::vector<std::vector<double>> per_slot(n_sets,
                                            std::vector<double>(static_cast<std::size_t>(params.n_slots), 0.0));
  for (std::size_t r = 0; r < n_sets; ++r)
    for (int t = 0; t < params.n_slots; ++t)
      per_slot[r][static_cast<std::size_t>(t)] =
          realized_set_packets(catalog.sets[r], realization, space, params, t);
  return padded_square_matrix(n_sets, graph.n_real_cells(), [&](std::size_t r, std::size_t c) {
    return per_slot[r][static_cast<std::size_t>(graph.cell_slot(c))];
  });
}

CycleEvaluation evaluate_cycle(const Assignment& assignment, const BipartiteSchedulingGraph& graph,
                               const IndependentSetCatalog& catalog, const CycleRealization& realization,
                               const ChannelStateSpace& space, const RadioParams& params,
                               double normalization_max) {
  if (normalization_max <= 0.0) throw std::invalid_argument("normalization_max must be positive");
  CycleEvaluation eval;
  eval.link_packets.assign(realization.size(), 0.0);
  const std::size_t n_freq = static_cast<std::size_t>(params.n_frequencies);
  for (const auto& [row, col] : assignment.pairs) {
    const std::size_t r = static_cast<std::size_t>(row);
    const std::size_t c = static_cast<std::size_t>(col);
    if (r >= graph.n_real_sets() || c >= graph.n_real_cells()) continue;  // zero-weight padding
    const int slot = graph.cell_slot(c);
    double set_packets = 0.0;
    for (int link : catalog.sets[r]) {
      double link_total = 0.0;
      for (std::size_t f = 0; f < n_freq; ++f) {
        const int state = realization[static_cast<std::size_t>(link)].state[f][static_cast<std::size_t>(slot)];
        link_total += capacity(space.levels_db[static_cast<std::size_t>(state)], params);
      }
      link_total /= static_cast<double>(n_freq);
      eval.link_packets[static_cast<std::size_t>(link)] += link_total;
      set_packets += link_total;
    }
    eval.total_packets += set_packets;
    eval.edge_rewards.push_back({graph.edge_id(r, c), set_packets / normalization_max});
  }
  return eval;
}

Assignment statistical_schedule(const BipartiteSchedulingGraph& mean_graph) {
  return hungarian_max_weight(mean_graph.weights());
}

Assignment perfect_csi_schedule(const IndependentSetCatalog& catalog, const BipartiteSchedulingGraph& graph,
                                const CycleRealization& realization, const ChannelStateSpace& space,
                                const RadioParams& params) {
  return hungarian_max_weight(realized_weight_matrix(catalog, graph, realization, space, params));
}

Assignment erroneous_csi_schedule(const IndependentSetCatalog& catalog, const BipartiteSchedulingGraph& graph,
                                  const CycleRealization& realization, const ChannelStateSpace& space,
                                  const RadioParams& params, double sigma, Rng& rng) {
  WeightMatrix w = realized_weight_matrix(catalog, graph, realization, space, params);
  for (std::size_t r = 0; r < graph.n_real_sets(); ++r)
    for (std::size_t c = 0; c < graph.n_real_cells(); ++c)
      w[r][c] = std::max(0.0, w[r][c] + rng.gaussian(0.0, sigma));
  return hungarian_max_weight(w);
}

Assignment llr_init_assignment(const BipartiteSchedulingGraph& graph, std::size_t edge) {
  if (edge >= graph.n_edges()) throw std::invalid_argument("edge index outside the bipartite graph");
  WeightMatrix ones = padded_square_matrix(graph.n_real_sets(), graph.n_real_cells(),
                                           [](std::size_t, std::size_t) { return 1.0; });
  return hungarian_with_forced(ones, graph.edge_set(edge), graph.edge_cell(edge));
}

void llr_update(LearnerState& state, const std::vector<EdgeReward>& rewards) {
  for (const auto& [edge, reward] : rewards) {
    const double m = static_cast<double>(state.m_hat[edge]);
    state.theta_hat[edge] = (state.theta_hat[edge] * m + reward) / (m + 1.0);
    state.m_hat[edge] += 1;
  }
}

LearnerState llr_initialize(const BipartiteSchedulingGraph& graph, const CycleHook& hook) {
  LearnerState state;
  state.theta_hat.assign(graph.n_edges(), 0.0);
  state.m_hat.assign(graph.n_edges(), 0);
  for (std::size_t p = 0; p < graph.n_edges(); ++p) {
    state.tau = p + 1;
    const Assignment a = llr_init_assignment(graph, p);
    llr_update(state, hook(a));
  }
  return state;
}

double llr_index(const LearnerState& state, std::size_t edge, double exploration_constant) {
  if (state.m_hat[edge] == 0) throw std::logic_error("llr_index on an unvisited edge");
  if (state.tau == 0) throw std::logic_error("llr_index before any cycle");
  const double bonus = std::sqrt(exploration_constant * std::log(static_cast<double>(state.tau)) /
                                 static_cast<double>(state.m_hat[edge]));
  return state.theta_hat[edge] + bonus;
}

Assignment llr_step(LearnerState& state, const BipartiteSchedulingGraph& graph, const CycleHook& hook,
                    double exploration_constant) {
  state.tau += 1;
  WeightMatrix w = padded_square_matrix(graph.n_real_sets(), graph.n_real_cells(),
                                        [&](std::size_t r, std::size_t c) {
                                          return llr_index(state, graph.edge_id(r, c), exploration_constant);
                                        });
  Assignment a = hungarian_max_weight(w);
  llr_update(state, hook(a));
  return a;
}

namespace {

class StatisticalPolicy final : public CyclePolicy {
 public:
  explicit StatisticalPolicy(const BipartiteSchedulingGraph& mean_graph)
      : assignment_(statistical_schedule(mean_graph)) {}

  Assignment decide(const CycleRealization&, Rng&) override { return assignment_; }

 private:
  Assignment assignment_;
};

class PerfectCsiPolicy final : public CyclePolicy {
 public:
  PerfectCsiPolicy(const IndependentSetCatalog& catalog, const BipartiteSchedulingGraph& graph,
                   const ChannelStateSpace& space, const RadioParams& params)
      : catalog_(catalog), graph_(graph), space_(space), params_(params) {}

  Assignment decide(const CycleRealization& upcoming, Rng&) override {
    return perfect_csi_schedule(catalog_, graph_, upcoming, space_, params_);
  }

 private:
  const IndependentSetCatalog& catalog_;
  const BipartiteSchedulingGraph& graph_;
  const ChannelStateSpace& space_;
  const RadioParams& params_;
};

class StaticCsiPolicy final : public CyclePolicy {
 public:
  StaticCsiPolicy(const IndependentSetCatalog& catalog, const BipartiteSchedulingGraph& graph,
                  const ChannelStateSpace& space, const RadioParams& params)
      : catalog_(catalog), graph_(graph), space_(space), params_(params) {}

  Assignment decide(const CycleRealization& upcoming, Rng&) override {
    if (!frozen_) {
      assignment_ = perfect_csi_schedule(catalog_, graph_, upcoming, space_, params_);
      frozen_ = true;
    }
    return assignment_;
  }

 private:
  const IndependentSetCatalog& catalog_;
  const BipartiteSchedulingGraph& graph_;
  const ChannelStateSpace& space_;
  const RadioParams& params_;
  Assignment assignment_;
  bool frozen_ = false;
};

class ErroneousCsiPolicy final : public CyclePolicy {
 public:
  ErroneousCsiPolicy(const IndependentSetCatalog& catalog, const BipartiteSchedulingGraph& graph,
                     const ChannelStateSpace& space, const RadioParams& params, double sigma)
      : catalog_(catalog), graph_(graph), space_(space), params_(params), sigma_(sigma) {}

  Assignment decide(const CycleRealization& upcoming, Rng& noise_rng) override {
    return erroneous_csi_schedule(catalog_, graph_, upcoming, space_, params_, sigma_, noise_rng);
  }

 private:
  const IndependentSetCatalog& catalog_;
  const BipartiteSchedulingGraph& graph_;
  const ChannelStateSpace& space_;
  const RadioParams& params_;
  double sigma_;
};

class LlrPolicy final : public CyclePolicy {
 public:
  LlrPolicy(const BipartiteSchedulingGraph& graph, double exploration_constant)
      : graph_(graph), exploration_(exploration_constant) {
    state_.theta_hat.assign(graph.n_edges(), 0.0);
    state_.m_hat.assign(graph.n_edges(), 0);
  }

  Assignment decide(const CycleRealization&, Rng&) override {
    if (state_.tau < graph_.n_edges()) {
      const std::size_t p = state_.tau;
      state_.tau = p + 1;
      return llr_init_assignment(graph_, p);
    }
    state_.tau += 1;
    WeightMatrix w = padded_square_matrix(graph_.n_real_sets(), graph_.n_real_cells(),
                                          [&](std::size_t r, std::size_t c) {
                                            return llr_index(state_, graph_.edge_id(r, c), exploration_);
                                          });
    return hungarian_max_weight(w);
  }

  void observe(const std::vector<EdgeReward>& rewards) override { llr_update(state_, rewards); }

  const LearnerState* learner() const override { return &state_; }

 private:
  const BipartiteSchedulingGraph& graph_;
  double exploration_;
  LearnerState state_;
};

}  // namespace

std::unique_ptr<CyclePolicy> make_policy(PolicyKind kind, const IndependentSetCatalog& catalog,
                                         const BipartiteSchedulingGraph& mean_graph,
                                         const ChannelStateSpace& space, const RadioParams& params,
                                         double sigma, double exploration_constant) {
  switch (kind) {
    case PolicyKind::statistical: return std::make_unique<StatisticalPolicy>(mean_graph);
    case PolicyKind::cmab_llr: return std::make_unique<LlrPolicy>(mean_graph, exploration_constant);
    case PolicyKind::perfect_csi:
      return std::make_unique<PerfectCsiPolicy>(catalog, mean_graph, space, params);
    case PolicyKind::static_csi: return std::make_unique<StaticCsiPolicy>(catalog, mean_graph, space, params);
    case PolicyKind::erroneous_csi:
      return std::make_unique<ErroneousCsiPolicy>(catalog, mean_graph, space, params, sigma);
  }
  throw std::invalid_argument("unhandled policy kind");
}

}  // namespace tschsim
