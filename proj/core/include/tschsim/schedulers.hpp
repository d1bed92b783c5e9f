#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tschsim/channel.hpp"
#include "tschsim/matching.hpp"
#include "tschsim/rng.hpp"
#include "tschsim/topology.hpp"

namespace tschsim {

enum class PolicyKind { statistical, cmab_llr, perfect_csi, static_csi, erroneous_csi };

PolicyKind parse_policy(const std::string& name);
std::string policy_name(PolicyKind kind);

struct PolicyConfig {
  PolicyKind kind = PolicyKind::statistical;
  /// Gaussian stdev added to realized weights (erroneous_csi). 0 resolves to
  /// error_sigma_factor times the scenario's mean edge weight.
  double error_sigma = 0.0;
  double error_sigma_factor = 0.5;
  /// Reward scale mapping packets/slot into [0,1]. 0 resolves to
  /// capacity(best state) * largest catalog set.
  double normalization_max = 0.0;
  /// Constant inside the exploration bonus sqrt(c * ln tau / m). 0 resolves
  /// to |E|+1 (the number of bipartite edges plus one).
  double exploration_constant = 0.0;
};

/// Bandit bookkeeping per bipartite edge: running mean estimate, visit
/// count, and the cycle counter.
struct LearnerState {
  std::vector<double> theta_hat;
  std::vector<std::uint64_t> m_hat;
  std::uint64_t tau = 0;

  std::size_t n_edges() const { return theta_hat.size(); }
};

/// Normalized reward observed on one matched bipartite edge.
struct EdgeReward {
  std::size_t edge = 0;
  double reward = 0.0;
};

/// Result of applying an assignment for one cycle.
struct CycleEvaluation {
  std::vector<EdgeReward> edge_rewards;  // matched real edges, rewards in [0,1]
  double total_packets = 0.0;            // de-normalized packets per slot-frame
  std::vector<double> link_packets;      // per physical link, packets this cycle
};

/// Callback that applies an assignment to the network for one cycle and
/// reports the normalized per-edge rewards.
using CycleHook = std::function<std::vector<EdgeReward>(const Assignment&)>;

double compute_normalization(const IndependentSetCatalog& catalog, const ChannelStateSpace& space,
                             const RadioParams& params);

/// Realized per-(set, cell) weights for one cycle: member-link capacities at
/// the sampled states of the cell's slot, averaged over all frequencies,
/// zero-padded to square.
WeightMatrix realized_weight_matrix(const IndependentSetCatalog& catalog, const BipartiteSchedulingGraph& graph,
                                    const CycleRealization& realization, const ChannelStateSpace& space,
                                    const RadioParams& params);

/// Applies an assignment against one cycle's realization. Each matched real
/// edge earns its set's realized packet count at the cell's slot, averaged
/// across frequencies; rewards are divided by normalization_max.
CycleEvaluation evaluate_cycle(const Assignment& assignment, const BipartiteSchedulingGraph& graph,
                               const IndependentSetCatalog& catalog, const CycleRealization& realization,
                               const ChannelStateSpace& space, const RadioParams& params,
                               double normalization_max);

/// Hungarian optimum on the time-invariant mean weights.
Assignment statistical_schedule(const BipartiteSchedulingGraph& mean_graph);

/// Hungarian optimum on the current cycle's realized weights.
Assignment perfect_csi_schedule(const IndependentSetCatalog& catalog, const BipartiteSchedulingGraph& graph,
                                const CycleRealization& realization, const ChannelStateSpace& space,
                                const RadioParams& params);

/// Hungarian optimum on realized weights corrupted by zero-mean Gaussian
/// noise (clamped at zero).
Assignment erroneous_csi_schedule(const IndependentSetCatalog& catalog, const BipartiteSchedulingGraph& graph,
                                  const CycleRealization& realization, const ChannelStateSpace& space,
                                  const RadioParams& params, double sigma, Rng& rng);

/// Forced matching used during bandit initialization: all-ones base weights
/// with edge p guaranteed present.
Assignment llr_init_assignment(const BipartiteSchedulingGraph& graph, std::size_t edge);

/// Running-mean / visit-count update for the matched edges; unmatched edges
/// are untouched.
void llr_update(LearnerState& state, const std::vector<EdgeReward>& rewards);

/// Initialization sweep: one cycle per bipartite edge, each forced into the
/// evaluated matching. Afterwards every edge has been visited at least once
/// and tau equals the edge count.
LearnerState llr_initialize(const BipartiteSchedulingGraph& graph, const CycleHook& hook);

/// Optimistic index: theta_hat + sqrt(exploration_constant * ln(tau) / m_hat).
double llr_index(const LearnerState& state, std::size_t edge, double exploration_constant);

/// One learning cycle: bump tau, match on the index weights, evaluate through
/// the hook, and fold the rewards into the state.
Assignment llr_step(LearnerState& state, const BipartiteSchedulingGraph& graph, const CycleHook& hook,
                    double exploration_constant);

/// Per-cycle scheduling policy as driven by the simulation engine. decide()
/// sees the upcoming cycle's realization (only the CSI-aware baselines look
/// at it); observe() feeds back the realized rewards.
class CyclePolicy {
 public:
  virtual ~CyclePolicy() = default;
  virtual Assignment decide(const CycleRealization& upcoming, Rng& noise_rng) = 0;
  virtual void observe(const std::vector<EdgeReward>&) {}
  virtual const LearnerState* learner() const { return nullptr; }
};

/// Factory over the five policy kinds. sigma and exploration_constant must
/// already be resolved to concrete values.
std::unique_ptr<CyclePolicy> make_policy(PolicyKind kind, const IndependentSetCatalog& catalog,
                                         const BipartiteSchedulingGraph& mean_graph,
                                         const ChannelStateSpace& space, const RadioParams& params,
                                         double sigma, double exploration_constant);

}  // namespace tschsim
