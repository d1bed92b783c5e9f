#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tschsim/rng.hpp"
#include "tschsim/topology.hpp"

namespace tschsim {

/// Quantized SNR state space: representative levels in dB plus the interval
/// boundaries (levels.size() + 1 values, last one +inf).
struct ChannelStateSpace {
  std::vector<double> levels_db;
  std::vector<double> boundaries_db;

  static ChannelStateSpace default_eight_level();

  std::size_t n_states() const { return levels_db.size(); }
  void validate() const;
};

/// Radio constants. transmit power P in mW, beta_n0 the noise-bandwidth
/// product, beta the bandwidth factor (defaults to the packet size so
/// capacities come out in packets per slot), packet size l in bits, slot
/// duration in ms, and the slot-frame dimensions F x T.
struct RadioParams {
  double transmit_power = 10.0;
  double beta_n0 = 2.0;
  double beta = 5000.0;
  double packet_bits = 5000.0;
  double slot_duration_ms = 15.0;
  int n_frequencies = 3;
  int n_slots = 8;

  void validate() const;
};

/// One probability row over the SNR states per (link, frequency) pair.
struct LinkChannelDistribution {
  /// pmf[link][frequency][state]
  std::vector<std::vector<std::vector<double>>> pmf;

  std::size_t n_links() const { return pmf.size(); }
  std::size_t n_frequencies() const { return pmf.empty() ? 0 : pmf[0].size(); }
  std::size_t n_states() const { return n_frequencies() == 0 ? 0 : pmf[0][0].size(); }

  void validate() const;

  /// Text format: header `links F states`, then one row per (link, frequency)
  /// in row-major order.
  void save(const std::string& path) const;
  static LinkChannelDistribution load(const std::string& path);
};

/// Sampled states for one link over a slot-frame cycle: state[frequency][slot].
struct ChannelRealization {
  std::vector<std::vector<int>> state;
};

/// Per-link realizations for one full cycle, indexed by link.
using CycleRealization = std::vector<ChannelRealization>;

/// TSCH hop: physical channel for a cell with the given offset at the given
/// absolute slot number. map must be a permutation of [0, n_channels).
int hop_frequency(std::uint64_t asn, int ch_offset, int n_channels, std::span<const int> map);

/// Identity mapping variant.
int hop_frequency(std::uint64_t asn, int ch_offset, int n_channels);

/// Seeded random permutation usable as the hop mapping function.
std::vector<int> random_channel_map(int n_channels, std::uint64_t seed);

/// Power needed to push `packets` packets through a slot at linear SNR gain
/// x: (beta*N0/x) * (2^(packets*l/beta) - 1). Throws std::domain_error for
/// x <= 0.
double power_required(double x_linear, double packets, const RadioParams& params);

/// Packets per slot at SNR state x_db: (beta/l) * log2(1 + x_lin*P/(beta*N0)).
double capacity(double x_db, const RadioParams& params);

/// Expected packets per slot over link `link`: states weighted by the pmf,
/// averaged uniformly over the frequencies.
double mean_capacity(std::size_t link, const LinkChannelDistribution& dist, const ChannelStateSpace& space,
                     const RadioParams& params);

/// Independent state draws for every (link, frequency, slot) of one cycle.
CycleRealization sample_cycle(const LinkChannelDistribution& dist, const ChannelStateSpace& space, int n_slots,
                              Rng& rng);

/// Random per-(link, frequency) rows: Dirichlet(1,...,1) via normalized
/// exponentials, seeded.
LinkChannelDistribution generate_distributions(const NetworkTopology& topo, const ChannelStateSpace& space,
                                               int n_frequencies, std::uint64_t seed);

}  // namespace tschsim
