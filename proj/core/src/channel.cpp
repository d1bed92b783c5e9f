#include "tschsim/channel.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tschsim {

ChannelStateSpace ChannelStateSpace::default_eight_level() {
  ChannelStateSpace space;
  space.levels_db = {-13.0, -8.47, -5.41, -3.28, -1.59, -0.08, 1.42, 3.18};
  space.boundaries_db = {-13.0, -8.47, -5.41, -3.28, -1.59, -0.08, 1.42, 3.18,
                         std::numeric_limits<double>::infinity()};
  return space;
}

void ChannelStateSpace::validate() const {
  if (levels_db.empty()) throw std::invalid_argument("state space needs at least one level");
  if (boundaries_db.size() != levels_db.size() + 1)
    throw std::invalid_argument("state space needs levels+1 boundaries");
  for (std::size_t i = 0; i < levels_db.size(); ++i) {
    if (i > 0 && levels_db[i] <= levels_db[i - 1])
      throw std::invalid_argument("levels must be strictly increasing");
    if (levels_db[i] < boundaries_db[i] || levels_db[i] >= boundaries_db[i + 1])
      throw std::invalid_argument("level " + std::to_string(i) + " outside its interval");
  }
}

void RadioParams::validate() const {
  if (transmit_power <= 0.0 || beta_n0 <= 0.0 || beta <= 0.0 || packet_bits <= 0.0 || slot_duration_ms <= 0.0)
    throw std::invalid_argument("radio parameters must be positive");
  if (n_frequencies < 1 || n_slots < 1) throw std::invalid_argument("slot-frame dimensions must be >= 1");
}

void LinkChannelDistribution::validate() const {
  for (const auto& link_rows : pmf) {
    if (link_rows.size() != n_frequencies()) throw std::invalid_argument("ragged pmf frequency dimension");
    for (const auto& row : link_rows) {
      if (row.size() != n_states()) throw std::invalid_argument("ragged pmf state dimension");
      double sum = 0.0;
      for (double p : row) {
        if (p < 0.0) throw std::invalid_argument("negative pmf entry");
        sum += p;
      }
      if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("pmf row sums to " + std::to_string(sum));
    }
  }
}

void LinkChannelDistribution::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write distribution file: " + path);
  out << n_links() << ' ' << n_frequencies() << ' ' << n_states() << '\n';
  out.precision(17);
  for (const auto& link_rows : pmf) {
    for (const auto& row : link_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
      out << '\n';
    }
  }
}

LinkChannelDistribution LinkChannelDistribution::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open distribution file: " + path);
  std::size_t links = 0, freqs = 0, states = 0;
  if (!(in >> links >> freqs >> states)) throw std::runtime_error("bad distribution header: " + path);
  LinkChannelDistribution dist;
  dist.pmf.assign(links, std::vector<std::vector<double>>(freqs, std::vector<double>(states, 0.0)));
  for (std::size_t e = 0; e < links; ++e)
    for (std::size_t f = 0; f < freqs; ++f)
      for (std::size_t s = 0; s < states; ++s)
        if (!(in >> dist.pmf[e][f][s])) throw std::runtime_error("truncated distribution file: " + path);
  dist.validate();
  return dist;
}

int hop_frequency(std::uint64_t asn, int ch_offset, int n_channels, std::span<const int> map) {
  if (n_channels < 1) throw std::invalid_argument("n_channels must be >= 1");
  if (ch_offset < 0 || ch_offset >= n_channels) throw std::invalid_argument("channel offset out of range");
  if (map.size() != static_cast<std::size_t>(n_channels)) throw std::invalid_argument("map size mismatch");
  return map[(asn + static_cast<std::uint64_t>(ch_offset)) % static_cast<std::uint64_t>(n_channels)];
}

int hop_frequency(std::uint64_t asn, int ch_offset, int n_channels) {
  if (n_channels < 1) throw std::invalid_argument("n_channels must be >= 1");
  if (ch_offset < 0 || ch_offset >= n_channels) throw std::invalid_argument("channel offset out of range");
  return static_cast<int>((asn + static_cast<std::uint64_t>(ch_offset)) % static_cast<std::uint64_t>(n_channels));
}

std::vector<int> random_channel_map(int n_channels, std::uint64_t seed) {
  std::vector<int> map(static_cast<std::size_t>(n_channels));
  std::iota(map.begin(), map.end(), 0);
  Rng rng(seed);
  for (std::size_t i = map.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.next_u64() % i);
    std::swap(map[i - 1], map[j]);
  }
  return map;
}

double power_required(double x_linear, double packets, const RadioParams& params) {
  params.validate();
  if (x_linear <= 0.0) throw std::domain_error("SNR gain must be positive");
  if (packets < 0.0) throw std::domain_error("packet count must be non-negative");
  return params.beta_n0 / x_linear * (std::exp2(packets * params.packet_bits / params.beta) - 1.0);
}

double capacity(double x_db, const RadioParams& params) {
  params.validate();
  double x_linear = std::pow(10.0, x_db / 10.0);
  return params.beta / params.packet_bits * std::log2(1.0 + x_linear * params.transmit_power / params.beta_n0);
}

double mean_capacity(std::size_t link, const LinkChannelDistribution& dist, const ChannelStateSpace& space,
                     const RadioParams& params) {
  const auto& rows = dist.pmf.at(link);
  double total = 0.0;
  for (const auto& row : rows) {
    for (std::size_t s = 0; s < row.size(); ++s) total += row[s] * capacity(space.levels_db[s], params);
  }
  return total / static_cast<double>(rows.size());
}

CycleRealization sample_cycle(const LinkChannelDistribution& dist, const ChannelStateSpace& space, int n_slots,
                              Rng& rng) {
  if (n_slots < 1) throw std::invalid_argument("n_slots must be >= 1");
  if (dist.n_states() != space.n_states()) throw std::invalid_argument("pmf/state-space size mismatch");
  CycleRealization cycle(dist.n_links());
  for (std::size_t e = 0; e < dist.n_links(); ++e) {
    auto& state = cycle[e].state;
    state.assign(dist.n_frequencies(), std::vector<int>(static_cast<std::size_t>(n_slots), 0));
    for (std::size_t f = 0; f < dist.n_frequencies(); ++f)
      for (int t = 0; t < n_slots; ++t)
        state[f][static_cast<std::size_t>(t)] = static_cast<int>(rng.sample_pmf(dist.pmf[e][f]));
  }
  return cycle;
}

LinkChannelDistribution generate_distributions(const NetworkTopology& topo, const ChannelStateSpace& space,
                                               int n_frequencies, std::uint64_t seed) {
  if (n_frequencies < 1) throw std::invalid_argument("n_frequencies must be >= 1");
  space.validate();
  Rng rng(seed);
  LinkChannelDistribution dist;
  dist.pmf.assign(topo.links.size(),
                  std::vector<std::vector<double>>(static_cast<std::size_t>(n_frequencies),
                                                   std::vector<double>(space.n_states(), 0.0)));
  for (auto& link_rows : dist.pmf) {
    for (auto& row : link_rows) {
      double sum = 0.0;
      for (double& p : row) {
        p = rng.exponential();
        sum += p;
      }
      for (double& p : row) p /= sum;
    }
  }
  dist.validate();
  return dist;
}

}  // namespace tschsim
