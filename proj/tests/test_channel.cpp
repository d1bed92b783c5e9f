#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "tschsim/channel.hpp"
#include "tschsim/rng.hpp"
#include "tschsim/topology.hpp"

using namespace tschsim;

namespace {

RadioParams unit_params(double p_over_bn0) {
  RadioParams params;
  params.beta = 5000.0;
  params.packet_bits = 5000.0;  // beta/l = 1
  params.beta_n0 = 2.0;
  params.transmit_power = p_over_bn0 * params.beta_n0;
  return params;
}

NetworkTopology two_link_topology() {
  NetworkTopology topo;
  topo.nodes.push_back({0, 0.0, 0.0, 5.0, 6.0});
  topo.nodes.push_back({1, 1.0, 0.0, 5.0, 6.0});
  topo.links.push_back({0, 1});
  topo.links.push_back({1, 0});
  return topo;
}

}  // namespace

TEST_CASE("default state space has eight increasing levels inside their intervals") {
  const ChannelStateSpace space = ChannelStateSpace::default_eight_level();
  REQUIRE(space.n_states() == 8);
  CHECK(space.levels_db.front() == -13.0);
  CHECK(space.levels_db.back() == 3.18);
  CHECK_NOTHROW(space.validate());
}

TEST_CASE("hop frequency follows the modular map") {
  CHECK(hop_frequency(5, 2, 3) == 1);
  CHECK(hop_frequency(0, 0, 7) == 0);

  SUBCASE("fixed offset visits every channel exactly once per cycle") {
    const int n = 5;
    for (int offset = 0; offset < n; ++offset) {
      std::vector<int> seen(n, 0);
      for (std::uint64_t asn = 0; asn < static_cast<std::uint64_t>(n); ++asn)
        seen[static_cast<std::size_t>(hop_frequency(asn, offset, n))] += 1;
      for (int count : seen) CHECK(count == 1);
    }
  }

  SUBCASE("custom permutation map is honored") {
    const std::vector<int> map = {2, 0, 1};
    CHECK(hop_frequency(0, 0, 3, map) == 2);
    CHECK(hop_frequency(1, 0, 3, map) == 0);
    const std::vector<int> seeded = random_channel_map(16, 9);
    std::vector<int> seen(16, 0);
    for (int c : seeded) seen[static_cast<std::size_t>(c)] += 1;
    for (int count : seen) CHECK(count == 1);
  }

  CHECK_THROWS(hop_frequency(0, 3, 3));
  CHECK_THROWS(hop_frequency(0, -1, 3));
}

TEST_CASE("power required for zero packets is zero") {
  const RadioParams params = unit_params(5.0);
  CHECK(power_required(1.0, 0.0, params) == 0.0);
}

TEST_CASE("power required hand value: unit setup gives 2^1 - 1") {
  RadioParams params;
  params.beta = 5000.0;
  params.packet_bits = 5000.0;
  params.beta_n0 = 1.0;
  CHECK(power_required(1.0, 1.0, params) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power required is strictly increasing in the packet count") {
  const RadioParams params = unit_params(5.0);
  double prev = power_required(0.7, 0.0, params);
  for (double u = 0.5; u <= 4.0; u += 0.5) {
    const double cur = power_required(0.7, u, params);
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK_THROWS_AS(power_required(0.0, 1.0, params), std::domain_error);
  CHECK_THROWS_AS(power_required(-2.0, 1.0, params), std::domain_error);
}

TEST_CASE("capacity hand values and monotonicity") {
  // beta/l = 1 and P/(beta*N0) = 1: 0 dB gives log2(2) = 1 packet per slot.
  CHECK(capacity(0.0, unit_params(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  // Very weak SNR drives capacity towards zero.
  CHECK(capacity(-200.0, unit_params(5.0)) == doctest::Approx(0.0).epsilon(1e-8));

  const RadioParams params = unit_params(5.0);
  double prev = capacity(-20.0, params);
  for (double x = -15.0; x <= 10.0; x += 2.5) {
    const double cur = capacity(x, params);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("capacity and power_required invert each other at the transmit power") {
  const ChannelStateSpace space = ChannelStateSpace::default_eight_level();
  RadioParams params;  // defaults: P=10, beta_n0=2
  params.beta = params.packet_bits;
  for (double level : space.levels_db) {
    const double packets = capacity(level, params);
    const double x_linear = std::pow(10.0, level / 10.0);
    const double p = power_required(x_linear, packets, params);
    CHECK(p == doctest::Approx(params.transmit_power).epsilon(1e-6));
  }
}

TEST_CASE("mean capacity of a point mass equals the capacity at that state") {
  const ChannelStateSpace space = ChannelStateSpace::default_eight_level();
  const RadioParams params = unit_params(5.0);
  LinkChannelDistribution dist;
  dist.pmf = {{{0, 0, 0, 0, 0, 1.0, 0, 0}, {0, 0, 0, 0, 0, 1.0, 0, 0}}};
  CHECK(mean_capacity(0, dist, space, params) ==
        doctest::Approx(capacity(space.levels_db[5], params)).epsilon(1e-12));
}

TEST_CASE("mean capacity with one frequency and a uniform two-state pmf is the midpoint") {
  const ChannelStateSpace space = ChannelStateSpace::default_eight_level();
  const RadioParams params = unit_params(5.0);
  LinkChannelDistribution dist;
  dist.pmf = {{{0.5, 0, 0, 0, 0, 0, 0, 0.5}}};
  const double expected = 0.5 * (capacity(space.levels_db[0], params) + capacity(space.levels_db[7], params));
  CHECK(mean_capacity(0, dist, space, params) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("mean capacity agrees with a Monte Carlo oracle") {
  const ChannelStateSpace space = ChannelStateSpace::default_eight_level();
  const RadioParams params = unit_params(5.0);
  const NetworkTopology topo = two_link_topology();
  const LinkChannelDistribution dist = generate_distributions(topo, space, 3, 11);

  Rng rng(5150);
  const int n_samples = 100000;
  for (std::size_t link = 0; link < 2; ++link) {
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n_samples; ++i) {
      const std::size_t f = static_cast<std::size_t>(rng.next_u64() % 3);
      const std::size_t s = rng.sample_pmf(dist.pmf[link][f]);
      const double c = capacity(space.levels_db[s], params);
      sum += c;
      sum_sq += c * c;
    }
    const double mc_mean = sum / n_samples;
    const double variance = sum_sq / n_samples - mc_mean * mc_mean;
    const double stderr3 = 3.0 * std::sqrt(variance / n_samples);
    const double analytic = mean_capacity(link, dist, space, params);
    CHECK(std::abs(analytic - mc_mean) < stderr3);
    CHECK(std::abs(analytic - mc_mean) / analytic < 0.01);
  }
}

TEST_CASE("sample_cycle: point mass pins every slot to that state") {
  const ChannelStateSpace space = ChannelStateSpace::default_eight_level();
  LinkChannelDistribution dist;
  dist.pmf = {{{0, 0, 0, 1.0, 0, 0, 0, 0}, {0, 0, 0, 1.0, 0, 0, 0, 0}}};
  Rng rng(1);
  const CycleRealization cycle = sample_cycle(dist, space, 6, rng);
  REQUIRE(cycle.size() == 1);
  for (const auto& row : cycle[0].state)
    for (int s : row) CHECK(s == 3);
}

TEST_CASE("sample_cycle is deterministic under a fixed stream") {
  const ChannelStateSpace space = ChannelStateSpace::default_eight_level();
  const NetworkTopology topo = two_link_topology();
  const LinkChannelDistribution dist = generate_distributions(topo, space, 2, 3);
  Rng a(77), b(77);
  const CycleRealization ca = sample_cycle(dist, space, 8, a);
  const CycleRealization cb = sample_cycle(dist, space, 8, b);
  REQUIRE(ca.size() == cb.size());
  for (std::size_t e = 0; e < ca.size(); ++e) CHECK(ca[e].state == cb[e].state);
}

TEST_CASE("sampled state frequencies converge to the pmf") {
  const ChannelStateSpace space = ChannelStateSpace::default_eight_level();
  const NetworkTopology topo = two_link_topology();
  const LinkChannelDistribution dist = generate_distributions(topo, space, 1, 21);
  Rng rng(31);
  std::vector<double> counts(space.n_states(), 0.0);
  const int n_cycles = 25000;
  const int n_slots = 4;
  for (int i = 0; i < n_cycles; ++i) {
    const CycleRealization cycle = sample_cycle(dist, space, n_slots, rng);
    for (int s : cycle[0].state[0]) counts[static_cast<std::size_t>(s)] += 1.0;
  }
  const double total = static_cast<double>(n_cycles) * n_slots;
  for (std::size_t s = 0; s < counts.size(); ++s)
    CHECK(std::abs(counts[s] / total - dist.pmf[0][0][s]) < 0.01);
}

TEST_CASE("generated distributions are stochastic, distinct, and seeded") {
  const ChannelStateSpace space = ChannelStateSpace::default_eight_level();
  const NetworkTopology topo = two_link_topology();
  const LinkChannelDistribution a = generate_distributions(topo, space, 3, 5);
  const LinkChannelDistribution b = generate_distributions(topo, space, 3, 5);
  CHECK(a.pmf == b.pmf);
  CHECK_NOTHROW(a.validate());
  CHECK(a.pmf[0][0] != a.pmf[1][0]);  // distinct rows per link
  CHECK(a.pmf[0][0] != a.pmf[0][1]);  // distinct rows per frequency
}

TEST_CASE("distribution file round trip") {
  const ChannelStateSpace space = ChannelStateSpace::default_eight_level();
  const NetworkTopology topo = two_link_topology();
  const LinkChannelDistribution a = generate_distributions(topo, space, 2, 17);
  const std::string path = "/tmp/tschsim_test_dist.txt";
  a.save(path);
  const LinkChannelDistribution b = LinkChannelDistribution::load(path);
  CHECK(a.pmf == b.pmf);
  std::remove(path.c_str());
}
