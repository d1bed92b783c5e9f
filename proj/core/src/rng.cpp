#include "tschsim/rng.hpp"

#include <cmath>
#include <numbers>

namespace tschsim {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::derive(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t state = master;
  std::uint64_t a = splitmix64(state);
  state ^= 0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull;
  std::uint64_t b = splitmix64(state);
  return Rng(a ^ (b + (stream << 1)));
}

double Rng::gaussian(double mean, double stddev) {
  double u1 = uniform01();
  double u2 = uniform01();
  if (u1 < 1e-300) u1 = 1e-300;
  double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  return mean + stddev * z;
}

double Rng::exponential() {
  double u = uniform01();
  if (u >= 1.0) u = std::nextafter(1.0, 0.0);
  return -std::log1p(-u);
}

std::size_t Rng::sample_pmf(std::span<const double> pmf) {
  double u = uniform01();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < pmf.size(); ++i) {
    acc += pmf[i];
    if (u < acc) return i;
  }
  return pmf.empty() ? 0 : pmf.size() - 1;
}

}  // namespace tschsim
