#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace tschsim {

/// Deterministic random stream. Wraps std::mt19937_64 (whose output sequence
/// is pinned by the standard) and converts bits to doubles explicitly, so a
/// given seed reproduces byte-identical results on any platform. Gaussians
/// use Box-Muller instead of std::normal_distribution for the same reason.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent sub-stream: mixes (master, stream) through splitmix64.
  static Rng derive(std::uint64_t master, std::uint64_t stream);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  double gaussian(double mean, double stddev);

  /// Unit-rate exponential draw.
  double exponential();

  /// Index draw from a probability vector (inverse CDF scan).
  std::size_t sample_pmf(std::span<const double> pmf);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tschsim
