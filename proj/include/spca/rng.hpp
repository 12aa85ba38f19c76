#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace spca {

/// The single random source used throughout the library.
///
/// Bits come from std::mt19937_64, whose output sequence is fixed by the C++
/// standard for a given seed. Everything above the raw bits is done here by
/// hand (uniforms, Gaussians, integer ranges) because the standard
/// distributions are implementation-defined. Given a seed, every sampler in
/// the library is therefore bit-reproducible across platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal by the Marsaglia polar method. The second variate of each
  /// accepted pair is cached and returned by the next call.
  double gaussian();

  /// +1 or -1 with probability 1/2 each.
  double rademacher() { return uniform() < 0.5 ? -1.0 : 1.0; }

  bool bernoulli(double prob) { return uniform() < prob; }

  /// Uniform integer in [0, bound) by rejection, bound > 0.
  std::uint64_t below(std::uint64_t bound);

  /// `count` distinct values from [0, population), in draw order (partial
  /// Fisher-Yates).
  std::vector<int> sample_without_replacement(int population, int count);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Sub-seed for trial `index` of a run seeded with `seed`: a SplitMix64 hash of
/// the pair, so trials are independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace spca
