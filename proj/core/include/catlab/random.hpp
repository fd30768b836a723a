#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace catlab {

/// Identifies one reproducible random substream: a user seed plus a
/// replicate index. Equal (seed, stream) pairs give equal draws everywhere.
struct rng_seed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  friend bool operator==(const rng_seed&, const rng_seed&) = default;
};

/// SplitMix64 (Steele, Lea and Flood). Used only to expand seeds.
class splitmix64 {
 public:
  explicit splitmix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next();

  /// The SplitMix64 output function applied to a single word.
  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman and Vigna).
///
/// Substream derivation: the 256-bit state is filled with four consecutive
/// SplitMix64 outputs started from mix(seed) ^ mix(stream + 0x6A09E667F3BCC909).
/// The generator and all integer-valued draws below are defined purely in
/// 64-bit integer arithmetic, so sequences are bit-identical across platforms.
class xoshiro256ss {
 public:
  using result_type = std::uint64_t;

  explicit xoshiro256ss(rng_seed seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  /// Uniform integer in [0, bound) by Lemire's multiply-and-reject method.
  /// bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();

 private:
  std::array<std::uint64_t, 4> s_;
};

/// Draws Binomial(trials, p) exactly.
///
/// Inversion when min(p, 1 - p) * trials < 10, otherwise Hormann's BTRS
/// transformed rejection. Uses floating-point log/exp, so draws can differ
/// across libm implementations in the last ulp of an acceptance test.
std::uint64_t binomial(xoshiro256ss& rng, std::uint64_t trials, double p);

/// Tail of Stirling's series: log(k!) - [(k + 1/2) log(k + 1) - (k + 1) +
/// log(2 pi) / 2]. Tabulated for k < 10.
double stirling_tail(std::uint64_t k);

}  // namespace catlab
