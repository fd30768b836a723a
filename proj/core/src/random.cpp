#include "catlab/random.hpp"

#include <cmath>

namespace catlab {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kStreamSalt = 0x6A09E667F3BCC909ULL;

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

std::uint64_t binomial_inversion(xoshiro256ss& rng, std::uint64_t trials,
                                 double p) {
  const double q = 1.0 - p;
  const double s = p / q;
  const double a = (static_cast<double>(trials) + 1.0) * s;
  const double r0 = std::pow(q, static_cast<double>(trials));
  for (;;) {
    double r = r0;
    double u = rng.uniform01();
    std::uint64_t x = 0;
    while (u >= r) {
      u -= r;
      ++x;
      if (x > trials) break;  // rounding pushed u past the total mass
      r *= a / static_cast<double>(x) - s;
    }
    if (x <= trials) return x;
  }
}

// Hormann (1993), "The generation of binomial random variates", algorithm
// BTRS. Requires p <= 1/2 and trials * p >= 10.
std::uint64_t binomial_btrs(xoshiro256ss& rng, std::uint64_t trials,
                            double p) {
  const double n = static_cast<double>(trials);
  const double spq = std::sqrt(n * p * (1.0 - p));
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = n * p + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double r = p / (1.0 - p);
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double mode = std::floor((n + 1.0) * p);
  const auto mode_k = static_cast<std::uint64_t>(mode);

  for (;;) {
    const double u = rng.uniform01() - 0.5;
    double v = rng.uniform01();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + c);
    if (kf < 0.0 || kf > n) continue;
    const auto k = static_cast<std::uint64_t>(kf);
    if (us >= 0.07 && v <= v_r) return k;

    v = std::log(v * alpha / (a / (us * us) + b));
    const double bound =
        (mode + 0.5) * std::log((mode + 1.0) / (r * (n - mode + 1.0))) +
        (n + 1.0) * std::log((n - mode + 1.0) / (n - kf + 1.0)) +
        (kf + 0.5) * std::log(r * (n - kf + 1.0) / (kf + 1.0)) +
        stirling_tail(mode_k) + stirling_tail(trials - mode_k) -
        stirling_tail(k) - stirling_tail(trials - k);
    if (v <= bound) return k;
  }
}

}  // namespace

std::uint64_t splitmix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t splitmix64::next() {
  state_ += kGoldenGamma;
  return mix(state_);
}

xoshiro256ss::xoshiro256ss(rng_seed seed) {
  splitmix64 expander(splitmix64::mix(seed.seed) ^
                      splitmix64::mix(seed.stream + kStreamSalt));
  for (auto& word : s_) word = expander.next();
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = kGoldenGamma;
}

xoshiro256ss::result_type xoshiro256ss::operator()() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t xoshiro256ss::uniform_below(std::uint64_t bound) {
  unsigned __int128 product =
      static_cast<unsigned __int128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double xoshiro256ss::uniform01() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double stirling_tail(std::uint64_t k) {
  static constexpr double kTable[10] = {
      0.08106146679532726, 0.04134069595540929, 0.02767792568499834,
      0.02079067210376509, 0.01664469118982119, 0.01387612882307075,
      0.01189670994589177, 0.01041126526197209, 0.009255462182712733,
      0.008330563433362871};
  if (k < 10) return kTable[k];
  const double kp1 = static_cast<double>(k) + 1.0;
  const double kp1sq = kp1 * kp1;
  return (1.0 / 12 - (1.0 / 360 - 1.0 / 1260 / kp1sq) / kp1sq) / kp1;
}

std::uint64_t binomial(xoshiro256ss& rng, std::uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  if (p > 0.5) return trials - binomial(rng, trials, 1.0 - p);
  if (static_cast<double>(trials) * p < 10.0) {
    return binomial_inversion(rng, trials, p);
  }
  return binomial_btrs(rng, trials, p);
}

}  // namespace catlab
