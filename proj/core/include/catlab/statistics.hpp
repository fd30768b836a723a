#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace catlab::stats {

/// One-pass central moments up to order four (Welford's update extended by
/// Terriberry / Pebay), with an exact-order pairwise merge.
class running_moments {
 public:
  void add(double x);
  void merge(const running_moments& other);

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double min() const { return min_; }
  double max() const { return max_; }

  /// False when fewer than two observations were seen.
  bool has_variance() const { return n_ >= 2; }
  /// Unbiased sample variance; 0 when has_variance() is false.
  double variance() const;
  double stddev() const;

  /// Population central moments m_k = M_k / n.
  double central_moment2() const;
  double central_moment3() const;
  double central_moment4() const;

  double skewness() const;
  /// Non-excess kurtosis m4 / m2^2 (3 for a normal law).
  double kurtosis() const;

  /// Standard error of the mean, s / sqrt(n).
  double standard_error() const;
  /// Plug-in standard error of the unbiased variance:
  /// sqrt((m4 - s^4 (n - 3)/(n - 1)) / n).
  double variance_standard_error() const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
  double min_ = 0.0;
  double max_ = 0.0;
};

running_moments summarize(std::span<const double> sample);

double normal_cdf(double x);
/// Inverse standard normal CDF, p in (0, 1).
double normal_quantile(double p);

struct normality_test {
  std::string name;
  double statistic = 0.0;
  double critical_value = 0.0;
  double alpha = 0.01;
  bool reject = false;
};

/// One-sample Kolmogorov-Smirnov against N(0, 1); critical value 1.63/sqrt(R)
/// at alpha = 0.01. Needs at least 20 observations.
normality_test ks_normality(std::span<const double> sample);

/// R/6 (S^2 + (K - 3)^2 / 4) with critical value 9.21 (chi-square, 2 df,
/// alpha = 0.01). Needs at least 20 observations and positive variance.
normality_test jarque_bera(std::span<const double> sample);

class empirical_cdf {
 public:
  explicit empirical_cdf(std::span<const double> sample);

  /// Fraction of observations <= x.
  double operator()(double x) const;
  /// Sorted observations (the jump locations, with repeats).
  const std::vector<double>& support() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

struct histogram_result {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::uint64_t> counts;

  double bin_width() const;
  /// counts[i] / (total * width), so bars integrate to one.
  double density(std::size_t i) const;
};

/// Equal-width bins over [min, max]; the maximum lands in the last bin.
/// A constant sample is widened to [x - 0.5, x + 0.5].
histogram_result histogram(std::span<const double> sample, std::size_t bins);

struct density_curve {
  double bandwidth = 0.0;
  std::vector<double> x;
  std::vector<double> y;
};

/// Gaussian KDE, Silverman bandwidth 1.06 sd R^(-1/5), evaluated on
/// `points` equally spaced abscissae over [min - 3h, max + 3h]. Falls back
/// to h = 1 when the sample has no spread.
density_curve kde(std::span<const double> sample, std::size_t points = 512);

/// Trapezoid rule over the curve's grid.
double integrate(const density_curve& curve);

}  // namespace catlab::stats
