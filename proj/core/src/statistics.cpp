#include "catlab/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "catlab/errors.hpp"

namespace catlab::stats {

void running_moments::add(double x) {
  const auto n1 = static_cast<double>(n_);
  ++n_;
  const auto n = static_cast<double>(n_);
  const double delta = x - mean_;
  const double delta_n = delta / n;
  const double delta_n2 = delta_n * delta_n;
  const double term1 = delta * delta_n * n1;
  mean_ += delta_n;
  m4_ += term1 * delta_n2 * (n * n - 3 * n + 3) + 6 * delta_n2 * m2_ -
         4 * delta_n * m3_;
  m3_ += term1 * delta_n * (n - 2) - 3 * delta_n * m2_;
  m2_ += term1;
  if (n_ == 1) {
    min_ = max_ = x;
  } else {
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }
}

void running_moments::merge(const running_moments& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const auto na = static_cast<double>(n_);
  const auto nb = static_cast<double>(other.n_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  const double delta2 = delta * delta;
  const double delta3 = delta * delta2;
  const double delta4 = delta2 * delta2;

  const double m2 = m2_ + other.m2_ + delta2 * na * nb / n;
  const double m3 = m3_ + other.m3_ + delta3 * na * nb * (na - nb) / (n * n) +
                    3.0 * delta * (na * other.m2_ - nb * m2_) / n;
  const double m4 =
      m4_ + other.m4_ +
      delta4 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
      6.0 * delta2 * (na * na * other.m2_ + nb * nb * m2_) / (n * n) +
      4.0 * delta * (na * other.m3_ - nb * m3_) / n;

  mean_ += delta * nb / n;
  m2_ = m2;
  m3_ = m3;
  m4_ = m4;
  n_ += other.n_;
  min_ = std::min(min_, other.min_);
  max_ = std::max(max_, other.max_);
}

double running_moments::variance() const {
  if (n_ < 2) return 0.0;
  return m2_ / static_cast<double>(n_ - 1);
}

double running_moments::stddev() const { return std::sqrt(variance()); }

double running_moments::central_moment2() const {
  return n_ == 0 ? 0.0 : m2_ / static_cast<double>(n_);
}
double running_moments::central_moment3() const {
  return n_ == 0 ? 0.0 : m3_ / static_cast<double>(n_);
}
double running_moments::central_moment4() const {
  return n_ == 0 ? 0.0 : m4_ / static_cast<double>(n_);
}

double running_moments::skewness() const {
  const double m2 = central_moment2();
  return m2 > 0.0 ? central_moment3() / std::pow(m2, 1.5) : 0.0;
}

double running_moments::kurtosis() const {
  const double m2 = central_moment2();
  return m2 > 0.0 ? central_moment4() / (m2 * m2) : 0.0;
}

double running_moments::standard_error() const {
  if (n_ < 2) return 0.0;
  return stddev() / std::sqrt(static_cast<double>(n_));
}

double running_moments::variance_standard_error() const {
  if (n_ < 4) return 0.0;
  const auto n = static_cast<double>(n_);
  const double s2 = variance();
  const double v = (central_moment4() - s2 * s2 * (n - 3) / (n - 1)) / n;
  return v > 0.0 ? std::sqrt(v) : 0.0;
}

running_moments summarize(std::span<const double> sample) {
  running_moments out;
  for (const double x : sample) out.add(x);
  return out;
}

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw domain_error("normal_quantile needs p in (0, 1)");
  }
  // Acklam's rational approximation, then one Halley refinement step.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  } else if (p <= 1 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
  } else {
    const double q = std::sqrt(-2 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2 * std::numbers::pi) * std::exp(x * x / 2);
  return x - u / (1 + x * u / 2);
}

normality_test ks_normality(std::span<const double> sample) {
  if (sample.size() < 20) {
    throw domain_error("ks_normality needs at least 20 observations");
  }
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const auto r = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = normal_cdf(sorted[i]);
    const double above = static_cast<double>(i + 1) / r - f;
    const double below = f - static_cast<double>(i) / r;
    d = std::max({d, above, below});
  }
  normality_test out{"kolmogorov_smirnov", d, 1.63 / std::sqrt(r), 0.01, false};
  out.reject = out.statistic >= out.critical_value;
  return out;
}

normality_test jarque_bera(std::span<const double> sample) {
  if (sample.size() < 20) {
    throw domain_error("jarque_bera needs at least 20 observations");
  }
  const auto moments = summarize(sample);
  if (!(moments.central_moment2() > 0.0)) {
    throw domain_error("jarque_bera needs a sample with positive variance");
  }
  const double s = moments.skewness();
  const double excess = moments.kurtosis() - 3.0;
  const auto r = static_cast<double>(sample.size());
  normality_test out{"jarque_bera", r / 6.0 * (s * s + excess * excess / 4.0),
                     9.21, 0.01, false};
  out.reject = out.statistic >= out.critical_value;
  return out;
}

empirical_cdf::empirical_cdf(std::span<const double> sample)
    : sorted_(sample.begin(), sample.end()) {
  if (sorted_.empty()) throw domain_error("ecdf of an empty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double empirical_cdf::operator()(double x) const {
  const auto below = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(below - sorted_.begin()) /
         static_cast<double>(sorted_.size());
}

double histogram_result::bin_width() const {
  return counts.empty() ? 0.0 : (hi - lo) / static_cast<double>(counts.size());
}

double histogram_result::density(std::size_t i) const {
  std::uint64_t total = 0;
  for (const auto c : counts) total += c;
  if (total == 0) return 0.0;
  return static_cast<double>(counts[i]) /
         (static_cast<double>(total) * bin_width());
}

histogram_result histogram(std::span<const double> sample, std::size_t bins) {
  if (sample.empty()) throw domain_error("histogram of an empty sample");
  if (bins == 0) throw domain_error("histogram needs at least one bin");
  const auto [lo_it, hi_it] = std::minmax_element(sample.begin(), sample.end());
  histogram_result out{*lo_it, *hi_it, std::vector<std::uint64_t>(bins, 0)};
  if (out.hi == out.lo) {
    out.lo -= 0.5;
    out.hi += 0.5;
  }
  const double width = out.bin_width();
  for (const double x : sample) {
    auto k = static_cast<std::size_t>((x - out.lo) / width);
    out.counts[std::min(k, bins - 1)] += 1;
  }
  return out;
}

density_curve kde(std::span<const double> sample, std::size_t points) {
  if (sample.empty()) throw domain_error("kde of an empty sample");
  if (points < 2) throw domain_error("kde needs at least two grid points");
  const auto moments = summarize(sample);
  const auto r = static_cast<double>(sample.size());
  double h = 1.06 * moments.stddev() * std::pow(r, -0.2);
  if (!(h > 0.0)) h = 1.0;

  density_curve out;
  out.bandwidth = h;
  out.x.resize(points);
  out.y.resize(points);
  const double lo = moments.min() - 3 * h;
  const double hi = moments.max() + 3 * h;
  const double step = (hi - lo) / static_cast<double>(points - 1);
  const double norm = 1.0 / (r * h * std::sqrt(2 * std::numbers::pi));
  for (std::size_t k = 0; k < points; ++k) {
    const double x = lo + step * static_cast<double>(k);
    double acc = 0.0;
    for (const double xi : sample) {
      const double u = (x - xi) / h;
      acc += std::exp(-0.5 * u * u);
    }
    out.x[k] = x;
    out.y[k] = acc * norm;
  }
  return out;
}

double integrate(const density_curve& curve) {
  double area = 0.0;
  for (std::size_t k = 1; k < curve.x.size(); ++k) {
    area += 0.5 * (curve.y[k] + curve.y[k - 1]) * (curve.x[k] - curve.x[k - 1]);
  }
  return area;
}

}  // namespace catlab::stats
