#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "catlab/errors.hpp"
#include "catlab/statistics.hpp"

namespace {

namespace stats = catlab::stats;

std::vector<double> normal_quantiles(int r) {
  std::vector<double> out(r);
  for (int i = 1; i <= r; ++i) out[i - 1] = stats::normal_quantile((i - 0.5) / r);
  return out;
}

TEST(Statistics, RunningMomentsMatchTwoPass) {
  std::mt19937_64 g(4);
  std::gamma_distribution<double> dist(2.0, 3.0);
  std::vector<double> x(5000);
  for (auto& v : x) v = dist(g);
  const auto s = stats::summarize(x);
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  double m2 = 0, m3 = 0, m4 = 0;
  for (double v : x) {
    const double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= x.size();
  m3 /= x.size();
  m4 /= x.size();
  EXPECT_EQ(s.count(), 5000u);
  EXPECT_NEAR(s.mean(), mean, 1e-12 * mean);
  EXPECT_NEAR(s.variance(), m2 * x.size() / (x.size() - 1.0), 1e-10 * m2);
  EXPECT_NEAR(s.central_moment3(), m3, 1e-9 * std::fabs(m3));
  EXPECT_NEAR(s.central_moment4(), m4, 1e-9 * m4);
  EXPECT_NEAR(s.skewness(), m3 / std::pow(m2, 1.5), 1e-9);
  EXPECT_NEAR(s.kurtosis(), m4 / (m2 * m2), 1e-9);
  EXPECT_NEAR(s.standard_error(), std::sqrt(s.variance() / 5000), 1e-12);
  EXPECT_GT(s.variance_standard_error(), 0.0);
  EXPECT_EQ(s.min(), *std::min_element(x.begin(), x.end()));
  EXPECT_EQ(s.max(), *std::max_element(x.begin(), x.end()));
}

TEST(Statistics, MergeEqualsSequential) {
  std::mt19937_64 g(6);
  std::normal_distribution<double> dist(10.0, 2.0);
  std::vector<double> x(1000);
  for (auto& v : x) v = dist(g);
  stats::running_moments all;
  for (double v : x) all.add(v);
  stats::running_moments left, right;
  for (std::size_t i = 0; i < 337; ++i) left.add(x[i]);
  for (std::size_t i = 337; i < x.size(); ++i) right.add(x[i]);
  left.merge(right);
  EXPECT_EQ(left.count(), all.count());
  EXPECT_NEAR(left.mean(), all.mean(), 1e-12);
  EXPECT_NEAR(left.variance(), all.variance(), 1e-10);
  EXPECT_NEAR(left.central_moment3(), all.central_moment3(), 1e-9);
  EXPECT_NEAR(left.central_moment4(), all.central_moment4(), 1e-8);

  stats::running_moments empty;
  empty.merge(all);
  EXPECT_EQ(empty.mean(), all.mean());
}

TEST(Statistics, SingleObservation) {
  stats::running_moments s;
  s.add(3.5);
  EXPECT_EQ(s.mean(), 3.5);
  EXPECT_FALSE(s.has_variance());
  EXPECT_EQ(s.variance(), 0.0);
}

TEST(Statistics, NormalCdfAndQuantile) {
  EXPECT_NEAR(stats::normal_cdf(0.0), 0.5, 1e-15);
  EXPECT_NEAR(stats::normal_cdf(1.959963984540054), 0.975, 1e-12);
  EXPECT_NEAR(stats::normal_cdf(-3.0), 0.0013498980316300946, 1e-15);
  for (double p : {1e-10, 0.001, 0.1, 0.3, 0.5, 0.77, 0.999, 1 - 1e-9}) {
    EXPECT_NEAR(stats::normal_cdf(stats::normal_quantile(p)), p, 1e-12 * std::max(1.0, p / (1 - p)));
  }
}

TEST(Statistics, KsOnPerfectQuantiles) {
  const int r = 500;
  const auto t = stats::ks_normality(normal_quantiles(r));
  EXPECT_LE(t.statistic, 0.5 / r + 1e-9);
  EXPECT_FALSE(t.reject);
  EXPECT_NEAR(t.critical_value, 1.63 / std::sqrt(500.0), 1e-12);
}

TEST(Statistics, KsOnConstantSample) {
  const std::vector<double> zeros(500, 0.0);
  const auto t = stats::ks_normality(zeros);
  EXPECT_NEAR(t.statistic, 0.5, 1e-12);
  EXPECT_TRUE(t.reject);
}

TEST(Statistics, NormalityTestsNeedTwentyObservations) {
  const std::vector<double> small(19, 1.0);
  EXPECT_THROW(stats::ks_normality(small), catlab::domain_error);
  EXPECT_THROW(stats::jarque_bera(small), catlab::domain_error);
  const std::vector<double> flat(100, 2.0);
  EXPECT_THROW(stats::jarque_bera(flat), catlab::domain_error);
}

TEST(Statistics, JarqueBera) {
  const auto q = stats::jarque_bera(normal_quantiles(500));
  EXPECT_LT(q.statistic, 1.0);
  EXPECT_FALSE(q.reject);
  EXPECT_NEAR(q.critical_value, 9.21, 1e-12);

  std::mt19937_64 g(1);
  std::exponential_distribution<double> e(1.0);
  std::vector<double> x(500);
  for (auto& v : x) v = 3.0 * e(g) - 7.0;
  EXPECT_TRUE(stats::jarque_bera(x).reject);

  std::vector<double> two_point(500);
  for (int i = 0; i < 500; ++i) two_point[i] = i % 2 ? 1.0 : -1.0;
  const auto t = stats::jarque_bera(two_point);
  EXPECT_NEAR(t.statistic, 500.0 / 6.0, 1e-9);
  EXPECT_TRUE(t.reject);
}

TEST(Statistics, EmpiricalCdf) {
  const std::vector<double> x{0, 0, 0, 1};
  const stats::empirical_cdf f(x);
  EXPECT_DOUBLE_EQ(f(0.0), 0.75);
  EXPECT_DOUBLE_EQ(f(-1.0), 0.0);
  EXPECT_DOUBLE_EQ(f(1.0), 1.0);
  EXPECT_THROW(stats::empirical_cdf(std::vector<double>{}), catlab::domain_error);
}

TEST(Statistics, Histogram) {
  const std::vector<double> x{1, 2, 3, 4};
  const auto h = stats::histogram(x, 2);
  EXPECT_EQ(h.counts, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_DOUBLE_EQ(h.lo, 1.0);
  EXPECT_DOUBLE_EQ(h.hi, 4.0);
  double area = 0.0;
  for (std::size_t i = 0; i < h.counts.size(); ++i) area += h.density(i) * h.bin_width();
  EXPECT_NEAR(area, 1.0, 1e-12);

  const auto one = stats::histogram(x, 1);
  EXPECT_EQ(one.counts, (std::vector<std::uint64_t>{4}));
  EXPECT_NEAR(one.density(0) * one.bin_width(), 1.0, 1e-12);

  EXPECT_THROW(stats::histogram(x, 0), catlab::domain_error);
  EXPECT_THROW(stats::histogram(std::vector<double>{}, 3), catlab::domain_error);
  const auto flat = stats::histogram(std::vector<double>{2, 2, 2}, 3);
  EXPECT_EQ(std::accumulate(flat.counts.begin(), flat.counts.end(), std::uint64_t{0}), 3u);
}

TEST(Statistics, KdeIntegratesToOne) {
  std::mt19937_64 g(2);
  std::normal_distribution<double> dist;
  std::vector<double> x(500);
  for (auto& v : x) v = dist(g);
  const auto curve = stats::kde(x);
  ASSERT_EQ(curve.x.size(), 512u);
  const auto s = stats::summarize(x);
  EXPECT_NEAR(curve.bandwidth, 1.06 * s.stddev() * std::pow(500.0, -0.2), 1e-12);
  EXPECT_NEAR(curve.x.front(), s.min() - 3 * curve.bandwidth, 1e-12);
  EXPECT_NEAR(curve.x.back(), s.max() + 3 * curve.bandwidth, 1e-12);
  EXPECT_NEAR(stats::integrate(curve), 1.0, 0.01);
  EXPECT_THROW(stats::kde(std::vector<double>{}), catlab::domain_error);
}

}  // namespace
