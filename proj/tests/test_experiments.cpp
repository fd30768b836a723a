#include <gtest/gtest.h>

#include "catlab/errors.hpp"
#include "catlab/experiments.hpp"
#include "catlab/theory.hpp"

namespace {

using catlab::experiment_config;
using catlab::index_kind;
using catlab::index_spec;

experiment_config small_config() {
  experiment_config cfg;
  cfg.m = 7;
  cfg.n = 300;
  cfg.replications = 200;
  cfg.seed = 1234;
  cfg.indices = {{index_kind::zagreb}, {index_kind::wiener}, {index_kind::hoover},
                 {index_kind::randic, -0.5}};
  return cfg;
}

TEST(Experiments, Validate) {
  auto cfg = small_config();
  EXPECT_NO_THROW(catlab::validate(cfg));
  cfg.m = 1;
  EXPECT_THROW(catlab::validate(cfg), catlab::domain_error);
  cfg = small_config();
  cfg.n = -1;
  EXPECT_THROW(catlab::validate(cfg), catlab::domain_error);
  cfg = small_config();
  cfg.replications = 0;
  EXPECT_THROW(catlab::validate(cfg), catlab::domain_error);
  cfg = small_config();
  cfg.indices.clear();
  EXPECT_THROW(catlab::validate(cfg), catlab::domain_error);
}

TEST(Experiments, SamplerNames) {
  EXPECT_EQ(catlab::parse_sampler("direct"), catlab::sampler_kind::direct);
  EXPECT_EQ(catlab::to_string(catlab::sampler_kind::sequential), "sequential");
  EXPECT_THROW(catlab::parse_sampler("magic"), catlab::domain_error);
}

TEST(Experiments, IndependentOfThreadCount) {
  auto cfg = small_config();
  cfg.threads = 1;
  const auto a = catlab::run_mc(cfg);
  cfg.threads = 4;
  const auto b = catlab::run_mc(cfg);
  ASSERT_EQ(a.indices.size(), b.indices.size());
  for (std::size_t k = 0; k < a.indices.size(); ++k) {
    EXPECT_EQ(a.indices[k].sample, b.indices[k].sample);
    EXPECT_EQ(a.indices[k].moments.mean(), b.indices[k].moments.mean());
    EXPECT_EQ(a.indices[k].moments.variance(), b.indices[k].moments.variance());
    EXPECT_EQ(a.indices[k].moments.central_moment4(), b.indices[k].moments.central_moment4());
  }
  EXPECT_EQ(a.standardized_zagreb, b.standardized_zagreb);
}

TEST(Experiments, SampleFollowsReplicateOrder) {
  const auto cfg = small_config();
  const auto summary = catlab::run_mc(cfg);
  const auto* z = summary.find({index_kind::zagreb});
  ASSERT_NE(z, nullptr);
  for (std::uint64_t r = 0; r < 10; ++r) {
    EXPECT_EQ(z->sample[r],
              static_cast<double>(catlab::zagreb(catlab::generate_replicate(cfg, r))));
  }
  ASSERT_TRUE(z->comparison.has_value());
  EXPECT_LT(std::fabs(z->comparison->z_score), 4.0);
  EXPECT_NEAR(z->comparison->theory, catlab::theory::zagreb_mean(7, 300).approx(), 1e-9);
  ASSERT_TRUE(summary.ks.has_value());
  ASSERT_TRUE(summary.jarque_bera.has_value());
  EXPECT_EQ(summary.standardized_zagreb.size(), 200u);
}

TEST(Experiments, SingleReplicate) {
  auto cfg = small_config();
  cfg.replications = 1;
  const auto summary = catlab::run_mc(cfg);
  const auto& w = summary.indices[1];
  EXPECT_EQ(w.moments.count(), 1u);
  EXPECT_FALSE(w.moments.has_variance());
  EXPECT_EQ(w.moments.mean(), w.sample.at(0));
  EXPECT_TRUE(summary.standardized_zagreb.empty());
  EXPECT_FALSE(summary.ks.has_value());
}

TEST(Experiments, MemoryCap) {
  auto cfg = small_config();
  cfg.sample_memory_cap = 64;
  EXPECT_THROW(catlab::run_mc(cfg), catlab::resource_error);
  cfg.retain_samples = false;
  const auto summary = catlab::run_mc(cfg);
  EXPECT_TRUE(summary.indices[0].sample.empty());
  EXPECT_EQ(summary.indices[0].moments.count(), 200u);
}

TEST(Experiments, DirectSamplerAgreesInMean) {
  auto cfg = small_config();
  cfg.sampler = catlab::sampler_kind::direct;
  cfg.replications = 2000;
  const auto summary = catlab::run_mc(cfg);
  EXPECT_LT(std::fabs(summary.indices[0].comparison->z_score), 4.0);
  EXPECT_LT(std::fabs(summary.indices[1].comparison->z_score), 4.0);
}

TEST(Experiments, StandardizeZagreb) {
  const std::vector<double> sample{12, 10, 10, 12};
  EXPECT_EQ(catlab::standardize_zagreb(sample, 2, 2), (std::vector<double>{1, -1, -1, 1}));
  const double mean = catlab::theory::zagreb_mean(5, 9).approx();
  const std::vector<double> centered(6, mean);
  for (double v : catlab::standardize_zagreb(centered, 5, 9)) EXPECT_NEAR(v, 0.0, 1e-12);
  EXPECT_THROW(catlab::standardize_zagreb(sample, 3, 0), catlab::domain_error);
}

TEST(Experiments, ZagrebTrajectory) {
  const auto t = catlab::trajectory_check(5, 1 << 16, 42, {index_kind::zagreb});
  ASSERT_FALSE(t.checkpoints.empty());
  EXPECT_EQ(t.checkpoints.back(), 1 << 16);
  EXPECT_EQ(t.checkpoints.size(), t.scaled_values.size());
  EXPECT_NEAR(t.scaled_values.back(), 0.2, 0.04);
}

TEST(Experiments, RandicTrajectoryStabilizes) {
  const auto t = catlab::trajectory_check(5, 1 << 16, 42, {index_kind::randic});
  ASSERT_GE(t.differences.size(), 3u);
  const auto k = t.differences.size();
  EXPECT_LT(t.differences[k - 1], t.differences[k - 2]);
  EXPECT_LT(t.tail_max_difference, 0.01);
}

TEST(Experiments, WienerTrajectoryBounded) {
  const int m = 5;
  const auto t = catlab::trajectory_check(m, 1 << 14, 42, {index_kind::wiener});
  const double bound = 10.0 * (m * m + 6 * m - 1) / (6.0 * m);
  // At n = 1 the bare spine alone gives m(m^2 - 1)/6 = 20 > bound.
  EXPECT_GT(t.scaled_values.front(), bound);
  for (std::size_t k = 0; k < t.checkpoints.size(); ++k) {
    EXPECT_GT(t.scaled_values[k], 0.0);
    if (t.checkpoints[k] >= 2) {
      EXPECT_LT(t.scaled_values[k], bound) << t.checkpoints[k];
    }
  }
  EXPECT_NEAR(t.scaled_values.back(), (m * m + 6.0 * m - 1) / (6.0 * m), 0.1);
}

}  // namespace
