#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catlab/caterpillar.hpp"
#include "catlab/indices.hpp"
#include "catlab/statistics.hpp"

namespace catlab {

enum class sampler_kind { sequential, direct };

std::string to_string(sampler_kind s);
sampler_kind parse_sampler(std::string_view text);

struct experiment_config {
  std::int64_t m = 200;
  std::int64_t n = 5000;
  std::int64_t replications = 500;
  std::uint64_t seed = 0;
  std::vector<index_spec> indices;
  sampler_kind sampler = sampler_kind::sequential;
  unsigned threads = 0;  // 0: hardware concurrency
  bool retain_samples = true;
  std::size_t sample_memory_cap = std::size_t{1} << 30;  // bytes
};

/// Throws domain_error for m < 2, n < 0, R < 1 or an empty index list.
void validate(const experiment_config& cfg);

/// The caterpillar of replicate r, drawn from substream (seed, r).
caterpillar generate_replicate(const experiment_config& cfg, std::uint64_t r);

/// Empirical mean against a closed-form mean.
struct theory_comparison {
  std::string theory_name;
  std::string validity;
  double empirical = 0.0;
  double theory = 0.0;
  double standard_error = 0.0;
  double z_score = 0.0;  // 0 when standard_error is 0
};

struct index_summary {
  index_spec index;
  stats::running_moments moments;
  std::vector<double> sample;  // replicate order; empty unless retained
  std::optional<theory_comparison> comparison;
};

struct experiment_summary {
  experiment_config config;
  std::vector<index_summary> indices;

  /// Filled when Zagreb was requested, samples are retained, R >= 20 and
  /// Var[Z_n] > 0.
  std::vector<double> standardized_zagreb;
  std::optional<stats::normality_test> ks;
  std::optional<stats::normality_test> jarque_bera;

  const index_summary* find(const index_spec& index) const;
};

/// Runs R replicates over fixed 64-replicate blocks; block summaries are
/// merged in block order, so the result does not depend on thread count.
/// Throws resource_error when retained samples would exceed the memory cap.
experiment_summary run_mc(const experiment_config& cfg);

/// (z - E[Z_n]) / sqrt(Var[Z_n]) with the exact finite-n moments. Throws
/// domain_error when Var[Z_n] = 0.
std::vector<double> standardize_zagreb(std::span<const double> sample,
                                       std::int64_t m, std::int64_t n);

struct trajectory {
  std::vector<std::int64_t> checkpoints;  // 1, 2, 4, ..., <= n_max
  std::vector<double> scaled_values;      // index / n^scale_exponent
  std::vector<double> differences;        // |v_k - v_{k-1}|
  /// Largest successive difference among the last three checkpoints.
  double tail_max_difference = 0.0;
};

/// Follows one sequential growth path from substream (seed, 0).
trajectory trajectory_check(std::int64_t m, std::int64_t n_max,
                            std::uint64_t seed, const index_spec& index,
                            int scale_exponent = 2);

}  // namespace catlab
