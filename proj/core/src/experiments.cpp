#include "catlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "catlab/errors.hpp"
#include "catlab/theory.hpp"

namespace catlab {

namespace {

constexpr std::int64_t kBlockSize = 64;

struct block_result {
  std::vector<stats::running_moments> moments;
};

std::optional<theory::theory_value> closed_form_mean(const index_spec& index,
                                                     std::int64_t m,
                                                     std::int64_t n) {
  switch (index.kind) {
    case index_kind::hoover: return theory::hoover_mean(m, n);
    case index_kind::zagreb: return theory::zagreb_mean(m, n);
    case index_kind::wiener: return theory::wiener_mean(m, n);
    case index_kind::hyper_wiener:
      return theory::hyper_wiener_mean_corrected(m, n);
    case index_kind::randic:
      if (index.alpha == 1.0 && m >= 3) return theory::randic_mean(m, n);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::string theory_name(const index_spec& index) {
  switch (index.kind) {
    case index_kind::hoover: return "hoover_mean";
    case index_kind::zagreb: return "zagreb_mean";
    case index_kind::wiener: return "wiener_mean";
    case index_kind::hyper_wiener: return "hyper_wiener_mean_corrected";
    case index_kind::randic: return "randic_mean";
    default: return "";
  }
}

}  // namespace

std::string to_string(sampler_kind s) {
  return s == sampler_kind::sequential ? "sequential" : "direct";
}

sampler_kind parse_sampler(std::string_view text) {
  if (text == "sequential") return sampler_kind::sequential;
  if (text == "direct") return sampler_kind::direct;
  throw domain_error("unknown sampler: '" + std::string(text) +
                     "' (expected sequential or direct)");
}

void validate(const experiment_config& cfg) {
  if (cfg.m < 2) throw domain_error("spine too short: m must be >= 2");
  if (cfg.n < 0) throw domain_error("n must be >= 0");
  if (cfg.replications < 1) throw domain_error("replications must be >= 1");
  if (cfg.indices.empty()) throw domain_error("no indices requested");
}

caterpillar generate_replicate(const experiment_config& cfg, std::uint64_t r) {
  const rng_seed seed{cfg.seed, r};
  return cfg.sampler == sampler_kind::sequential
             ? simulate(cfg.m, cfg.n, seed)
             : sample_direct(cfg.m, cfg.n, seed);
}

const index_summary* experiment_summary::find(const index_spec& index) const {
  for (const auto& s : indices) {
    if (s.index == index) return &s;
  }
  return nullptr;
}

experiment_summary run_mc(const experiment_config& cfg) {
  validate(cfg);
  const std::size_t k_count = cfg.indices.size();
  const auto reps = static_cast<std::size_t>(cfg.replications);
  if (cfg.retain_samples &&
      reps > cfg.sample_memory_cap / (k_count * sizeof(double))) {
    throw resource_error("retaining " + std::to_string(reps) + " x " +
                         std::to_string(k_count) +
                         " samples exceeds the memory cap of " +
                         std::to_string(cfg.sample_memory_cap) + " bytes");
  }

  experiment_summary out;
  out.config = cfg;
  out.indices.resize(k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    out.indices[k].index = cfg.indices[k];
    if (cfg.retain_samples) out.indices[k].sample.assign(reps, 0.0);
  }

  const std::int64_t blocks = (cfg.replications + kBlockSize - 1) / kBlockSize;
  std::vector<block_result> results(static_cast<std::size_t>(blocks));
  std::atomic<std::int64_t> next_block{0};

  auto worker = [&] {
    for (;;) {
      const std::int64_t b = next_block.fetch_add(1);
      if (b >= blocks) return;
      auto& block = results[static_cast<std::size_t>(b)];
      block.moments.assign(k_count, {});
      const std::int64_t end =
          std::min(cfg.replications, (b + 1) * kBlockSize);
      for (std::int64_t r = b * kBlockSize; r < end; ++r) {
        const auto c = generate_replicate(cfg, static_cast<std::uint64_t>(r));
        for (std::size_t k = 0; k < k_count; ++k) {
          const double v = compute_index(cfg.indices[k], c).as_double();
          block.moments[k].add(v);
          if (cfg.retain_samples) {
            out.indices[k].sample[static_cast<std::size_t>(r)] = v;
          }
        }
      }
    }
  };

  unsigned threads = cfg.threads == 0 ? std::thread::hardware_concurrency()
                                      : cfg.threads;
  threads = std::clamp<unsigned>(threads, 1,
                                 static_cast<unsigned>(std::max<std::int64_t>(blocks, 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (const auto& block : results) {
    for (std::size_t k = 0; k < k_count; ++k) {
      out.indices[k].moments.merge(block.moments[k]);
    }
  }

  for (auto& s : out.indices) {
    const auto mean = closed_form_mean(s.index, cfg.m, cfg.n);
    if (!mean) continue;
    theory_comparison row;
    row.theory_name = theory_name(s.index);
    row.validity = theory::to_string(mean->domain);
    row.empirical = s.moments.mean();
    row.theory = mean->approx();
    row.standard_error = s.moments.standard_error();
    if (row.standard_error > 0.0) {
      row.z_score = (row.empirical - row.theory) / row.standard_error;
    }
    s.comparison = row;
  }

  const auto* z = out.find({index_kind::zagreb});
  if (z != nullptr && cfg.retain_samples && cfg.replications >= 20 &&
      theory::zagreb_variance(cfg.m, cfg.n).value > 0) {
    out.standardized_zagreb = standardize_zagreb(z->sample, cfg.m, cfg.n);
    out.ks = stats::ks_normality(out.standardized_zagreb);
    out.jarque_bera = stats::jarque_bera(out.standardized_zagreb);
  }
  return out;
}

std::vector<double> standardize_zagreb(std::span<const double> sample,
                                       std::int64_t m, std::int64_t n) {
  const auto variance = theory::zagreb_variance(m, n);
  if (variance.value <= 0) {
    throw domain_error("cannot standardize: Var[Z_n] = 0 at m=" +
                       std::to_string(m) + ", n=" + std::to_string(n));
  }
  const double mean = theory::zagreb_mean(m, n).approx();
  const double sd = std::sqrt(variance.approx());
  std::vector<double> out;
  out.reserve(sample.size());
  for (const double z : sample) out.push_back((z - mean) / sd);
  return out;
}

trajectory trajectory_check(std::int64_t m, std::int64_t n_max,
                            std::uint64_t seed, const index_spec& index,
                            int scale_exponent) {
  if (m < 2) throw domain_error("spine too short: m must be >= 2");
  trajectory out;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  xoshiro256ss rng(rng_seed{seed, 0});
  std::int64_t next_checkpoint = 1;
  for (std::int64_t step = 1; step <= n_max; ++step) {
    ++counts[rng.uniform_below(static_cast<std::uint64_t>(m))];
    if (step != next_checkpoint) continue;
    const double v = compute_index(index, caterpillar(counts)).as_double();
    const double scale = std::pow(static_cast<double>(step), scale_exponent);
    out.checkpoints.push_back(step);
    out.scaled_values.push_back(v / scale);
    next_checkpoint *= 2;
  }
  for (std::size_t k = 1; k < out.scaled_values.size(); ++k) {
    out.differences.push_back(
        std::fabs(out.scaled_values[k] - out.scaled_values[k - 1]));
  }
  const std::size_t tail = std::min<std::size_t>(2, out.differences.size());
  for (std::size_t k = out.differences.size() - tail;
       k < out.differences.size(); ++k) {
    out.tail_max_difference = std::max(out.tail_max_difference, out.differences[k]);
  }
  return out;
}

}  // namespace catlab
