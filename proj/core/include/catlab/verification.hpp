#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace catlab::verify {

enum class suite { oracle, montecarlo, paper7, all };
enum class tolerance_profile { standard, strict };

suite parse_suite(std::string_view text);
std::string to_string(suite s);
/// Accepts "default" and "strict".
tolerance_profile parse_profile(std::string_view text);
std::string to_string(tolerance_profile p);

/// Seed used when none is given. All Monte Carlo criteria are pinned to it.
inline constexpr std::uint64_t kDefaultSeed = 42;

struct options {
  suite which = suite::all;
  std::uint64_t seed = kDefaultSeed;
  tolerance_profile profile = tolerance_profile::standard;
  unsigned threads = 0;
};

/// One row of a verification report. Everything here is deterministic for
/// fixed options: wall-clock budgets appear only as a verdict.
struct criterion {
  std::string id;
  std::string quantity;
  std::string reference;  // published or closed-form target
  std::string observed;
  std::string tolerance;
  bool passed = false;
};

struct report {
  suite which = suite::all;
  std::uint64_t seed = kDefaultSeed;
  tolerance_profile profile = tolerance_profile::standard;
  std::vector<criterion> rows;

  bool passed() const;
};

report run(const options& opts);

// Individual suites, exposed for the acceptance binary.
std::vector<criterion> run_oracle_suite(const options& opts);
std::vector<criterion> run_montecarlo_suite(const options& opts);
std::vector<criterion> run_paper7_suite(const options& opts);

/// Fixed-width table: quantity, reference, ours, tolerance, verdict.
std::string render_table(const report& r);
std::string render_json(const report& r);

}  // namespace catlab::verify
