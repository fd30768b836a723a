#include "catlab/indices.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "catlab/errors.hpp"

namespace catlab {

namespace {

wide_int abs_wide(wide_int v) { return v < 0 ? -v : v; }

// sum_{x=1}^{k} x
wide_int triangle(wide_int k) { return k * (k + 1) / 2; }

// sum_{x=1}^{k} (x + x^2) = k(k+1)(k+2)/3
wide_int hyper_prefix(wide_int k) { return k * (k + 1) * (k + 2) / 3; }

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string index_spec::name() const {
  switch (kind) {
    case index_kind::gini_degree: return "gini";
    case index_kind::hoover: return "hoover";
    case index_kind::zagreb: return "zagreb";
    case index_kind::wiener: return "wiener";
    case index_kind::hyper_wiener: return "hyper_wiener";
    case index_kind::randic:
      if (alpha == 1.0) return "randic";
      return "randic:" + format_real(alpha);
  }
  return "unknown";
}

bool index_spec::is_integral() const {
  switch (kind) {
    case index_kind::zagreb:
    case index_kind::wiener:
    case index_kind::hyper_wiener:
      return true;
    case index_kind::randic:
      return alpha == 1.0;
    default:
      return false;
  }
}

index_spec parse_index_spec(std::string_view text) {
  if (text == "gini" || text == "gini_degree") return {index_kind::gini_degree};
  if (text == "hoover") return {index_kind::hoover};
  if (text == "zagreb") return {index_kind::zagreb};
  if (text == "wiener") return {index_kind::wiener};
  if (text == "hyper_wiener") return {index_kind::hyper_wiener};
  if (text == "randic") return {index_kind::randic, 1.0};
  constexpr std::string_view prefix = "randic:";
  if (text.starts_with(prefix)) {
    const std::string number(text.substr(prefix.size()));
    char* end = nullptr;
    const double alpha = std::strtod(number.c_str(), &end);
    if (number.empty() || end != number.c_str() + number.size() ||
        !std::isfinite(alpha)) {
      throw domain_error("invalid randic exponent: '" + number + "'");
    }
    return {index_kind::randic, alpha};
  }
  throw domain_error("unknown index: '" + std::string(text) + "'");
}

double index_value::as_double() const {
  if (const auto* exact = std::get_if<wide_int>(&value)) {
    return static_cast<double>(*exact);
  }
  return std::get<double>(value);
}

std::string index_value::to_string() const {
  if (const auto* exact = std::get_if<wide_int>(&value)) {
    return catlab::to_string(*exact);
  }
  return format_real(std::get<double>(value));
}

double gini_functional(std::span<const double> weights) {
  if (weights.size() < 2) {
    throw domain_error("gini needs at least two weights");
  }
  std::vector<double> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0.0) throw domain_error("gini weights must be >= 0");
  const auto n = static_cast<double>(sorted.size());
  double total = 0.0;
  double weighted = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    total += sorted[k];
    weighted += (2.0 * static_cast<double>(k + 1) - n - 1.0) * sorted[k];
  }
  if (total <= 0.0) throw domain_error("zero total wealth");
  return (2.0 * weighted) / (2.0 * n * total);
}

double degree_gini(const caterpillar& c) {
  const auto degrees = degree_sequence(c);
  std::vector<double> weights(degrees.begin(), degrees.end());
  return gini_functional(weights);
}

double hoover(const caterpillar& c) {
  const wide_int nodes = c.node_count();
  const wide_int degree_sum = 2 * nodes - 2;
  wide_int deviation = c.leaves() * abs_wide(nodes - degree_sum);
  for (std::size_t i = 0; i < c.spine_size(); ++i) {
    deviation += abs_wide(c.spine_degree(i) * nodes - degree_sum);
  }
  return static_cast<double>(deviation) /
         (2.0 * static_cast<double>(nodes) * static_cast<double>(degree_sum));
}

wide_int zagreb(const caterpillar& c) {
  wide_int total = c.leaves();
  for (std::size_t i = 0; i < c.spine_size(); ++i) {
    const wide_int d = c.spine_degree(i);
    total += d * d;
  }
  return total;
}

wide_int randic_unit(const caterpillar& c) {
  wide_int total = 0;
  for (std::size_t i = 0; i < c.spine_size(); ++i) {
    const wide_int d = c.spine_degree(i);
    if (i > 0) total += static_cast<wide_int>(c.spine_degree(i - 1)) * d;
    total += static_cast<wide_int>(c.leaf_count(i)) * d;
  }
  return total;
}

double randic(const caterpillar& c, double alpha) {
  if (alpha == 1.0) return static_cast<double>(randic_unit(c));
  double total = 0.0;
  for (std::size_t i = 0; i < c.spine_size(); ++i) {
    const auto d = static_cast<double>(c.spine_degree(i));
    if (i > 0) {
      total += std::pow(static_cast<double>(c.spine_degree(i - 1)) * d, alpha);
    }
    total += static_cast<double>(c.leaf_count(i)) * std::pow(d, alpha);
  }
  return total;
}

wide_int wiener(const caterpillar& c) {
  const wide_int m = static_cast<wide_int>(c.spine_size());
  wide_int total = m * (m * m - 1) / 6;  // spine-spine

  // Leaf pairs on different spine nodes i < j sit at distance j - i + 2;
  // prefix sums of X_i and i * X_i make this O(m).
  wide_int prefix_x = 0;
  wide_int prefix_ix = 0;
  for (std::size_t j = 0; j < c.spine_size(); ++j) {
    const wide_int x = c.leaf_count(j);
    const wide_int pos = static_cast<wide_int>(j);
    total += x * ((pos + 2) * prefix_x - prefix_ix);
    total += x * (x - 1);  // same parent: C(x, 2) pairs at distance 2
    // Leaf on j to every spine node: sum_k (|j - k| + 1).
    total += x * (triangle(pos + 1) + triangle(m - pos) - 1);
    prefix_x += x;
    prefix_ix += pos * x;
  }
  return total;
}

wide_int hyper_wiener(const caterpillar& c) {
  const wide_int m = static_cast<wide_int>(c.spine_size());
  wide_int total = m * (m * m * m + 2 * m * m - m - 2) / 12;  // spine-spine

  // Weight (t - i) + (t - i)^2 with t = j + 2, expanded against prefix
  // moments sum X_i, sum i X_i, sum i^2 X_i over i < j.
  wide_int p0 = 0;
  wide_int p1 = 0;
  wide_int p2 = 0;
  for (std::size_t j = 0; j < c.spine_size(); ++j) {
    const wide_int x = c.leaf_count(j);
    const wide_int pos = static_cast<wide_int>(j);
    const wide_int t = pos + 2;
    total += x * ((t + t * t) * p0 - (1 + 2 * t) * p1 + p2);
    total += 3 * x * (x - 1);  // C(x, 2) pairs at distance 2, weight 6
    total += x * (hyper_prefix(pos + 1) + hyper_prefix(m - pos) - 2);
    p0 += x;
    p1 += pos * x;
    p2 += pos * pos * x;
  }
  return total;
}

index_value compute_index(const index_spec& spec, const caterpillar& c) {
  switch (spec.kind) {
    case index_kind::gini_degree: return {degree_gini(c)};
    case index_kind::hoover: return {hoover(c)};
    case index_kind::zagreb: return {zagreb(c)};
    case index_kind::wiener: return {wiener(c)};
    case index_kind::hyper_wiener: return {hyper_wiener(c)};
    case index_kind::randic:
      if (spec.alpha == 1.0) return {randic_unit(c)};
      return {randic(c, spec.alpha)};
  }
  throw domain_error("unhandled index kind");
}

}  // namespace catlab
