#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "catlab/caterpillar.hpp"
#include "catlab/exact.hpp"

namespace catlab {

enum class index_kind { gini_degree, hoover, zagreb, randic, wiener, hyper_wiener };

/// An index together with its parameter (only Randic uses alpha).
struct index_spec {
  index_kind kind = index_kind::zagreb;
  double alpha = 1.0;

  /// Column/CLI name: "zagreb", "randic" (alpha = 1), "randic:-0.5", ...
  std::string name() const;

  /// True when the value is an exact integer (Zagreb, Wiener, hyper-Wiener,
  /// Randic with alpha = 1).
  bool is_integral() const;

  friend bool operator==(const index_spec&, const index_spec&) = default;
};

/// Parses "gini", "hoover", "zagreb", "randic", "randic:<alpha>", "wiener",
/// "hyper_wiener". Throws domain_error on anything else.
index_spec parse_index_spec(std::string_view text);

/// A computed index value, exact where the index is integral.
struct index_value {
  std::variant<wide_int, double> value;

  double as_double() const;
  /// Integers verbatim; reals with 17 significant digits.
  std::string to_string() const;
};

/// sum_i sum_j |w_i - w_j| / (2 n sum_i w_i), via the sorted-prefix identity.
/// Throws domain_error for fewer than two weights or a zero total.
double gini_functional(std::span<const double> weights);

double degree_gini(const caterpillar& c);

/// Degree-based Hoover index with the class-level normalization
/// E|V| * E deg(U) = (n + m)(2 - 2/(n + m)), which is deterministic here.
/// Computed exactly as sum_v |N deg(v) - S| / (2 N S), N = n + m, S = 2N - 2.
double hoover(const caterpillar& c);

/// First Zagreb index: sum of squared degrees over all nodes.
wide_int zagreb(const caterpillar& c);

/// Randic index with parameter alpha. alpha == 1 goes through randic_unit.
double randic(const caterpillar& c, double alpha);

/// Randic index with alpha = 1 (second Zagreb index), exact.
wide_int randic_unit(const caterpillar& c);

/// Sum of distances over unordered node pairs, O(m).
wide_int wiener(const caterpillar& c);

/// Sum of d + d^2 over unordered node pairs, O(m).
wide_int hyper_wiener(const caterpillar& c);

index_value compute_index(const index_spec& spec, const caterpillar& c);

}  // namespace catlab
