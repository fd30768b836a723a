#pragma once

#include <cstdint>
#include <string>

#include "catlab/caterpillar.hpp"
#include "catlab/exact.hpp"

namespace catlab::theory {

/// Where a closed form is known to hold.
///   all_m              - every m >= 2
///   m_ge_3             - only for spines of three or more nodes
///   erratum_paper_form - published form, refuted by exhaustive enumeration
enum class validity { all_m, m_ge_3, erratum_paper_form };

std::string to_string(validity v);

struct theory_value {
  rational value;
  validity domain = validity::all_m;
  std::string source;

  double approx() const { return to_double(value); }
};

/// Mean of the distance-based Gini index (ratio of two quadratics in n).
theory_value gini_mean(std::int64_t m, std::int64_t n);

/// lim_{n -> inf} gini_mean(m, n), as the ratio of leading coefficients.
rational gini_mean_limit_in_n(std::int64_t m);

/// Mean Hoover index, derived on the event that every spine degree exceeds
/// the average degree. Underestimates the per-instance value at small n.
theory_value hoover_mean(std::int64_t m, std::int64_t n);

theory_value zagreb_mean(std::int64_t m, std::int64_t n);
theory_value zagreb_second_moment(std::int64_t m, std::int64_t n);
theory_value zagreb_variance(std::int64_t m, std::int64_t n);

/// Compensator beta_n = -n (n + 6m - 5) / m: Z_n + beta_n is a martingale.
theory_value zagreb_compensator(std::int64_t m, std::int64_t n);

struct clt_params {
  std::string centering;  // human-readable description of the statistic
  theory_value variance;  // 2(m - 1) / m^2
};

/// Asymptotic law of (Z_n - n^2/m) / n.
clt_params zagreb_clt_params(std::int64_t m);

/// Mean Randic index (alpha = 1). Holds for m >= 3 only; throws
/// validity_error at m = 2, where enumeration gives one more than the
/// expression for every n.
theory_value randic_mean(std::int64_t m, std::int64_t n);

/// The same expression evaluated without the validity check. Tagged
/// erratum_paper_form when m = 2.
theory_value randic_mean_unchecked(std::int64_t m, std::int64_t n);

/// Exact one-step conditional mean E[R_{j} | F_{j-1}] for alpha = 1,
/// R + (2(2j + 3m - 5) - D_1 - D_m) / m + 1 with j = leaves(c) + 1.
rational randic_conditional_mean(const caterpillar& c);

/// Lower bound R_prev + (2j + 7m - 10) / m on the one-step conditional mean.
rational randic_supermartingale_bound(std::int64_t m, std::int64_t j,
                                      const rational& r_prev);
double randic_supermartingale_bound(std::int64_t m, std::int64_t j,
                                    double r_prev);

theory_value wiener_mean(std::int64_t m, std::int64_t n);

/// Published hyper-Wiener mean. Exceeds the true mean by exactly n.
theory_value hyper_wiener_mean_paper(std::int64_t m, std::int64_t n);

/// Hyper-Wiener mean rebuilt from the per-pair distance weights and
/// validated against exhaustive enumeration.
theory_value hyper_wiener_mean_corrected(std::int64_t m, std::int64_t n);

/// Limits of E[index] / n^2 as n -> infinity.
rational zagreb_scaled_limit(std::int64_t m);
rational randic_scaled_limit(std::int64_t m);
rational wiener_scaled_limit(std::int64_t m);
rational hyper_wiener_scaled_limit(std::int64_t m);

}  // namespace catlab::theory
