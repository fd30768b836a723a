#include "catlab/theory.hpp"

#include "catlab/errors.hpp"

namespace catlab::theory {

namespace {

void require_spine(std::int64_t m) {
  if (m < 2) throw domain_error("spine too short: m must be >= 2");
}

void require_args(std::int64_t m, std::int64_t n) {
  require_spine(m);
  if (n < 0) throw domain_error("n must be >= 0");
}

rational q(std::int64_t v) { return rational(v); }

struct quadratic {
  rational c2, c1, c0;
  rational at(const rational& x) const { return (c2 * x + c1) * x + c0; }
};

quadratic gini_numerator(std::int64_t mi) {
  const rational m = q(mi);
  return {2 * m * m - 2, m * m * m + 4 * m * m - m + 2,
          2 * m * m * m * m - 2 * m * m};
}

quadratic gini_denominator(std::int64_t mi) {
  const rational m = q(mi);
  return {6 * m * m + 6 * m, 12 * m * m * m, 6 * m * m * m * m - 6 * m * m * m};
}

}  // namespace

std::string to_string(validity v) {
  switch (v) {
    case validity::all_m: return "all_m";
    case validity::m_ge_3: return "m_ge_3";
    case validity::erratum_paper_form: return "erratum_paper_form";
  }
  return "unknown";
}

theory_value gini_mean(std::int64_t m, std::int64_t n) {
  require_args(m, n);
  const rational x = q(n);
  return {gini_numerator(m).at(x) / gini_denominator(m).at(x), validity::all_m,
          "distance-based Gini mean"};
}

rational gini_mean_limit_in_n(std::int64_t m) {
  require_spine(m);
  return gini_numerator(m).c2 / gini_denominator(m).c2;
}

theory_value hoover_mean(std::int64_t mi, std::int64_t ni) {
  require_args(mi, ni);
  const rational m = q(mi), n = q(ni);
  const rational order = n + m;
  const rational numerator = 2 * n * (n + m - 2) / order;
  const rational denominator = 2 * order * (2 - 2 / order);
  return {numerator / denominator, validity::all_m,
          "Hoover mean on the event that spine degrees exceed the average"};
}

theory_value zagreb_mean(std::int64_t mi, std::int64_t ni) {
  require_args(mi, ni);
  const rational m = q(mi), n = q(ni);
  return {n * n / m + (6 * m - 5) * n / m + 4 * m - 6, validity::all_m,
          "Zagreb mean from the one-step degree recurrence"};
}

theory_value zagreb_second_moment(std::int64_t mi, std::int64_t ni) {
  require_args(mi, ni);
  const rational m = q(mi), n = q(ni);
  const rational m2 = m * m;
  const rational value =
      n * n * n * n / m2 + (12 * m - 10) * n * n * n / m2 +
      (44 * m2 - 70 * m + 23) * n * n / m2 +
      (48 * m2 * m - 112 * m2 + 66 * m - 14) * n / m2 +
      16 * (m - rational(3, 2)) * (m - rational(3, 2));
  return {value, validity::all_m, "Zagreb second moment"};
}

theory_value zagreb_variance(std::int64_t mi, std::int64_t ni) {
  require_args(mi, ni);
  const rational m = q(mi), n = q(ni);
  return {2 * n * ((m - 1) * n + 3 * m - 7) / (m * m), validity::all_m,
          "Zagreb variance"};
}

theory_value zagreb_compensator(std::int64_t mi, std::int64_t ni) {
  require_args(mi, ni);
  const rational m = q(mi), n = q(ni);
  return {-n * (n + 6 * m - 5) / m, validity::all_m,
          "Zagreb martingale compensator"};
}

clt_params zagreb_clt_params(std::int64_t mi) {
  require_spine(mi);
  const rational m = q(mi);
  return {"(Z_n - n^2/m) / n",
          {2 * (m - 1) / (m * m), validity::all_m,
           "Zagreb martingale CLT variance"}};
}

theory_value randic_mean_unchecked(std::int64_t mi, std::int64_t ni) {
  require_args(mi, ni);
  const rational m = q(mi), n = q(ni);
  const rational value =
      ((2 * m - 1) * n * n + (7 * m * m - 10 * m + 1) * n +
       4 * m * m * (m - 2)) /
      (m * m);
  return {value, mi == 2 ? validity::erratum_paper_form : validity::m_ge_3,
          "Randic (alpha = 1) mean from multinomial moments"};
}

theory_value randic_mean(std::int64_t m, std::int64_t n) {
  if (m == 2) {
    throw validity_error(
        "randic_mean requires m >= 3: at m = 2 the closed form is one less "
        "than the exact enumeration mean (e.g. m=2, n=1 gives 3, "
        "enumeration gives 4)");
  }
  return randic_mean_unchecked(m, n);
}

rational randic_conditional_mean(const caterpillar& c) {
  const auto m = static_cast<std::int64_t>(c.spine_size());
  const std::int64_t j = c.leaves() + 1;
  rational r = 0;
  for (std::size_t i = 0; i < c.spine_size(); ++i) {
    const std::int64_t d = c.spine_degree(i);
    if (i > 0) r += rational(c.spine_degree(i - 1) * d);
    r += rational(c.leaf_count(i) * d);
  }
  const std::int64_t ends = c.spine_degree(0) + c.spine_degree(c.spine_size() - 1);
  return r + rational(2 * (2 * j + 3 * m - 5) - ends, m) + 1;
}

rational randic_supermartingale_bound(std::int64_t m, std::int64_t j,
                                      const rational& r_prev) {
  require_spine(m);
  if (j < 1) throw domain_error("j must be >= 1");
  return r_prev + rational(2 * j + 7 * m - 10, m);
}

double randic_supermartingale_bound(std::int64_t m, std::int64_t j,
                                    double r_prev) {
  require_spine(m);
  if (j < 1) throw domain_error("j must be >= 1");
  return r_prev + static_cast<double>(2 * j + 7 * m - 10) /
                      static_cast<double>(m);
}

theory_value wiener_mean(std::int64_t mi, std::int64_t ni) {
  require_args(mi, ni);
  const rational m = q(mi), n = q(ni);
  const rational value = ((m * m + 6 * m - 1) * n * n +
                          (m - 1) * (2 * m * m + 7 * m - 1) * n +
                          m * m * (m * m - 1)) /
                         (6 * m);
  return {value, validity::all_m, "Wiener mean, three-part decomposition"};
}

theory_value hyper_wiener_mean_paper(std::int64_t mi, std::int64_t ni) {
  require_args(mi, ni);
  const rational m = q(mi), n = q(ni);
  const rational value =
      ((m * m * m + 10 * m * m + 35 * m - 10) * n * n +
       (2 * m * m * m + 13 * m * m + 25 * m - 10) * (m - 1) * n +
       m * m * (m + 2) * (m + 1) * (m - 1)) /
      (12 * m);
  return {value, validity::erratum_paper_form,
          "published hyper-Wiener mean (linear term too large by n)"};
}

theory_value hyper_wiener_mean_corrected(std::int64_t mi, std::int64_t ni) {
  require_args(mi, ni);
  const rational m = q(mi), n = q(ni);
  // Leaf-leaf pairs contribute through E[X_i X_j] = n(n-1)/m^2 for both
  // same-parent and cross-parent pairs, hence the n(n-1) factor.
  const rational spine = m * (m * m * m + 2 * m * m - m - 2) / 12;
  const rational leaf_leaf =
      (m * m * m + 10 * m * m + 35 * m - 10) * n * (n - 1) / (12 * m);
  const rational spine_leaf = n * (2 + (m - 1) * (m * m + 7 * m + 18) / 6);
  return {spine + leaf_leaf + spine_leaf, validity::all_m,
          "hyper-Wiener mean rebuilt from per-pair weights"};
}

rational zagreb_scaled_limit(std::int64_t m) {
  require_spine(m);
  return rational(1, m);
}

rational randic_scaled_limit(std::int64_t m) {
  require_spine(m);
  return rational(2 * m - 1, m * m);
}

rational wiener_scaled_limit(std::int64_t m) {
  require_spine(m);
  return rational(m * m + 6 * m - 1, 6 * m);
}

rational hyper_wiener_scaled_limit(std::int64_t m) {
  require_spine(m);
  return rational(m * m * m + 10 * m * m + 35 * m - 10, 12 * m);
}

}  // namespace catlab::theory
