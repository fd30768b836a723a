#pragma once

// Brute-force references for the unit tests. Nothing here calls into the
// library's formulas: trees are rebuilt from an edge list, distances come
// from Floyd-Warshall and moments from walking every growth history.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace catlab_test {

using big_rational = boost::multiprecision::cpp_rational;

struct edge_tree {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;
};

// Spine 0..m-1 in path order, then leaves in parent order.
inline edge_tree build_tree(const std::vector<std::int64_t>& counts) {
  edge_tree t;
  const int m = static_cast<int>(counts.size());
  t.nodes = m;
  for (int i = 1; i < m; ++i) t.edges.emplace_back(i - 1, i);
  for (int i = 0; i < m; ++i) {
    for (std::int64_t k = 0; k < counts[i]; ++k) t.edges.emplace_back(i, t.nodes++);
  }
  return t;
}

inline std::vector<std::int64_t> degrees(const edge_tree& t) {
  std::vector<std::int64_t> d(t.nodes, 0);
  for (auto [u, v] : t.edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

inline std::vector<std::vector<std::int64_t>> floyd(const edge_tree& t) {
  const std::int64_t inf = 1'000'000'000;
  std::vector<std::vector<std::int64_t>> d(t.nodes, std::vector<std::int64_t>(t.nodes, inf));
  for (int i = 0; i < t.nodes; ++i) d[i][i] = 0;
  for (auto [u, v] : t.edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < t.nodes; ++k)
    for (int i = 0; i < t.nodes; ++i)
      for (int j = 0; j < t.nodes; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline std::int64_t brute_zagreb(const edge_tree& t) {
  std::int64_t s = 0;
  for (auto d : degrees(t)) s += d * d;
  return s;
}

inline std::int64_t brute_randic_unit(const edge_tree& t) {
  const auto d = degrees(t);
  std::int64_t s = 0;
  for (auto [u, v] : t.edges) s += d[u] * d[v];
  return s;
}

inline double brute_randic(const edge_tree& t, double alpha) {
  const auto d = degrees(t);
  double s = 0.0;
  for (auto [u, v] : t.edges) s += std::pow(static_cast<double>(d[u] * d[v]), alpha);
  return s;
}

inline std::int64_t brute_wiener(const edge_tree& t) {
  const auto d = floyd(t);
  std::int64_t s = 0;
  for (int i = 0; i < t.nodes; ++i)
    for (int j = i + 1; j < t.nodes; ++j) s += d[i][j];
  return s;
}

inline std::int64_t brute_hyper_wiener(const edge_tree& t) {
  const auto d = floyd(t);
  std::int64_t s = 0;
  for (int i = 0; i < t.nodes; ++i)
    for (int j = i + 1; j < t.nodes; ++j) s += d[i][j] + d[i][j] * d[i][j];
  return s;
}

inline double brute_gini(const std::vector<double>& w) {
  double num = 0.0;
  double total = 0.0;
  for (double a : w) {
    total += a;
    for (double b : w) num += std::fabs(a - b);
  }
  return num / (2.0 * static_cast<double>(w.size()) * total);
}

inline double brute_hoover(const edge_tree& t) {
  const auto d = degrees(t);
  double avg = 0.0;
  for (auto x : d) avg += static_cast<double>(x);
  avg /= t.nodes;
  double dev = 0.0;
  for (auto x : d) dev += std::fabs(static_cast<double>(x) - avg);
  return 0.5 * dev / (t.nodes * avg);
}

struct moments {
  big_rational mean;
  big_rational second;
};

// Walks all m^n equally likely attachment sequences.
inline moments history_moments(
    int m, int n, const std::function<std::int64_t(const std::vector<std::int64_t>&)>& f) {
  std::vector<int> choice(n, 0);
  big_rational sum = 0;
  big_rational sum_sq = 0;
  std::int64_t histories = 0;
  for (;;) {
    std::vector<std::int64_t> counts(m, 0);
    for (int c : choice) ++counts[c];
    const big_rational v = f(counts);
    sum += v;
    sum_sq += v * v;
    ++histories;
    int pos = 0;
    while (pos < n && ++choice[pos] == m) choice[pos++] = 0;
    if (pos == n) break;
  }
  return {sum / histories, sum_sq / histories};
}

// Every leaf-count vector of length m summing to n.
inline void for_each_composition(int m, int n,
                                 const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> c(m, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m - 1) {
      c[i] = left;
      fn(c);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      c[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, n);
}

inline std::vector<std::int64_t> random_counts(std::mt19937_64& g, int max_m, int max_n) {
  const int m = std::uniform_int_distribution<int>(2, max_m)(g);
  const int n = std::uniform_int_distribution<int>(0, max_n)(g);
  std::vector<std::int64_t> c(m, 0);
  std::uniform_int_distribution<int> pick(0, m - 1);
  for (int k = 0; k < n; ++k) ++c[pick(g)];
  return c;
}

}  // namespace catlab_test
