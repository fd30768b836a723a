#include "catlab/oracle.hpp"

#include <deque>
#include <limits>
#include <set>
#include <string>

#include "catlab/errors.hpp"
#include "catlab/theory.hpp"

namespace catlab::oracle {

namespace {

wide_int exact_index(const index_spec& index, const caterpillar& c) {
  switch (index.kind) {
    case index_kind::zagreb: return zagreb(c);
    case index_kind::wiener: return wiener(c);
    case index_kind::hyper_wiener: return hyper_wiener(c);
    case index_kind::randic:
      if (index.alpha == 1.0) return randic_unit(c);
      break;
    default:
      break;
  }
  throw domain_error("exact enumeration needs an integral index, got " +
                     index.name());
}

// Number of states to visit, saturating at guard + 1.
std::uint64_t capped_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 0; k < exponent; ++k) {
    if (out > kEnumerationGuard / base) return kEnumerationGuard + 1;
    out *= base;
  }
  return out;
}

// C(n + m - 1, m - 1), saturating.
std::uint64_t capped_compositions(std::uint64_t m, std::uint64_t n) {
  unsigned __int128 out = 1;
  const std::uint64_t k = std::min(m - 1, n);
  for (std::uint64_t i = 1; i <= k; ++i) {
    out = out * (n + m - 1 - k + i) / i;
    if (out > kEnumerationGuard) return kEnumerationGuard + 1;
  }
  return static_cast<std::uint64_t>(out);
}

exact_moments finish(const big_int& total, const big_int& sum,
                     const big_int& sum_sq, std::uint64_t support) {
  exact_moments out;
  out.history_count = total;
  out.mean = rational(sum, total);
  out.second_moment = rational(sum_sq, total);
  out.variance = out.second_moment - out.mean * out.mean;
  out.support_size = support;
  return out;
}

exact_moments enumerate_histories(std::int64_t m, std::int64_t n,
                                  const index_spec& index) {
  const auto spine = static_cast<std::size_t>(m);
  std::vector<std::size_t> history(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> counts(spine, 0);
  counts[0] = n;

  wide_int sum = 0;
  wide_int sum_sq = 0;
  std::uint64_t visited = 0;
  std::set<wide_int> support;
  for (;;) {
    const wide_int v = exact_index(index, caterpillar(counts));
    sum += v;
    sum_sq += v * v;
    support.insert(v);
    ++visited;

    // Odometer increment over history positions.
    std::size_t pos = 0;
    while (pos < history.size()) {
      --counts[history[pos]];
      if (++history[pos] < spine) {
        ++counts[history[pos]];
        break;
      }
      history[pos] = 0;
      ++counts[0];
      ++pos;
    }
    if (pos == history.size()) break;
  }
  return finish(big_int(visited), to_big(sum), to_big(sum_sq), support.size());
}

exact_moments enumerate_compositions(std::int64_t m, std::int64_t n,
                                     const index_spec& index) {
  const auto spine = static_cast<std::size_t>(m);
  std::vector<big_int> factorial(static_cast<std::size_t>(n) + 1, 1);
  for (std::size_t k = 1; k < factorial.size(); ++k) {
    factorial[k] = factorial[k - 1] * k;
  }

  big_int sum = 0;
  big_int sum_sq = 0;
  std::set<wide_int> support;
  std::vector<std::int64_t> counts(spine, 0);

  // Depth-first over X_0 .. X_{m-2}; X_{m-1} takes the remainder.
  auto visit = [&](auto&& self, std::size_t slot, std::int64_t remaining,
                   const big_int& denom) -> void {
    if (slot + 1 == spine) {
      counts[slot] = remaining;
      const big_int weight =
          factorial[static_cast<std::size_t>(n)] /
          (denom * factorial[static_cast<std::size_t>(remaining)]);
      const wide_int v = exact_index(index, caterpillar(counts));
      const big_int bv = to_big(v);
      sum += weight * bv;
      sum_sq += weight * bv * bv;
      support.insert(v);
      return;
    }
    for (std::int64_t x = 0; x <= remaining; ++x) {
      counts[slot] = x;
      self(self, slot + 1, remaining - x,
           denom * factorial[static_cast<std::size_t>(x)]);
    }
  };
  visit(visit, 0, n, big_int(1));

  big_int total = 1;
  for (std::int64_t k = 0; k < n; ++k) total *= m;
  return finish(total, sum, sum_sq, support.size());
}

}  // namespace

exact_moments enumerate_exact(std::int64_t m, std::int64_t n,
                              const index_spec& index, enumeration_mode mode) {
  if (m < 2) throw domain_error("spine too short: m must be >= 2");
  if (n < 0) throw domain_error("n must be >= 0");
  exact_index(index, new_spine(m));  // reject non-integral kinds up front

  const std::uint64_t histories =
      capped_power(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n));
  const std::uint64_t compositions = capped_compositions(
      static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n));

  if (mode == enumeration_mode::automatic) {
    mode = (n <= 12 && histories <= kEnumerationGuard)
               ? enumeration_mode::histories
               : enumeration_mode::compositions;
  }
  const std::uint64_t cost =
      mode == enumeration_mode::histories ? histories : compositions;
  if (cost > kEnumerationGuard) {
    throw resource_error(
        std::string("enumeration of m=") + std::to_string(m) +
        ", n=" + std::to_string(n) + " exceeds the guard of " +
        std::to_string(kEnumerationGuard) + " states (" +
        (mode == enumeration_mode::histories ? "m^n histories"
                                             : "C(n+m-1, m-1) compositions") +
        ")");
  }
  return mode == enumeration_mode::histories
             ? enumerate_histories(m, n, index)
             : enumerate_compositions(m, n, index);
}

void for_each_state(std::int64_t m, std::int64_t n,
                    const std::function<void(const caterpillar&)>& fn) {
  if (m < 2) throw domain_error("spine too short: m must be >= 2");
  if (n < 0) throw domain_error("n must be >= 0");
  const auto spine = static_cast<std::size_t>(m);
  std::vector<std::int64_t> counts(spine, 0);
  auto visit = [&](auto&& self, std::size_t slot, std::int64_t remaining) -> void {
    if (slot + 1 == spine) {
      counts[slot] = remaining;
      fn(caterpillar(counts));
      return;
    }
    for (std::int64_t x = remaining; x >= 0; --x) {
      counts[slot] = x;
      self(self, slot + 1, remaining - x);
    }
  };
  visit(visit, 0, n);
}

distance_matrix bfs_distances(const adjacency_graph& g) {
  const std::size_t nodes = g.node_count();
  distance_matrix dist(nodes);
  std::vector<std::int64_t> seen(nodes);
  std::deque<std::size_t> queue;
  for (std::size_t source = 0; source < nodes; ++source) {
    std::fill(seen.begin(), seen.end(), -1);
    seen[source] = 0;
    queue.assign(1, source);
    std::size_t reached = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const std::size_t v : g.adjacency[u]) {
        if (seen[v] >= 0) continue;
        seen[v] = seen[u] + 1;
        ++reached;
        queue.push_back(v);
      }
    }
    if (reached != nodes) {
      throw structural_error("graph is disconnected: node " +
                             std::to_string(source) + " reaches " +
                             std::to_string(reached) + " of " +
                             std::to_string(nodes) + " nodes");
    }
    for (std::size_t v = 0; v < nodes; ++v) dist.at(source, v) = seen[v];
  }
  return dist;
}

wide_int wiener_bfs(const adjacency_graph& g) {
  const auto dist = bfs_distances(g);
  wide_int total = 0;
  for (std::size_t u = 0; u < dist.size(); ++u) {
    for (std::size_t v = u + 1; v < dist.size(); ++v) total += dist(u, v);
  }
  return total;
}

wide_int hyper_wiener_bfs(const adjacency_graph& g) {
  const auto dist = bfs_distances(g);
  wide_int total = 0;
  for (std::size_t u = 0; u < dist.size(); ++u) {
    for (std::size_t v = u + 1; v < dist.size(); ++v) {
      const wide_int d = dist(u, v);
      total += d + d * d;
    }
  }
  return total;
}

std::vector<caterpillar> one_step_successors(const caterpillar& c) {
  std::vector<caterpillar> out;
  out.reserve(c.spine_size());
  for (std::size_t i = 0; i < c.spine_size(); ++i) {
    out.push_back(c.with_leaf_at(i));
  }
  return out;
}

rational successor_mean(const caterpillar& c, const index_spec& index) {
  big_int total = 0;
  for (const auto& next : one_step_successors(c)) {
    total += to_big(exact_index(index, next));
  }
  return rational(total, static_cast<std::int64_t>(c.spine_size()));
}

rational martingale_residual(const caterpillar& c) {
  const auto m = static_cast<std::int64_t>(c.spine_size());
  const std::int64_t n = c.leaves();
  const rational current =
      rational(to_big(zagreb(c))) + theory::zagreb_compensator(m, n).value;
  const rational next_mean = successor_mean(c, {index_kind::zagreb}) +
                             theory::zagreb_compensator(m, n + 1).value;
  return next_mean - current;
}

}  // namespace catlab::oracle
