#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "catlab/caterpillar.hpp"
#include "catlab/exact.hpp"
#include "catlab/indices.hpp"

namespace catlab::oracle {

/// Exact first and second moments of an index over all m^n equally likely
/// growth histories.
struct exact_moments {
  rational mean;
  rational second_moment;
  rational variance;
  std::uint64_t support_size = 0;  // distinct index values observed
  big_int history_count;           // m^n
};

enum class enumeration_mode {
  histories,     // walk every one of the m^n attachment sequences
  compositions,  // walk leaf-count vectors weighted by multinomial coefficients
  automatic,     // histories for n <= 12 within the guard, else compositions
};

/// Upper bound on the number of states either mode may visit.
inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

/// Only integral indices (Zagreb, Randic alpha = 1, Wiener, hyper-Wiener)
/// are supported. Throws resource_error when the visited state count would
/// exceed kEnumerationGuard.
exact_moments enumerate_exact(std::int64_t m, std::int64_t n,
                              const index_spec& index,
                              enumeration_mode mode = enumeration_mode::automatic);

/// Calls fn once for every leaf-count vector of n leaves on an m-node
/// spine (all C(n + m - 1, m - 1) compositions), in lexicographic order.
void for_each_state(std::int64_t m, std::int64_t n,
                    const std::function<void(const caterpillar&)>& fn);

/// Dense symmetric all-pairs distance matrix.
class distance_matrix {
 public:
  explicit distance_matrix(std::size_t nodes)
      : nodes_(nodes), d_(nodes * nodes, 0) {}

  std::size_t size() const { return nodes_; }
  std::int64_t operator()(std::size_t u, std::size_t v) const {
    return d_[u * nodes_ + v];
  }
  std::int64_t& at(std::size_t u, std::size_t v) { return d_[u * nodes_ + v]; }

 private:
  std::size_t nodes_;
  std::vector<std::int64_t> d_;
};

/// BFS from every node. Throws structural_error if g is disconnected.
distance_matrix bfs_distances(const adjacency_graph& g);

wide_int wiener_bfs(const adjacency_graph& g);
wide_int hyper_wiener_bfs(const adjacency_graph& g);

/// The m equally likely states one growth step after c, successor i having
/// the new leaf on spine node i.
std::vector<caterpillar> one_step_successors(const caterpillar& c);

/// Exact E[index | state] one step ahead, by averaging over successors.
rational successor_mean(const caterpillar& c, const index_spec& index);

/// E[M_{n+1} | state] - M_n with M_k = Z_k + beta_k; zero iff the
/// compensated Zagreb sequence is a martingale at this state.
rational martingale_residual(const caterpillar& c);

}  // namespace catlab::oracle
