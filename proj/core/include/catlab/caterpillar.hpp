#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "catlab/random.hpp"

namespace catlab {

/// Compact state of a caterpillar: an m-node spine and the number of leaves
/// hanging off each spine node. Immutable once constructed.
///
/// Spine node i (0-based) has degree X_i + 1 at either end of the spine and
/// X_i + 2 in the interior; with m = 2 both nodes are ends.
class caterpillar {
 public:
  /// Throws domain_error if fewer than two counts or any count is negative.
  explicit caterpillar(std::vector<std::int64_t> leaf_counts);

  std::size_t spine_size() const { return leaf_counts_.size(); }
  std::span<const std::int64_t> leaf_counts() const { return leaf_counts_; }
  std::int64_t leaf_count(std::size_t i) const { return leaf_counts_[i]; }

  /// n, the total number of leaves (= number of growth steps taken).
  std::int64_t leaves() const { return leaves_; }
  std::int64_t node_count() const;
  std::int64_t edge_count() const;

  std::int64_t spine_degree(std::size_t i) const;
  bool is_spine_end(std::size_t i) const;

  /// Copy with one more leaf on spine node i.
  caterpillar with_leaf_at(std::size_t i) const;

  friend bool operator==(const caterpillar&, const caterpillar&) = default;

 private:
  std::vector<std::int64_t> leaf_counts_;
  std::int64_t leaves_ = 0;
};

/// Explicit tree materialized from a caterpillar. Spine nodes are 0..m-1 in
/// path order; leaves follow, grouped by parent.
struct adjacency_graph {
  enum class role : std::uint8_t { spine, leaf };

  struct node_label {
    role kind;
    std::size_t spine_index;  // own index for spine nodes, parent for leaves

    friend bool operator==(const node_label&, const node_label&) = default;
  };

  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<node_label> labels;

  std::size_t node_count() const { return adjacency.size(); }
  std::size_t edge_count() const;
};

caterpillar new_spine(std::int64_t m);

/// One uniform attachment step.
caterpillar grow_step(const caterpillar& c, xoshiro256ss& rng);

/// n sequential growth steps from a bare spine; deterministic in seed.
caterpillar simulate(std::int64_t m, std::int64_t n, rng_seed seed);

/// Draws the leaf counts directly from Multinomial(n; 1/m, ..., 1/m) by
/// conditional binomials. Same law as simulate, different random path.
caterpillar sample_direct(std::int64_t m, std::int64_t n, rng_seed seed);

/// Spine degrees first (in spine order), then n ones for the leaves.
std::vector<std::int64_t> degree_sequence(const caterpillar& c);

adjacency_graph to_adjacency(const caterpillar& c);

}  // namespace catlab
