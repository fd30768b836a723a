#include "catlab/caterpillar.hpp"

#include <string>

#include "catlab/errors.hpp"

namespace catlab {

namespace {

void require_spine(std::int64_t m) {
  if (m < 2) {
    throw domain_error("spine too short: m must be >= 2, got " +
                       std::to_string(m));
  }
}

void require_leaves(std::int64_t n) {
  if (n < 0) {
    throw domain_error("leaf count must be >= 0, got " + std::to_string(n));
  }
}

}  // namespace

caterpillar::caterpillar(std::vector<std::int64_t> leaf_counts)
    : leaf_counts_(std::move(leaf_counts)) {
  require_spine(static_cast<std::int64_t>(leaf_counts_.size()));
  for (const auto x : leaf_counts_) {
    if (x < 0) throw domain_error("negative leaf count");
    leaves_ += x;
  }
}

std::int64_t caterpillar::node_count() const {
  return leaves_ + static_cast<std::int64_t>(spine_size());
}

std::int64_t caterpillar::edge_count() const { return node_count() - 1; }

bool caterpillar::is_spine_end(std::size_t i) const {
  return i == 0 || i + 1 == spine_size();
}

std::int64_t caterpillar::spine_degree(std::size_t i) const {
  return leaf_counts_[i] + (is_spine_end(i) ? 1 : 2);
}

caterpillar caterpillar::with_leaf_at(std::size_t i) const {
  caterpillar next = *this;
  ++next.leaf_counts_.at(i);
  ++next.leaves_;
  return next;
}

std::size_t adjacency_graph::edge_count() const {
  std::size_t ends = 0;
  for (const auto& nbrs : adjacency) ends += nbrs.size();
  return ends / 2;
}

caterpillar new_spine(std::int64_t m) {
  require_spine(m);
  return caterpillar(std::vector<std::int64_t>(static_cast<std::size_t>(m), 0));
}

caterpillar grow_step(const caterpillar& c, xoshiro256ss& rng) {
  return c.with_leaf_at(rng.uniform_below(c.spine_size()));
}

caterpillar simulate(std::int64_t m, std::int64_t n, rng_seed seed) {
  require_spine(m);
  require_leaves(n);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  xoshiro256ss rng(seed);
  const auto spine = static_cast<std::uint64_t>(m);
  for (std::int64_t step = 0; step < n; ++step) {
    ++counts[rng.uniform_below(spine)];
  }
  return caterpillar(std::move(counts));
}

caterpillar sample_direct(std::int64_t m, std::int64_t n, rng_seed seed) {
  require_spine(m);
  require_leaves(n);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(m), 0);
  xoshiro256ss rng(seed);
  auto remaining = static_cast<std::uint64_t>(n);
  for (std::int64_t i = 0; i + 1 < m && remaining > 0; ++i) {
    const double p = 1.0 / static_cast<double>(m - i);
    const std::uint64_t x = binomial(rng, remaining, p);
    counts[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(x);
    remaining -= x;
  }
  counts.back() += static_cast<std::int64_t>(remaining);
  return caterpillar(std::move(counts));
}

std::vector<std::int64_t> degree_sequence(const caterpillar& c) {
  std::vector<std::int64_t> degrees;
  degrees.reserve(static_cast<std::size_t>(c.node_count()));
  for (std::size_t i = 0; i < c.spine_size(); ++i) {
    degrees.push_back(c.spine_degree(i));
  }
  degrees.resize(static_cast<std::size_t>(c.node_count()), 1);
  return degrees;
}

adjacency_graph to_adjacency(const caterpillar& c) {
  adjacency_graph g;
  const auto total = static_cast<std::size_t>(c.node_count());
  const std::size_t m = c.spine_size();
  g.adjacency.resize(total);
  g.labels.reserve(total);
  for (std::size_t i = 0; i < m; ++i) {
    g.labels.push_back({adjacency_graph::role::spine, i});
    if (i > 0) {
      g.adjacency[i].push_back(i - 1);
      g.adjacency[i - 1].push_back(i);
    }
  }
  std::size_t next = m;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::int64_t k = 0; k < c.leaf_count(i); ++k, ++next) {
      g.labels.push_back({adjacency_graph::role::leaf, i});
      g.adjacency[i].push_back(next);
      g.adjacency[next].push_back(i);
    }
  }
  return g;
}

}  // namespace catlab
