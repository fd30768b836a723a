#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <queue>

#include <boost/math/distributions/chi_squared.hpp>

#include "catlab/caterpillar.hpp"
#include "catlab/errors.hpp"
#include "catlab/indices.hpp"
#include "support.hpp"

namespace {

using catlab::caterpillar;
using catlab::rng_seed;
using Counts = std::vector<std::int64_t>;

Counts counts_of(const caterpillar& c) {
  return Counts(c.leaf_counts().begin(), c.leaf_counts().end());
}

TEST(Caterpillar, NewSpine) {
  EXPECT_EQ(counts_of(catlab::new_spine(2)), (Counts{0, 0}));
  EXPECT_EQ(counts_of(catlab::new_spine(5)), Counts(5, 0));
  EXPECT_EQ(catlab::new_spine(5).leaves(), 0);
}

TEST(Caterpillar, SpineTooShort) {
  EXPECT_THROW(catlab::new_spine(1), catlab::domain_error);
  EXPECT_THROW(catlab::new_spine(-3), catlab::domain_error);
  try {
    catlab::new_spine(1);
  } catch (const catlab::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("spine too short"), std::string::npos);
  }
  EXPECT_THROW(caterpillar(Counts{3}), std::exception);
  EXPECT_THROW(caterpillar(Counts{1, -1}), std::exception);
}

TEST(Caterpillar, GrowStepAddsExactlyOneLeaf) {
  caterpillar c(Counts{4, 0, 1});
  catlab::xoshiro256ss rng(rng_seed{5, 0});
  for (int t = 0; t < 200; ++t) {
    const auto next = catlab::grow_step(c, rng);
    ASSERT_EQ(next.leaves(), c.leaves() + 1);
    int changed = 0;
    for (std::size_t i = 0; i < c.spine_size(); ++i) {
      const auto diff = next.leaf_count(i) - c.leaf_count(i);
      ASSERT_TRUE(diff == 0 || diff == 1);
      changed += static_cast<int>(diff);
    }
    ASSERT_EQ(changed, 1);
    c = next;
  }
}

TEST(Caterpillar, SimulateDeterministicAndCounts) {
  EXPECT_EQ(counts_of(catlab::simulate(3, 0, {123, 0})), (Counts{0, 0, 0}));
  const auto a = catlab::simulate(2, 1000, {77, 3});
  const auto b = catlab::simulate(2, 1000, {77, 3});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.leaves(), 1000);
  const auto counts = counts_of(a);
  EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), std::int64_t{0}), 1000);
}

TEST(Caterpillar, SampleDirectBasics) {
  EXPECT_EQ(counts_of(catlab::sample_direct(4, 0, {1, 0})), Counts(4, 0));
  EXPECT_EQ(catlab::sample_direct(6, 300, {2, 9}), catlab::sample_direct(6, 300, {2, 9}));
  const auto big = catlab::sample_direct(3, 1'000'000, {42, 0});
  const double sd = std::sqrt(1e6 * 2.0 / 9.0);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(static_cast<double>(big.leaf_count(i)), 1e6 / 3.0, 5 * sd);
  }
  EXPECT_EQ(big.leaves(), 1'000'000);
}

TEST(Caterpillar, DegreeSequenceExamples) {
  EXPECT_EQ(catlab::degree_sequence(caterpillar(Counts{1, 0, 2})),
            (Counts{2, 2, 3, 1, 1, 1}));
  EXPECT_EQ(catlab::degree_sequence(caterpillar(Counts{0, 0})), (Counts{1, 1}));
  // m = 2: both spine nodes use the end rule.
  EXPECT_EQ(catlab::degree_sequence(caterpillar(Counts{3, 1})), (Counts{4, 2, 1, 1, 1, 1}));
}

TEST(Caterpillar, AdjacencyExamples) {
  const auto g = catlab::to_adjacency(caterpillar(Counts{1, 0}));
  ASSERT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.adjacency[0], (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(g.labels[2].kind, catlab::adjacency_graph::role::leaf);
  EXPECT_EQ(g.labels[2].spine_index, 0u);

  const auto path = catlab::to_adjacency(caterpillar(Counts{0, 0, 0}));
  EXPECT_EQ(path.node_count(), 3u);
  EXPECT_EQ(path.edge_count(), 2u);
  EXPECT_EQ(path.adjacency[1].size(), 2u);
}

std::size_t reachable_from_zero(const catlab::adjacency_graph& g) {
  std::vector<bool> seen(g.node_count(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 0;
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    ++count;
    for (auto v : g.adjacency[u]) {
      if (!seen[v]) {
        seen[v] = true;
        q.push(v);
      }
    }
  }
  return count;
}

void check_structure(const Counts& counts) {
  const caterpillar c(counts);
  const auto n = c.leaves();
  const auto m = static_cast<std::int64_t>(c.spine_size());
  const auto degrees = catlab::degree_sequence(c);
  const auto g = catlab::to_adjacency(c);
  ASSERT_EQ(static_cast<std::int64_t>(degrees.size()), n + m);
  ASSERT_EQ(std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0}), 2 * (n + m - 1));
  ASSERT_EQ(static_cast<std::int64_t>(g.node_count()), n + m);
  ASSERT_EQ(static_cast<std::int64_t>(g.edge_count()), n + m - 1);
  ASSERT_EQ(c.edge_count(), n + m - 1);
  ASSERT_EQ(c.node_count(), n + m);
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    ASSERT_EQ(static_cast<std::int64_t>(g.adjacency[v].size()), degrees[v]);
  }
  ASSERT_EQ(reachable_from_zero(g), g.node_count());
  ASSERT_EQ(catlab_test::degrees(catlab_test::build_tree(counts)), degrees);
}

TEST(Caterpillar, DegreesAgreeWithAdjacencyExhaustive) {
  for (int m = 2; m <= 6; ++m) {
    for (int n = 0; n <= 8; ++n) {
      catlab_test::for_each_composition(m, n, check_structure);
    }
  }
}

TEST(Caterpillar, DegreesAgreeWithAdjacencyRandom) {
  std::mt19937_64 g(2024);
  for (int t = 0; t < 200; ++t) check_structure(catlab_test::random_counts(g, 40, 300));
}

TEST(Caterpillar, WithLeafAt) {
  const caterpillar c(Counts{1, 2, 3});
  EXPECT_EQ(counts_of(c.with_leaf_at(1)), (Counts{1, 3, 3}));
  EXPECT_EQ(c.with_leaf_at(2).leaves(), 7);
}

// Exact law by enumerating histories; chi-square over 10^5 draws.
template <typename Sampler>
void expect_multinomial_law(int m, int n, Sampler&& sample) {
  std::map<Counts, double> exact;
  const double histories = std::pow(m, n);
  std::vector<int> choice(n, 0);
  for (;;) {
    Counts c(m, 0);
    for (int x : choice) ++c[x];
    exact[c] += 1.0 / histories;
    int pos = 0;
    while (pos < n && ++choice[pos] == m) choice[pos++] = 0;
    if (pos == n) break;
  }
  const int draws = 100'000;
  std::map<Counts, double> observed;
  for (int r = 0; r < draws; ++r) observed[sample(static_cast<std::uint64_t>(r))] += 1.0;
  double chi = 0.0;
  for (const auto& [state, p] : exact) {
    const double e = draws * p;
    const double o = observed.count(state) ? observed.at(state) : 0.0;
    chi += (o - e) * (o - e) / e;
  }
  ASSERT_EQ(observed.size(), exact.size());
  boost::math::chi_squared dist(static_cast<double>(exact.size() - 1));
  EXPECT_LT(chi, boost::math::quantile(dist, 0.999)) << "m=" << m << " n=" << n;
}

TEST(Caterpillar, SamplersMatchMultinomialLaw) {
  for (int m : {2, 3}) {
    for (int n : {2, 3}) {
      expect_multinomial_law(m, n, [&](std::uint64_t r) {
        return counts_of(catlab::simulate(m, n, {31, r}));
      });
      expect_multinomial_law(m, n, [&](std::uint64_t r) {
        return counts_of(catlab::sample_direct(m, n, {32, r}));
      });
    }
  }
}

TEST(Caterpillar, TwoStepsFromBareEdge) {
  std::map<Counts, int> seen;
  const int draws = 40'000;
  for (int r = 0; r < draws; ++r) {
    catlab::xoshiro256ss rng(rng_seed{13, static_cast<std::uint64_t>(r)});
    auto c = catlab::grow_step(catlab::new_spine(2), rng);
    c = catlab::grow_step(c, rng);
    ++seen[counts_of(c)];
  }
  ASSERT_EQ(seen.size(), 3u);
  EXPECT_NEAR(seen[(Counts{2, 0})] / double(draws), 0.25, 0.01);
  EXPECT_NEAR(seen[(Counts{1, 1})] / double(draws), 0.50, 0.01);
  EXPECT_NEAR(seen[(Counts{0, 2})] / double(draws), 0.25, 0.01);
}

TEST(Caterpillar, StreamIndependenceSmoke) {
  const int pairs = 1000;
  std::vector<double> a(pairs), b(pairs);
  for (int r = 0; r < pairs; ++r) {
    a[r] = static_cast<double>(catlab::zagreb(catlab::simulate(10, 200, {5, 2 * std::uint64_t(r)})));
    b[r] = static_cast<double>(catlab::zagreb(catlab::simulate(10, 200, {5, 2 * std::uint64_t(r) + 1})));
  }
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / pairs;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / pairs;
  double sab = 0, saa = 0, sbb = 0;
  for (int r = 0; r < pairs; ++r) {
    sab += (a[r] - ma) * (b[r] - mb);
    saa += (a[r] - ma) * (a[r] - ma);
    sbb += (b[r] - mb) * (b[r] - mb);
  }
  EXPECT_LE(std::fabs(sab / std::sqrt(saa * sbb)), 0.1);
}

}  // namespace
