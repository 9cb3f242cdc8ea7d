// Randomised properties with hand-rolled generators. Seeds are fixed, so a
// failure message names a reproducible case.

#include <gtest/gtest.h>

#include "rainbow/oracles.hpp"
#include "rainbow/rainbow.hpp"
#include "support.hpp"

using namespace rainbow;
using namespace testing_support;

TEST(Property, BlossomEqualsExhaustive) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const auto g = random_graph(n, seed, 1 + static_cast<int>(seed % 4), 5, 3);
    const auto m = max_matching(g);
    ASSERT_TRUE(is_matching(g, m.edges)) << "seed " << seed;
    ASSERT_EQ(m.size(), brute_force_matching_number(g)) << "seed " << seed;
    ASSERT_EQ(m.size(), naive_matching_number(g)) << "seed " << seed;
  }
}

TEST(Property, GreedyMatchingIsMaximalAndHalfOptimal) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_graph(2 + static_cast<int>(seed % 12), seed, 1, 2, 4);
    const auto m = greedy_maximal_matching(g);
    ASSERT_TRUE(is_matching(g, m.edges));
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      auto plus = m.edges;
      plus.push_back(e);
      if (std::find(m.edges.begin(), m.edges.end(), e) == m.edges.end()) {
        EXPECT_FALSE(is_matching(g, plus));
      }
    }
    EXPECT_GE(2 * m.size(), matching_number(g));
  }
}

TEST(Property, FinderAgreesWithPartitionCondition) {
  int positives = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const int n = 1 + static_cast<int>(seed % 7);
    const auto g = random_proper_graph(n, seed);
    const bool found = find_rainbow_spanning_tree(g).has_value();
    ASSERT_EQ(found, partition_condition_holds(g).holds) << "seed " << seed;
    positives += found;
  }
  EXPECT_GT(positives, 50);
  EXPECT_LT(positives, 350);
}

TEST(Property, FinderAgreesWithNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const auto g = random_graph(n, seed, 3, 4, 3);  // improper colourings too
    const auto t = find_rainbow_spanning_tree(g);
    ASSERT_EQ(t.has_value(), !naive_rainbow_trees(g).empty()) << "seed " << seed;
    if (t) {
      EXPECT_TRUE(is_rainbow_spanning_tree(g, GraphView(g).vertices(), t->edges));
    }
  }
}

TEST(Property, ForestIsMaximumAndMonotone) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto g = random_proper_graph(3 + static_cast<int>(seed % 12), seed);
    const auto f = max_rainbow_forest(g);
    ASSERT_FALSE(has_augmenting_path(g, f.edges)) << "seed " << seed;
    EXPECT_TRUE(distinct_colours(g, f.edges));
    // deleting an edge never increases the rank, and drops it by at most one
    if (g.edge_count() == 0) continue;
    const EdgeIndex e = static_cast<EdgeIndex>(seed % static_cast<std::uint64_t>(g.edge_count()));
    const auto smaller = max_rainbow_forest(GraphView(g).without_edges({e}));
    EXPECT_LE(smaller.size(), f.size());
    EXPECT_GE(smaller.size(), f.size() - 1);
  }
}

TEST(Property, SeededForestReachesSameRank) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_proper_graph(4 + static_cast<int>(seed % 10), seed);
    Rng rng(seed);
    const auto start = random_maximal_rainbow_forest(g, rng);
    EXPECT_EQ(max_rainbow_forest_from(g, start).size(), max_rainbow_forest(g).size()) << "seed " << seed;
  }
}

TEST(Property, GreedyPeelOutputsVerify) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_proper_graph(2 + static_cast<int>(seed % 14), seed);
    const auto r = greedy_peel(g, g.vertex_count());
    EXPECT_TRUE(verify_decomposition(g, edge_lists(r)).ok()) << "seed " << seed;
  }
}

TEST(Property, GreedyPeelNeverBeatsOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const auto g = gen_random_proper(n, seed);
    EXPECT_LE(static_cast<int>(greedy_peel(g, n).trees.size()), brute_force_tree_packing(g, n)) << "seed " << seed;
  }
}

TEST(Property, LeafTreeContract) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(seed);
    const int n = 4 + static_cast<int>(uniform_below(rng, 20));
    const auto g = gen_random_proper(n, seed);
    VertexSet a;
    for (Vertex v = 0; v < n && static_cast<int>(a.size()) * 10 < n; ++v) {
      if (uniform_below(rng, 4) == 0) a.push_back(v);
    }
    const Ratio alpha(1, 4 + static_cast<std::int64_t>(uniform_below(rng, 8)));
    const auto r = rainbow_tree_with_leaves(g, a, alpha);
    if (!r.ok()) {
      EXPECT_TRUE(r.failed_stage);
      continue;
    }
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (EdgeIndex e : r.tree->edges) ++deg[static_cast<std::size_t>(g.edge(e).u)], ++deg[static_cast<std::size_t>(g.edge(e).v)];
    for (Vertex v : a) EXPECT_EQ(deg[static_cast<std::size_t>(v)], 1);
    EXPECT_LE(*std::max_element(deg.begin(), deg.end()), n - static_cast<int>(r.b.size()));
    EXPECT_TRUE(is_rainbow_spanning_tree(g, GraphView(g).vertices(), r.tree->edges));
  }
}

TEST(Property, ReservationDisjointness) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = gen_random_proper(14 + static_cast<int>(seed % 10), seed);
    const auto res = disjoint_rainbow_matchings(g, 1 + static_cast<int>(seed % 3), 3);
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& m : res.matchings) {
      EXPECT_TRUE(is_matching(g, m.matching.edges));
      EXPECT_TRUE(distinct_colours(g, m.matching.edges));
      for (EdgeIndex e : m.matching.edges) {
        EXPECT_FALSE(used[static_cast<std::size_t>(e)]);
        used[static_cast<std::size_t>(e)] = 1;
      }
    }
    if (!res.ok()) {
      EXPECT_LT(res.matchings.size(), 3u);
    }
  }
}
