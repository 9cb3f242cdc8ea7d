#include <gtest/gtest.h>

#include <set>

#include "rainbow/rainbow.hpp"
#include "support.hpp"

using namespace rainbow;
using namespace testing_support;

TEST(MaxMatching, SmallGraphs) {
  EXPECT_EQ(max_matching(keep(gen_rainbow(3))).size(), 1);
  const ColouredGraph p4(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}});
  EXPECT_EQ(max_matching(p4).size(), 2);
  EXPECT_EQ(max_matching(keep(ColouredGraph(5, {}))).size(), 0);
}

TEST(MaxMatching, Petersen) {
  const auto g = petersen();
  EXPECT_EQ(naive_matching_number(g), 5);
  const auto m = max_matching(g);
  EXPECT_EQ(m.size(), 5);
  EXPECT_TRUE(is_matching(g, m.edges));
}

TEST(MaxMatching, OddCycleBlossoms) {
  // two triangles joined by a path; needs blossom contraction from some starts
  const ColouredGraph g(8, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}, {2, 3, 3}, {3, 4, 4}, {4, 5, 5}, {5, 6, 6}, {6, 7, 7}, {5, 7, 8}});
  EXPECT_EQ(max_matching(g).size(), naive_matching_number(g));
}

TEST(MaxMatching, RespectsView) {
  const auto g = gen_rainbow(6);
  EXPECT_EQ(max_matching(GraphView(g).drop_vertices({0, 1, 2})).size(), 1);
  const auto m = max_matching(GraphView(g).induced({1, 3, 5}));
  for (EdgeIndex e : m.edges) {
    EXPECT_NE(g.edge(e).u % 2, 0);
    EXPECT_NE(g.edge(e).v % 2, 0);
  }
}

TEST(GreedyMaximal, Examples) {
  EXPECT_EQ(greedy_maximal_matching(keep(ColouredGraph(3, {}))).size(), 0);
  const ColouredGraph p4(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}});
  const auto m = greedy_maximal_matching(p4, std::vector<EdgeIndex>{0, 1, 2});
  EXPECT_EQ(m.edges, (std::vector<EdgeIndex>{0, 2}));
  const ColouredGraph star(5, {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {0, 4, 3}});
  EXPECT_EQ(greedy_maximal_matching(star, std::vector<EdgeIndex>{3, 1, 0, 2}).size(), 1);
  EXPECT_EQ(greedy_maximal_matching(p4, std::vector<EdgeIndex>{1, 0, 2}).size(), 1);
}

TEST(GreedyRainbow, Examples) {
  const auto zero = greedy_rainbow_matching(keep(gen_one_factorization(6)), 0);
  EXPECT_TRUE(zero.success);
  EXPECT_EQ(zero.matching.size(), 0);

  const auto rb = gen_rainbow(6);
  const auto m = greedy_rainbow_matching(rb, 3);
  ASSERT_TRUE(m.success);
  EXPECT_EQ(m.matching.size(), 3);
  EXPECT_TRUE(is_matching(rb, m.matching.edges));
  EXPECT_TRUE(distinct_colours(rb, m.matching.edges));

  const auto k4 = gen_one_factorization(4);
  const auto f = greedy_rainbow_matching(k4, 2);
  EXPECT_FALSE(f.success);
  EXPECT_EQ(f.matching.size(), 1);
}

TEST(GreedyRainbow, NoRainbowTwoMatchingInK4Factorization) {
  // every pair of disjoint edges of K_4 lies in one colour class
  const auto k4 = gen_one_factorization(4);
  for (EdgeIndex a = 0; a < 6; ++a) {
    for (EdgeIndex b = a + 1; b < 6; ++b) {
      if (is_matching(k4, {a, b})) {
        EXPECT_FALSE(distinct_colours(k4, {a, b}));
      }
    }
  }
}

TEST(Reservation, ZeroSize) {
  const auto g = gen_one_factorization(6);
  const auto r = disjoint_rainbow_matchings(g, 0, 3);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.matchings.size(), 3u);
  for (const auto& m : r.matchings) {
    EXPECT_EQ(m.matching.size(), 0);
    EXPECT_EQ(m.unused_colours.size(), 5u);
    EXPECT_TRUE(m.z.empty());
    EXPECT_EQ(m.x.size(), 6u);
  }
}

namespace {

void expect_reserved_valid(const ColouredGraph& g, const ReservationResult& r, int size) {
  std::set<EdgeIndex> all;
  for (const auto& m : r.matchings) {
    EXPECT_EQ(m.matching.size(), size);
    EXPECT_TRUE(is_matching(g, m.matching.edges));
    EXPECT_TRUE(distinct_colours(g, m.matching.edges));
    for (EdgeIndex e : m.matching.edges) EXPECT_TRUE(all.insert(e).second);
    EXPECT_EQ(m.z.size(), m.matching.edges.size());
    EXPECT_EQ(static_cast<int>(m.x.size() + m.z.size()), g.vertex_count());
    EXPECT_EQ(static_cast<int>(m.unused_colours.size()), g.colour_count() - size);
  }
}

}  // namespace

TEST(Reservation, SingleEdgesOnRainbowK8) {
  const auto g = gen_rainbow(8);
  const auto r = disjoint_rainbow_matchings(g, 1, 2);
  ASSERT_TRUE(r.ok()) << r.failure->describe();
  ASSERT_EQ(r.matchings.size(), 2u);
  expect_reserved_valid(g, r, 1);
  EXPECT_NE(g.edge(r.matchings[0].matching.edges[0]).colour, g.edge(r.matchings[1].matching.edges[0]).colour);
}

TEST(Reservation, SingleEdgesOnFactorizedK6) {
  const auto g = gen_one_factorization(6);
  const auto r = disjoint_rainbow_matchings(g, 1, 2);
  ASSERT_TRUE(r.ok()) << r.failure->describe();
  expect_reserved_valid(g, r, 1);
}

TEST(Reservation, LargerRandomInstances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = gen_random_proper(24, seed);
    const auto r = disjoint_rainbow_matchings(g, 3, 4);
    if (r.ok()) {
      EXPECT_EQ(r.matchings.size(), 4u);
    } else {
      EXPECT_FALSE(r.failure->describe().empty());
    }
    expect_reserved_valid(g, r, 3);
  }
}

TEST(Reservation, RejectsNegativeArguments) {
  EXPECT_THROW(disjoint_rainbow_matchings(keep(gen_rainbow(3)), -1, 1), std::invalid_argument);
}
