#include <gtest/gtest.h>

#include "rainbow/oracles.hpp"
#include "rainbow/rainbow.hpp"
#include "support.hpp"

using namespace rainbow;
using namespace testing_support;

namespace {

std::vector<int> degrees_of(const ColouredGraph& g, const std::vector<EdgeIndex>& edges) {
  std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeIndex e : edges) {
    ++d[static_cast<std::size_t>(g.edge(e).u)];
    ++d[static_cast<std::size_t>(g.edge(e).v)];
  }
  return d;
}

void expect_verified(const ColouredGraph& g, const DecompositionResult& r) {
  const auto rep = verify_decomposition(g, edge_lists(r));
  EXPECT_TRUE(rep.ok()) << rep.first_failure.value_or("");
}

}  // namespace

TEST(WellColouredTree, Examples) {
  const auto k4 = gen_one_factorization(4);
  const auto a = rainbow_tree_well_coloured(k4, Ratio(1, 8));
  ASSERT_TRUE(a.tree);
  EXPECT_TRUE(is_rainbow_spanning_tree(k4, GraphView(k4).vertices(), a.tree->edges));
  EXPECT_FALSE(rainbow_tree_well_coloured(keep(mono_path(4)), Ratio(1, 8)).tree);
  const auto k2 = rainbow_tree_well_coloured(keep(gen_rainbow(2)), Ratio(1, 8));
  ASSERT_TRUE(k2.tree);
  EXPECT_EQ(k2.tree->edges, (std::vector<EdgeIndex>{0}));
}

TEST(LeafTree, PaddingVertexBecomesLeaf) {
  const auto g = gen_random_proper(5, 11);
  const Ratio alpha(1, 5);  // ceil(alpha n) = 1
  const auto r = rainbow_tree_with_leaves(g, {}, alpha);
  ASSERT_TRUE(r.ok()) << r.failure;
  ASSERT_EQ(r.b.size(), 1u);
  EXPECT_EQ(degrees_of(g, r.tree->edges)[static_cast<std::size_t>(r.b[0])], 1);
  EXPECT_TRUE(is_rainbow_spanning_tree(g, GraphView(g).vertices(), r.tree->edges));
}

TEST(LeafTree, ForcedLeafOnFactorizedK6) {
  const auto g = gen_one_factorization(6);
  const auto r = rainbow_tree_with_leaves(g, {0}, Ratio(1, 12));
  ASSERT_TRUE(r.ok()) << r.failure;
  const auto d = degrees_of(g, r.tree->edges);
  EXPECT_EQ(d[0], 1);
  EXPECT_LE(*std::max_element(d.begin(), d.end()), 6 - static_cast<int>(r.b.size()));
}

TEST(LeafTree, AllVerticesForcedFails) {
  const auto g = gen_rainbow(5);
  const auto r = rainbow_tree_with_leaves(g, {0, 1, 2, 3, 4}, Ratio(1, 8));
  EXPECT_FALSE(r.ok());
  ASSERT_TRUE(r.failed_stage);
  EXPECT_EQ(*r.failed_stage, LeafStage::PendantA);
}

TEST(LeafTree, RejectsForeignVertex) {
  const auto g = gen_rainbow(6);
  EXPECT_THROW(rainbow_tree_with_leaves(GraphView(g).drop_vertices({5}), {5}, Ratio(1, 8)), std::invalid_argument);
}

TEST(Peel, EmptyTargetList) {
  const auto g = gen_one_factorization(6);
  const auto r = peel_trees(g, {}, PipelineParams{}, Ratio(1, 8));
  EXPECT_TRUE(r.trees.empty());
  EXPECT_FALSE(r.failure);
}

TEST(Peel, OneTargetFactorizedK6) {
  const auto g = gen_one_factorization(6);
  const std::vector<GraphView> targets{GraphView(g)};
  const auto r = peel_trees(g, targets, PipelineParams{}, Ratio(1, 8));
  ASSERT_EQ(r.trees.size(), 1u);
  EXPECT_EQ(r.leaf_set_sizes, (std::vector<int>{0}));
  EXPECT_TRUE(is_rainbow_spanning_tree(g, GraphView(g).vertices(), r.trees[0].edges));
}

TEST(Peel, TwoTargetsFactorizedK8) {
  const auto g = gen_one_factorization(8);
  PipelineParams params;
  params.high_deg_frac = Ratio(1);  // relaxed: threshold ceil(alpha n) = 2 for alpha 1/4
  const Ratio alpha(1, 4);
  const std::vector<GraphView> targets{GraphView(g), GraphView(g)};
  const auto r = peel_trees(g, targets, params, alpha);
  ASSERT_EQ(r.trees.size(), 2u) << (r.failure ? r.failure->message : "");
  const auto first = degrees_of(g, r.trees[0].edges);
  const auto second = degrees_of(g, r.trees[1].edges);
  for (int v = 0; v < 8; ++v) {
    if (first[static_cast<std::size_t>(v)] >= 2) {
      EXPECT_EQ(second[static_cast<std::size_t>(v)], 1) << "vertex " << v;
    }
  }
  std::vector<std::vector<EdgeIndex>> lists{r.trees[0].edges, r.trees[1].edges};
  EXPECT_TRUE(verify_decomposition(g, lists).ok());
}

TEST(Robust, TargetFormula) {
  // beta^2 n / 2500 evaluated exactly
  EXPECT_EQ(floor_mul(Ratio(1, 2) * Ratio(1, 2) / Ratio(2500), 10000), 1);
  PipelineParams p;
  p.mode = Mode::Paper;
  const auto r = decompose_robust(keep(gen_one_factorization(10)), p);
  EXPECT_EQ(r.stats.ell, 0);
  EXPECT_TRUE(r.stats.degenerate);
  EXPECT_TRUE(r.trees.empty());
  EXPECT_FALSE(r.stats.notes.empty());
}

TEST(Robust, PracticalRaisesTarget) {
  const auto g = gen_one_factorization(8);
  PipelineParams p;
  p.mode = Mode::Practical;
  const auto r = decompose_robust(g, p);
  EXPECT_EQ(r.stats.ell, 4);
  expect_verified(g, r);
}

TEST(Rich, FactorizationReservesNothing) {
  const auto g = gen_one_factorization(12);
  PipelineParams p;
  p.mode = Mode::Paper;
  p.ell = 1;
  const auto r = decompose_rich(g, p);
  EXPECT_EQ(r.stats.reserved_matching_size, 0);
  ASSERT_EQ(r.trees.size(), 1u);
  expect_verified(g, r);
}

TEST(Rich, TargetFormula) {
  EXPECT_EQ(floor_mul(Ratio(1, 2) * Ratio(1, 2) / Ratio(1'000'000), 4'000'000), 1);
  PipelineParams p;
  p.mode = Mode::Paper;
  const auto r = decompose_rich(keep(gen_one_factorization(12)), p);
  EXPECT_EQ(r.stats.ell, 0);
  EXPECT_TRUE(r.stats.degenerate);
}

TEST(Rich, PracticalOnRainbowK9) {
  const auto g = gen_rainbow(9);
  PipelineParams p;
  p.mode = Mode::Practical;
  const auto r = decompose_rich(g, p);
  expect_verified(g, r);
}

TEST(Rich, PoorColoursForceReservation) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = gen_random_proper(12, seed);
    PipelineParams p;
    p.mode = Mode::Paper;
    p.alpha = Ratio(1, 2);  // only perfect-matching colours are rich
    p.ell = 2;
    const auto r = decompose_rich(g, p);
    EXPECT_GT(r.stats.reserved_matching_size, 0);
    expect_verified(g, r);
    if (r.trees.size() < 2u) {
      EXPECT_TRUE(r.stats.failure) << "seed " << seed;
    }
  }
}

TEST(GreedyPeel, Examples) {
  EXPECT_EQ(greedy_peel(keep(gen_rainbow(2)), 1).trees.size(), 1u);
  const ColouredGraph mono(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}});
  EXPECT_TRUE(greedy_peel(mono, 3).trees.empty());
  EXPECT_THROW(greedy_peel(mono, -1), std::invalid_argument);
}

TEST(GreedyPeel, MatchesOracleOnSmallFactorizations) {
  for (int n : {2, 4, 6}) {
    const auto g = gen_one_factorization(n);
    const auto r = greedy_peel(g, n / 2);
    EXPECT_EQ(static_cast<int>(r.trees.size()), brute_force_tree_packing(g, n / 2)) << "n " << n;
    expect_verified(g, r);
  }
}

TEST(GreedyPeel, RespectsLimit) {
  const auto g = gen_rainbow(10);
  EXPECT_EQ(greedy_peel(g, 2).trees.size(), 2u);
  EXPECT_EQ(greedy_peel(g, 0).trees.size(), 0u);
}

TEST(Decompose, DefaultsRecorded) {
  const auto r = decompose(gen_one_factorization(6), PipelineParams{});
  EXPECT_EQ(r.params.alpha, Ratio(1, 8));
  EXPECT_EQ(r.params.beta, Ratio(1, 8) / Ratio(2400));
  EXPECT_EQ(r.params.mode, Mode::Practical);
}

TEST(Decompose, PracticalFactorizedK6) {
  const auto g = gen_one_factorization(6);
  const auto r = decompose(g, PipelineParams{});
  EXPECT_GE(r.trees.size(), 2u);
  expect_verified(g, r);
}

TEST(Decompose, PaperIsExplicitlyDegenerate) {
  const auto g = gen_one_factorization(100);
  PipelineParams p;
  p.mode = Mode::Paper;
  const auto r = decompose(g, p);
  EXPECT_TRUE(r.trees.empty());
  EXPECT_TRUE(r.stats.degenerate);
  EXPECT_EQ(r.branch, Branch::Rich);
  const bool noted = std::any_of(r.stats.notes.begin(), r.stats.notes.end(),
                                 [](const std::string& s) { return s.find("degenerate") != std::string::npos; });
  EXPECT_TRUE(noted);
}

TEST(Decompose, InputChecks) {
  EXPECT_THROW(decompose(mono_path(3), PipelineParams{}), InputError);
  const ColouredGraph partial(4, {{0, 1, 0}, {2, 3, 1}});
  PipelineParams paper;
  paper.mode = Mode::Paper;
  EXPECT_THROW(decompose(partial, paper), InputError);
  const auto r = decompose(partial, PipelineParams{});
  EXPECT_TRUE(r.trees.empty());
  EXPECT_FALSE(r.stats.notes.empty());
  PipelineParams bad;
  bad.alpha = Ratio(0);
  EXPECT_THROW(decompose(gen_rainbow(3), bad), std::invalid_argument);
}

TEST(Decompose, TimingsRecorded) {
  const auto r = decompose(gen_one_factorization(8), PipelineParams{});
  EXPECT_FALSE(r.stats.timings.empty());
}
