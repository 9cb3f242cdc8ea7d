#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/colour_analysis.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/rainbow_tree.hpp"
#include "rainbow/ratio.hpp"

namespace rainbow {

enum class Mode { Paper, Practical };

inline const char* to_string(Mode m) { return m == Mode::Paper ? "paper" : "practical"; }

/// Knobs of the tree-extraction pipeline. Defaults are the constants of the
/// asymptotic construction; they make every tree target zero at any feasible
/// n, so experiments override them.
struct PipelineParams {
  Mode mode = Mode::Practical;
  Ratio alpha{1, 8};
  Ratio beta{1, 19200};
  /// Tree target override; otherwise derived from the branch formulas.
  std::optional<std::int64_t> ell;
  /// Cap on trees for the practical greedy peel; default floor(n/2).
  std::optional<int> limit;

  Ratio degree_slack{1, 30};   // targets need min degree >= (1 - alpha*degree_slack) n
  Ratio max_deg_frac{1, 6};    // leaf-constrained trees are built with alpha*max_deg_frac
  Ratio high_deg_frac{1, 12};  // forest-degree threshold making a vertex a forced leaf
  Ratio forest_degree_slack{1, 15};
  std::int64_t ell_divisor = 2500;            // robust branch: ell = beta^2 n / ell_divisor
  std::int64_t rich_gap = 150;                // rich branch wants >= n - alpha n / rich_gap rich colours
  std::int64_t rich_ell_divisor = 1'000'000;  // rich branch: ell = alpha^2 n / rich_ell_divisor
  std::int64_t theorem_divisor = 1'000'000'000'000;
  ReservationOptions reservation;
  std::uint64_t seed = 0;

  void validate() const {
    auto in_unit = [](Ratio r, const char* name) {
      if (!(Ratio{0} < r) || Ratio{1} < r) throw std::invalid_argument(std::string(name) + " must lie in (0, 1]");
    };
    in_unit(alpha, "alpha");
    in_unit(beta, "beta");
    in_unit(degree_slack, "degree_slack");
    in_unit(max_deg_frac, "max_deg_frac");
    in_unit(high_deg_frac, "high_deg_frac");
    in_unit(forest_degree_slack, "forest_degree_slack");
    in_unit(reservation.rich_ratio, "reservation.rich_ratio");
    in_unit(reservation.degree_ratio, "reservation.degree_ratio");
    if (ell && *ell < 0) throw std::invalid_argument("ell must be non-negative");
    if (limit && *limit < 0) throw std::invalid_argument("limit must be non-negative");
    if (ell_divisor <= 0 || rich_gap <= 0 || rich_ell_divisor <= 0 || theorem_divisor <= 0) {
      throw std::invalid_argument("divisors must be positive");
    }
  }
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StageTiming {
  std::string stage;
  double millis = 0;
};

struct DecompositionStats {
  std::int64_t ell = 0;           // tree target
  int reserved_matching_size = 0; // r, rich branch only
  bool degenerate = false;        // target or theorem bound is zero / not met
  std::optional<std::string> failure;
  std::vector<std::string> notes;
  std::vector<StageTiming> timings;
};

struct DecompositionResult {
  std::vector<RainbowTree> trees;
  Branch branch = Branch::Rich;
  bool branch_fallback = false;
  PipelineParams params;
  DecompositionStats stats;
};

namespace detail {

class StageTimer {
 public:
  StageTimer(std::vector<StageTiming>& out, std::string stage)
      : out_(out), stage_(std::move(stage)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    const auto d = std::chrono::steady_clock::now() - start_;
    out_.push_back({stage_, std::chrono::duration<double, std::milli>(d).count()});
  }
  StageTimer(const StageTimer&) = delete;
  StageTimer& operator=(const StageTimer&) = delete;

 private:
  std::vector<StageTiming>& out_;
  std::string stage_;
  std::chrono::steady_clock::time_point start_;
};

inline std::vector<int> tree_degrees(const ColouredGraph& g, const std::vector<EdgeIndex>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeIndex e : edges) {
    ++deg[static_cast<std::size_t>(g.edge(e).u)];
    ++deg[static_cast<std::size_t>(g.edge(e).v)];
  }
  return deg;
}

// Kruskal-style rainbow forest preferring edges whose endpoints keep the most
// residual degree after this tree is removed.
inline std::vector<EdgeIndex> slack_seed_forest(const GraphView& g) {
  const ColouredGraph& p = g.parent();
  const auto residual = g.degrees();
  std::vector<int> tree_deg(static_cast<std::size_t>(p.vertex_count()), 0);
  std::vector<char> colour_used(static_cast<std::size_t>(p.colour_count()), 0);
  DisjointSets sets(p.vertex_count());
  std::vector<EdgeIndex> out;
  auto slack = [&](Vertex v) {
    return static_cast<long>(residual[static_cast<std::size_t>(v)] - tree_deg[static_cast<std::size_t>(v)]);
  };
  for (;;) {
    long best = -1;
    EdgeIndex pick = -1;
    for (EdgeIndex e : g.edges()) {
      const Edge& ed = g.edge(e);
      if (colour_used[static_cast<std::size_t>(ed.colour)] || sets.same(ed.u, ed.v)) continue;
      const long a = slack(ed.u), b = slack(ed.v);
      const long score = std::min(a, b) * (p.vertex_count() + 1) + std::max(a, b);
      if (score > best) {
        best = score;
        pick = e;
      }
    }
    if (pick < 0) break;
    const Edge& ed = g.edge(pick);
    sets.unite(ed.u, ed.v);
    colour_used[static_cast<std::size_t>(ed.colour)] = 1;
    ++tree_deg[static_cast<std::size_t>(ed.u)];
    ++tree_deg[static_cast<std::size_t>(ed.v)];
    out.push_back(pick);
  }
  return out;
}


// Rainbow spanning tree of g grown from the slack forest, so degree is spread.
inline std::optional<RainbowTree> spread_spanning_tree(const GraphView& g) {
  if (g.vertex_count() <= 1) return make_tree(g.parent(), g.vertices(), {});
  const RainbowForest forest = max_rainbow_forest_from(g, slack_seed_forest(g));
  if (forest.size() != g.vertex_count() - 1) return std::nullopt;
  return make_tree(g.parent(), g.vertices(), forest.edges);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single trees.

struct WellColouredTree {
  std::optional<RainbowTree> tree;
  /// Hypotheses of the existence guarantee, reported only.
  bool min_degree_ok = false;
  bool well_coloured = false;
};

/// Rainbow spanning tree of a (2 alpha)-well-coloured graph of min degree
/// >= (1 - alpha) n. The finder decides existence regardless of the hypotheses.
inline WellColouredTree rainbow_tree_well_coloured(const GraphView& g, Ratio alpha) {
  WellColouredTree out;
  const int n = g.vertex_count();
  out.min_degree_ok = g.min_degree() >= ceil_mul(Ratio{1} - alpha, n);
  out.well_coloured = certify_well_coloured(g, std::min(Ratio{1}, alpha * Ratio{2})).success;
  out.tree = find_rainbow_spanning_tree(g);
  return out;
}

enum class LeafStage { PendantA, PendantB, TreeInH, DegreeBound };

inline const char* to_string(LeafStage s) {
  switch (s) {
    case LeafStage::PendantA: return "pendant-A";
    case LeafStage::PendantB: return "pendant-B";
    case LeafStage::TreeInH: return "tree-in-H";
    case LeafStage::DegreeBound: return "degree-bound";
  }
  return "?";
}

struct LeafTreeResult {
  std::optional<RainbowTree> tree;
  std::optional<LeafStage> failed_stage;
  std::string failure;
  VertexSet b;  // A plus the padding vertices
  int h_vertices = 0;

  bool ok() const { return tree.has_value(); }
};

/// Rainbow spanning tree of g in which every vertex of `a` is a leaf and the
/// maximum degree is at most n - |B|.
///
/// B is `a` padded with the lowest-id other vertices to ceil(alpha n). Each
/// vertex of B gets a pendant edge to a fresh vertex with a fresh colour
/// (outside A for A, outside B for B \ A); a rainbow spanning tree of
/// H = g - B minus the pendant colours then completes the tree.
inline LeafTreeResult rainbow_tree_with_leaves(const GraphView& g, const VertexSet& a, Ratio alpha) {
  LeafTreeResult res;
  const ColouredGraph& p = g.parent();
  const int n = g.vertex_count();
  const auto pn = static_cast<std::size_t>(p.vertex_count());
  std::vector<char> in_a(pn, 0);
  std::vector<char> in_b(pn, 0);
  VertexSet sorted_a = a;
  std::sort(sorted_a.begin(), sorted_a.end());
  sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
  for (Vertex v : sorted_a) {
    if (!g.has_vertex(v)) throw std::invalid_argument("leaf set contains vertex " + std::to_string(v) + " outside the graph");
    in_a[static_cast<std::size_t>(v)] = in_b[static_cast<std::size_t>(v)] = 1;
  }
  const auto b_size = std::min<std::int64_t>(n, std::max<std::int64_t>(static_cast<std::int64_t>(sorted_a.size()), ceil_mul(alpha, n)));
  res.b = sorted_a;
  for (Vertex v : g.vertices()) {
    if (static_cast<std::int64_t>(res.b.size()) >= b_size) break;
    if (in_b[static_cast<std::size_t>(v)]) continue;
    in_b[static_cast<std::size_t>(v)] = 1;
    res.b.push_back(v);
  }
  std::sort(res.b.begin(), res.b.end());

  std::vector<char> vertex_taken(pn, 0);
  std::vector<char> colour_taken(static_cast<std::size_t>(p.colour_count()), 0);
  std::vector<EdgeIndex> pendants;
  ColourSet pendant_colours;
  auto attach = [&](Vertex v, const std::vector<char>& forbidden) {
    for (EdgeIndex e : g.incident(v)) {
      const Edge& ed = p.edge(e);
      const Vertex u = ed.other(v);
      if (forbidden[static_cast<std::size_t>(u)] || vertex_taken[static_cast<std::size_t>(u)] ||
          colour_taken[static_cast<std::size_t>(ed.colour)]) {
        continue;
      }
      vertex_taken[static_cast<std::size_t>(u)] = 1;
      colour_taken[static_cast<std::size_t>(ed.colour)] = 1;
      pendants.push_back(e);
      pendant_colours.push_back(ed.colour);
      return true;
    }
    return false;
  };
  for (Vertex v : sorted_a) {
    if (!attach(v, in_a)) {
      res.failed_stage = LeafStage::PendantA;
      res.failure = "no fresh pendant edge for leaf vertex " + std::to_string(v);
      return res;
    }
  }
  for (Vertex v : res.b) {
    if (in_a[static_cast<std::size_t>(v)]) continue;
    if (!attach(v, in_b)) {
      res.failed_stage = LeafStage::PendantB;
      res.failure = "no fresh pendant edge for padding vertex " + std::to_string(v);
      return res;
    }
  }

  const GraphView h = g.drop_vertices(res.b).without_colours(pendant_colours);
  res.h_vertices = h.vertex_count();
  const auto core = detail::spread_spanning_tree(h);
  if (!core) {
    res.failed_stage = LeafStage::TreeInH;
    res.failure = "no rainbow spanning tree in H (" + std::to_string(h.vertex_count()) + " vertices, " +
                  std::to_string(h.edge_count()) + " edges)";
    return res;
  }
  std::vector<EdgeIndex> edges = core->edges;
  edges.insert(edges.end(), pendants.begin(), pendants.end());
  auto tree = make_tree(p, g.vertices(), edges);
  if (!tree) {
    res.failed_stage = LeafStage::TreeInH;
    res.failure = "pendant edges do not complete a spanning tree";
    return res;
  }
  const auto deg = detail::tree_degrees(p, tree->edges);
  const int max_deg = *std::max_element(deg.begin(), deg.end());
  if (max_deg > n - static_cast<int>(res.b.size()) && n > 1) {
    res.failed_stage = LeafStage::DegreeBound;
    res.failure = "maximum degree " + std::to_string(max_deg) + " exceeds n - |B| = " +
                  std::to_string(n - static_cast<int>(res.b.size()));
    return res;
  }
  res.tree = std::move(tree);
  return res;
}

// ---------------------------------------------------------------------------
// Iterative peeling.

struct PeelFailure {
  int index = 0;
  LeafStage stage = LeafStage::TreeInH;
  std::string message;
};

struct PeelResult {
  std::vector<RainbowTree> trees;
  /// |A_i| per attempted tree.
  std::vector<int> leaf_set_sizes;
  std::optional<PeelFailure> failure;
  std::vector<std::string> notes;
};

/// Edge-disjoint rainbow trees T_1..T_l with T_i spanning targets[i]. Tree i
/// avoids the edges of earlier trees and must have as leaves all vertices whose
/// degree in the earlier trees reaches ceil(high_deg_frac * alpha * n).
/// Stops at the first failure, keeping the completed prefix.
inline PeelResult peel_trees(const GraphView& g, const std::vector<GraphView>& targets, const PipelineParams& params,
                             Ratio alpha) {
  PeelResult res;
  const ColouredGraph& p = g.parent();
  const int n = g.vertex_count();
  const auto high = std::max<std::int64_t>(1, ceil_mul(params.high_deg_frac * alpha, n));
  const Ratio leaf_alpha = alpha * params.max_deg_frac;
  const auto min_target_degree = ceil_mul(Ratio{1} - alpha * params.degree_slack, n);
  const auto forest_degree_bound = floor_mul(Ratio{1} - alpha * params.forest_degree_slack, n);
  const auto tree_degree_bound = floor_mul(Ratio{1} - leaf_alpha, n);

  std::vector<int> forest_degree(static_cast<std::size_t>(p.vertex_count()), 0);
  EdgeSubset forest;
  int low_degree_targets = 0;
  int forest_degree_violations = 0;
  int tree_degree_violations = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].min_degree() < min_target_degree) ++low_degree_targets;
    const GraphView h = targets[i].without_edges(forest);
    VertexSet a;
    for (Vertex v : h.vertices()) {
      if (forest_degree[static_cast<std::size_t>(v)] >= high) a.push_back(v);
    }
    res.leaf_set_sizes.push_back(static_cast<int>(a.size()));
    if (*std::max_element(forest_degree.begin(), forest_degree.end()) > forest_degree_bound) ++forest_degree_violations;

    LeafTreeResult built = rainbow_tree_with_leaves(h, a, leaf_alpha);
    if (!built.ok()) {
      res.failure = PeelFailure{static_cast<int>(i), *built.failed_stage, built.failure};
      break;
    }
    const auto deg = detail::tree_degrees(p, built.tree->edges);
    if (*std::max_element(deg.begin(), deg.end()) > tree_degree_bound) ++tree_degree_violations;
    for (EdgeIndex e : built.tree->edges) {
      ++forest_degree[static_cast<std::size_t>(p.edge(e).u)];
      ++forest_degree[static_cast<std::size_t>(p.edge(e).v)];
      forest.push_back(e);
    }
    std::sort(forest.begin(), forest.end());
    res.trees.push_back(std::move(*built.tree));
  }
  if (low_degree_targets > 0) {
    res.notes.push_back(std::to_string(low_degree_targets) + " target(s) below minimum degree " + std::to_string(min_target_degree));
  }
  if (forest_degree_violations > 0) {
    res.notes.push_back("forest degree exceeded " + std::to_string(forest_degree_bound) + " before " +
                        std::to_string(forest_degree_violations) + " tree(s)");
  }
  if (tree_degree_violations > 0) {
    res.notes.push_back(std::to_string(tree_degree_violations) + " tree(s) above maximum degree " + std::to_string(tree_degree_bound));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Branch drivers.

namespace detail {

inline void absorb_peel(DecompositionResult& out, PeelResult& peel) {
  out.stats.notes.insert(out.stats.notes.end(), peel.notes.begin(), peel.notes.end());
  if (peel.failure) {
    out.stats.failure = "peel failed at tree " + std::to_string(peel.failure->index) + " (" + to_string(peel.failure->stage) +
                        "): " + peel.failure->message;
  }
}

inline std::int64_t practical_target(const GraphView& g, const PipelineParams& params) {
  return params.limit ? *params.limit : g.vertex_count() / 2;
}

}  // namespace detail

/// Robust branch: l = floor(beta^2 n / ell_divisor) trees, all targets equal
/// to g, peeled with alpha = beta. Practical mode raises l to the greedy target.
inline DecompositionResult decompose_robust(const GraphView& g, const PipelineParams& params) {
  params.validate();
  DecompositionResult out;
  out.params = params;
  out.branch = Branch::Robust;
  const int n = g.vertex_count();
  std::int64_t ell = floor_mul(params.beta * params.beta / Ratio{params.ell_divisor}, n);
  if (params.ell) {
    ell = *params.ell;
  } else if (params.mode == Mode::Practical) {
    ell = std::max(ell, detail::practical_target(g, params));
  }
  out.stats.ell = ell;
  if (ell == 0) {
    out.stats.degenerate = true;
    out.stats.notes.emplace_back("degenerate: tree target is 0 at n=" + std::to_string(n));
    return out;
  }
  const std::vector<GraphView> targets(static_cast<std::size_t>(ell), g);
  PeelResult peel;
  {
    detail::StageTimer timer(out.stats.timings, "peel");
    peel = peel_trees(g, targets, params, params.beta);
  }
  out.trees = std::move(peel.trees);
  detail::absorb_peel(out, peel);
  return out;
}

/// Rich branch: reserve l edge-disjoint rainbow matchings M_i of size
/// r = n - 1 - #rich colours from the non-rich colours, then peel trees T_i
/// spanning G_i = (g minus all M_j)[colours unused by M_i][V minus Z_i] with
/// ratio alpha/2, and return M_i + T_i.
inline DecompositionResult decompose_rich(const GraphView& g, const PipelineParams& params) {
  params.validate();
  DecompositionResult out;
  out.params = params;
  out.branch = Branch::Rich;
  const ColouredGraph& p = g.parent();
  const int n = g.vertex_count();

  const ColourSet rich = rich_colours(g, params.alpha);
  const int r = std::max(n - 1 - static_cast<int>(rich.size()), 0);
  out.stats.reserved_matching_size = r;
  {
    // wants #rich >= n - alpha n / rich_gap
    const auto missing = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(rich.size());
    const bool enough = static_cast<__int128>(missing) * params.rich_gap * params.alpha.den() <=
                        static_cast<__int128>(params.alpha.num()) * n;
    if (!enough) {
      out.stats.notes.push_back("rich-colour hypothesis unmet: " + std::to_string(rich.size()) + " rich colours, want n - alpha n/" +
                                std::to_string(params.rich_gap));
    }
  }

  std::int64_t ell = floor_mul(params.alpha * params.alpha / Ratio{params.rich_ell_divisor}, n);
  if (params.ell) {
    ell = *params.ell;
  } else if (params.mode == Mode::Practical) {
    ell = std::max(ell, detail::practical_target(g, params));
  }
  out.stats.ell = ell;
  if (ell == 0) {
    out.stats.degenerate = true;
    out.stats.notes.emplace_back("degenerate: tree target is 0 at n=" + std::to_string(n));
    return out;
  }

  const GraphView non_rich = g.without_colours(rich);
  ReservationResult reservation;
  {
    detail::StageTimer timer(out.stats.timings, "reserve");
    reservation = disjoint_rainbow_matchings(non_rich, r, static_cast<int>(ell), params.reservation);
    if (!reservation.ok() && params.mode == Mode::Practical && !params.ell) {
      out.stats.notes.push_back("reservation of " + std::to_string(ell) + " matchings failed: " + reservation.failure->describe());
      while (!reservation.ok() && ell > 1) {
        --ell;
        reservation = disjoint_rainbow_matchings(non_rich, r, static_cast<int>(ell), params.reservation);
      }
      out.stats.ell = ell;
    }
  }
  out.stats.notes.insert(out.stats.notes.end(), reservation.notes.begin(), reservation.notes.end());
  if (!reservation.ok()) {
    out.stats.failure = "matching reservation failed: " + reservation.failure->describe();
    return out;
  }

  EdgeSubset reserved;
  for (const auto& rm : reservation.matchings) reserved.insert(reserved.end(), rm.matching.edges.begin(), rm.matching.edges.end());
  const GraphView host = g.without_edges(reserved);
  std::vector<GraphView> targets;
  for (const auto& rm : reservation.matchings) targets.push_back(host.with_colours(rm.unused_colours).induced(rm.x));

  PeelResult peel;
  {
    detail::StageTimer timer(out.stats.timings, "peel");
    peel = peel_trees(host, targets, params, params.alpha / Ratio{2});
  }
  for (std::size_t i = 0; i < peel.trees.size(); ++i) {
    std::vector<EdgeIndex> edges = peel.trees[i].edges;
    const auto& m = reservation.matchings[i].matching.edges;
    edges.insert(edges.end(), m.begin(), m.end());
    auto tree = make_tree(p, g.vertices(), edges);
    if (!tree) {
      out.stats.failure = "assembly of tree " + std::to_string(i) + " does not span";
      break;
    }
    out.trees.push_back(std::move(*tree));
  }
  detail::absorb_peel(out, peel);
  return out;
}

/// Repeatedly extracts a rainbow spanning tree and deletes its edges. Each tree
/// starts from a degree-balancing rainbow forest and is completed by augmentation.
inline DecompositionResult greedy_peel(const GraphView& g, int limit) {
  if (limit < 0) throw std::invalid_argument("limit must be non-negative");
  DecompositionResult out;
  out.params.limit = limit;
  out.stats.ell = limit;
  GraphView remaining = g;
  while (static_cast<int>(out.trees.size()) < limit) {
    auto tree = detail::spread_spanning_tree(remaining);
    if (!tree) break;
    remaining = remaining.without_edges(tree->edges);
    out.trees.push_back(std::move(*tree));
  }
  return out;
}

/// Top-level driver. Classifies the colouring, then either follows the branch
/// construction (paper mode) or peels greedily up to floor(n/2) trees
/// (practical mode). The input must be properly coloured; paper mode also
/// requires a complete graph.
inline DecompositionResult decompose(const ColouredGraph& g, const PipelineParams& params) {
  params.validate();
  const PropernessReport proper = validate_proper(g);
  if (!proper.is_proper) {
    const auto [v, c] = proper.violations.front();
    throw InputError("colouring is not proper: vertex " + std::to_string(v) + " has two edges of colour " + std::to_string(c));
  }
  if (!proper.is_complete && params.mode == Mode::Paper) throw InputError("paper mode requires a complete graph");

  const int n = g.vertex_count();
  std::vector<StageTiming> timings;
  std::vector<std::string> notes;
  if (!proper.is_complete) notes.emplace_back("input graph is not complete");

  BranchDecision decision;
  {
    detail::StageTimer timer(timings, "classify");
    decision = classify(g, params.alpha, params.beta);
  }
  notes.insert(notes.end(), decision.notes.begin(), decision.notes.end());

  DecompositionResult out;
  if (params.mode == Mode::Paper) {
    out = decision.branch == Branch::Robust ? decompose_robust(g, params) : decompose_rich(g, params);
  } else {
    detail::StageTimer timer(timings, "greedy-peel");
    out = greedy_peel(g, static_cast<int>(detail::practical_target(g, params)));
  }
  out.params = params;
  out.branch = decision.branch;
  out.branch_fallback = decision.fallback;
  notes.insert(notes.end(), out.stats.notes.begin(), out.stats.notes.end());
  if (params.mode == Mode::Paper) {
    const auto bound = static_cast<std::int64_t>(n) / params.theorem_divisor;
    if (static_cast<std::int64_t>(out.trees.size()) < bound || bound == 0) {
      out.stats.degenerate = true;
      notes.push_back("degenerate: guaranteed tree count floor(n/" + std::to_string(params.theorem_divisor) + ") = " +
                      std::to_string(bound) + ", produced " + std::to_string(out.trees.size()));
    }
  }
  out.stats.notes = std::move(notes);
  timings.insert(timings.end(), out.stats.timings.begin(), out.stats.timings.end());
  out.stats.timings = std::move(timings);
  return out;
}

}  // namespace rainbow
