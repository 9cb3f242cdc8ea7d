#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/ratio.hpp"

namespace rainbow {

struct Matching {
  std::vector<EdgeIndex> edges;
  bool rainbow = false;

  int size() const { return static_cast<int>(edges.size()); }
};

/// A reserved rainbow matching together with the vertex/colour bookkeeping
/// the rich-branch assembly needs: `z` holds one endpoint of every matching
/// edge (the smaller id), `x` is the rest of the host's vertices and
/// `unused_colours` is every colour of the parent graph not on the matching.
struct ReservedMatching {
  Matching matching;
  VertexSet z;
  VertexSet x;
  ColourSet unused_colours;
};

namespace detail {

/// Edmonds' blossom algorithm on the parent's vertex ids, restricted to the
/// edges of a view. Neighbour order follows edge index order, so results are
/// deterministic.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const GraphView& g)
      : n_(g.parent().vertex_count()),
        adj_(static_cast<std::size_t>(n_)),
        match_(static_cast<std::size_t>(n_), -1) {
    for (EdgeIndex e : g.edges()) {
      const Edge& ed = g.edge(e);
      adj_[static_cast<std::size_t>(ed.u)].push_back(ed.v);
      adj_[static_cast<std::size_t>(ed.v)].push_back(ed.u);
    }
    for (EdgeIndex e : g.edges()) {
      const Edge& ed = g.edge(e);
      if (mate(ed.u) == -1 && mate(ed.v) == -1) {
        match_[static_cast<std::size_t>(ed.u)] = ed.v;
        match_[static_cast<std::size_t>(ed.v)] = ed.u;
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate(root) != -1 || adj_[static_cast<std::size_t>(root)].empty()) continue;
      Vertex v = find_path(root);
      while (v != -1) {
        const Vertex pv = parent_[static_cast<std::size_t>(v)];
        const Vertex ppv = mate(pv);
        match_[static_cast<std::size_t>(v)] = pv;
        match_[static_cast<std::size_t>(pv)] = v;
        v = ppv;
      }
    }
  }

  Vertex mate(Vertex v) const { return match_[static_cast<std::size_t>(v)]; }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = 1;
      if (mate(a) == -1) break;
      a = parent_[static_cast<std::size_t>(mate(a))];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(mate(b))];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[static_cast<std::size_t>(v)] != b) {
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mate(v))])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mate(v);
      v = parent_[static_cast<std::size_t>(mate(v))];
    }
  }

  Vertex find_path(Vertex root) {
    const auto n = static_cast<std::size_t>(n_);
    used_.assign(n, 0);
    parent_.assign(n, -1);
    base_.resize(n);
    for (std::size_t i = 0; i < n; ++i) base_[i] = static_cast<Vertex>(i);
    used_[static_cast<std::size_t>(root)] = 1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex to : adj_[static_cast<std::size_t>(v)]) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] || mate(v) == to) continue;
        if (to == root || (mate(to) != -1 && parent_[static_cast<std::size_t>(mate(to))] != -1)) {
          const Vertex cur = lca(v, to);
          blossom_.assign(n, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n; ++i) {
            if (blossom_[static_cast<std::size_t>(base_[i])]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(static_cast<Vertex>(i));
              }
            }
          }
        } else if (parent_[static_cast<std::size_t>(to)] == -1) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (mate(to) == -1) return to;
          used_[static_cast<std::size_t>(mate(to))] = 1;
          q.push(mate(to));
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

inline bool colours_distinct(const GraphView& g, const std::vector<EdgeIndex>& edges) {
  std::vector<Colour> cs;
  for (EdgeIndex e : edges) cs.push_back(g.edge(e).colour);
  std::sort(cs.begin(), cs.end());
  return std::adjacent_find(cs.begin(), cs.end()) == cs.end();
}

}  // namespace detail

/// Maximum-cardinality matching of a general graph (blossom algorithm).
/// Matched edges are reported in ascending edge-index order.
inline Matching max_matching(const GraphView& g) {
  const detail::BlossomMatcher matcher(g);
  Matching m;
  for (EdgeIndex e : g.edges()) {
    const Edge& ed = g.edge(e);
    if (matcher.mate(ed.u) == ed.v) m.edges.push_back(e);
  }
  m.rainbow = detail::colours_distinct(g, m.edges);
  return m;
}

/// nu(G).
inline int matching_number(const GraphView& g) { return max_matching(g).size(); }

/// Maximal matching scanning `order` (default: ascending edge index).
inline Matching greedy_maximal_matching(const GraphView& g, const std::optional<std::vector<EdgeIndex>>& order = std::nullopt) {
  const auto& scan = order ? *order : g.edges();
  std::vector<char> covered(static_cast<std::size_t>(g.parent().vertex_count()), 0);
  Matching m;
  for (EdgeIndex e : scan) {
    if (!g.has_edge(e)) continue;
    const Edge& ed = g.edge(e);
    if (covered[static_cast<std::size_t>(ed.u)] || covered[static_cast<std::size_t>(ed.v)]) continue;
    covered[static_cast<std::size_t>(ed.u)] = covered[static_cast<std::size_t>(ed.v)] = 1;
    m.edges.push_back(e);
  }
  m.rainbow = detail::colours_distinct(g, m.edges);
  return m;
}

struct RainbowMatchingResult {
  /// On success exactly `r` edges; on failure the whole maximal rainbow matching.
  Matching matching;
  bool success = false;
  /// Hypotheses under which a rainbow matching of size r is guaranteed:
  /// at least rn/3 edges, maximum degree at most n/10, and every colour class
  /// smaller than n/10. Reported, not enforced.
  bool enough_edges = false;
  bool degree_bounded = false;
  bool colours_small = false;
};

/// Greedy maximal rainbow matching in ascending edge order.
inline RainbowMatchingResult greedy_rainbow_matching(const GraphView& g, int r) {
  RainbowMatchingResult res;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  res.enough_edges = 3 * static_cast<std::int64_t>(g.edge_count()) >= static_cast<std::int64_t>(r) * n;
  res.degree_bounded = 10 * static_cast<std::int64_t>(g.max_degree()) <= n;
  {
    std::vector<std::int64_t> per_colour(static_cast<std::size_t>(g.parent().colour_count()), 0);
    for (EdgeIndex e : g.edges()) ++per_colour[static_cast<std::size_t>(g.edge(e).colour)];
    res.colours_small = std::all_of(per_colour.begin(), per_colour.end(), [&](std::int64_t k) { return 10 * k < n; });
  }

  std::vector<char> covered(static_cast<std::size_t>(g.parent().vertex_count()), 0);
  std::vector<char> colour_used(static_cast<std::size_t>(g.parent().colour_count()), 0);
  for (EdgeIndex e : g.edges()) {
    const Edge& ed = g.edge(e);
    if (covered[static_cast<std::size_t>(ed.u)] || covered[static_cast<std::size_t>(ed.v)] ||
        colour_used[static_cast<std::size_t>(ed.colour)]) {
      continue;
    }
    covered[static_cast<std::size_t>(ed.u)] = covered[static_cast<std::size_t>(ed.v)] = 1;
    colour_used[static_cast<std::size_t>(ed.colour)] = 1;
    res.matching.edges.push_back(e);
  }
  res.matching.rainbow = true;
  res.success = res.matching.size() >= r;
  if (res.success) res.matching.edges.resize(static_cast<std::size_t>(std::max(r, 0)));
  return res;
}

// ---------------------------------------------------------------------------
// Edge-disjoint reserved rainbow matchings.

struct ReservationOptions {
  /// Colours whose class has matching number >= ceil(rich_ratio * n), and at
  /// least one edge per matching, are handled last, one edge per matching.
  Ratio rich_ratio{1, 20};
  /// Vertices with degree >= ceil(degree_ratio * n) after the colour removal
  /// are handled second, one pendant edge per matching.
  Ratio degree_ratio{1, 20};
};

enum class ReservationStage { CoreMatching, VertexExtension, ColourExtension };

inline const char* to_string(ReservationStage s) {
  switch (s) {
    case ReservationStage::CoreMatching: return "core-matching";
    case ReservationStage::VertexExtension: return "vertex-extension";
    case ReservationStage::ColourExtension: return "colour-extension";
  }
  return "?";
}

struct ReservationFailure {
  ReservationStage stage;
  int matching_index;
  /// Vertex (vertex stage) or colour (colour stage) that could not be served; -1 for the core stage.
  int item = -1;

  std::string describe() const {
    std::string s = std::string(to_string(stage)) + " exhausted at matching " + std::to_string(matching_index);
    if (item >= 0) s += (stage == ReservationStage::VertexExtension ? ", vertex " : ", colour ") + std::to_string(item);
    return s;
  }
};

struct ReservationResult {
  std::vector<ReservedMatching> matchings;
  std::optional<ReservationFailure> failure;
  ColourSet removed_colours;     // C_1..C_s
  VertexSet removed_vertices;    // v_1..v_s'
  int core_size = 0;             // t = r - s - s'
  std::vector<std::string> notes;

  bool ok() const { return !failure.has_value(); }
};

/// `count` pairwise edge-disjoint rainbow matchings with `r` edges each,
/// built in three greedy stages: a core of t edges away from the rich colours
/// and high-degree vertices, then one edge at each high-degree vertex, then
/// one edge of each rich colour. Candidates are always scanned in ascending
/// edge index order.
inline ReservationResult disjoint_rainbow_matchings(const GraphView& g, int r, int count,
                                                    const ReservationOptions& opts = {}) {
  if (r < 0 || count < 0) throw std::invalid_argument("disjoint_rainbow_matchings: r and count must be non-negative");
  ReservationResult res;
  const ColouredGraph& p = g.parent();
  const int n = g.vertex_count();

  // (a) rich colours, lowest id first, at most r of them.
  {
    std::vector<int> per_colour(static_cast<std::size_t>(p.colour_count()), 0);
    for (EdgeIndex e : g.edges()) ++per_colour[static_cast<std::size_t>(g.edge(e).colour)];
    const auto need = ceil_mul(opts.rich_ratio, n);
    for (Colour c = 0; c < p.colour_count() && static_cast<int>(res.removed_colours.size()) < r; ++c) {
      const int k = per_colour[static_cast<std::size_t>(c)];
      if (k == 0) continue;
      // Colour classes of a proper colouring are matchings; count is nu unless g is improper.
      const int nu = matching_number(g.with_colours({c}));
      // each of the count matchings takes its own edge of the colour
      if (nu >= need && nu >= count) res.removed_colours.push_back(c);
    }
  }
  const GraphView g1 = g.without_colours(res.removed_colours);
  const int s = static_cast<int>(res.removed_colours.size());

  // (b) high-degree vertices of G', lowest id first, within the remaining budget.
  {
    const auto deg = g1.degrees();
    const auto need = ceil_mul(opts.degree_ratio, n);
    for (Vertex v : g1.vertices()) {
      if (s + static_cast<int>(res.removed_vertices.size()) >= r) break;
      if (deg[static_cast<std::size_t>(v)] >= need) res.removed_vertices.push_back(v);
    }
  }
  res.notes.push_back("reserved " + std::to_string(s) + " rich colour(s) and " + std::to_string(res.removed_vertices.size()) +
                      " high-degree vertex(es)");
  const GraphView g2 = g1.drop_vertices(res.removed_vertices);
  const int t = r - s - static_cast<int>(res.removed_vertices.size());
  res.core_size = t;

  // (c) core matchings on the shrinking remainder of G''.
  std::vector<char> used_edge(static_cast<std::size_t>(p.edge_count()), 0);
  std::vector<Matching> cores;
  {
    GraphView remainder = g2;
    for (int i = 0; i < count; ++i) {
      const auto found = greedy_rainbow_matching(remainder, t);
      if (!found.success) {
        res.failure = ReservationFailure{ReservationStage::CoreMatching, i};
        return res;
      }
      for (EdgeIndex e : found.matching.edges) used_edge[static_cast<std::size_t>(e)] = 1;
      remainder = remainder.without_edges(found.matching.edges);
      cores.push_back(found.matching);
    }
  }

  std::vector<char> is_removed_vertex(static_cast<std::size_t>(p.vertex_count()), 0);
  for (Vertex v : res.removed_vertices) is_removed_vertex[static_cast<std::size_t>(v)] = 1;

  for (int i = 0; i < count; ++i) {
    Matching& m = cores[static_cast<std::size_t>(i)];
    std::vector<char> covered(static_cast<std::size_t>(p.vertex_count()), 0);
    std::vector<char> colour_used(static_cast<std::size_t>(p.colour_count()), 0);
    auto take = [&](EdgeIndex e) {
      const Edge& ed = p.edge(e);
      covered[static_cast<std::size_t>(ed.u)] = covered[static_cast<std::size_t>(ed.v)] = 1;
      colour_used[static_cast<std::size_t>(ed.colour)] = 1;
      used_edge[static_cast<std::size_t>(e)] = 1;
      m.edges.push_back(e);
    };
    for (EdgeIndex e : m.edges) {
      const Edge& ed = p.edge(e);
      covered[static_cast<std::size_t>(ed.u)] = covered[static_cast<std::size_t>(ed.v)] = 1;
      colour_used[static_cast<std::size_t>(ed.colour)] = 1;
    }

    // (d) one edge x-v_j of G' per high-degree vertex, x outside the matching
    // and not itself a high-degree vertex.
    for (Vertex v : res.removed_vertices) {
      std::optional<EdgeIndex> pick;
      for (EdgeIndex e : g1.incident(v)) {
        const Edge& ed = p.edge(e);
        const Vertex x = ed.other(v);
        if (used_edge[static_cast<std::size_t>(e)] || covered[static_cast<std::size_t>(x)] ||
            is_removed_vertex[static_cast<std::size_t>(x)] || colour_used[static_cast<std::size_t>(ed.colour)]) {
          continue;
        }
        pick = e;
        break;
      }
      if (!pick) {
        res.failure = ReservationFailure{ReservationStage::VertexExtension, i, v};
        return res;
      }
      take(*pick);
    }

    // (e) one edge of each rich colour.
    for (Colour c : res.removed_colours) {
      std::optional<EdgeIndex> pick;
      for (EdgeIndex e : g.edges()) {
        const Edge& ed = p.edge(e);
        if (ed.colour != c || used_edge[static_cast<std::size_t>(e)] || covered[static_cast<std::size_t>(ed.u)] ||
            covered[static_cast<std::size_t>(ed.v)]) {
          continue;
        }
        pick = e;
        break;
      }
      if (!pick) {
        res.failure = ReservationFailure{ReservationStage::ColourExtension, i, c};
        return res;
      }
      take(*pick);
    }
    std::sort(m.edges.begin(), m.edges.end());
    m.rainbow = true;
  }

  for (Matching& m : cores) {
    ReservedMatching rm;
    std::vector<char> in_z(static_cast<std::size_t>(p.vertex_count()), 0);
    std::vector<char> colour_used(static_cast<std::size_t>(p.colour_count()), 0);
    for (EdgeIndex e : m.edges) {
      const Edge& ed = p.edge(e);
      in_z[static_cast<std::size_t>(std::min(ed.u, ed.v))] = 1;
      colour_used[static_cast<std::size_t>(ed.colour)] = 1;
    }
    for (Vertex v : g.vertices()) {
      (in_z[static_cast<std::size_t>(v)] ? rm.z : rm.x).push_back(v);
    }
    for (Colour c = 0; c < p.colour_count(); ++c) {
      if (!colour_used[static_cast<std::size_t>(c)]) rm.unused_colours.push_back(c);
    }
    rm.matching = std::move(m);
    res.matchings.push_back(std::move(rm));
  }
  return res;
}

}  // namespace rainbow
