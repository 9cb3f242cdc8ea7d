#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/union_find.hpp"

namespace rainbow {

struct RainbowForest {
  std::vector<EdgeIndex> edges;  // ascending
  /// Component representative (lowest vertex id) per parent vertex; -1 outside the view.
  std::vector<Vertex> component;

  int size() const { return static_cast<int>(edges.size()); }
};

struct RainbowTree {
  std::vector<EdgeIndex> edges;  // ascending
  /// Parent per parent-graph vertex; -1 for the root and for vertices outside the tree.
  std::vector<Vertex> parent;
  Vertex root = -1;

  int size() const { return static_cast<int>(edges.size()); }
};

/// Builds the parent array of a spanning tree of `vertices` with the given edges,
/// rooted at the lowest vertex id. Returns nullopt if the edges do not form one.
inline std::optional<RainbowTree> make_tree(const ColouredGraph& g, const VertexSet& vertices, std::vector<EdgeIndex> edges) {
  std::sort(edges.begin(), edges.end());
  RainbowTree t;
  t.parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  if (vertices.empty()) {
    if (!edges.empty()) return std::nullopt;
    t.edges = std::move(edges);
    return t;
  }
  if (edges.size() + 1 != vertices.size()) return std::nullopt;
  std::vector<std::vector<std::pair<Vertex, EdgeIndex>>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (EdgeIndex e : edges) {
    const Edge& ed = g.edge(e);
    adj[static_cast<std::size_t>(ed.u)].emplace_back(ed.v, e);
    adj[static_cast<std::size_t>(ed.v)].emplace_back(ed.u, e);
  }
  t.root = *std::min_element(vertices.begin(), vertices.end());
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::deque<Vertex> q{t.root};
  seen[static_cast<std::size_t>(t.root)] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop_front();
    for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      t.parent[static_cast<std::size_t>(w)] = v;
      ++reached;
      q.push_back(w);
    }
  }
  if (reached != vertices.size()) return std::nullopt;
  for (Vertex v : vertices) {
    if (!seen[static_cast<std::size_t>(v)]) return std::nullopt;
  }
  t.edges = std::move(edges);
  return t;
}

namespace detail {

/// Maximum common independent set of the graphic matroid and the colour
/// partition matroid of a view, by shortest augmenting paths in the exchange
/// graph.
///
/// Exchange arcs for the current forest I:
///   forest edge x -> outside edge y   if I - x + y is a forest
///                                     (x lies on the forest path between y's ends)
///   outside edge y -> forest edge x   if x carries y's colour
/// Sources are outside edges joining two forest components, sinks are outside
/// edges of an unused colour. BFS visits nodes in priority order (ascending
/// edge index unless the caller supplies one).
class RainbowForestSearch {
 public:
  RainbowForestSearch(const GraphView& g, const std::vector<EdgeIndex>& initial,
                      const std::vector<EdgeIndex>* order = nullptr)
      : g_(g),
        order_(order ? *order : g.edges()),
        in_forest_(static_cast<std::size_t>(g.parent().edge_count()), 0),
        owner_(static_cast<std::size_t>(g.parent().colour_count()), -1) {
    if (order_.size() != g.edges().size()) throw std::invalid_argument("priority order must list every edge of the view once");
    for (EdgeIndex e : initial) {
      if (!g.has_edge(e)) throw std::invalid_argument("initial forest edge not in view");
      if (owner_[colour(e)] != -1) throw std::invalid_argument("initial forest is not rainbow");
      in_forest_[static_cast<std::size_t>(e)] = 1;
      owner_[colour(e)] = e;
    }
  }

  void greedy_fill() {
    rebuild();
    DisjointSets ds(g_.parent().vertex_count());
    for (EdgeIndex e : g_.edges()) {
      if (in_forest_[static_cast<std::size_t>(e)]) ds.unite(g_.edge(e).u, g_.edge(e).v);
    }
    for (EdgeIndex e : order_) {
      if (in_forest_[static_cast<std::size_t>(e)] || owner_[colour(e)] != -1) continue;
      if (ds.unite(g_.edge(e).u, g_.edge(e).v)) {
        in_forest_[static_cast<std::size_t>(e)] = 1;
        owner_[colour(e)] = e;
      }
    }
  }

  /// One augmentation; false when the current forest is maximum.
  bool augment() {
    rebuild();
    const auto m = static_cast<std::size_t>(g_.parent().edge_count());
    std::vector<EdgeIndex> pred(m, -2);  // -2 unvisited, -1 source
    std::deque<EdgeIndex> q;
    for (EdgeIndex y : outside_) {
      if (is_source(y)) {
        pred[static_cast<std::size_t>(y)] = -1;
        q.push_back(y);
      }
    }
    while (!q.empty()) {
      const EdgeIndex node = q.front();
      q.pop_front();
      if (!in_forest_[static_cast<std::size_t>(node)]) {
        const EdgeIndex x = owner_[colour(node)];
        if (x == -1) {
          apply_path(node, pred);
          return true;
        }
        if (pred[static_cast<std::size_t>(x)] == -2) {
          pred[static_cast<std::size_t>(x)] = node;
          q.push_back(x);
        }
      } else {
        const Vertex c = child_[static_cast<std::size_t>(node)];
        for (EdgeIndex y : outside_) {
          if (pred[static_cast<std::size_t>(y)] != -2) continue;
          const Edge& ed = g_.edge(y);
          if (in_subtree(ed.u, c) != in_subtree(ed.v, c)) {
            pred[static_cast<std::size_t>(y)] = node;
            q.push_back(y);
          }
        }
      }
    }
    return false;
  }

  std::vector<EdgeIndex> forest() const {
    std::vector<EdgeIndex> out;
    for (EdgeIndex e : g_.edges()) {
      if (in_forest_[static_cast<std::size_t>(e)]) out.push_back(e);
    }
    return out;
  }

 private:
  std::size_t colour(EdgeIndex e) const { return static_cast<std::size_t>(g_.edge(e).colour); }

  bool is_source(EdgeIndex y) const {
    const Edge& ed = g_.edge(y);
    return comp_[static_cast<std::size_t>(ed.u)] != comp_[static_cast<std::size_t>(ed.v)];
  }

  bool in_subtree(Vertex v, Vertex root) const {
    const auto vi = static_cast<std::size_t>(v);
    const auto ri = static_cast<std::size_t>(root);
    return tin_[ri] <= tin_[vi] && tout_[vi] <= tout_[ri];
  }

  // Roots every forest component at its lowest vertex and records Euler-tour
  // times, component ids and, per forest edge, its child endpoint.
  void rebuild() {
    const auto n = static_cast<std::size_t>(g_.parent().vertex_count());
    std::vector<std::vector<std::pair<Vertex, EdgeIndex>>> adj(n);
    outside_.clear();
    for (EdgeIndex e : order_) {
      if (in_forest_[static_cast<std::size_t>(e)]) {
        const Edge& ed = g_.edge(e);
        adj[static_cast<std::size_t>(ed.u)].emplace_back(ed.v, e);
        adj[static_cast<std::size_t>(ed.v)].emplace_back(ed.u, e);
      } else {
        outside_.push_back(e);
      }
    }
    comp_.assign(n, -1);
    tin_.assign(n, 0);
    tout_.assign(n, 0);
    child_.assign(static_cast<std::size_t>(g_.parent().edge_count()), -1);
    int clock = 0;
    std::vector<std::pair<Vertex, std::size_t>> stack;
    for (Vertex root : g_.vertices()) {
      if (comp_[static_cast<std::size_t>(root)] != -1) continue;
      comp_[static_cast<std::size_t>(root)] = root;
      tin_[static_cast<std::size_t>(root)] = clock++;
      stack.emplace_back(root, 0);
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& nb = adj[static_cast<std::size_t>(v)];
        if (next == nb.size()) {
          tout_[static_cast<std::size_t>(v)] = clock++;
          stack.pop_back();
          continue;
        }
        const auto [w, e] = nb[next++];
        if (comp_[static_cast<std::size_t>(w)] != -1) continue;
        comp_[static_cast<std::size_t>(w)] = root;
        child_[static_cast<std::size_t>(e)] = w;
        tin_[static_cast<std::size_t>(w)] = clock++;
        stack.emplace_back(w, 0);
      }
    }
  }

  void apply_path(EdgeIndex sink, const std::vector<EdgeIndex>& pred) {
    std::vector<EdgeIndex> path;
    for (EdgeIndex e = sink; e != -1; e = pred[static_cast<std::size_t>(e)]) path.push_back(e);
    for (EdgeIndex e : path) {
      if (in_forest_[static_cast<std::size_t>(e)]) {
        in_forest_[static_cast<std::size_t>(e)] = 0;
        owner_[colour(e)] = -1;
      }
    }
    for (std::size_t k = 0; k < path.size(); k += 2) {
      // even positions (from the sink) are outside edges entering the forest
      const EdgeIndex e = path[k];
      in_forest_[static_cast<std::size_t>(e)] = 1;
      owner_[colour(e)] = e;
    }
  }

  const GraphView& g_;
  std::vector<EdgeIndex> order_;
  std::vector<char> in_forest_;
  std::vector<EdgeIndex> owner_;
  std::vector<EdgeIndex> outside_;
  std::vector<Vertex> comp_;
  std::vector<int> tin_;
  std::vector<int> tout_;
  std::vector<Vertex> child_;
};

inline std::vector<Vertex> forest_components(const GraphView& g, const std::vector<EdgeIndex>& edges) {
  DisjointSets ds(g.parent().vertex_count());
  for (EdgeIndex e : edges) ds.unite(g.edge(e).u, g.edge(e).v);
  std::vector<Vertex> rep(static_cast<std::size_t>(g.parent().vertex_count()), -1);
  std::vector<Vertex> lowest(static_cast<std::size_t>(g.parent().vertex_count()), -1);
  for (Vertex v : g.vertices()) {
    auto& low = lowest[static_cast<std::size_t>(ds.find(v))];
    if (low == -1) low = v;
    rep[static_cast<std::size_t>(v)] = low;
  }
  return rep;
}

}  // namespace detail

/// A rainbow forest of maximum cardinality in the view. `priority`, when
/// given, is a permutation of g.edges() used for every tie-break.
inline RainbowForest max_rainbow_forest(const GraphView& g, const std::vector<EdgeIndex>* priority = nullptr) {
  detail::RainbowForestSearch search(g, {}, priority);
  search.greedy_fill();
  while (search.augment()) {
  }
  RainbowForest f;
  f.edges = search.forest();
  f.component = detail::forest_components(g, f.edges);
  return f;
}

/// Maximum rainbow forest grown from a given rainbow forest `seed` of `g`.
inline RainbowForest max_rainbow_forest_from(const GraphView& g, const std::vector<EdgeIndex>& seed,
                                            const std::vector<EdgeIndex>* priority = nullptr) {
  detail::RainbowForestSearch search(g, seed, priority);
  search.greedy_fill();
  while (search.augment()) {
  }
  RainbowForest f;
  f.edges = search.forest();
  f.component = detail::forest_components(g, f.edges);
  return f;
}

/// True if the rainbow forest `edges` of `g` admits an augmenting path, i.e. is not maximum.
inline bool has_augmenting_path(const GraphView& g, const std::vector<EdgeIndex>& edges) {
  detail::RainbowForestSearch search(g, edges);
  return search.augment();
}

/// A rainbow spanning tree of the view's vertex set, if one exists.
inline std::optional<RainbowTree> find_rainbow_spanning_tree(const GraphView& g,
                                                             const std::vector<EdgeIndex>* priority = nullptr) {
  if (g.vertex_count() <= 1) return make_tree(g.parent(), g.vertices(), {});
  if (g.edge_count() < g.vertex_count() - 1) return std::nullopt;
  const RainbowForest f = max_rainbow_forest(g, priority);
  if (f.size() != g.vertex_count() - 1) return std::nullopt;
  return make_tree(g.parent(), g.vertices(), f.edges);
}

}  // namespace rainbow
