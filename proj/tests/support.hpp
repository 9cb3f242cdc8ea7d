#pragma once

// Test-only generators and naive oracles. Nothing here calls into the
// library's own oracles, so values computed with these are independent.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <vector>

#include "rainbow/rainbow.hpp"

namespace testing_support {

using namespace rainbow;

// Views must not outlive their graph; keep() parks a temporary graph for the
// rest of the test binary so it can be viewed inline.
inline const ColouredGraph& keep(ColouredGraph g) {
  static std::deque<ColouredGraph> store;
  store.push_back(std::move(g));
  return store.back();
}

// Simple graph on n vertices, each pair kept with probability num/den, with
// colours drawn from [0, colours). Not necessarily proper.
inline ColouredGraph random_graph(int n, std::uint64_t seed, int num, int den, int colours) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(den))) < num) {
        edges.push_back({u, v, static_cast<Colour>(uniform_below(rng, static_cast<std::uint64_t>(colours)))});
      }
    }
  }
  return ColouredGraph(n, std::move(edges));
}

// Proper colouring of a random subgraph of K_n, with a seed-dependent density.
inline ColouredGraph random_proper_graph(int n, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 99));
  const auto keep = 2 + uniform_below(rng, 8);  // keep keep/10 of the pairs
  return gen_random_proper_subgraph(n, seed, keep, 10);
}

inline bool is_rainbow_spanning_tree(const ColouredGraph& g, const VertexSet& vertices, const std::vector<EdgeIndex>& edges) {
  if (edges.size() + 1 != vertices.size() && !(vertices.empty() && edges.empty())) return false;
  std::vector<int> root(static_cast<std::size_t>(g.vertex_count()));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[static_cast<std::size_t>(x)] == x ? x : root[static_cast<std::size_t>(x)] = find(root[static_cast<std::size_t>(x)]); };
  std::vector<Colour> seen;
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex v : vertices) in[static_cast<std::size_t>(v)] = 1;
  for (EdgeIndex e : edges) {
    const Edge& ed = g.edge(e);
    if (!in[static_cast<std::size_t>(ed.u)] || !in[static_cast<std::size_t>(ed.v)]) return false;
    const int a = find(ed.u), b = find(ed.v);
    if (a == b) return false;
    root[static_cast<std::size_t>(a)] = b;
    seen.push_back(ed.colour);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// Every (k-1)-subset of the view's edges that is a rainbow spanning tree.
inline std::vector<std::vector<EdgeIndex>> naive_rainbow_trees(const GraphView& g) {
  std::vector<std::vector<EdgeIndex>> out;
  const int k = g.vertex_count();
  if (k <= 1) return {{}};
  const auto& es = g.edges();
  std::vector<EdgeIndex> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == k - 1) {
      if (is_rainbow_spanning_tree(g.parent(), g.vertices(), pick)) out.push_back(pick);
      return;
    }
    for (std::size_t i = from; i < es.size(); ++i) {
      pick.push_back(es[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

// Maximum number of pairwise disjoint trees from the naive enumeration.
inline int naive_packing(const GraphView& g) {
  const auto trees = naive_rainbow_trees(g);
  std::vector<char> used(static_cast<std::size_t>(g.parent().edge_count()), 0);
  int best = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int count) {
    best = std::max(best, count);
    for (std::size_t i = from; i < trees.size(); ++i) {
      const auto& t = trees[i];
      if (std::any_of(t.begin(), t.end(), [&](EdgeIndex e) { return used[static_cast<std::size_t>(e)]; })) continue;
      for (EdgeIndex e : t) used[static_cast<std::size_t>(e)] = 1;
      rec(i + 1, count + 1);
      for (EdgeIndex e : t) used[static_cast<std::size_t>(e)] = 0;
    }
  };
  rec(0, 0);
  return best;
}

// Matching number by trying every edge subset; fine up to ~20 edges.
inline int naive_matching_number(const GraphView& g) {
  const auto& es = g.edges();
  int best = 0;
  std::vector<char> covered(static_cast<std::size_t>(g.parent().vertex_count()), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int size) {
    best = std::max(best, size);
    if (size + static_cast<int>(es.size() - i) <= best) return;
    for (; i < es.size(); ++i) {
      const Edge& ed = g.edge(es[i]);
      if (covered[static_cast<std::size_t>(ed.u)] || covered[static_cast<std::size_t>(ed.v)]) continue;
      covered[static_cast<std::size_t>(ed.u)] = covered[static_cast<std::size_t>(ed.v)] = 1;
      rec(i + 1, size + 1);
      covered[static_cast<std::size_t>(ed.u)] = covered[static_cast<std::size_t>(ed.v)] = 0;
    }
  };
  rec(0, 0);
  return best;
}

inline bool is_matching(const ColouredGraph& g, const std::vector<EdgeIndex>& edges) {
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeIndex e : edges) {
    const Edge& ed = g.edge(e);
    if (covered[static_cast<std::size_t>(ed.u)] || covered[static_cast<std::size_t>(ed.v)]) return false;
    covered[static_cast<std::size_t>(ed.u)] = covered[static_cast<std::size_t>(ed.v)] = 1;
  }
  return true;
}

inline bool distinct_colours(const ColouredGraph& g, const std::vector<EdgeIndex>& edges) {
  std::vector<Colour> cs;
  for (EdgeIndex e : edges) cs.push_back(g.edge(e).colour);
  std::sort(cs.begin(), cs.end());
  return std::adjacent_find(cs.begin(), cs.end()) == cs.end();
}

inline std::vector<std::vector<EdgeIndex>> edge_lists(const DecompositionResult& r) {
  std::vector<std::vector<EdgeIndex>> out;
  for (const auto& t : r.trees) out.push_back(t.edges);
  return out;
}

inline ColouredGraph petersen() {
  std::vector<Edge> e;
  int c = 0;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5, c++});
    e.push_back({i, i + 5, c++});
    e.push_back({5 + i, 5 + (i + 2) % 5, c++});
  }
  return ColouredGraph(10, std::move(e));
}

inline ColouredGraph mono_path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 0});
  return ColouredGraph(n, std::move(e));
}

}  // namespace testing_support
