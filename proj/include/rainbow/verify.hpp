#pragma once

// Minimal-trust checker for decompositions. Works from raw edge-index lists
// and the parent graph only; shares nothing with the tree producers.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/union_find.hpp"

namespace rainbow {

struct TreeCheck {
  bool spanning = false;
  bool rainbow = false;
  bool acyclic = false;
  bool connected = false;

  bool ok() const { return spanning && rainbow && acyclic && connected; }
};

struct VerificationReport {
  std::vector<TreeCheck> trees;
  bool pairwise_disjoint = true;
  int tree_count = 0;
  std::optional<std::string> first_failure;

  bool ok() const { return !first_failure.has_value(); }
};

/// Throws std::out_of_range for an edge index outside the graph.
inline VerificationReport verify_decomposition(const ColouredGraph& g, const std::vector<std::vector<EdgeIndex>>& trees) {
  VerificationReport report;
  report.tree_count = static_cast<int>(trees.size());
  const int n = g.vertex_count();
  auto fail = [&](const std::string& what) {
    if (!report.first_failure) report.first_failure = what;
  };

  std::vector<int> owner(static_cast<std::size_t>(g.edge_count()), -1);
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const auto& edges = trees[t];
    for (EdgeIndex e : edges) {
      if (e < 0 || e >= g.edge_count()) {
        throw std::out_of_range("tree " + std::to_string(t) + " references edge " + std::to_string(e) + " of " +
                                std::to_string(g.edge_count()));
      }
    }
    const std::string label = "tree " + std::to_string(t);
    TreeCheck check;

    // acyclic: no repeated index and union-find never closes a cycle
    {
      DisjointSets ds(n);
      std::vector<EdgeIndex> sorted = edges;
      std::sort(sorted.begin(), sorted.end());
      check.acyclic = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      for (EdgeIndex e : edges) {
        if (!ds.unite(g.edge(e).u, g.edge(e).v)) check.acyclic = false;
      }
    }
    // connected: traversal over the tree's edges reaches every vertex
    {
      std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
      for (EdgeIndex e : edges) {
        adj[static_cast<std::size_t>(g.edge(e).u)].push_back(g.edge(e).v);
        adj[static_cast<std::size_t>(g.edge(e).v)].push_back(g.edge(e).u);
      }
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      std::vector<Vertex> stack;
      int reached = 0;
      if (n > 0) {
        stack.push_back(0);
        seen[0] = 1;
        reached = 1;
      }
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj[static_cast<std::size_t>(v)]) {
          if (seen[static_cast<std::size_t>(w)]) continue;
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
      check.connected = reached == n;
    }
    check.spanning = check.connected && static_cast<int>(edges.size()) == std::max(n - 1, 0);
    // rainbow: colour multiset has no repeats
    {
      std::vector<Colour> colours;
      for (EdgeIndex e : edges) colours.push_back(g.edge(e).colour);
      std::sort(colours.begin(), colours.end());
      const auto dup = std::adjacent_find(colours.begin(), colours.end());
      check.rainbow = dup == colours.end();
      if (!check.rainbow) fail(label + ": not rainbow (colour " + std::to_string(*dup) + " repeated)");
    }
    if (!check.acyclic) fail(label + ": contains a cycle or repeated edge");
    if (!check.connected) fail(label + ": not connected");
    if (!check.spanning) fail(label + ": has " + std::to_string(edges.size()) + " edges, expected " + std::to_string(std::max(n - 1, 0)));

    for (EdgeIndex e : edges) {
      int& o = owner[static_cast<std::size_t>(e)];
      if (o != -1 && o != static_cast<int>(t)) {
        report.pairwise_disjoint = false;
        fail("trees " + std::to_string(o) + " and " + std::to_string(t) + " share edge " + std::to_string(e));
      }
      o = static_cast<int>(t);
    }
    report.trees.push_back(check);
  }
  return report;
}

}  // namespace rainbow
