#pragma once

// Exhaustive oracles for tiny instances. Used by the test suites and by the
// `oracle` CLI subcommand; none of the pipeline code depends on them.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

class OracleRefused : public std::domain_error {
 public:
  OracleRefused(const std::string& what, int cap) : std::domain_error(what), cap_(cap) {}
  int cap() const { return cap_; }

 private:
  int cap_;
};

inline constexpr int kPartitionOracleCap = 9;
inline constexpr int kPackingOracleCap = 8;
inline constexpr int kMatchingOracleCap = 12;

using VertexPartition = std::vector<VertexSet>;

struct PartitionCheck {
  bool holds = true;
  std::optional<VertexPartition> witness;
};

/// Calls visit(labels, parts) for every set partition of k items, as restricted
/// growth strings in lexicographic order. Stops early when visit returns false.
template <typename Visit>
void for_each_set_partition(int k, Visit&& visit) {
  std::vector<int> a(static_cast<std::size_t>(k), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(k), 0);
  if (k == 0) {
    visit(a, 0);
    return;
  }
  for (;;) {
    if (!visit(a, prefix_max[static_cast<std::size_t>(k - 1)] + 1)) return;
    int i = k - 1;
    while (i > 0 && a[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i == 0) return;
    ++a[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] = std::max(prefix_max[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < k; ++j) {
      a[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }
}

/// Checks that every partition of V(g) into s parts has at least s-1 distinct
/// colours on edges between parts. Exponential (Bell numbers); refuses above `cap` vertices.
inline PartitionCheck partition_condition_holds(const GraphView& g, int cap = kPartitionOracleCap) {
  const int k = g.vertex_count();
  if (k > cap) {
    throw OracleRefused("partition oracle refuses " + std::to_string(k) + " vertices (cap " + std::to_string(cap) + ")", cap);
  }
  std::vector<int> local(static_cast<std::size_t>(g.parent().vertex_count()), -1);
  for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(g.vertices()[static_cast<std::size_t>(i)])] = i;
  struct LocalEdge {
    int a, b;
    Colour c;
  };
  std::vector<LocalEdge> edges;
  for (EdgeIndex e : g.edges()) {
    const Edge& ed = g.edge(e);
    edges.push_back({local[static_cast<std::size_t>(ed.u)], local[static_cast<std::size_t>(ed.v)], ed.colour});
  }
  PartitionCheck out;
  std::vector<Colour> crossing;
  for_each_set_partition(k, [&](const std::vector<int>& label, int parts) {
    crossing.clear();
    for (const auto& e : edges) {
      if (label[static_cast<std::size_t>(e.a)] != label[static_cast<std::size_t>(e.b)]) crossing.push_back(e.c);
    }
    std::sort(crossing.begin(), crossing.end());
    const auto distinct = std::unique(crossing.begin(), crossing.end()) - crossing.begin();
    if (distinct >= parts - 1) return true;
    out.holds = false;
    VertexPartition w(static_cast<std::size_t>(parts));
    for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])].push_back(g.vertices()[static_cast<std::size_t>(i)]);
    out.witness = std::move(w);
    return false;
  });
  return out;
}

/// All rainbow spanning trees of the view, each as a bitmask over positions in g.edges().
inline std::vector<std::uint64_t> enumerate_rainbow_spanning_trees(const GraphView& g, int cap = kPackingOracleCap) {
  const int k = g.vertex_count();
  if (k > cap) {
    throw OracleRefused("tree enumeration refuses " + std::to_string(k) + " vertices (cap " + std::to_string(cap) + ")", cap);
  }
  std::vector<std::uint64_t> trees;
  if (k <= 1) {
    trees.push_back(0);
    return trees;
  }
  const int m = g.edge_count();
  if (k > 16 || m > 64) throw OracleRefused("tree enumeration supports at most 16 vertices and 64 edges", cap);
  std::vector<int> local(static_cast<std::size_t>(g.parent().vertex_count()), -1);
  for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(g.vertices()[static_cast<std::size_t>(i)])] = i;
  std::vector<std::array<int, 2>> ends;
  std::vector<int> colour;  // local dense colour ids
  {
    std::vector<Colour> cs;
    for (EdgeIndex e : g.edges()) cs.push_back(g.edge(e).colour);
    std::vector<Colour> sorted = cs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      colour.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), cs[i]) - sorted.begin()));
      const Edge& ed = g.edge(g.edges()[i]);
      ends.push_back({local[static_cast<std::size_t>(ed.u)], local[static_cast<std::size_t>(ed.v)]});
    }
  }
  const int need = k - 1;
  std::array<int, 16> comp{};
  for (int i = 0; i < k; ++i) comp[static_cast<std::size_t>(i)] = i;

  // Component labels are copied per level; k <= 16 keeps this trivial.
  auto rec = [&](auto&& self, int pos, int chosen, std::uint64_t mask, std::uint64_t colours,
                 std::array<int, 16> labels) -> void {
    if (chosen == need) {
      trees.push_back(mask);
      return;
    }
    if (m - pos < need - chosen) return;
    const auto [a, b] = ends[static_cast<std::size_t>(pos)];
    const int la = labels[static_cast<std::size_t>(a)];
    const int lb = labels[static_cast<std::size_t>(b)];
    const std::uint64_t cbit = std::uint64_t{1} << colour[static_cast<std::size_t>(pos)];
    if (la != lb && !(colours & cbit)) {
      auto next = labels;
      for (int i = 0; i < k; ++i) {
        if (next[static_cast<std::size_t>(i)] == lb) next[static_cast<std::size_t>(i)] = la;
      }
      self(self, pos + 1, chosen + 1, mask | (std::uint64_t{1} << pos), colours | cbit, next);
    }
    self(self, pos + 1, chosen, mask, colours, labels);
  };
  rec(rec, 0, 0, 0, 0, comp);
  return trees;
}

/// Exact maximum number of pairwise edge-disjoint rainbow spanning trees,
/// capped at `limit`. Refuses views with more than `cap` vertices.
inline int brute_force_tree_packing(const GraphView& g, int limit, int cap = kPackingOracleCap) {
  if (limit <= 0) return 0;
  const auto trees = enumerate_rainbow_spanning_trees(g, cap);
  const int k = g.vertex_count();
  if (k <= 1) return limit;  // empty trees are trivially disjoint
  if (trees.empty()) return 0;
  const int m = g.edge_count();
  const int per_tree = k - 1;

  // Trees bucketed by their lowest edge position: when branching on the lowest
  // still-available edge e, only trees whose lowest edge is e can use it.
  std::vector<std::vector<std::uint64_t>> by_low(static_cast<std::size_t>(m));
  for (std::uint64_t t : trees) by_low[static_cast<std::size_t>(__builtin_ctzll(t))].push_back(t);

  int best = 0;
  const std::uint64_t all = m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  auto rec = [&](auto&& self, std::uint64_t available, int used) -> void {
    if (used > best) best = used;
    if (best >= limit) return;
    const int bound = used + __builtin_popcountll(available) / per_tree;
    if (bound <= best || available == 0) return;
    const int e = __builtin_ctzll(available);
    for (std::uint64_t t : by_low[static_cast<std::size_t>(e)]) {
      if ((t & available) == t) {
        self(self, available & ~t, used + 1);
        if (best >= limit) return;
      }
    }
    self(self, available & ~(std::uint64_t{1} << e), used);
  };
  rec(rec, all, 0);
  return std::min(best, limit);
}

/// Matching number by exhaustive branching on the lowest unmatched vertex.
inline int brute_force_matching_number(const GraphView& g, int cap = kMatchingOracleCap) {
  const int k = g.vertex_count();
  if (k > cap || k > 31) {
    throw OracleRefused("matching oracle refuses " + std::to_string(k) + " vertices (cap " + std::to_string(cap) + ")", cap);
  }
  std::vector<int> local(static_cast<std::size_t>(g.parent().vertex_count()), -1);
  for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(g.vertices()[static_cast<std::size_t>(i)])] = i;
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(k), 0);
  for (EdgeIndex e : g.edges()) {
    const int a = local[static_cast<std::size_t>(g.edge(e).u)];
    const int b = local[static_cast<std::size_t>(g.edge(e).v)];
    nbr[static_cast<std::size_t>(a)] |= 1u << b;
    nbr[static_cast<std::size_t>(b)] |= 1u << a;
  }
  auto rec = [&](auto&& self, std::uint32_t free) -> int {
    if (free == 0) return 0;
    const int v = __builtin_ctz(free);
    const std::uint32_t rest = free & ~(1u << v);
    int best = self(self, rest);
    for (std::uint32_t cand = nbr[static_cast<std::size_t>(v)] & rest; cand != 0; cand &= cand - 1) {
      const int w = __builtin_ctz(cand);
      best = std::max(best, 1 + self(self, rest & ~(1u << w)));
    }
    return best;
  };
  return rec(rec, (1u << k) - 1);
}

}  // namespace rainbow
