#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/ratio.hpp"
#include "rainbow/union_find.hpp"

namespace rainbow {

struct ColourClass {
  ColourSet colours;  // ascending
  int nu = 0;         // matching number of the class subgraph
  int edge_count = 0;
};

/// Partition of the colours of a view into classes, each rich at `alpha`.
/// A well-colouredness certificate when it has at least n-1 classes.
struct RichClassPartition {
  std::vector<ColourClass> classes;
  Ratio alpha;
  int vertex_count = 0;
};

/// Smallest matching number a class needs to count as `alpha`-rich on n vertices.
inline std::int64_t richness_threshold(Ratio alpha, int n) { return ceil_mul(alpha, n); }

inline ColourClass make_colour_class(const GraphView& g, ColourSet colours) {
  std::sort(colours.begin(), colours.end());
  ColourClass cls;
  const GraphView sub = g.with_colours(colours);
  cls.nu = matching_number(sub);
  cls.edge_count = sub.edge_count();
  cls.colours = std::move(colours);
  return cls;
}

struct Richness {
  bool rich = false;
  int nu = 0;
};

/// Exact test nu(G_U) >= ceil(alpha * |G|).
inline Richness is_rich(const GraphView& g, const ColourSet& u, Ratio alpha) {
  if (!(Ratio{0} < alpha) || Ratio{1} < alpha) throw std::invalid_argument("alpha must lie in (0, 1]");
  const int nu = matching_number(g.with_colours(u));
  return {nu >= richness_threshold(alpha, g.vertex_count()), nu};
}

/// Colours that are individually alpha-rich. Assumes a proper colouring, where
/// each colour class is a matching and its size is its matching number.
inline ColourSet rich_colours(const GraphView& g, Ratio alpha) {
  std::vector<int> count(static_cast<std::size_t>(g.parent().colour_count()), 0);
  for (EdgeIndex e : g.edges()) ++count[static_cast<std::size_t>(g.edge(e).colour)];
  const auto need = richness_threshold(alpha, g.vertex_count());
  ColourSet out;
  for (Colour c = 0; c < g.parent().colour_count(); ++c) {
    if (count[static_cast<std::size_t>(c)] > 0 && count[static_cast<std::size_t>(c)] >= need) out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rich class construction.

struct RichClassOptions {
  /// Skip colours that would push |E(G_U)| above this.
  std::optional<std::int64_t> max_edges;
  /// Keep nu(G_U) <= floor(2 alpha n), which bounds |E(G_U)| <= 2 nu(G_U) <= 4 alpha n.
  bool cap_matching_number = true;
};

struct RichClassResult {
  bool success = false;
  /// The class built so far (partial on failure).
  ColourClass cls;
  /// At least 4 alpha n^2 edges and no alpha-rich colour: the setting where
  /// a rich class is guaranteed to exist.
  bool hypotheses_met = false;
};

/// Grows a colour class U together with a maximal matching M of G_U. A colour
/// c is added when it has k >= 1 edges avoiding V(M) and at most k edges
/// touching V(M); its k disjoint edges then extend M, so |E(G_U)| <= 2|M|
/// holds throughout. Colours are scanned in ascending id, restarting after
/// every addition, until nu(G_U) reaches ceil(alpha n) or no colour qualifies.
inline RichClassResult find_rich_class(const GraphView& g, Ratio alpha, const RichClassOptions& opts = {}) {
  RichClassResult res;
  const ColouredGraph& p = g.parent();
  const int n = g.vertex_count();
  const auto need = richness_threshold(alpha, n);
  const auto nu_cap = floor_mul(alpha * Ratio{2}, n);

  std::vector<std::vector<EdgeIndex>> by_colour(static_cast<std::size_t>(p.colour_count()));
  for (EdgeIndex e : g.edges()) by_colour[static_cast<std::size_t>(g.edge(e).colour)].push_back(e);
  {
    const auto m = static_cast<std::int64_t>(g.edge_count());
    const bool many_edges = static_cast<std::int64_t>(alpha.den()) * m >= 4 * alpha.num() * static_cast<std::int64_t>(n) * n;
    res.hypotheses_met = many_edges && rich_colours(g, alpha).empty();
  }

  std::vector<char> covered(static_cast<std::size_t>(p.vertex_count()), 0);
  std::vector<char> in_class(static_cast<std::size_t>(p.colour_count()), 0);
  std::int64_t class_edges = 0;
  int nu = 0;
  if (need <= 0) {
    res.success = true;
    return res;
  }
  for (;;) {
    bool grew = false;
    for (Colour c = 0; c < p.colour_count(); ++c) {
      const auto& edges = by_colour[static_cast<std::size_t>(c)];
      if (in_class[static_cast<std::size_t>(c)] || edges.empty()) continue;
      int k = 0;
      int touching = 0;
      for (EdgeIndex e : edges) {
        const Edge& ed = p.edge(e);
        if (covered[static_cast<std::size_t>(ed.u)] || covered[static_cast<std::size_t>(ed.v)]) {
          ++touching;
        } else {
          ++k;
        }
      }
      if (k < 1 || touching > k) continue;
      if (opts.max_edges && class_edges + k + touching > *opts.max_edges) continue;

      ColourSet candidate = res.cls.colours;
      candidate.push_back(c);
      std::sort(candidate.begin(), candidate.end());
      int candidate_nu = -1;
      if (opts.cap_matching_number && nu + k + touching > nu_cap) {
        candidate_nu = matching_number(g.with_colours(candidate));
        if (candidate_nu > nu_cap) continue;
      }
      if (candidate_nu < 0) candidate_nu = matching_number(g.with_colours(candidate));

      // Accept c: its edges avoiding V(M) are pairwise disjoint (a colour class
      // of a proper colouring), so all of them extend M.
      for (EdgeIndex e : edges) {
        const Edge& ed = p.edge(e);
        if (covered[static_cast<std::size_t>(ed.u)] || covered[static_cast<std::size_t>(ed.v)]) continue;
        covered[static_cast<std::size_t>(ed.u)] = covered[static_cast<std::size_t>(ed.v)] = 1;
      }
      in_class[static_cast<std::size_t>(c)] = 1;
      class_edges += k + touching;
      nu = candidate_nu;
      res.cls.colours = std::move(candidate);
      res.cls.nu = nu;
      res.cls.edge_count = static_cast<int>(class_edges);
      grew = true;
      if (nu >= need) {
        res.success = true;
        return res;
      }
      break;
    }
    if (!grew) return res;
  }
}

// ---------------------------------------------------------------------------
// Well-colouredness certificates.

struct PartitionVerdict {
  bool valid = true;
  std::string reason;
};

/// Independent check of a certificate: classes disjoint, covering every colour
/// of the view, each with recomputed nu >= ceil(alpha n), and exactly n-1 classes.
inline PartitionVerdict check_rich_partition(const GraphView& g, const RichClassPartition& part) {
  const int n = g.vertex_count();
  const auto need = richness_threshold(part.alpha, n);
  std::vector<int> owner(static_cast<std::size_t>(g.parent().colour_count()), -1);
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    for (Colour c : part.classes[i].colours) {
      if (c < 0 || c >= g.parent().colour_count()) return {false, "unknown colour " + std::to_string(c)};
      if (owner[static_cast<std::size_t>(c)] != -1) return {false, "colour " + std::to_string(c) + " in two classes"};
      owner[static_cast<std::size_t>(c)] = static_cast<int>(i);
    }
    const int nu = matching_number(g.with_colours(part.classes[i].colours));
    if (nu < need) return {false, "class " + std::to_string(i) + " has nu " + std::to_string(nu) + " < " + std::to_string(need)};
  }
  for (Colour c : g.colours()) {
    if (owner[static_cast<std::size_t>(c)] == -1) return {false, "colour " + std::to_string(c) + " not covered"};
  }
  if (static_cast<int>(part.classes.size()) != std::max(n - 1, 0)) {
    return {false, std::to_string(part.classes.size()) + " classes, need " + std::to_string(n - 1)};
  }
  return {};
}

struct WellColouredResult {
  bool success = false;
  RichClassPartition partition;
  /// Rich classes achieved (also reported on failure).
  int rich_classes = 0;
  std::string failure;
};

/// Builds a partition into rich classes: forced colours and any other
/// individually rich colour become singleton classes, the remaining colours
/// are grouped by repeated find_rich_class, and leftovers join the last class.
inline WellColouredResult certify_well_coloured(const GraphView& g, Ratio alpha, const ColourSet& forced_singletons = {}) {
  WellColouredResult res;
  res.partition.alpha = alpha;
  res.partition.vertex_count = g.vertex_count();
  const int target = g.vertex_count() - 1;

  std::vector<char> taken(static_cast<std::size_t>(g.parent().colour_count()), 0);
  for (Colour c : forced_singletons) {
    const Richness r = is_rich(g, {c}, alpha);
    if (!r.rich) {
      res.failure = "forced colour " + std::to_string(c) + " is not rich";
      return res;
    }
    if (taken[static_cast<std::size_t>(c)]) continue;
    taken[static_cast<std::size_t>(c)] = 1;
    res.partition.classes.push_back(make_colour_class(g, {c}));
  }
  const int forced_count = static_cast<int>(res.partition.classes.size());
  for (Colour c : rich_colours(g, alpha)) {
    if (taken[static_cast<std::size_t>(c)]) continue;
    taken[static_cast<std::size_t>(c)] = 1;
    res.partition.classes.push_back(make_colour_class(g, {c}));
  }

  ColourSet used;
  for (Colour c = 0; c < g.parent().colour_count(); ++c) {
    if (taken[static_cast<std::size_t>(c)]) used.push_back(c);
  }
  GraphView residual = g.without_colours(used);
  while (static_cast<int>(res.partition.classes.size()) < target) {
    RichClassOptions opts;
    opts.cap_matching_number = false;
    RichClassResult found = find_rich_class(residual, alpha, opts);
    if (!found.success || found.cls.colours.empty()) break;
    for (Colour c : found.cls.colours) taken[static_cast<std::size_t>(c)] = 1;
    residual = residual.without_colours(found.cls.colours);
    res.partition.classes.push_back(make_colour_class(g, found.cls.colours));
  }
  res.rich_classes = static_cast<int>(res.partition.classes.size());

  ColourSet leftover;
  for (Colour c : g.colours()) {
    if (!taken[static_cast<std::size_t>(c)]) leftover.push_back(c);
  }
  if (!leftover.empty()) {
    if (res.partition.classes.empty()) {
      res.failure = "no rich class found";
      return res;
    }
    ColourSet merged = res.partition.classes.back().colours;
    merged.insert(merged.end(), leftover.begin(), leftover.end());
    res.partition.classes.back() = make_colour_class(g, std::move(merged));
  }
  if (res.rich_classes < target) {
    res.failure = "found " + std::to_string(res.rich_classes) + " rich classes, need " + std::to_string(target);
    return res;
  }
  if (forced_count > target) {
    res.failure = "more forced singletons than n-1 classes";
    return res;
  }
  // surplus rich singletons fold into the last class; merging cannot lower nu
  auto& classes = res.partition.classes;
  if (static_cast<int>(classes.size()) > target && target > 0) {
    ColourSet merged;
    for (std::size_t i = static_cast<std::size_t>(target) - 1; i < classes.size(); ++i) {
      merged.insert(merged.end(), classes[i].colours.begin(), classes[i].colours.end());
    }
    classes.resize(static_cast<std::size_t>(target) - 1);
    std::sort(merged.begin(), merged.end());
    classes.push_back(make_colour_class(g, std::move(merged)));
  }
  res.success = true;
  return res;
}

// ---------------------------------------------------------------------------
// Robustness probe.

struct RobustnessProbe {
  int trials = 0;
  int failures = 0;
  std::optional<int> first_failed_trial;
  std::vector<int> rich_classes_per_trial;

  bool passed() const { return failures == 0; }
};

/// A maximal rainbow forest built greedily over a seed-shuffled edge order.
inline EdgeSubset random_maximal_rainbow_forest(const GraphView& g, Rng& rng) {
  EdgeSubset order = g.edges();
  shuffle(order, rng);
  DisjointSets ds(g.parent().vertex_count());
  std::vector<char> colour_used(static_cast<std::size_t>(g.parent().colour_count()), 0);
  EdgeSubset forest;
  for (EdgeIndex e : order) {
    const Edge& ed = g.edge(e);
    if (colour_used[static_cast<std::size_t>(ed.colour)]) continue;
    if (!ds.unite(ed.u, ed.v)) continue;
    colour_used[static_cast<std::size_t>(ed.colour)] = 1;
    forest.push_back(e);
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

/// Randomised falsification of (alpha, t)-robust colouring: each trial removes
/// t random maximal rainbow forests and re-certifies well-colouredness.
/// Passing is evidence, not proof.
inline RobustnessProbe check_robust(const GraphView& g, Ratio alpha, int t, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("check_robust needs at least one trial");
  RobustnessProbe probe;
  const int runs = t == 0 ? 1 : trials;
  for (int trial = 0; trial < runs; ++trial) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    GraphView current = g;
    for (int k = 0; k < t; ++k) current = current.without_edges(random_maximal_rainbow_forest(current, rng));
    const WellColouredResult cert = certify_well_coloured(current, alpha);
    ++probe.trials;
    probe.rich_classes_per_trial.push_back(cert.rich_classes);
    if (!cert.success) {
      ++probe.failures;
      if (!probe.first_failed_trial) probe.first_failed_trial = trial;
    }
  }
  return probe;
}

// ---------------------------------------------------------------------------
// Branch classification.

enum class Branch { Rich, Robust };

inline const char* to_string(Branch b) { return b == Branch::Rich ? "rich" : "robust"; }

struct BranchDecision {
  Branch branch = Branch::Rich;
  ColourSet rich_colours;
  std::optional<RichClassPartition> certificate;  // present iff Robust
  Ratio alpha;
  Ratio beta;
  /// Rich chosen only because neither branch could be established.
  bool fallback = false;
  std::vector<std::string> notes;
};

/// Either enough colours are alpha-rich (Rich), or the colours split into
/// n-1 beta-rich classes: the rich colours as singletons plus classes of at
/// most alpha*n edges extracted from the remaining edges (Robust).
inline BranchDecision classify(const GraphView& g, Ratio alpha, Ratio beta) {
  BranchDecision d;
  d.alpha = alpha;
  d.beta = beta;
  if (Ratio{1, 8} < alpha) d.notes.emplace_back("alpha above 1/8");
  if (alpha / Ratio{4} < beta) d.notes.emplace_back("beta above alpha/4");

  const int n = g.vertex_count();
  d.rich_colours = rich_colours(g, alpha);
  const auto t = static_cast<std::int64_t>(d.rich_colours.size());
  if (t >= n - ceil_mul(beta * Ratio{16}, n)) {
    d.branch = Branch::Rich;
    return d;
  }

  RichClassPartition cert;
  cert.alpha = beta;
  cert.vertex_count = n;
  for (Colour c : d.rich_colours) cert.classes.push_back(make_colour_class(g, {c}));
  const std::int64_t wanted = n - 1 - t;
  RichClassOptions opts;
  opts.max_edges = floor_mul(alpha, n);
  GraphView residual = g.without_colours(d.rich_colours);
  std::int64_t found = 0;
  while (found < wanted) {
    const RichClassResult r = find_rich_class(residual, beta, opts);
    if (!r.success || r.cls.colours.empty()) break;
    residual = residual.without_colours(r.cls.colours);
    cert.classes.push_back(make_colour_class(g, r.cls.colours));
    ++found;
  }
  if (found >= wanted) {
    const ColourSet leftover = residual.colours();
    if (!leftover.empty() && !cert.classes.empty()) {
      ColourSet merged = cert.classes.back().colours;
      merged.insert(merged.end(), leftover.begin(), leftover.end());
      cert.classes.back() = make_colour_class(g, std::move(merged));
    }
    const PartitionVerdict verdict = check_rich_partition(g, cert);
    if (verdict.valid) {
      d.branch = Branch::Robust;
      d.certificate = std::move(cert);
      return d;
    }
    d.notes.push_back("robust certificate rejected: " + verdict.reason);
  }
  d.branch = Branch::Rich;
  d.fallback = true;
  d.notes.push_back("neither branch established (" + std::to_string(t) + " rich colours, " + std::to_string(found) +
                    " of " + std::to_string(wanted) + " rich classes); falling back to rich");
  return d;
}

}  // namespace rainbow
