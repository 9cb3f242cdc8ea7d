#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = int;
using Colour = int;
using EdgeIndex = int;

/// Indices into a parent graph's edge list, ascending and distinct.
using EdgeSubset = std::vector<EdgeIndex>;
using VertexSet = std::vector<Vertex>;
using ColourSet = std::vector<Colour>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Colour colour = 0;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Simple edge-coloured graph on vertices 0..n-1.
///
/// Construction normalises every edge to u < v and re-densifies colour ids in
/// first-occurrence order, so equal inputs always produce identical graphs.
/// The edge order given at construction is preserved; edge indices are the
/// stable identifiers used by every view, tree and result file.
class ColouredGraph {
 public:
  ColouredGraph() = default;

  ColouredGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
    std::set<std::pair<Vertex, Vertex>> seen;
    std::map<Colour, Colour> dense;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      Edge& e = edges_[i];
      if (e.u == e.v) throw std::invalid_argument("edge " + std::to_string(i) + ": self-loop");
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n_) throw std::invalid_argument("edge " + std::to_string(i) + ": vertex out of range");
      if (e.colour < 0) throw std::invalid_argument("edge " + std::to_string(i) + ": negative colour");
      if (!seen.emplace(e.u, e.v).second) throw std::invalid_argument("edge " + std::to_string(i) + ": duplicate edge");
      e.colour = dense.try_emplace(e.colour, static_cast<Colour>(dense.size())).first->second;
    }
    colour_count_ = static_cast<int>(dense.size());

    incidence_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incidence_[static_cast<std::size_t>(edges_[i].u)].push_back(static_cast<EdgeIndex>(i));
      incidence_[static_cast<std::size_t>(edges_[i].v)].push_back(static_cast<EdgeIndex>(i));
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int colour_count() const { return colour_count_; }

  const Edge& edge(EdgeIndex i) const { return edges_.at(static_cast<std::size_t>(i)); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Edge indices incident to v, ascending.
  const std::vector<EdgeIndex>& incident(Vertex v) const { return incidence_.at(static_cast<std::size_t>(v)); }

  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const {
    for (EdgeIndex i : incident(a)) {
      if (edges_[static_cast<std::size_t>(i)].other(a) == b) return i;
    }
    return std::nullopt;
  }

  bool is_complete() const {
    return static_cast<std::int64_t>(edges_.size()) == static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
  }

  bool operator==(const ColouredGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  int colour_count_ = 0;
  std::vector<std::vector<EdgeIndex>> incidence_;
};

/// Read-only subgraph of a ColouredGraph: a vertex subset plus an edge subset
/// whose endpoints lie in it. Vertex, edge and colour ids stay those of the
/// parent, so views compose across removals.
///
/// The parent must outlive every view built on it.
class GraphView {
 public:
  GraphView(const ColouredGraph& g)  // NOLINT(google-explicit-constructor)
      : g_(&g),
        vertex_mask_(static_cast<std::size_t>(g.vertex_count()), 1),
        edge_mask_(static_cast<std::size_t>(g.edge_count()), 1) {
    vertices_.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) vertices_[static_cast<std::size_t>(v)] = v;
    edges_.resize(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) edges_[static_cast<std::size_t>(e)] = e;
  }
  GraphView(ColouredGraph&&) = delete;

  const ColouredGraph& parent() const { return *g_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const VertexSet& vertices() const { return vertices_; }
  const EdgeSubset& edges() const { return edges_; }
  bool has_vertex(Vertex v) const { return v >= 0 && v < g_->vertex_count() && vertex_mask_[static_cast<std::size_t>(v)]; }
  bool has_edge(EdgeIndex e) const { return e >= 0 && e < g_->edge_count() && edge_mask_[static_cast<std::size_t>(e)]; }
  const Edge& edge(EdgeIndex e) const { return g_->edge(e); }

  /// Degree of every parent vertex within this view (0 for absent vertices).
  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(g_->vertex_count()), 0);
    for (EdgeIndex e : edges_) {
      ++deg[static_cast<std::size_t>(g_->edge(e).u)];
      ++deg[static_cast<std::size_t>(g_->edge(e).v)];
    }
    return deg;
  }

  int min_degree() const {
    if (vertices_.empty()) return 0;
    const auto deg = degrees();
    int best = g_->vertex_count();
    for (Vertex v : vertices_) best = std::min(best, deg[static_cast<std::size_t>(v)]);
    return best;
  }

  int max_degree() const {
    const auto deg = degrees();
    int best = 0;
    for (Vertex v : vertices_) best = std::max(best, deg[static_cast<std::size_t>(v)]);
    return best;
  }

  /// Colours occurring on at least one edge of the view, ascending.
  ColourSet colours() const {
    std::vector<char> present(static_cast<std::size_t>(g_->colour_count()), 0);
    for (EdgeIndex e : edges_) present[static_cast<std::size_t>(g_->edge(e).colour)] = 1;
    ColourSet out;
    for (int c = 0; c < g_->colour_count(); ++c) {
      if (present[static_cast<std::size_t>(c)]) out.push_back(c);
    }
    return out;
  }

  /// Edges of the view incident to v, ascending.
  EdgeSubset incident(Vertex v) const {
    EdgeSubset out;
    if (!has_vertex(v)) return out;
    for (EdgeIndex e : g_->incident(v)) {
      if (edge_mask_[static_cast<std::size_t>(e)]) out.push_back(e);
    }
    return out;
  }

  GraphView without_edges(const EdgeSubset& f) const {
    GraphView out = *this;
    for (EdgeIndex e : f) {
      if (out.has_edge(e)) out.edge_mask_[static_cast<std::size_t>(e)] = 0;
    }
    out.rebuild_edges();
    return out;
  }

  GraphView only_edges(const EdgeSubset& keep) const {
    GraphView out = *this;
    std::fill(out.edge_mask_.begin(), out.edge_mask_.end(), 0);
    for (EdgeIndex e : keep) {
      if (has_edge(e)) out.edge_mask_[static_cast<std::size_t>(e)] = 1;
    }
    out.rebuild_edges();
    return out;
  }

  /// G[A]: keeps only vertices of `a` (that are present) and edges inside it.
  GraphView induced(const VertexSet& a) const {
    GraphView out = *this;
    std::fill(out.vertex_mask_.begin(), out.vertex_mask_.end(), 0);
    for (Vertex v : a) {
      if (has_vertex(v)) out.vertex_mask_[static_cast<std::size_t>(v)] = 1;
    }
    out.rebuild_vertices();
    return out;
  }

  /// G - A.
  GraphView drop_vertices(const VertexSet& a) const {
    GraphView out = *this;
    for (Vertex v : a) {
      if (has_vertex(v)) out.vertex_mask_[static_cast<std::size_t>(v)] = 0;
    }
    out.rebuild_vertices();
    return out;
  }

  /// G_U: all vertices kept, edges restricted to colours in `u`.
  GraphView with_colours(const ColourSet& u) const { return filter_colours(u, true); }
  GraphView without_colours(const ColourSet& u) const { return filter_colours(u, false); }

 private:
  GraphView filter_colours(const ColourSet& u, bool keep) const {
    std::vector<char> in(static_cast<std::size_t>(g_->colour_count()), 0);
    for (Colour c : u) {
      if (c < 0 || c >= g_->colour_count()) throw std::invalid_argument("unknown colour id " + std::to_string(c));
      in[static_cast<std::size_t>(c)] = 1;
    }
    GraphView out = *this;
    for (EdgeIndex e : edges_) {
      const bool member = in[static_cast<std::size_t>(g_->edge(e).colour)] != 0;
      if (member != keep) out.edge_mask_[static_cast<std::size_t>(e)] = 0;
    }
    out.rebuild_edges();
    return out;
  }

  void rebuild_vertices() {
    vertices_.clear();
    for (int v = 0; v < g_->vertex_count(); ++v) {
      if (vertex_mask_[static_cast<std::size_t>(v)]) vertices_.push_back(v);
    }
    for (EdgeIndex e : edges_) {
      const Edge& ed = g_->edge(e);
      if (!vertex_mask_[static_cast<std::size_t>(ed.u)] || !vertex_mask_[static_cast<std::size_t>(ed.v)]) {
        edge_mask_[static_cast<std::size_t>(e)] = 0;
      }
    }
    rebuild_edges();
  }

  void rebuild_edges() {
    EdgeSubset kept;
    kept.reserve(edges_.size());
    for (EdgeIndex e : edges_) {
      if (edge_mask_[static_cast<std::size_t>(e)]) kept.push_back(e);
    }
    edges_ = std::move(kept);
  }

  const ColouredGraph* g_;
  std::vector<char> vertex_mask_;
  std::vector<char> edge_mask_;
  VertexSet vertices_;
  EdgeSubset edges_;
};

// ---------------------------------------------------------------------------
// Subgraph helpers named after the notation they implement.

/// E(G_U): the edges of `g` whose colour lies in `u`.
inline EdgeSubset colour_subgraph(const GraphView& g, const ColourSet& u) { return g.with_colours(u).edges(); }

/// G \ F.
inline GraphView remove_subgraph(const GraphView& g, const EdgeSubset& f) { return g.without_edges(f); }

/// G[A].
inline GraphView induced(const GraphView& g, const VertexSet& a) { return g.induced(a); }

/// G - A.
inline GraphView drop_vertices(const GraphView& g, const VertexSet& a) { return g.drop_vertices(a); }

// ---------------------------------------------------------------------------
// Properness.

struct PropernessReport {
  bool is_proper = true;
  bool is_complete = false;
  /// (vertex, colour) pairs where at least two incident edges share the colour.
  std::vector<std::pair<Vertex, Colour>> violations;
};

inline PropernessReport validate_proper(const GraphView& g) {
  PropernessReport report;
  const ColouredGraph& p = g.parent();
  std::vector<int> count(static_cast<std::size_t>(p.colour_count()), 0);
  for (Vertex v : g.vertices()) {
    const EdgeSubset inc = g.incident(v);
    for (EdgeIndex e : inc) ++count[static_cast<std::size_t>(p.edge(e).colour)];
    for (EdgeIndex e : inc) {
      int& c = count[static_cast<std::size_t>(p.edge(e).colour)];
      if (c >= 2) report.violations.emplace_back(v, p.edge(e).colour);
      c = 0;
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  report.is_proper = report.violations.empty();
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  report.is_complete = static_cast<std::int64_t>(g.edge_count()) == n * (n - 1) / 2;
  return report;
}

// ---------------------------------------------------------------------------
// .rcg text format: "n m" then m lines "u v c"; '#' lines are comments.

inline ColouredGraph parse_coloured_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  auto next_content = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      const auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };

  while (next_content(line)) {
    std::istringstream fields(line);
    if (!have_header) {
      std::string extra;
      if (!(fields >> n >> m) || (fields >> extra)) throw ParseError(line_no, "expected header 'n m'");
      if (n < 1 || n > 1'000'000) throw ParseError(line_no, "vertex count out of range");
      if (m < 0 || m > n * (n - 1) / 2) throw ParseError(line_no, "edge count out of range");
      have_header = true;
      continue;
    }
    long long u = 0;
    long long v = 0;
    long long c = 0;
    std::string extra;
    if (!(fields >> u >> v >> c) || (fields >> extra)) throw ParseError(line_no, "expected 'u v c'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    if (c < 0 || c > INT32_MAX) throw ParseError(line_no, "colour id out of range");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(static_cast<Vertex>(u), static_cast<Vertex>(v)).second) throw ParseError(line_no, "duplicate edge");
    if (static_cast<long long>(edges.size()) == m) throw ParseError(line_no, "more edges than declared");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Colour>(c)});
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return ColouredGraph(static_cast<int>(n), std::move(edges));
}

inline std::string serialize_coloured_graph(const ColouredGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.colour) + "\n";
  }
  return out;
}

}  // namespace rainbow
