#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lgtw/error.hpp"
#include "lgtw/rational.hpp"

namespace lgtw {

/// Vertices are 0-based in memory; files use 1-based ids.
using Vertex = int;

/// Index of an edge in the canonical (lexicographic) edge order of a graph.
/// Vertex i of line_graph(g) is edge i of g.
using EdgeId = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v once stored in a Graph

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool has(Vertex x) const { return x == u || x == v; }
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on self-loops, duplicate edges or out-of-range endpoints.
  explicit Graph(int vertex_count, std::vector<Edge> edges = {}) : n_(vertex_count) {
    if (vertex_count < 0) throw InvalidInput("negative vertex count");
    for (auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
        throw InvalidInput("edge endpoint out of range: " + std::to_string(e.u + 1) + " " +
                           std::to_string(e.v + 1));
      if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u + 1));
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
      throw InvalidInput("duplicate edge " + std::to_string(dup->u + 1) + " " +
                         std::to_string(dup->v + 1));
    edges_ = std::move(edges);
    neighbors_.assign(n_, {});
    incident_.assign(n_, {});
    for (EdgeId id = 0; id < static_cast<EdgeId>(edges_.size()); ++id) {
      const Edge& e = edges_[id];
      neighbors_[e.u].push_back(e.v);
      neighbors_[e.v].push_back(e.u);
      incident_[e.u].push_back(id);
      incident_[e.v].push_back(id);
    }
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }

  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_.at(v); }
  /// Edge ids incident to v, ascending.
  std::span<const EdgeId> incident_edges(Vertex v) const { return incident_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(neighbors_.at(v).size()); }

  bool adjacent(Vertex a, Vertex b) const {
    const auto& nb = neighbors_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
    if (it == edges_.end() || *it != Edge{a, b}) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
  }

  int max_degree() const {
    int d = 0;
    for (const auto& nb : neighbors_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  int non_isolated_count() const {
    return static_cast<int>(std::count_if(neighbors_.begin(), neighbors_.end(),
                                          [](const auto& nb) { return !nb.empty(); }));
  }

  /// Neighbourhood bitmasks; requires vertex_count() <= 64.
  std::vector<std::uint64_t> adjacency_masks() const {
    if (n_ > 64) throw InvalidInput("bitmask adjacency needs at most 64 vertices");
    std::vector<std::uint64_t> masks(n_, 0);
    for (const auto& e : edges_) {
      masks[e.u] |= std::uint64_t{1} << e.v;
      masks[e.v] |= std::uint64_t{1} << e.u;
    }
    return masks;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::vector<EdgeId>> incident_;
};

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  Rational avg_degree;  // exactly 2m/n
};

inline DegreeStats degree_stats(const Graph& g) {
  if (g.vertex_count() == 0) throw InvalidInput("undefined statistics: graph has no vertices");
  DegreeStats s;
  s.min_degree = g.degree(0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  s.avg_degree = Rational(2 * static_cast<std::int64_t>(g.edge_count()), g.vertex_count());
  return s;
}

/// The line graph; vertex i corresponds to g.edge(i). Two line-graph vertices are
/// adjacent iff the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
  std::vector<Edge> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) out.push_back({inc[i], inc[j]});
  }
  // Two distinct simple-graph edges share at most one endpoint, so no duplicates.
  return Graph(g.edge_count(), std::move(out));
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertices;  // vertex i of graph is vertices[i] of the parent
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<Vertex> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  return {Graph(static_cast<int>(keep.size()), std::move(edges)), std::move(keep)};
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> seen(g.vertex_count(), 0);
  std::vector<std::vector<Vertex>> comps;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

inline constexpr int kDefaultDenseSubgraphLimit = 18;

/// Induced subgraph of maximum average degree, fewest vertices among maximizers,
/// lowest vertex bitmask among those. Such a subgraph is minimal: deleting any
/// nonempty proper vertex subset strictly lowers its average degree.
inline InducedSubgraph minimal_dense_subgraph(const Graph& g,
                                              int limit = kDefaultDenseSubgraphLimit) {
  const int n = g.vertex_count();
  if (n == 0) throw InvalidInput("minimal dense subgraph of an empty graph");
  if (n > limit) throw LimitExceeded("minimal dense subgraph", n, limit);
  auto adj = g.adjacency_masks();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // edges[S] = |e(S)| via lowest-bit recurrence
  std::vector<std::uint16_t> edges(std::size_t{1} << n, 0);
  std::uint64_t best = 1;
  std::int64_t best_e = 0, best_k = 1;
  for (std::uint64_t s = 1; s <= full; ++s) {
    int low = std::countr_zero(s);
    std::uint64_t rest = s & (s - 1);
    edges[s] = static_cast<std::uint16_t>(edges[rest] + std::popcount(adj[low] & rest));
    std::int64_t e = edges[s], k = std::popcount(s);
    // compare e/k against best_e/best_k
    std::int64_t lhs = e * best_k, rhs = best_e * k;
    if (lhs > rhs || (lhs == rhs && k < best_k)) {
      best = s;
      best_e = e;
      best_k = k;
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < n; ++v)
    if (best >> v & 1) keep.push_back(v);
  return induced_subgraph(g, std::move(keep));
}

}  // namespace lgtw
