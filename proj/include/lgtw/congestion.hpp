#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lgtw/embedding.hpp"
#include "lgtw/error.hpp"
#include "lgtw/graph.hpp"
#include "lgtw/limits.hpp"
#include "lgtw/ordering_dp.hpp"
#include "lgtw/tree.hpp"

namespace lgtw {

/// Non-isolated vertices of G in position order.
struct LinearOrdering {
  std::vector<Vertex> order;
};

enum class CongestionKind { tree_vertex, path_vertex, path_edge };

inline const char* to_string(CongestionKind k) {
  switch (k) {
    case CongestionKind::tree_vertex: return "tree-vertex";
    case CongestionKind::path_vertex: return "path-vertex";
    case CongestionKind::path_edge: return "path-edge";
  }
  return "?";
}

struct CongestionCertificate {
  int value = 0;
  std::variant<LeafEmbedding, LinearOrdering> witness;
  CongestionKind kind = CongestionKind::tree_vertex;
  long search_nodes = 0;  // branch-and-bound nodes visited (tree congestion only)
};

inline std::vector<Vertex> non_isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) out.push_back(v);
  return out;
}

namespace detail {

inline std::vector<int> positions_of(const LinearOrdering& o, const Graph& g) {
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < o.order.size(); ++i) {
    Vertex v = o.order[i];
    if (v < 0 || v >= g.vertex_count()) throw InvalidInput("ordering holds an unknown vertex");
    if (pos[v] >= 0) throw InvalidInput("ordering repeats vertex " + std::to_string(v + 1));
    if (g.degree(v) == 0) throw InvalidInput("ordering holds isolated vertex " + std::to_string(v + 1));
    pos[v] = static_cast<int>(i);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0 && pos[v] < 0)
      throw InvalidInput("ordering misses vertex " + std::to_string(v + 1));
  return pos;
}

}  // namespace detail

/// max over positions i of |{vw : pos(v) <= i <= pos(w)}|.
inline int path_congestion(const LinearOrdering& o, const Graph& g) {
  auto pos = detail::positions_of(o, g);
  std::vector<int> load(o.order.size() + 1, 0);
  for (const auto& e : g.edges()) {
    auto [a, b] = std::minmax(pos[e.u], pos[e.v]);
    ++load[a];
    --load[b + 1];
  }
  int best = 0, run = 0;
  for (std::size_t i = 0; i < o.order.size(); ++i) best = std::max(best, run += load[i]);
  return best;
}

/// max over gaps i of |{vw : pos(v) <= i < pos(w)}|.
inline int cutwidth_of(const LinearOrdering& o, const Graph& g) {
  auto pos = detail::positions_of(o, g);
  std::vector<int> load(o.order.size() + 1, 0);
  for (const auto& e : g.edges()) {
    auto [a, b] = std::minmax(pos[e.u], pos[e.v]);
    ++load[a];
    --load[b];
  }
  int best = 0, run = 0;
  for (std::size_t i = 0; i < o.order.size(); ++i) best = std::max(best, run += load[i]);
  return best;
}

/// Caterpillar whose spine node i carries the vertex at position i (the two end
/// vertices share the first and last spine nodes). Its vertex congestion equals
/// the path congestion of the ordering.
inline LeafEmbedding caterpillar_embedding(const LinearOrdering& o, const Graph& g) {
  detail::positions_of(o, g);
  const int k = static_cast<int>(o.order.size());
  LeafEmbedding e;
  e.leaf_of.assign(g.vertex_count(), -1);
  if (k == 0) {
    e.node_count = 1;
    return e;
  }
  if (k == 2) {
    e.node_count = 2;
    e.tree_edges = {{0, 1}};
    e.leaf_of[o.order[0]] = 0;
    e.leaf_of[o.order[1]] = 1;
    return e;
  }
  const int spine = k - 2;  // spine node j (0-based) sits at position j + 1
  e.node_count = spine + k;
  for (int j = 0; j + 1 < spine; ++j) e.tree_edges.push_back({j, j + 1});
  for (int i = 0; i < k; ++i) {
    int at = std::clamp(i - 1, 0, spine - 1);
    e.tree_edges.push_back({at, spine + i});
    e.leaf_of[o.order[i]] = spine + i;
  }
  return e;
}

namespace detail {

struct OrderingDp {
  std::vector<Vertex> vertices;            // non-isolated vertices, DP index -> vertex
  std::vector<std::uint32_t> adj;          // neighbourhood masks over DP indices
  std::vector<std::uint16_t> cross;        // edges leaving S
};

inline OrderingDp ordering_dp_setup(const Graph& g, int limit, const char* solver) {
  OrderingDp dp;
  dp.vertices = non_isolated_vertices(g);
  const int k = static_cast<int>(dp.vertices.size());
  if (k > limit) throw LimitExceeded(solver, k, limit);
  if (k > 30) throw LimitExceeded(solver, k, 30);
  std::vector<int> index(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) index[dp.vertices[i]] = i;
  dp.adj.assign(k, 0);
  for (const auto& e : g.edges()) {
    dp.adj[index[e.u]] |= std::uint32_t{1} << index[e.v];
    dp.adj[index[e.v]] |= std::uint32_t{1} << index[e.u];
  }
  const std::uint32_t full = k == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << k) - 1);
  dp.cross.assign(std::size_t{full} + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int low = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    int inside = std::popcount(dp.adj[low] & rest);
    dp.cross[s] = static_cast<std::uint16_t>(dp.cross[rest] + std::popcount(dp.adj[low]) - 2 * inside);
    if (s == full) break;
  }
  return dp;
}

inline void require_edges(const Graph& g, const char* solver) {
  if (g.edge_count() == 0) throw InvalidInput(std::string(solver) + ": graph has no edges");
}

}  // namespace detail

/// Minimum over orderings of the non-isolated vertices of the path congestion.
inline CongestionCertificate min_path_congestion(const Graph& g, const SolverLimits& limits = {}) {
  detail::require_edges(g, "path congestion");
  auto dp = detail::ordering_dp_setup(g, limits.path_dp, "path congestion");
  auto [value, order] = detail::best_ordering(dp.vertices, [&](std::uint32_t s, int u) {
    return dp.cross[s] + std::popcount(dp.adj[u] & s);
  });
  CongestionCertificate cert{value, LinearOrdering{std::move(order)}, CongestionKind::path_vertex};
  if (path_congestion(std::get<LinearOrdering>(cert.witness), g) != value)
    throw InternalError("path congestion witness does not reproduce its value");
  return cert;
}

inline CongestionCertificate cutwidth(const Graph& g, const SolverLimits& limits = {}) {
  auto dp = detail::ordering_dp_setup(g, limits.path_dp, "cutwidth");
  if (dp.vertices.empty()) return {0, LinearOrdering{}, CongestionKind::path_edge};
  auto [value, order] =
      detail::best_ordering(dp.vertices, [&](std::uint32_t s, int) { return static_cast<int>(dp.cross[s]); });
  CongestionCertificate cert{value, LinearOrdering{std::move(order)}, CongestionKind::path_edge};
  if (cutwidth_of(std::get<LinearOrdering>(cert.witness), g) != value)
    throw InternalError("cutwidth witness does not reproduce its value");
  return cert;
}

namespace detail {

/// Branch and bound over leaf-labelled cubic trees built by inserting one vertex
/// at a time: each insertion subdivides a tree edge and hangs a new leaf there.
/// Tracks per-tree-edge loads; an internal node's congestion is half the sum of
/// its incident loads, a leaf's is the load on its edge.
class TreeCongestionSearch {
 public:
  TreeCongestionSearch(const Graph& g, std::vector<Vertex> insertion, int incumbent,
                       int lower_bound)
      : g_(g), insertion_(std::move(insertion)), best_(incumbent), floor_(lower_bound) {
    const int k = static_cast<int>(insertion_.size());
    slot_.assign(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) slot_[insertion_[i]] = i;
    back_adj_.assign(k, {});
    for (int i = 0; i < k; ++i)
      for (Vertex w : g.neighbors(insertion_[i]))
        if (slot_[w] < i) back_adj_[i].push_back(slot_[w]);
  }

  /// Returns true when an embedding strictly better than the incumbent was found.
  bool run() {
    // Initial star: centre node 3 over leaves 0, 1, 2 (leaf i hosts insertion_[i]).
    State s;
    s.node_count = 4;
    s.edges = {{3, 0}, {3, 1}, {3, 2}};
    s.load = {0, 0, 0};
    for (int i = 0; i < 3; ++i) route_all(s, i);
    improved_ = false;
    extend(s, 3);
    return improved_;
  }

  int best() const { return best_; }
  const LeafEmbedding& best_embedding() const { return best_embedding_; }
  long visited() const { return visited_; }

 private:
  struct State {
    int node_count = 0;
    std::vector<TreeEdge> edges;
    std::vector<int> load;
  };

  // Leaf of the i-th inserted vertex: i for i < 3, else the node created with it.
  static NodeId leaf_node(int i) { return i < 3 ? i : 2 * i - 1; }

  static std::vector<std::vector<std::pair<NodeId, int>>> adjacency(const State& s) {
    std::vector<std::vector<std::pair<NodeId, int>>> adj(s.node_count);
    for (int id = 0; id < static_cast<int>(s.edges.size()); ++id) {
      adj[s.edges[id].first].push_back({s.edges[id].second, id});
      adj[s.edges[id].second].push_back({s.edges[id].first, id});
    }
    return adj;
  }

  /// Adds paths from inserted vertex i to its earlier neighbours.
  void route_all(State& s, int i) const {
    auto adj = adjacency(s);
    // parent edge pointers by BFS from i's leaf
    std::vector<int> via(s.node_count, -1);
    std::vector<NodeId> from(s.node_count, -1);
    std::vector<NodeId> queue{leaf_node(i)};
    from[leaf_node(i)] = leaf_node(i);
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (auto [y, id] : adj[queue[q]])
        if (from[y] < 0) {
          from[y] = queue[q];
          via[y] = id;
          queue.push_back(y);
        }
    for (int j : back_adj_[i])
      for (NodeId x = leaf_node(j); x != leaf_node(i); x = from[x]) ++s.load[via[x]];
  }

  static int congestion(const State& s) {
    std::vector<int> sum(s.node_count, 0), deg(s.node_count, 0);
    for (int id = 0; id < static_cast<int>(s.edges.size()); ++id) {
      for (NodeId x : {s.edges[id].first, s.edges[id].second}) {
        sum[x] += s.load[id];
        ++deg[x];
      }
    }
    int c = 0;
    for (NodeId x = 0; x < s.node_count; ++x) c = std::max(c, deg[x] == 1 ? sum[x] : sum[x] / 2);
    return c;
  }

  void extend(const State& s, int i) {
    ++visited_;
    if (best_ <= floor_) return;
    const int k = static_cast<int>(insertion_.size());
    if (i == k) {
      int c = congestion(s);
      if (c < best_) record(s, c);
      return;
    }
    for (int id = 0; id < static_cast<int>(s.edges.size()); ++id) {
      State next = s;
      const NodeId mid = next.node_count, leaf = next.node_count + 1;
      next.node_count += 2;
      auto [a, b] = next.edges[id];
      next.edges[id] = {a, mid};
      next.edges.push_back({mid, b});
      next.load.push_back(next.load[id]);
      next.edges.push_back({mid, leaf});
      next.load.push_back(0);
      route_all(next, i);
      if (std::max(congestion(next), floor_) >= best_) continue;
      extend(next, i + 1);
      if (best_ <= floor_) return;
    }
  }

  void record(const State& s, int c) {
    best_ = c;
    improved_ = true;
    best_embedding_.node_count = s.node_count;
    best_embedding_.tree_edges = s.edges;
    best_embedding_.leaf_of.assign(g_.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(insertion_.size()); ++i)
      best_embedding_.leaf_of[insertion_[i]] = leaf_node(i);
  }

  const Graph& g_;
  std::vector<Vertex> insertion_;
  std::vector<int> slot_;
  std::vector<std::vector<int>> back_adj_;
  int best_;
  int floor_;
  bool improved_ = false;
  long visited_ = 0;
  LeafEmbedding best_embedding_;
};

}  // namespace detail

/// Minimum vertex congestion over embeddings into leaves of sub-cubic trees.
/// Searches binary trees only; the incumbent starts from the caterpillar of an
/// optimal path ordering, and the search stops as soon as it reaches Δ.
inline CongestionCertificate min_tree_congestion(const Graph& g, const SolverLimits& limits = {}) {
  detail::require_edges(g, "tree congestion");
  auto vertices = non_isolated_vertices(g);
  const int k = static_cast<int>(vertices.size());
  if (k > limits.tree_congestion) throw LimitExceeded("tree congestion", k, limits.tree_congestion);

  auto path = min_path_congestion(g, SolverLimits{limits.tree_congestion, limits.tree_congestion});
  CongestionCertificate cert{path.value,
                             caterpillar_embedding(std::get<LinearOrdering>(path.witness), g),
                             CongestionKind::tree_vertex};
  const int floor = g.max_degree();
  if (k >= 4 && cert.value > floor) {
    std::stable_sort(vertices.begin(), vertices.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    detail::TreeCongestionSearch search(g, vertices, cert.value, floor);
    if (search.run()) {
      cert.value = search.best();
      cert.witness = search.best_embedding();
    }
    cert.search_nodes = search.visited();
  }
  if (vertex_congestion(std::get<LeafEmbedding>(cert.witness), g).value != cert.value)
    throw InternalError("tree congestion witness does not reproduce its value");
  return cert;
}

/// pw(L(G)) - floor(Δ/2) + 1 <= cw(G) <= pw(L(G)).
struct CutwidthSandwich {
  int lower = 0;
  int cutwidth = 0;
  int upper = 0;
  bool holds = false;
};

inline CutwidthSandwich cutwidth_sandwich_check(const Graph& g, const SolverLimits& limits = {}) {
  const int delta = g.max_degree();
  if (delta < 2) throw InvalidInput("inequality requires maximum degree at least 2");
  const int line_pw = min_path_congestion(g, limits).value - 1;
  CutwidthSandwich r;
  r.upper = line_pw;
  r.lower = line_pw - delta / 2 + 1;
  r.cutwidth = cutwidth(g, limits).value;
  r.holds = r.lower <= r.cutwidth && r.cutwidth <= r.upper;
  return r;
}

}  // namespace lgtw
