#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "lgtw/decomposition.hpp"
#include "lgtw/error.hpp"
#include "lgtw/graph.hpp"
#include "lgtw/limits.hpp"
#include "lgtw/ordering_dp.hpp"

namespace lgtw {

/// Elimination ordering (first eliminated first) and the width it achieves.
struct EliminationCertificate {
  std::vector<Vertex> ordering;
  int width = 0;
};

namespace detail {

inline std::vector<int> ordering_positions(const Graph& g, const std::vector<Vertex>& ordering) {
  if (static_cast<int>(ordering.size()) != g.vertex_count())
    throw InvalidInput("elimination ordering must list every vertex once");
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    Vertex v = ordering[i];
    if (v < 0 || v >= g.vertex_count() || pos[v] >= 0)
      throw InvalidInput("elimination ordering must list every vertex once");
    pos[v] = static_cast<int>(i);
  }
  return pos;
}

/// Later-eliminated neighbours of each vertex in the fill-in graph.
inline std::vector<std::vector<Vertex>> fill_in_higher(const Graph& g,
                                                       const std::vector<Vertex>& ordering) {
  auto pos = ordering_positions(g, ordering);
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<std::vector<Vertex>> higher(n);
  for (Vertex v : ordering) {
    for (Vertex w = 0; w < n; ++w)
      if (adj[v][w] && pos[w] > pos[v]) higher[v].push_back(w);
    for (Vertex a : higher[v])
      for (Vertex b : higher[v])
        if (a != b) adj[a][b] = 1;
  }
  return higher;
}

}  // namespace detail

/// Simulates elimination: the width is the largest number of later neighbours a
/// vertex has when it is eliminated.
inline int elimination_width(const Graph& g, const std::vector<Vertex>& ordering) {
  int w = 0;
  for (const auto& h : detail::fill_in_higher(g, ordering)) w = std::max(w, static_cast<int>(h.size()));
  return w;
}

/// Tree decomposition from an elimination ordering: bag(v) = v plus its later
/// fill-in neighbours, parent = earliest of those; component roots are chained.
/// Bags contained in their parent's bag are merged away.
inline TreeDecomposition decomposition_from_elimination(const Graph& g,
                                                        const std::vector<Vertex>& ordering) {
  const int n = g.vertex_count();
  if (n == 0) throw InvalidInput("graph has no vertices");
  auto pos = detail::ordering_positions(g, ordering);
  auto higher = detail::fill_in_higher(g, ordering);
  std::vector<Bag> bags(n);
  std::vector<Vertex> parent(n, -1);
  Vertex previous_root = -1;
  for (Vertex v : ordering) {
    bags[v] = higher[v];
    bags[v].push_back(v);
    canonicalize(bags[v]);
    if (!higher[v].empty())
      parent[v] = *std::min_element(higher[v].begin(), higher[v].end(),
                                    [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
  }
  // chain the component roots in elimination order
  for (Vertex v : ordering)
    if (parent[v] < 0) {
      if (previous_root >= 0) parent[previous_root] = v;
      previous_root = v;
    }

  // Merge v into its parent when bag(v) is a subset; process in elimination order so
  // children are redirected before their parent is examined.
  std::vector<Vertex> rep(n);
  for (Vertex v = 0; v < n; ++v) rep[v] = v;
  std::vector<char> merged(n, 0);
  auto find = [&](Vertex v) {
    while (rep[v] != v) v = rep[v];
    return v;
  };
  for (Vertex v : ordering) {
    if (parent[v] < 0) continue;
    Vertex p = find(parent[v]);
    if (std::includes(bags[p].begin(), bags[p].end(), bags[v].begin(), bags[v].end())) {
      merged[v] = 1;
      rep[v] = p;
    }
  }
  std::vector<NodeId> id(n, -1);
  TreeDecomposition td{{}, {}, Subject::graph};
  for (Vertex v : ordering)
    if (!merged[v]) {
      id[v] = td.node_count();
      td.bags.push_back(bags[v]);
    }
  for (Vertex v : ordering)
    if (!merged[v] && parent[v] >= 0) td.tree_edges.push_back({id[v], id[find(parent[v])]});
  return td;
}

struct TreewidthResult {
  int width = 0;
  EliminationCertificate certificate;
  TreeDecomposition decomposition;
};

namespace detail {

/// Greedy min-fill ordering, used as the initial upper bound.
inline std::vector<Vertex> min_fill_ordering(const Graph& g) {
  const int n = g.vertex_count();
  auto adj = g.adjacency_masks();
  std::uint64_t alive = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<Vertex> order;
  while (alive) {
    Vertex pick = -1;
    long best_fill = std::numeric_limits<long>::max();
    for (std::uint64_t rest = alive; rest; rest &= rest - 1) {
      Vertex v = std::countr_zero(rest);
      std::uint64_t nb = adj[v] & alive;
      long fill = 0;
      for (std::uint64_t r = nb; r; r &= r - 1) {
        Vertex a = std::countr_zero(r);
        fill += std::popcount(nb & ~adj[a] & ~(std::uint64_t{1} << a));
      }
      if (fill < best_fill) {
        best_fill = fill;
        pick = v;
      }
    }
    std::uint64_t nb = adj[pick] & alive;
    for (std::uint64_t r = nb; r; r &= r - 1) {
      Vertex a = std::countr_zero(r);
      adj[a] |= nb & ~(std::uint64_t{1} << a);
    }
    alive &= ~(std::uint64_t{1} << pick);
    order.push_back(pick);
  }
  return order;
}

}  // namespace detail

/// Exact treewidth by the elimination-set recurrence
/// TW(S + v) = min over v of max(TW(S), |Q(S, v)|), where Q(S, v) are the vertices
/// outside S + v reachable from v through S.
inline TreewidthResult exact_treewidth(const Graph& g, const SolverLimits& limits = {}) {
  const int n = g.vertex_count();
  if (n == 0) throw InvalidInput("treewidth of a graph with no vertices");
  if (n > limits.treewidth) throw LimitExceeded("treewidth", n, limits.treewidth);
  if (n > 30) throw LimitExceeded("treewidth", n, 30);

  auto heuristic = detail::min_fill_ordering(g);
  const int upper = elimination_width(g, heuristic);
  std::vector<Vertex> ordering = heuristic;

  auto adj64 = g.adjacency_masks();
  std::vector<std::uint32_t> adj(adj64.begin(), adj64.end());
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  constexpr std::uint8_t kUnset = 0xff;
  std::vector<std::uint8_t> tw(std::size_t{full} + 1, kUnset);
  std::vector<std::uint8_t> choice(std::size_t{full} + 1, 0);
  tw[0] = 0;

  // Only states strictly below the heuristic width are kept.
  for (std::uint32_t s = 0;; ++s) {
    if (tw[s] != kUnset) {
      for (std::uint32_t out = full & ~s; out; out &= out - 1) {
        int v = std::countr_zero(out);
        std::uint32_t vbit = std::uint32_t{1} << v;
        std::uint32_t comp = vbit, frontier = vbit;
        while (frontier) {
          std::uint32_t nb = 0;
          for (std::uint32_t r = frontier; r; r &= r - 1) nb |= adj[std::countr_zero(r)];
          frontier = nb & s & ~comp;
          comp |= frontier;
        }
        std::uint32_t reach = 0;
        for (std::uint32_t r = comp; r; r &= r - 1) reach |= adj[std::countr_zero(r)];
        reach &= ~(s | vbit);
        int value = std::max<int>(tw[s], std::popcount(reach));
        if (value >= upper) continue;
        std::uint32_t t = s | vbit;
        if (tw[t] == kUnset || value < tw[t]) {
          tw[t] = static_cast<std::uint8_t>(value);
          choice[t] = static_cast<std::uint8_t>(v);
        }
      }
    }
    if (s == full) break;
  }

  int width = upper;
  if (tw[full] != kUnset) {
    width = tw[full];
    ordering.assign(n, -1);
    for (std::uint32_t s = full; s; s &= ~(std::uint32_t{1} << choice[s]))
      ordering[std::popcount(s) - 1] = choice[s];
  }
  if (elimination_width(g, ordering) != width)
    throw InternalError("treewidth certificate does not reproduce its width");
  TreewidthResult result{width, {ordering, width}, decomposition_from_elimination(g, ordering)};
  if (!validate(result.decomposition, g) || lgtw::width(result.decomposition) != width)
    throw InternalError("treewidth decomposition is inconsistent with its certificate");
  return result;
}

struct PathwidthResult {
  int width = 0;
  std::vector<Vertex> ordering;  // vertex separation ordering
  PathDecomposition decomposition;
};

/// Path decomposition from a vertex ordering: bag i holds v_i and every earlier
/// vertex with a neighbour at position >= i.
inline PathDecomposition path_decomposition_from_ordering(const Graph& g,
                                                          const std::vector<Vertex>& ordering) {
  auto pos = detail::ordering_positions(g, ordering);
  std::vector<int> reach(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    reach[v] = pos[v];
    for (Vertex w : g.neighbors(v)) reach[v] = std::max(reach[v], pos[w]);
  }
  PathDecomposition pd{{}, Subject::graph};
  for (int i = 0; i < g.vertex_count(); ++i) {
    Bag bag{ordering[i]};
    for (int j = 0; j < i; ++j)
      if (reach[ordering[j]] >= i) bag.push_back(ordering[j]);
    canonicalize(bag);
    pd.bags.push_back(std::move(bag));
  }
  return pd;
}

/// Exact pathwidth as the vertex separation number:
/// f(S) = max(|{u in S : N(u) not inside S}|, min over v in S of f(S - v)).
inline PathwidthResult exact_pathwidth(const Graph& g, const SolverLimits& limits = {}) {
  const int n = g.vertex_count();
  if (n == 0) throw InvalidInput("pathwidth of a graph with no vertices");
  if (n > limits.pathwidth) throw LimitExceeded("pathwidth", n, limits.pathwidth);
  if (n > 30) throw LimitExceeded("pathwidth", n, 30);
  auto adj64 = g.adjacency_masks();
  std::vector<std::uint32_t> adj(adj64.begin(), adj64.end());
  std::vector<Vertex> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[v] = v;
  std::uint32_t cached_set = 0;
  int cached_boundary = 0;
  auto [width, ordering] = detail::best_ordering(labels, [&](std::uint32_t s, int) {
    if (s != cached_set) {
      cached_set = s;
      cached_boundary = 0;
      for (std::uint32_t r = s; r; r &= r - 1)
        if (adj[std::countr_zero(r)] & ~s) ++cached_boundary;
    }
    return cached_boundary;
  });
  PathwidthResult result{width, ordering, path_decomposition_from_ordering(g, ordering)};
  if (!validate(result.decomposition, g) || lgtw::width(result.decomposition) != width)
    throw InternalError("pathwidth decomposition is inconsistent with its width");
  return result;
}

}  // namespace lgtw
