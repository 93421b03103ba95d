#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "lgtw/decomposition.hpp"
#include "lgtw/error.hpp"
#include "lgtw/graph.hpp"
#include "lgtw/rational.hpp"
#include "lgtw/tree.hpp"

namespace lgtw {

/// Closed-form width guaranteed by the balanced subdivision construction for an
/// input decomposition of width k - 1 (tree and path shapes respectively).
inline Rational balanced_tree_closed_form(int k, int max_degree) {
  Rational K(k), D(max_degree);
  return Rational(2, 3) * K * D + Rational(1, 3) * (K - 1) * (K - 1) + Rational(1, 3) * D - 1;
}

inline Rational balanced_path_closed_form(int k, int max_degree) {
  Rational K(k), D(max_degree);
  return Rational(1, 2) * K * D + Rational(1, 2) * (K - 1) * (K - 1) + Rational(1, 2) * D - 1;
}

struct BalancedSubdivision {
  TreeDecomposition decomposition;  // of L(G); for path inputs the tree is the path 0-1-...-N
  BaseNodeAssignment base;          // empty when the construction fell back
  int input_width = 0;
  int width = 0;
  Rational closed_form;
  bool fell_back = false;
  std::string notice;
  int large_vertices = 0;
  int subdivisions = 0;
};

namespace detail {

/// Splits every node of degree above 3 into a chain of copies with the same bag.
inline TreeDecomposition split_to_subcubic(const TreeDecomposition& d) {
  TreeDecomposition out = d;
  for (NodeId x = 0; x < out.node_count(); ++x) {
    for (;;) {
      auto adj = adjacency_of(out.node_count(), out.tree_edges);
      if (adj[x].size() <= 3) break;
      // keep the two lowest neighbours, move the rest under a copy of x
      NodeId copy = out.node_count();
      out.bags.push_back(out.bags[x]);
      std::vector<NodeId> moved(adj[x].begin() + 2, adj[x].end());
      for (auto& [a, b] : out.tree_edges) {
        if (a == x && std::find(moved.begin(), moved.end(), b) != moved.end()) a = copy;
        else if (b == x && std::find(moved.begin(), moved.end(), a) != moved.end()) b = copy;
      }
      out.tree_edges.push_back({x, copy});
    }
  }
  return out;
}

inline BalancedSubdivision balanced_subdivision(const TreeDecomposition& input, const Graph& g,
                                                bool path_shaped) {
  require_valid(input, g, Subject::graph);
  const int k = width(input) + 1;
  const int delta = g.max_degree();
  BalancedSubdivision r;
  r.input_width = k - 1;
  r.closed_form = path_shaped ? balanced_path_closed_form(k, delta) : balanced_tree_closed_form(k, delta);
  if (g.edge_count() == 0) throw InvalidInput("graph has no edges, so L(G) is empty");

  if (delta < k - 1) {
    r.fell_back = true;
    r.notice = "maximum degree " + std::to_string(delta) + " is below the input width " +
               std::to_string(k - 1) + "; used the incident-edge expansion instead";
    r.decomposition = expand_to_line(input, g);
    r.width = width(r.decomposition);
    return r;
  }

  TreeDecomposition t = split_to_subcubic(input);
  for (auto& b : t.bags) canonicalize(b);
  const int nodes = t.node_count();
  auto adj = adjacency_of(nodes, t.tree_edges);
  RootedTree rooted(adj, 0);

  std::vector<std::vector<char>> holds(g.vertex_count(), std::vector<char>(nodes, 0));
  for (NodeId x = 0; x < nodes; ++x)
    for (Vertex v : t.bags[x]) holds[v][x] = 1;

  std::vector<NodeId> base(g.vertex_count(), -1);
  std::map<int, std::vector<Vertex>> chosen;  // tree edge index -> vertices subdividing it

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int deg = g.degree(v);
    if (deg == 0) continue;
    if (deg <= k - 1) {
      for (NodeId x = 0; x < nodes && base[v] < 0; ++x)
        if (holds[v][x]) base[v] = x;
      continue;
    }
    ++r.large_vertices;
    bool subtree_is_path = true;
    for (NodeId x = 0; x < nodes; ++x) {
      if (!holds[v][x]) continue;
      int inside = 0;
      for (NodeId y : adj[x]) inside += holds[v][y];
      if (inside > 2) subtree_is_path = false;
    }
    // neighbours of v seen in bags on the x side of T_v - xy
    auto side = [&](NodeId x, NodeId y) {
      std::vector<char> seen(g.vertex_count(), 0);
      std::vector<NodeId> stack{x};
      std::vector<char> visited(nodes, 0);
      visited[x] = visited[y] = 1;
      int count = 0;
      while (!stack.empty()) {
        NodeId at = stack.back();
        stack.pop_back();
        for (Vertex w : t.bags[at])
          if (w != v && !seen[w] && g.adjacent(v, w)) {
            seen[w] = 1;
            ++count;
          }
        for (NodeId z : adj[at])
          if (!visited[z] && holds[v][z]) {
            visited[z] = 1;
            stack.push_back(z);
          }
      }
      return count;
    };
    int best_edge = -1, best_max = 0;
    for (int id = 0; id < static_cast<int>(t.tree_edges.size()); ++id) {
      auto [a, b] = t.tree_edges[id];
      if (!holds[v][a] || !holds[v][b]) continue;
      int m = std::max(side(a, b), side(b, a));
      if (best_edge < 0 || m < best_max) {
        best_edge = id;
        best_max = m;
      }
    }
    if (best_edge < 0) throw InternalError("large vertex whose bags span no tree edge");
    if (3 * best_max > 2 * deg + (k - 1))
      throw InternalError("no tree edge splits the neighbours of vertex " + std::to_string(v + 1) +
                          " within two thirds");
    if (subtree_is_path && 2 * best_max > deg + (k - 1))
      throw InternalError("no path edge splits the neighbours of vertex " + std::to_string(v + 1) +
                          " within one half");
    chosen[best_edge].push_back(v);
  }

  // Subdivide: walking from the child end toward the parent, vertices in increasing id.
  std::vector<TreeEdge> edges;
  int next = nodes;
  for (int id = 0; id < static_cast<int>(t.tree_edges.size()); ++id) {
    auto [a, b] = t.tree_edges[id];
    auto it = chosen.find(id);
    if (it == chosen.end()) {
      edges.push_back({a, b});
      continue;
    }
    NodeId child = rooted.parent(a) == b ? a : b;
    NodeId parent = child == a ? b : a;
    NodeId prev = child;
    for (Vertex v : it->second) {
      base[v] = next++;
      edges.push_back({prev, base[v]});
      prev = base[v];
      ++r.subdivisions;
    }
    edges.push_back({prev, parent});
  }

  RootedTree subdivided(adjacency_of(next, edges), 0);
  r.decomposition = {path_bags(subdivided, g, base), edges, Subject::line_graph};
  r.base = {base};
  if (path_shaped) {
    // renumber along the path starting at the end reached first from node 0
    PathDecomposition pd = as_path(r.decomposition);
    std::vector<NodeId> order;
    {
      auto padj = adjacency_of(next, edges);
      NodeId start = -1;
      for (NodeId x = 0; x < next && start < 0; ++x)
        if (padj[x].size() <= 1) start = x;
      for (NodeId prev = -1, at = start; at >= 0;) {
        order.push_back(at);
        NodeId nx = -1;
        for (NodeId y : padj[at])
          if (y != prev) nx = y;
        prev = at;
        at = nx;
      }
    }
    std::vector<NodeId> renumber(next);
    for (int i = 0; i < next; ++i) renumber[order[i]] = i;
    for (auto& b : r.base.node_of)
      if (b >= 0) b = renumber[b];
    r.decomposition = pd.as_tree();
  }
  r.width = width(r.decomposition);
  if (auto report = validate(r.decomposition, g); !report)
    throw InternalError("balanced subdivision produced an invalid decomposition: " + report.message);
  if (Rational(r.width) > r.closed_form)
    throw InternalError("balanced subdivision exceeded its closed-form width");
  return r;
}

}  // namespace detail

/// Splits the neighbours of every high-degree vertex evenly by placing its base
/// node on a subdivided tree edge, giving a decomposition of L(G).
inline BalancedSubdivision balanced_subdivision_decomposition(const TreeDecomposition& d,
                                                              const Graph& g) {
  return detail::balanced_subdivision(d, g, false);
}

/// Path input gives path output, with the sharper one-half guarantee.
inline BalancedSubdivision balanced_subdivision_decomposition(const PathDecomposition& d,
                                                              const Graph& g) {
  return detail::balanced_subdivision(d.as_tree(), g, true);
}

/// For a tree, the tree itself with bag(v) = edges at v decomposes L(T) with
/// width Δ - 1.
inline TreeDecomposition tree_line_decomposition(const Graph& t) {
  if (!is_tree(t) || t.edge_count() == 0)
    throw InvalidInput("input is not a tree with at least one edge");
  TreeDecomposition d{{}, {}, Subject::line_graph};
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    auto inc = t.incident_edges(v);
    d.bags.emplace_back(inc.begin(), inc.end());
  }
  for (const auto& e : t.edges()) d.tree_edges.push_back({e.u, e.v});
  return d;
}

}  // namespace lgtw
