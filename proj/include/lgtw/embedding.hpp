#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lgtw/decomposition.hpp"
#include "lgtw/error.hpp"
#include "lgtw/graph.hpp"
#include "lgtw/tree.hpp"

namespace lgtw {

/// Injective map from the non-isolated vertices of G into the leaves of a tree of
/// maximum degree 3. leaf_of[v] is -1 exactly for isolated v.
struct LeafEmbedding {
  int node_count = 0;
  std::vector<TreeEdge> tree_edges;
  std::vector<NodeId> leaf_of;
};

inline std::optional<std::string> embedding_defect(const LeafEmbedding& e, const Graph& g) {
  for (auto [a, b] : e.tree_edges)
    if (a < 0 || b < 0 || a >= e.node_count || b >= e.node_count)
      return "tree edge references a missing node";
  if (auto defect = tree_defect(e.node_count, e.tree_edges)) return "not a tree: " + *defect;
  auto adj = adjacency_of(e.node_count, e.tree_edges);
  for (NodeId x = 0; x < e.node_count; ++x)
    if (adj[x].size() > 3) return "node " + std::to_string(x + 1) + " has degree above 3";
  if (static_cast<int>(e.leaf_of.size()) != g.vertex_count())
    return "assignment covers " + std::to_string(e.leaf_of.size()) + " vertices, graph has " +
           std::to_string(g.vertex_count());
  std::vector<int> used(e.node_count, 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    NodeId x = e.leaf_of[v];
    std::string name = "vertex " + std::to_string(v + 1);
    if (g.degree(v) == 0) {
      if (x != -1) return "isolated " + name + " is assigned a node";
      continue;
    }
    if (x < 0 || x >= e.node_count) return name + " is not assigned a node";
    if (adj[x].size() > 1) return name + " sits on node " + std::to_string(x + 1) + ", not a leaf";
    if (used[x]++) return "two vertices share leaf " + std::to_string(x + 1);
  }
  return std::nullopt;
}

struct CongestionProfile {
  int value = 0;
  std::vector<int> per_node;  // number of embedded edge paths through each node
};

/// Paths count at their endpoint leaves as well as at interior nodes.
inline CongestionProfile vertex_congestion(const LeafEmbedding& e, const Graph& g) {
  if (auto defect = embedding_defect(e, g)) throw InvalidInput("invalid embedding: " + *defect);
  RootedTree tree(adjacency_of(e.node_count, e.tree_edges), 0);
  CongestionProfile p{0, std::vector<int>(e.node_count, 0)};
  for (const auto& edge : g.edges())
    for (NodeId x : tree.path(e.leaf_of[edge.u], e.leaf_of[edge.v])) ++p.per_node[x];
  p.value = *std::max_element(p.per_node.begin(), p.per_node.end());
  return p;
}

struct EmbeddingDecomposition {
  TreeDecomposition decomposition;
  BaseNodeAssignment base;
};

/// Bag at node u holds the edges whose embedded path passes through u.
inline EmbeddingDecomposition decomposition_from_embedding(const LeafEmbedding& e, const Graph& g) {
  if (auto defect = embedding_defect(e, g)) throw InvalidInput("invalid embedding: " + *defect);
  RootedTree tree(adjacency_of(e.node_count, e.tree_edges), 0);
  return {{path_bags(tree, g, e.leaf_of), e.tree_edges, Subject::line_graph}, {e.leaf_of}};
}

/// The tree of a normal form is binary, so its base assignment is a leaf embedding.
inline LeafEmbedding embedding_from_normal_form(const NormalForm& nf) {
  return {nf.decomposition.node_count(), nf.decomposition.tree_edges, nf.base.node_of};
}

}  // namespace lgtw
