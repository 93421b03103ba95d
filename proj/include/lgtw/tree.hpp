#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lgtw/error.hpp"
#include "lgtw/graph.hpp"

namespace lgtw {

using NodeId = int;
using TreeEdge = std::pair<NodeId, NodeId>;

/// Adjacency lists (sorted) for an undirected node set with the given edges.
inline std::vector<std::vector<NodeId>> adjacency_of(int node_count,
                                                     const std::vector<TreeEdge>& edges) {
  std::vector<std::vector<NodeId>> adj(node_count);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= node_count || b >= node_count)
      throw InvalidInput("tree edge " + std::to_string(a + 1) + " " + std::to_string(b + 1) +
                         " references a missing node");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

/// Empty when the structure is a tree, otherwise a description of the defect.
inline std::optional<std::string> tree_defect(int node_count, const std::vector<TreeEdge>& edges) {
  if (node_count == 0) return "no nodes";
  for (auto [a, b] : edges)
    if (a == b) return "self-loop at node " + std::to_string(a + 1);
  if (static_cast<int>(edges.size()) != node_count - 1)
    return std::to_string(edges.size()) + " edges on " + std::to_string(node_count) +
           " nodes cannot form a tree";
  auto adj = adjacency_of(node_count, edges);
  std::vector<int> seen(node_count, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    NodeId x = stack.back();
    stack.pop_back();
    for (NodeId y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != node_count) return "tree is disconnected";
  return std::nullopt;
}

/// A tree rooted at a node, with parent pointers and depths.
class RootedTree {
 public:
  RootedTree(std::vector<std::vector<NodeId>> adjacency, NodeId root)
      : adj_(std::move(adjacency)), parent_(adj_.size(), -1), depth_(adj_.size(), 0), root_(root) {
    order_.reserve(adj_.size());
    order_.push_back(root);
    std::vector<int> seen(adj_.size(), 0);
    seen[root] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      NodeId x = order_[i];
      for (NodeId y : adj_[x])
        if (!seen[y]) {
          seen[y] = 1;
          parent_[y] = x;
          depth_[y] = depth_[x] + 1;
          order_.push_back(y);
        }
    }
  }

  int size() const { return static_cast<int>(adj_.size()); }
  NodeId root() const { return root_; }
  NodeId parent(NodeId x) const { return parent_[x]; }
  int depth(NodeId x) const { return depth_[x]; }
  const std::vector<NodeId>& neighbors(NodeId x) const { return adj_[x]; }
  /// Nodes in breadth-first order from the root.
  const std::vector<NodeId>& bfs_order() const { return order_; }

  std::vector<NodeId> children(NodeId x) const {
    std::vector<NodeId> out;
    for (NodeId y : adj_[x])
      if (y != parent_[x]) out.push_back(y);
    return out;
  }

  /// Nodes on the path from a to b, inclusive, in order.
  std::vector<NodeId> path(NodeId a, NodeId b) const {
    std::vector<NodeId> front, back;
    while (a != b) {
      if (depth_[a] >= depth_[b]) {
        front.push_back(a);
        a = parent_[a];
      } else {
        back.push_back(b);
        b = parent_[b];
      }
    }
    front.push_back(a);
    front.insert(front.end(), back.rbegin(), back.rend());
    return front;
  }

 private:
  std::vector<std::vector<NodeId>> adj_;
  std::vector<NodeId> parent_;
  std::vector<int> depth_;
  std::vector<NodeId> order_;
  NodeId root_;
};

/// For every tree node, the ids of edges vw of g whose path base[v] -- base[w]
/// passes through the node. Vertices with base -1 must be isolated.
inline std::vector<std::vector<EdgeId>> path_bags(const RootedTree& tree, const Graph& g,
                                                  const std::vector<NodeId>& base) {
  std::vector<std::vector<EdgeId>> bags(tree.size());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (base.at(e.u) < 0 || base.at(e.v) < 0)
      throw InvalidInput("edge endpoint without a base node");
    for (NodeId x : tree.path(base[e.u], base[e.v])) bags[x].push_back(id);
  }
  return bags;  // ids pushed in increasing order, so each bag is sorted
}

/// Path-shaped variant: node i holds the edges vw with pos(v) <= i <= pos(w).
inline std::vector<std::vector<EdgeId>> interval_bags(int node_count, const Graph& g,
                                                      const std::vector<int>& position) {
  std::vector<std::vector<EdgeId>> bags(node_count);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    int a = position.at(e.u), b = position.at(e.v);
    if (a < 0 || b < 0) throw InvalidInput("edge endpoint without a position");
    if (a > b) std::swap(a, b);
    for (int i = a; i <= b; ++i) bags.at(i).push_back(id);
  }
  return bags;
}

}  // namespace lgtw
