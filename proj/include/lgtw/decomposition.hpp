#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lgtw/error.hpp"
#include "lgtw/graph.hpp"
#include "lgtw/tree.hpp"

namespace lgtw {

/// What the bag elements refer to: vertices of G, or edges of G (vertices of L(G)).
enum class Subject { graph, line_graph };

inline const char* to_string(Subject s) { return s == Subject::graph ? "of-G" : "of-L(G)"; }

using Bag = std::vector<int>;  // sorted, duplicate free

inline void canonicalize(Bag& bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
}

struct TreeDecomposition {
  std::vector<Bag> bags;
  std::vector<TreeEdge> tree_edges;
  Subject subject = Subject::graph;

  int node_count() const { return static_cast<int>(bags.size()); }
};

/// Bags in path order.
struct PathDecomposition {
  std::vector<Bag> bags;
  Subject subject = Subject::graph;

  int node_count() const { return static_cast<int>(bags.size()); }

  TreeDecomposition as_tree() const {
    TreeDecomposition td{bags, {}, subject};
    for (int i = 0; i + 1 < node_count(); ++i) td.tree_edges.push_back({i, i + 1});
    return td;
  }
};

/// Assignment of a base node to every non-isolated vertex; -1 marks isolated ones.
struct BaseNodeAssignment {
  std::vector<NodeId> node_of;
};

enum class Condition {
  none,
  tree_structure,
  element_missing,
  element_disconnected,
  adjacency_uncovered,
  normal_form,
};

struct ValidationReport {
  Condition failed = Condition::none;
  std::string message;
  std::vector<int> witness;  // offending element(s) or node(s), 0-based

  bool ok() const { return failed == Condition::none; }
  explicit operator bool() const { return ok(); }

  static ValidationReport violation(Condition c, std::string msg, std::vector<int> witness = {}) {
    return {c, std::move(msg), std::move(witness)};
  }
};

inline int width(const TreeDecomposition& d) {
  if (d.bags.empty()) throw InvalidInput("width of a decomposition with no bags");
  std::size_t widest = 0;
  for (const auto& b : d.bags) widest = std::max(widest, b.size());
  return static_cast<int>(widest) - 1;
}

inline int width(const PathDecomposition& d) { return width(d.as_tree()); }

/// Reads a decomposition whose tree is a path as a path decomposition, starting
/// from the lower-numbered end. Throws if the tree is not a path.
inline PathDecomposition as_path(const TreeDecomposition& d) {
  const int n = d.node_count();
  if (tree_defect(n, d.tree_edges)) throw InvalidInput("decomposition tree is not a tree");
  auto adj = adjacency_of(n, d.tree_edges);
  NodeId start = -1;
  for (NodeId x = 0; x < n; ++x) {
    if (adj[x].size() > 2) throw InvalidInput("decomposition tree is not a path");
    if (adj[x].size() <= 1 && start < 0) start = x;
  }
  PathDecomposition pd{{}, d.subject};
  for (NodeId prev = -1, at = start; at >= 0;) {
    pd.bags.push_back(d.bags[at]);
    NodeId next = -1;
    for (NodeId y : adj[at])
      if (y != prev) next = y;
    prev = at;
    at = next;
  }
  return pd;
}

namespace detail {

inline std::string element_name(Subject s, const Graph& g, int x) {
  if (s == Subject::graph) return "vertex " + std::to_string(x + 1);
  const Edge& e = g.edge(x);
  return "edge " + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
}

inline std::string adjacency_name(Subject s, const Graph& g, int a, int b) {
  if (s == Subject::graph)
    return "edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1);
  return "incident pair {" + element_name(s, g, a) + ", " + element_name(s, g, b) + "}";
}

}  // namespace detail

/// Checks the three decomposition conditions against g (or line_graph(g) when the
/// decomposition's subject is the line graph). Out-of-range bag elements throw.
inline ValidationReport validate(const TreeDecomposition& d, const Graph& g) {
  const Graph target = d.subject == Subject::graph ? g : line_graph(g);
  const int elements = target.vertex_count();
  const int nodes = d.node_count();

  for (int x = 0; x < nodes; ++x)
    for (int e : d.bags[x])
      if (e < 0 || e >= elements)
        throw InvalidInput("bag " + std::to_string(x + 1) + " holds element " +
                           std::to_string(e + 1) + ", outside 1.." + std::to_string(elements));

  if (auto defect = tree_defect(nodes, d.tree_edges))
    return ValidationReport::violation(Condition::tree_structure, "not a tree: " + *defect);

  std::vector<Bag> bags = d.bags;
  for (auto& b : bags) canonicalize(b);

  std::vector<std::vector<NodeId>> holders(elements);
  for (int x = 0; x < nodes; ++x)
    for (int e : bags[x]) holders[e].push_back(x);

  for (int e = 0; e < elements; ++e)
    if (holders[e].empty())
      return ValidationReport::violation(Condition::element_missing,
                                         detail::element_name(d.subject, g, e) + " is in no bag",
                                         {e});

  // Nodes holding e span a connected subtree iff they induce |holders|-1 tree edges.
  std::vector<int> induced_edges(elements, 0);
  for (auto [a, b] : d.tree_edges) {
    const auto& A = bags[a];
    const auto& B = bags[b];
    std::size_t i = 0, j = 0;
    while (i < A.size() && j < B.size()) {
      if (A[i] < B[j]) ++i;
      else if (B[j] < A[i]) ++j;
      else {
        ++induced_edges[A[i]];
        ++i;
        ++j;
      }
    }
  }
  for (int e = 0; e < elements; ++e)
    if (induced_edges[e] != static_cast<int>(holders[e].size()) - 1)
      return ValidationReport::violation(
          Condition::element_disconnected,
          "bags holding " + detail::element_name(d.subject, g, e) + " are not connected", {e});

  for (const auto& edge : target.edges()) {
    const auto& A = holders[edge.u];
    const auto& B = holders[edge.v];
    std::vector<NodeId> common;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(common));
    if (common.empty())
      return ValidationReport::violation(
          Condition::adjacency_uncovered,
          detail::adjacency_name(d.subject, g, edge.u, edge.v) + " uncovered", {edge.u, edge.v});
  }
  return {};
}

inline ValidationReport validate(const PathDecomposition& d, const Graph& g) {
  return validate(d.as_tree(), g);
}

namespace detail {

inline void require_valid(const TreeDecomposition& d, const Graph& g, Subject expected) {
  if (d.subject != expected)
    throw InvalidInput(std::string("expected a decomposition ") + to_string(expected) +
                       ", got one " + to_string(d.subject));
  if (auto report = validate(d, g); !report)
    throw InvalidInput("invalid input decomposition: " + report.message);
}

inline Bag incident_union(const Graph& g, const Bag& vertices) {
  Bag out;
  for (Vertex v : vertices) {
    auto inc = g.incident_edges(v);
    out.insert(out.end(), inc.begin(), inc.end());
  }
  canonicalize(out);
  return out;
}

}  // namespace detail

/// Replaces every bag by the edges incident to its vertices.
inline TreeDecomposition expand_to_line(const TreeDecomposition& d, const Graph& g) {
  detail::require_valid(d, g, Subject::graph);
  TreeDecomposition out{{}, d.tree_edges, Subject::line_graph};
  for (const auto& bag : d.bags) out.bags.push_back(detail::incident_union(g, bag));
  return out;
}

inline PathDecomposition expand_to_line(const PathDecomposition& d, const Graph& g) {
  detail::require_valid(d.as_tree(), g, Subject::graph);
  PathDecomposition out{{}, Subject::line_graph};
  for (const auto& bag : d.bags) out.bags.push_back(detail::incident_union(g, bag));
  return out;
}

struct BaseNodeRebuild {
  TreeDecomposition decomposition;  // same tree, bags rebuilt from base-node paths
  BaseNodeAssignment base;
};

/// Picks for each non-isolated v a node whose bag holds every edge at v, then
/// keeps edge vw only on the tree path between the two base nodes. Every rebuilt
/// bag is a subset of the original bag at the same node. The base node is an
/// unused leaf whose bag is exactly the edges at v when one exists (so inputs
/// already in normal form keep their base nodes), otherwise the lowest such node.
inline BaseNodeRebuild rebuild_on_base_nodes(const TreeDecomposition& d, const Graph& g) {
  detail::require_valid(d, g, Subject::line_graph);
  std::vector<Bag> bags = d.bags;
  for (auto& b : bags) canonicalize(b);
  auto adj = adjacency_of(d.node_count(), d.tree_edges);
  BaseNodeAssignment base{std::vector<NodeId>(g.vertex_count(), -1)};
  std::vector<char> used(d.node_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto inc = g.incident_edges(v);
    if (inc.empty()) continue;
    NodeId first = -1, leaf = -1;
    for (NodeId x = 0; x < d.node_count(); ++x) {
      if (!std::includes(bags[x].begin(), bags[x].end(), inc.begin(), inc.end())) continue;
      if (first < 0) first = x;
      if (adj[x].size() <= 1 && !used[x] && bags[x].size() == inc.size()) {
        leaf = x;
        break;
      }
    }
    if (first < 0) throw InternalError("no bag holds all edges at vertex " + std::to_string(v + 1));
    base.node_of[v] = leaf >= 0 ? leaf : first;
    used[base.node_of[v]] = 1;
  }
  RootedTree tree(std::move(adj), 0);
  TreeDecomposition out{path_bags(tree, g, base.node_of), d.tree_edges, Subject::line_graph};
  return {std::move(out), std::move(base)};
}

/// Decomposition of L(G) on a binary tree rooted at node 0 whose leaves are
/// exactly the base nodes (one vertex each), with every bag equal to the set of
/// edges whose base-node path crosses it.
struct NormalForm {
  TreeDecomposition decomposition;
  BaseNodeAssignment base;
};

inline ValidationReport check_normal_form(const TreeDecomposition& d, const BaseNodeAssignment& b,
                                          const Graph& g) {
  using detail::element_name;
  auto fail = [](std::string msg, std::vector<int> w = {}) {
    return ValidationReport::violation(Condition::normal_form, std::move(msg), std::move(w));
  };
  if (d.subject != Subject::line_graph) return fail("decomposition is not of the line graph");
  if (g.edge_count() == 0) return fail("graph has no edges");
  if (auto defect = tree_defect(d.node_count(), d.tree_edges)) return fail("not a tree: " + *defect);
  if (static_cast<int>(b.node_of.size()) != g.vertex_count())
    return fail("base assignment has the wrong length");

  RootedTree tree(adjacency_of(d.node_count(), d.tree_edges), 0);
  std::vector<int> is_leaf(d.node_count(), 0);
  if (g.edge_count() == 1) {
    if (d.node_count() != 2) return fail("single-edge normal form must have two nodes");
    is_leaf = {1, 1};
  } else {
    for (NodeId x = 0; x < d.node_count(); ++x) {
      auto kids = tree.children(x).size();
      if (kids != 0 && kids != 2)
        return fail("node " + std::to_string(x + 1) + " has " + std::to_string(kids) + " children",
                    {x});
      is_leaf[x] = kids == 0;
    }
  }
  std::vector<int> hosted(d.node_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    NodeId x = b.node_of[v];
    if (g.degree(v) == 0) {
      if (x != -1) return fail("isolated vertex " + std::to_string(v + 1) + " has a base node", {v});
      continue;
    }
    if (x < 0 || x >= d.node_count())
      return fail("vertex " + std::to_string(v + 1) + " has no base node", {v});
    if (!is_leaf[x]) return fail("base node of vertex " + std::to_string(v + 1) + " is not a leaf", {v});
    if (hosted[x]++) return fail("leaf " + std::to_string(x + 1) + " hosts two vertices", {x});
  }
  for (NodeId x = 0; x < d.node_count(); ++x)
    if (is_leaf[x] && !hosted[x]) return fail("leaf " + std::to_string(x + 1) + " hosts no vertex", {x});

  auto expected = path_bags(tree, g, b.node_of);
  for (NodeId x = 0; x < d.node_count(); ++x) {
    Bag actual = d.bags[x];
    canonicalize(actual);
    if (actual != expected[x])
      return fail("bag " + std::to_string(x + 1) + " differs from the base-node paths through it",
                  {x});
  }
  return {};
}

inline ValidationReport check_normal_form(const NormalForm& nf, const Graph& g) {
  return check_normal_form(nf.decomposition, nf.base, g);
}

/// Rebuilds on base nodes, gives each vertex its own leaf, prunes leaves that
/// host nothing, and binarizes (splitting wide nodes in child-id order,
/// contracting single-child nodes). Width never increases.
inline NormalForm normalize_line_decomposition(const TreeDecomposition& d, const Graph& g) {
  if (g.edge_count() == 0) throw InvalidInput("normal form needs at least one edge");
  auto rebuilt = rebuild_on_base_nodes(d, g);

  if (g.edge_count() == 1) {
    const Edge& e = g.edge(0);
    NormalForm nf{{{{0}, {0}}, {{0, 1}}, Subject::line_graph},
                  {std::vector<NodeId>(g.vertex_count(), -1)}};
    nf.base.node_of[e.u] = 0;
    nf.base.node_of[e.v] = 1;
    return nf;
  }

  // Working forest over original nodes plus one fresh leaf per vertex.
  std::vector<std::set<NodeId>> adj(d.node_count());
  for (auto [a, b] : d.tree_edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<NodeId> leaf_of(g.vertex_count(), -1);
  std::vector<int> is_base(d.node_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    NodeId at = rebuilt.base.node_of[v];
    if (at < 0) continue;
    NodeId leaf = static_cast<NodeId>(adj.size());
    adj.emplace_back();
    is_base.push_back(1);
    adj[leaf].insert(at);
    adj[at].insert(leaf);
    leaf_of[v] = leaf;
  }
  const int total = static_cast<int>(adj.size());
  std::vector<int> alive(total, 1);

  std::vector<NodeId> queue;
  for (NodeId x = 0; x < total; ++x)
    if (!is_base[x] && adj[x].size() <= 1) queue.push_back(x);
  while (!queue.empty()) {
    NodeId x = queue.back();
    queue.pop_back();
    if (!alive[x]) continue;
    alive[x] = 0;
    for (NodeId y : adj[x]) {
      adj[y].erase(x);
      if (!is_base[y] && adj[y].size() <= 1) queue.push_back(y);
    }
    adj[x].clear();
  }

  NodeId root = -1;
  for (NodeId x = 0; x < total && root < 0; ++x)
    if (alive[x] && adj[x].size() >= 2) root = x;
  if (root < 0) throw InternalError("pruned tree has no internal node");

  // Orient away from the root; children kept in id order.
  std::vector<std::vector<NodeId>> children(total);
  std::vector<NodeId> parent(total, -1);
  {
    std::vector<NodeId> stack{root};
    std::vector<int> seen(total, 0);
    seen[root] = 1;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (NodeId y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = x;
          children[x].push_back(y);
          stack.push_back(y);
        }
    }
  }

  // Contract single-child nodes.
  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId x = 0; x < static_cast<NodeId>(children.size()); ++x) {
      if (!alive[x] || children[x].size() != 1) continue;
      NodeId c = children[x][0];
      if (x == root) {
        root = c;
        parent[c] = -1;
      } else {
        NodeId p = parent[x];
        std::replace(children[p].begin(), children[p].end(), x, c);
        parent[c] = p;
      }
      alive[x] = 0;
      children[x].clear();
      changed = true;
    }
  }
  // Split nodes with three or more children: keep the first, move the rest under a new node.
  for (NodeId x = 0; x < static_cast<NodeId>(children.size()); ++x) {
    if (!alive[x] || children[x].size() < 3) continue;
    NodeId y = static_cast<NodeId>(children.size());
    std::vector<NodeId> moved(children[x].begin() + 1, children[x].end());
    children.push_back(moved);
    parent.push_back(x);
    alive.push_back(1);
    for (NodeId c : moved) parent[c] = y;
    children[x] = {children[x][0], y};
  }

  // Renumber breadth-first from the root.
  std::vector<NodeId> renumber(children.size(), -1);
  std::vector<NodeId> order{root};
  renumber[root] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (NodeId c : children[order[i]]) {
      renumber[c] = static_cast<NodeId>(order.size());
      order.push_back(c);
    }

  NormalForm nf;
  nf.decomposition.subject = Subject::line_graph;
  for (NodeId x : order)
    for (NodeId c : children[x]) nf.decomposition.tree_edges.push_back({renumber[x], renumber[c]});
  nf.base.node_of.assign(g.vertex_count(), -1);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (leaf_of[v] >= 0) nf.base.node_of[v] = renumber[leaf_of[v]];
  RootedTree tree(adjacency_of(static_cast<int>(order.size()), nf.decomposition.tree_edges), 0);
  nf.decomposition.bags = path_bags(tree, g, nf.base.node_of);

  if (width(nf.decomposition) > width(d))
    throw InternalError("normalization increased the width");
  return nf;
}

/// Decomposition of G of width at most width(d) + 1 built from a decomposition d
/// of L(G): each edge vw (v < w) puts v on its base-node path except at w's leaf,
/// which gets w; tree edges that separate two or more graph edges are subdivided;
/// finally every child bag receives the parent-side endpoint of the edge it
/// separates. Isolated vertices get singleton bags hung off node 0.
inline TreeDecomposition line_to_graph_decomposition(const TreeDecomposition& d, const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() == 0) {
    if (n == 0) throw InvalidInput("graph has no vertices");
    TreeDecomposition out{{}, {}, Subject::graph};
    for (Vertex v = 0; v < n; ++v) {
      out.bags.push_back({v});
      if (v > 0) out.tree_edges.push_back({v - 1, v});
    }
    return out;
  }
  const int input_width = width(d);
  NormalForm nf = normalize_line_decomposition(d, g);
  const auto& base = nf.base.node_of;

  std::vector<std::set<Vertex>> bags(nf.decomposition.node_count());
  {
    RootedTree tree(adjacency_of(nf.decomposition.node_count(), nf.decomposition.tree_edges), 0);
    for (const auto& e : g.edges()) {
      for (NodeId x : tree.path(base[e.u], base[e.v])) bags[x].insert(x == base[e.v] ? e.v : e.u);
    }
  }
  std::vector<std::set<NodeId>> adj(bags.size());
  for (auto [a, b] : nf.decomposition.tree_edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }

  // An uncovered edge ab, a's bags and b's bags being disjoint subtrees, is
  // separated by the unique tree edge joining them; returns (X, Y, a, b) with a in X.
  struct Separation {
    NodeId x, y;
    Vertex a, b;
  };
  auto separations = [&] {
    std::vector<Separation> out;
    for (const auto& e : g.edges()) {
      bool covered = false;
      for (const auto& bag : bags)
        if (bag.count(e.u) && bag.count(e.v)) {
          covered = true;
          break;
        }
      if (covered) continue;
      bool found = false;
      for (NodeId x = 0; x < static_cast<NodeId>(bags.size()) && !found; ++x) {
        if (!bags[x].count(e.u)) continue;
        for (NodeId y : adj[x])
          if (bags[y].count(e.v)) {
            out.push_back({x, y, e.u, e.v});
            found = true;
            break;
          }
      }
      if (!found) throw InternalError("uncovered edge without a separating tree edge");
    }
    return out;
  };

  for (;;) {
    auto seps = separations();
    std::map<std::pair<NodeId, NodeId>, std::vector<Separation>> by_edge;
    for (const auto& s : seps) by_edge[{std::min(s.x, s.y), std::max(s.x, s.y)}].push_back(s);
    const std::vector<Separation>* crowded = nullptr;
    for (const auto& [key, list] : by_edge)
      if (list.size() >= 2) {
        crowded = &list;
        break;
      }
    if (!crowded) break;
    // Insert X' = X - v + w between X and Y so that X-X' separates vw only.
    const Separation first = crowded->front();
    for (std::size_t i = 1; i < crowded->size(); ++i)
      if ((*crowded)[i].x != first.x || (*crowded)[i].a == first.a)
        throw InternalError("separations on one tree edge do not share their far endpoint");
    NodeId fresh = static_cast<NodeId>(bags.size());
    std::set<Vertex> bag = bags[first.x];
    bag.erase(first.a);
    bag.insert(first.b);
    bags.push_back(std::move(bag));
    adj.emplace_back();
    adj[first.x].erase(first.y);
    adj[first.y].erase(first.x);
    adj[first.x].insert(fresh);
    adj[fresh] = {first.x, first.y};
    adj[first.y].insert(fresh);
  }

  {
    std::vector<std::vector<NodeId>> adj_lists;
    for (const auto& s : adj) adj_lists.emplace_back(s.begin(), s.end());
    RootedTree rooted(std::move(adj_lists), 0);
    for (const auto& s : separations()) {
      if (rooted.parent(s.y) == s.x) bags[s.y].insert(s.a);
      else bags[s.x].insert(s.b);
    }
  }

  TreeDecomposition out{{}, {}, Subject::graph};
  for (const auto& b : bags) out.bags.emplace_back(b.begin(), b.end());
  for (NodeId x = 0; x < static_cast<NodeId>(adj.size()); ++x)
    for (NodeId y : adj[x])
      if (x < y) out.tree_edges.push_back({x, y});
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 0) {
      out.tree_edges.push_back({0, out.node_count()});
      out.bags.push_back({v});
    }

  if (auto report = validate(out, g); !report)
    throw InternalError("line-to-graph transform produced an invalid decomposition: " +
                        report.message);
  if (width(out) > input_width + 1) throw InternalError("line-to-graph transform exceeded width + 1");
  return out;
}

}  // namespace lgtw
