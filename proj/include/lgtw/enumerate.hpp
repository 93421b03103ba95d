#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "lgtw/error.hpp"
#include "lgtw/graph.hpp"

namespace lgtw {

namespace detail {

/// Smallest upper-triangle adjacency bit string over all relabellings.
inline std::uint64_t canonical_code(int n, const std::vector<Edge>& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  auto bit = [n](int a, int b) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a + 1) / 2 + (b - a - 1);
  };
  do {
    std::uint64_t code = 0;
    for (const auto& e : edges) code |= std::uint64_t{1} << bit(perm[e.u], perm[e.v]);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// One representative per isomorphism class of connected graphs on n vertices.
inline std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 7) throw InvalidInput("connected graph enumeration supports 1..7 vertices");
  std::vector<Edge> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.push_back({a, b});
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (std::popcount(mask) < n - 1) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back(slots[i]);
    Graph g(n, edges);
    if (!is_connected(g)) continue;
    if (seen.insert(detail::canonical_code(n, edges)).second) out.push_back(std::move(g));
  }
  return out;
}

/// Uniform choice of m distinct edges on n vertices.
template <class Rng>
Graph random_graph(Rng& rng, int n, int m) {
  std::vector<Edge> slots;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) slots.push_back({a, b});
  if (m < 0 || m > static_cast<int>(slots.size())) throw InvalidInput("edge count out of range");
  std::shuffle(slots.begin(), slots.end(), rng);
  slots.resize(m);
  return Graph(n, slots);
}

/// Uniform labelled tree on n vertices via a random Pruefer sequence.
template <class Rng>
Graph random_tree(Rng& rng, int n) {
  if (n < 1) throw InvalidInput("a tree needs at least one vertex");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2), degree(n, 1);
  for (int& c : code) {
    c = pick(rng);
    ++degree[c];
  }
  std::vector<Edge> edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, c});
    if (--degree[c] == 1) leaves.insert(c);
  }
  edges.push_back({*leaves.begin(), *std::next(leaves.begin())});
  return Graph(n, edges);
}

}  // namespace lgtw
