#pragma once

#include <random>
#include <utility>
#include <vector>

#include "lgtw/enumerate.hpp"
#include "lgtw/graph.hpp"

namespace fixtures {

using lgtw::Edge;
using lgtw::Graph;

inline Graph from_pairs(int n, std::vector<std::pair<int, int>> one_based) {
  std::vector<Edge> e;
  for (auto [a, b] : one_based) e.push_back({a - 1, b - 1});
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int a = 0; a + 1 < n; ++a) e.push_back({a, a + 1});
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a) e.push_back({a, (a + 1) % n});
  return Graph(n, e);
}

/// K_{1,m} with the centre as vertex 0.
inline Graph star(int m) {
  std::vector<Edge> e;
  for (int a = 1; a <= m; ++a) e.push_back({0, a});
  return Graph(m + 1, e);
}

inline Graph complete_bipartite(int p, int q) {
  std::vector<Edge> e;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) e.push_back({a, p + b});
  return Graph(p + q, e);
}

/// Connected graphs on 2..5 vertices (one per isomorphism class) plus random
/// graphs with at most 8 vertices and 10 edges.
inline std::vector<Graph> small_suite(int random_count = 100, unsigned seed = 2024) {
  std::vector<Graph> out;
  for (int n = 2; n <= 5; ++n)
    for (auto& g : lgtw::connected_graphs(n)) out.push_back(std::move(g));
  std::mt19937 rng(seed);
  for (int i = 0; i < random_count; ++i) {
    int n = std::uniform_int_distribution<int>(2, 8)(rng);
    int m = std::uniform_int_distribution<int>(1, std::min(10, n * (n - 1) / 2))(rng);
    out.push_back(lgtw::random_graph(rng, n, m));
  }
  return out;
}

}  // namespace fixtures
