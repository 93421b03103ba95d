#pragma once

// Brute-force reference implementations. Deliberately naive and independent of the
// library's solvers: everything here enumerates permutations or trees directly.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "lgtw/graph.hpp"

namespace oracle {

using lgtw::Graph;

inline std::vector<std::vector<int>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<int>> a(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

template <class F>
int min_over_permutations(int n, F score) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int best = 1 << 30;
  do best = std::min(best, score(perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline int treewidth(const Graph& g) {
  const int n = g.vertex_count();
  return min_over_permutations(n, [&](const std::vector<int>& order) {
    auto a = adjacency_matrix(g);
    std::vector<int> gone(n, 0);
    int width = 0;
    for (int v : order) {
      std::vector<int> later;
      for (int w = 0; w < n; ++w)
        if (a[v][w] && !gone[w]) later.push_back(w);
      width = std::max(width, static_cast<int>(later.size()));
      for (int x : later)
        for (int y : later)
          if (x != y) a[x][y] = 1;
      gone[v] = 1;
    }
    return width;
  });
}

inline int pathwidth(const Graph& g) {
  const int n = g.vertex_count();
  auto a = adjacency_matrix(g);
  return min_over_permutations(n, [&](const std::vector<int>& order) {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    int best = 0;
    for (int i = 0; i < n; ++i) {
      int boundary = 0;
      for (int j = 0; j <= i; ++j) {
        bool out = false;
        for (int w = 0; w < n; ++w) out |= a[order[j]][w] && pos[w] > i;
        boundary += out;
      }
      best = std::max(best, boundary);
    }
    return best;
  });
}

inline std::vector<int> non_isolated(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) out.push_back(v);
  return out;
}

/// inclusive: count edges with pos(v) <= i <= pos(w); otherwise pos(v) <= i < pos(w).
inline int layout_cost(const Graph& g, bool inclusive) {
  auto verts = non_isolated(g);
  const int k = static_cast<int>(verts.size());
  if (k == 0) return 0;
  return min_over_permutations(k, [&](const std::vector<int>& perm) {
    std::vector<int> pos(g.vertex_count(), -1);
    for (int i = 0; i < k; ++i) pos[verts[perm[i]]] = i;
    int best = 0;
    for (int i = 0; i < k; ++i) {
      int c = 0;
      for (const auto& e : g.edges()) {
        int lo = std::min(pos[e.u], pos[e.v]), hi = std::max(pos[e.u], pos[e.v]);
        c += inclusive ? (lo <= i && i <= hi) : (lo <= i && i < hi);
      }
      best = std::max(best, c);
    }
    return best;
  });
}

inline int path_congestion(const Graph& g) { return layout_cost(g, true); }
inline int cutwidth(const Graph& g) { return layout_cost(g, false); }

/// Minimum vertex congestion over every tree with max degree 3 on at most
/// max_nodes nodes (trees enumerated by Pruefer sequence) and every injective
/// placement of the non-isolated vertices on its leaves.
inline int tree_congestion(const Graph& g, int max_nodes) {
  auto verts = non_isolated(g);
  const int k = static_cast<int>(verts.size());
  int best = 1 << 30;
  for (int n = 2; n <= max_nodes; ++n) {
    std::vector<int> code(std::max(n - 2, 0), 0);
    for (;;) {
      std::vector<int> degree(n, 1);
      for (int c : code) ++degree[c];
      bool ok = std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 3; });
      std::vector<int> leaves;
      for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push_back(v);
      if (ok && static_cast<int>(leaves.size()) >= k) {
        // decode
        std::vector<std::vector<int>> adj(n);
        std::vector<int> d = degree;
        for (int c : code) {
          int leaf = 0;
          while (d[leaf] != 1) ++leaf;
          adj[leaf].push_back(c);
          adj[c].push_back(leaf);
          --d[leaf];
          --d[c];
        }
        int x = -1, y = -1;
        for (int v = 0; v < n; ++v)
          if (d[v] == 1) (x < 0 ? x : y) = v;
        adj[x].push_back(y);
        adj[y].push_back(x);
        std::function<bool(int, int, int, std::vector<int>&)> walk =
            [&](int at, int from, int target, std::vector<int>& path) {
              path.push_back(at);
              if (at == target) return true;
              for (int nb : adj[at])
                if (nb != from && walk(nb, at, target, path)) return true;
              path.pop_back();
              return false;
            };
        // every injective placement: choose ordered k leaves
        std::vector<int> pick(leaves.size(), 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        std::sort(pick.begin(), pick.end());
        do {
          std::vector<int> chosen;
          for (std::size_t i = 0; i < leaves.size(); ++i)
            if (pick[i]) chosen.push_back(leaves[i]);
          do {
            std::vector<int> at(g.vertex_count(), -1);
            for (int i = 0; i < k; ++i) at[verts[i]] = chosen[i];
            std::vector<int> load(n, 0);
            for (const auto& e : g.edges()) {
              std::vector<int> path;
              walk(at[e.u], -1, at[e.v], path);
              for (int p : path) ++load[p];
            }
            best = std::min(best, *std::max_element(load.begin(), load.end()));
          } while (std::next_permutation(chosen.begin(), chosen.end()));
        } while (std::next_permutation(pick.begin(), pick.end()));
      }
      int i = static_cast<int>(code.size()) - 1;
      while (i >= 0 && code[i] == n - 1) code[i--] = 0;
      if (i < 0) break;
      ++code[i];
    }
  }
  return best;
}

}  // namespace oracle
