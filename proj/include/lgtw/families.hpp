#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lgtw/bounds.hpp"
#include "lgtw/congestion.hpp"
#include "lgtw/decomposition.hpp"
#include "lgtw/error.hpp"
#include "lgtw/exact.hpp"
#include "lgtw/graph.hpp"
#include "lgtw/limits.hpp"
#include "lgtw/rational.hpp"
#include "lgtw/tree.hpp"

namespace lgtw {

enum class Family { complete, complete_bipartite, path_power, cycle_power, cycle_power_matched, grid_cliques };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete-bipartite";
    case Family::path_power: return "path-power";
    case Family::cycle_power: return "cycle-power";
    case Family::cycle_power_matched: return "cycle-power-matched";
    case Family::grid_cliques: return "grid-cliques";
  }
  return "?";
}

inline std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::complete, Family::complete_bipartite, Family::path_power, Family::cycle_power,
                   Family::cycle_power_matched, Family::grid_cliques})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

inline int parameter_count(Family f) { return f == Family::complete ? 1 : 2; }

/// complete n; complete-bipartite p q; the rest n k.
struct FamilySpec {
  Family family = Family::complete;
  std::vector<int> params;

  int n() const { return params.at(0); }
  int k() const { return params.at(1); }
};

inline std::string to_string(const FamilySpec& s) {
  std::string out = to_string(s.family);
  for (int p : s.params) out += ' ' + std::to_string(p);
  return out;
}

/// Throws InvalidInput naming the violated constraint.
inline void check_spec(const FamilySpec& s) {
  const std::string name = to_string(s.family);
  if (static_cast<int>(s.params.size()) != parameter_count(s.family))
    throw InvalidInput(name + " takes " + std::to_string(parameter_count(s.family)) + " parameter(s)");
  auto require = [&](bool ok, const char* constraint) {
    if (!ok) throw InvalidInput(name + " requires " + constraint);
  };
  switch (s.family) {
    case Family::complete: require(s.n() >= 1, "n >= 1"); break;
    case Family::complete_bipartite:
      require(s.params[1] >= 1, "q >= 1");
      require(s.params[0] >= s.params[1], "p >= q");
      break;
    case Family::path_power:
    case Family::cycle_power:
    case Family::cycle_power_matched:
      require(s.k() >= 1, "k >= 1");
      require(s.n() > 2 * s.k(), "n > 2k");
      break;
    case Family::grid_cliques:
      require(s.n() >= 3, "n >= 3");
      require(s.k() >= 4, "k >= 4");
      break;
  }
}

namespace detail {

inline int grid_degree(int n, int r, int c) {
  return (r > 0) + (r + 1 < n) + (c > 0) + (c + 1 < n);
}

/// Grid vertices first (row-major); then, grid vertex by grid vertex, its
/// k - deg(v) cliques of order k + 1, each listed attachment vertex first.
/// owner[w] is the grid vertex whose part A_v contains w.
inline Graph grid_cliques(int n, int k, std::vector<int>* owner) {
  std::vector<Edge> edges;
  std::vector<int> own;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int v = r * n + c;
      own.push_back(v);
      if (c + 1 < n) edges.push_back({v, v + 1});
      if (r + 1 < n) edges.push_back({v, v + n});
    }
  int next = n * n;
  for (int v = 0; v < n * n; ++v) {
    int cliques = k - grid_degree(n, v / n, v % n);
    for (int c = 0; c < cliques; ++c) {
      int first = next;
      next += k + 1;
      for (int a = first; a < next; ++a) {
        own.push_back(v);
        for (int b = a + 1; b < next; ++b) edges.push_back({a, b});
      }
      edges.push_back({v, first});
    }
  }
  if (owner) *owner = std::move(own);
  return Graph(next, std::move(edges));
}

}  // namespace detail

inline Graph generate(const FamilySpec& s) {
  check_spec(s);
  std::vector<Edge> edges;
  switch (s.family) {
    case Family::complete: {
      for (int a = 0; a < s.n(); ++a)
        for (int b = a + 1; b < s.n(); ++b) edges.push_back({a, b});
      return Graph(s.n(), edges);
    }
    case Family::complete_bipartite: {
      const int p = s.params[0], q = s.params[1];
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b) edges.push_back({a, p + b});
      return Graph(p + q, edges);
    }
    case Family::path_power: {
      for (int a = 0; a < s.n(); ++a)
        for (int d = 1; d <= s.k() && a + d < s.n(); ++d) edges.push_back({a, a + d});
      return Graph(s.n(), edges);
    }
    case Family::cycle_power:
    case Family::cycle_power_matched: {
      const int n = s.n(), k = s.k();
      for (int a = 0; a < n; ++a)
        for (int d = 1; d <= k; ++d) edges.push_back({a, (a + d) % n});
      if (s.family == Family::cycle_power_matched) {
        // X_1 = {i (n-k+i) : 1 <= i <= k}; for even n also X_2 = {(k+1)(k+2), ..., (n-k-1)(n-k)}
        std::vector<Edge> removed;
        for (int i = 0; i < k; ++i) removed.push_back({i, n - k + i});
        if (n % 2 == 0)
          for (int a = k; a + 1 < n - k; a += 2) removed.push_back({a, a + 1});
        auto same = [](Edge a, Edge b) {
          return std::minmax(a.u, a.v) == std::minmax(b.u, b.v);
        };
        std::erase_if(edges, [&](Edge e) {
          return std::any_of(removed.begin(), removed.end(), [&](Edge r) { return same(e, r); });
        });
      }
      return Graph(n, edges);
    }
    case Family::grid_cliques: return detail::grid_cliques(s.n(), s.k(), nullptr);
  }
  throw InternalError("unhandled family");
}

/// The comment line written into generated .gr files.
inline std::string family_comment(const FamilySpec& s) { return "family " + to_string(s); }

/// Reads a spec back from a "family ..." comment.
inline std::optional<FamilySpec> spec_from_comment(const std::string& comment) {
  std::istringstream in(comment);
  std::string word, name;
  if (!(in >> word >> name) || word != "family") return std::nullopt;
  auto f = family_from_name(name);
  if (!f) return std::nullopt;
  FamilySpec s{*f, {}};
  for (int x; in >> x;) s.params.push_back(x);
  return s;
}

/// Finds parameters for which the family generates exactly g, if any.
inline std::optional<FamilySpec> recognize(const Graph& g, Family f) {
  const int n = g.vertex_count();
  std::vector<FamilySpec> candidates;
  switch (f) {
    case Family::complete: candidates.push_back({f, {n}}); break;
    case Family::complete_bipartite:
      for (int q = 1; 2 * q <= n; ++q) candidates.push_back({f, {n - q, q}});
      break;
    case Family::path_power:
    case Family::cycle_power:
    case Family::cycle_power_matched:
      for (int k = 1; 2 * k < n; ++k) candidates.push_back({f, {n, k}});
      break;
    case Family::grid_cliques:
      for (int side = 3; side * side <= n; ++side)
        for (int k = 4; side * side + 4 * (k - 2) * (k + 1) <= n; ++k) candidates.push_back({f, {side, k}});
      break;
  }
  for (const auto& s : candidates) {
    try {
      if (generate(s) == g) return s;
    } catch (const InvalidInput&) {
    }
  }
  return std::nullopt;
}

struct SharpEmbedding {
  PathDecomposition decomposition;        // of L(G)
  std::optional<LinearOrdering> ordering;  // when every vertex has its own node
  int width = 0;
  Rational closed_form;
  bool closed_form_is_exact = true;  // false: closed_form is only an upper bound
};

/// Stated closed form for the sharp construction of each supported family.
inline Rational sharp_closed_form(const FamilySpec& s) {
  if (s.family == Family::complete || s.family == Family::complete_bipartite)
    throw InvalidInput(std::string("no sharp construction for family ") + to_string(s.family));
  const Rational k(s.k());
  switch (s.family) {
    case Family::path_power: return k * k / 2 + Rational(3, 2) * k - 1;
    case Family::cycle_power: return k * k + 2 * k - 1;
    case Family::cycle_power_matched: return k * k + k - (s.n() % 2 == 0 ? 2 : 1);
    case Family::grid_cliques:
      return Rational(4 * s.n() + 4 + (s.k() - 2) * (s.k() * (s.k() + 1) / 2 + 1) - 1);
    default: throw InternalError("unhandled family");
  }
}

/// Path decomposition of L(G) with base nodes placed along a path: vertex i on
/// node i for the powers, and the whole part A_v on node v for grid-cliques.
inline SharpEmbedding sharp_embedding(const FamilySpec& s) {
  SharpEmbedding r;
  r.closed_form = sharp_closed_form(s);
  check_spec(s);
  Graph g;
  std::vector<int> position;
  int nodes = 0;
  if (s.family == Family::grid_cliques) {
    g = detail::grid_cliques(s.n(), s.k(), &position);
    nodes = s.n() * s.n();
    r.closed_form_is_exact = false;
  } else {
    g = generate(s);
    nodes = g.vertex_count();
    position.resize(nodes);
    LinearOrdering o;
    for (int i = 0; i < nodes; ++i) {
      position[i] = i;
      o.order.push_back(i);
    }
    r.ordering = o;
  }
  r.decomposition = {interval_bags(nodes, g, position), Subject::line_graph};
  r.width = width(r.decomposition);
  if (auto report = validate(r.decomposition, g); !report)
    throw InternalError("sharp construction is not a decomposition: " + report.message);
  return r;
}

struct BipartiteCheck {
  Rational bound;  // pq/2 - 1
  int exact = 0;   // tw(L(K_{p,q}))
  bool holds = false;
};

inline BipartiteCheck bipartite_lower_check(int p, int q, const SolverLimits& limits = {}) {
  Graph g = generate({Family::complete_bipartite, {p, q}});
  if (p * q > limits.treewidth) throw LimitExceeded("treewidth", p * q, limits.treewidth);
  BipartiteCheck c;
  c.bound = Rational(p * q, 2) - 1;
  c.exact = exact_treewidth(line_graph(g), limits).width;
  c.holds = Rational(c.exact) >= c.bound;
  return c;
}

}  // namespace lgtw
