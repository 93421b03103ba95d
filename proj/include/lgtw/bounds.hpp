#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lgtw/congestion.hpp"
#include "lgtw/constructions.hpp"
#include "lgtw/decomposition.hpp"
#include "lgtw/error.hpp"
#include "lgtw/exact.hpp"
#include "lgtw/graph.hpp"
#include "lgtw/limits.hpp"
#include "lgtw/rational.hpp"

namespace lgtw {

enum class BoundKind { lower, upper };
enum class Target { tw_line, pw_line };

inline const char* to_string(BoundKind k) { return k == BoundKind::lower ? "lower" : "upper"; }
inline const char* to_string(Target t) { return t == Target::tw_line ? "tw(L)" : "pw(L)"; }

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::lower;
  Target target = Target::tw_line;
  int value = 0;
  std::optional<Rational> raw;  // exact real-valued bound before rounding, when there is one
};

struct AverageDegreeBound {
  Rational average_degree;  // of the subgraph the bound was evaluated on
  Rational raw;             // d^2/8 + 3d/4 - 2; tw(L(G)) exceeds it strictly
  int value = 0;            // smallest integer above raw, clamped at 0
  bool used_dense_subgraph = false;
};

/// Evaluated on the densest (minimal) induced subgraph when it can be found within
/// the limit, else on the densest component; the bound grows with d, so both are valid.
inline AverageDegreeBound avg_degree_lower_bound(const Graph& g,
                                                 int limit = kDefaultDenseSubgraphLimit) {
  if (g.vertex_count() == 0) throw InvalidInput("undefined statistics: graph has no vertices");
  AverageDegreeBound b;
  if (g.vertex_count() <= limit) {
    auto h = minimal_dense_subgraph(g, limit);
    b.average_degree = degree_stats(h.graph).avg_degree;
    b.used_dense_subgraph = true;
  } else {
    // densest component: the bound is monotone in d and components are independent
    for (const auto& comp : connected_components(g)) {
      auto d = degree_stats(induced_subgraph(g, comp).graph).avg_degree;
      if (d > b.average_degree) b.average_degree = d;
    }
  }
  const Rational& d = b.average_degree;
  b.raw = d * d / 8 + Rational(3, 4) * d - 2;
  b.value = std::max<std::int64_t>(0, floor(b.raw) + 1);
  if (g.edge_count() == 0) b.value = 0;
  return b;
}

/// δ even: δ²/4 + δ - 1; δ odd: δ²/4 + δ - 5/4; δ < 2: 0. Taken per component.
inline int min_degree_lower_bound(const Graph& g) {
  if (g.vertex_count() == 0) throw InvalidInput("undefined statistics: graph has no vertices");
  int best = 0;
  for (const auto& comp : connected_components(g)) {
    int delta = g.degree(comp.front());
    for (Vertex v : comp) delta = std::min(delta, g.degree(v));
    if (delta < 2) continue;
    int value = delta % 2 == 0 ? delta * delta / 4 + delta - 1 : (delta * delta - 5) / 4 + delta;
    best = std::max(best, value);
  }
  return best;
}

/// Bounds that follow from tw(G), pw(G) and Δ(G) alone.
inline std::vector<BoundEntry> elementary_bounds(const Graph& g, int tw_g, int pw_g) {
  const int delta = g.max_degree();
  auto clamp = [](std::int64_t x) { return static_cast<int>(std::max<std::int64_t>(0, x)); };
  Rational half = Rational(tw_g + 1, 2) - 1;
  return {
      {"half-graph-tw", BoundKind::lower, Target::tw_line, clamp(ceil(half)), half},
      {"max-degree-clique", BoundKind::lower, Target::tw_line, clamp(delta - 1), {}},
      {"graph-tw-minus-one", BoundKind::lower, Target::tw_line, clamp(tw_g - 1), {}},
      {"incident-expansion-tree", BoundKind::upper, Target::tw_line, clamp((tw_g + 1) * delta - 1), {}},
      {"incident-expansion-path", BoundKind::upper, Target::pw_line, clamp((pw_g + 1) * delta - 1), {}},
  };
}

struct BoundsOptions {
  bool compute_exact = false;
  SolverLimits limits;
};

struct BoundsReport {
  std::vector<BoundEntry> entries;
  std::optional<int> exact_tw_line;
  std::optional<int> exact_pw_line;
  std::vector<std::string> notes;

  const BoundEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }
  std::optional<int> best(BoundKind kind, Target target) const {
    std::optional<int> out;
    for (const auto& e : entries)
      if (e.kind == kind && e.target == target)
        out = !out ? e.value : kind == BoundKind::lower ? std::max(*out, e.value) : std::min(*out, e.value);
    return out;
  }
};

namespace detail {

/// tw(L) <= pw(L), so tw(L) lower bounds also bound pw(L) and pw(L) upper bounds
/// also bound tw(L).
inline void check_report(const BoundsReport& r) {
  for (const auto& lo : r.entries) {
    if (lo.kind != BoundKind::lower) continue;
    for (const auto& up : r.entries) {
      if (up.kind != BoundKind::upper) continue;
      bool comparable = lo.target == up.target || lo.target == Target::tw_line;
      if (comparable && lo.value > up.value)
        throw InternalError("bound " + lo.name + " = " + std::to_string(lo.value) + " exceeds " +
                            up.name + " = " + std::to_string(up.value));
    }
    auto exact = lo.target == Target::tw_line ? r.exact_tw_line : r.exact_pw_line;
    if (exact && lo.value > *exact)
      throw InternalError("lower bound " + lo.name + " exceeds the exact value");
  }
  for (const auto& up : r.entries) {
    if (up.kind != BoundKind::upper) continue;
    auto exact = up.target == Target::tw_line ? r.exact_tw_line : r.exact_pw_line;
    if (exact && up.value < *exact)
      throw InternalError("upper bound " + up.name + " is below the exact value");
  }
}

}  // namespace detail

/// Every bound on tw(L(G)) and pw(L(G)) this library knows, plus exact values when
/// requested and within limits.
inline BoundsReport bounds_report(const Graph& g, const BoundsOptions& options = {}) {
  if (g.vertex_count() == 0) throw InvalidInput("undefined statistics: graph has no vertices");
  BoundsReport r;
  const auto& limits = options.limits;

  if (g.edge_count() == 0) {
    for (const char* name : {"avg-degree", "min-degree", "half-graph-tw", "max-degree-clique",
                             "graph-tw-minus-one"})
      r.entries.push_back({name, BoundKind::lower, Target::tw_line, 0, {}});
    r.notes.push_back("edgeless graph: L(G) has no vertices");
    return r;
  }

  auto avg = avg_degree_lower_bound(g, limits.dense_subgraph);
  r.entries.push_back({"avg-degree", BoundKind::lower, Target::tw_line, avg.value, avg.raw});
  if (!avg.used_dense_subgraph)
    r.notes.push_back("avg-degree evaluated per component: densest subgraph search exceeds the limit of " +
                      std::to_string(limits.dense_subgraph));
  r.entries.push_back({"min-degree", BoundKind::lower, Target::tw_line, min_degree_lower_bound(g), {}});

  auto tw = exact_treewidth(g, limits);
  auto pw = exact_pathwidth(g, limits);
  for (auto& e : elementary_bounds(g, tw.width, pw.width)) r.entries.push_back(std::move(e));

  const int delta = g.max_degree();
  auto tree_cf = balanced_tree_closed_form(tw.width + 1, delta);
  auto path_cf = balanced_path_closed_form(pw.width + 1, delta);
  r.entries.push_back({"balanced-subdivision-tree", BoundKind::upper, Target::tw_line,
                       static_cast<int>(floor(tree_cf)), tree_cf});
  r.entries.push_back({"balanced-subdivision-path", BoundKind::upper, Target::pw_line,
                       static_cast<int>(floor(path_cf)), path_cf});
  auto built_tree = balanced_subdivision_decomposition(tw.decomposition, g);
  auto built_path = balanced_subdivision_decomposition(pw.decomposition, g);
  r.entries.push_back({"balanced-subdivision-tree-built", BoundKind::upper, Target::tw_line,
                       built_tree.width, {}});
  r.entries.push_back({"balanced-subdivision-path-built", BoundKind::upper, Target::pw_line,
                       built_path.width, {}});
  if (built_tree.fell_back) r.notes.push_back("balanced-subdivision-tree-built: " + built_tree.notice);
  if (built_path.fell_back) r.notes.push_back("balanced-subdivision-path-built: " + built_path.notice);

  const int expansion = (tw.width + 1) * delta - 1;
  const int balanced = static_cast<int>(floor(tree_cf));
  r.notes.push_back(std::string("smaller closed-form upper on tw(L): ") +
                    (expansion < balanced   ? "incident-expansion-tree"
                     : balanced < expansion ? "balanced-subdivision-tree"
                                            : "tie"));
  Rational conjectured = Rational(tw.width + 1, 2) * delta - 1;
  r.notes.push_back("conjectured upper (tw(G)+1)*Delta/2 - 1 = " + to_string(conjectured) +
                    " (comparison only)");

  auto non_isolated = g.non_isolated_count();
  if (delta >= 2 && non_isolated <= limits.path_dp) {
    int cw = cutwidth(g, limits).value;
    r.entries.push_back({"cutwidth-lower", BoundKind::lower, Target::pw_line, cw, {}});
    r.entries.push_back({"cutwidth-upper", BoundKind::upper, Target::pw_line, cw + delta / 2 - 1, {}});
  }

  if (options.compute_exact) {
    if (g.edge_count() <= limits.treewidth)
      r.exact_tw_line = exact_treewidth(line_graph(g), limits).width;
    else if (non_isolated <= limits.tree_congestion)
      r.exact_tw_line = min_tree_congestion(g, limits).value - 1;
    else
      r.notes.push_back("exact tw(L) skipped: " + std::to_string(g.edge_count()) +
                        " line-graph vertices exceed the limit of " + std::to_string(limits.treewidth));
    if (non_isolated <= limits.path_dp)
      r.exact_pw_line = min_path_congestion(g, limits).value - 1;
    else
      r.notes.push_back("exact pw(L) skipped: " + std::to_string(non_isolated) +
                        " vertices exceed the limit of " + std::to_string(limits.path_dp));
  }
  detail::check_report(r);
  return r;
}

inline void write_report(std::ostream& out, const BoundsReport& r) {
  for (const auto& e : r.entries)
    out << "bound " << e.name << ' ' << to_string(e.kind) << ' ' << to_string(e.target) << ' '
        << e.value << '\n';
  for (const auto& e : r.entries)
    if (e.raw) out << "raw " << e.name << ' ' << to_string(*e.raw) << '\n';
  if (r.exact_tw_line) out << "exact tw(L) " << *r.exact_tw_line << '\n';
  if (r.exact_pw_line) out << "exact pw(L) " << *r.exact_pw_line << '\n';
  for (const auto& n : r.notes) out << "note " << n << '\n';
}

}  // namespace lgtw
