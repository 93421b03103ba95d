#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lgtw/error.hpp"
#include "lgtw/rational.hpp"

// Exact grid searches for the three small optimisation problems behind the
// degree lower bounds and the bipartite lower bound. Everything is rational;
// "tolerance" only ever means grid spacing.

namespace lgtw {

struct GridSearchResult {
  bool feasible = true;
  Rational extremum;
  std::vector<std::string> coordinate_names;
  std::vector<Rational> point;
  int resolution = 0;
  Rational step;
  Rational closed_form;
  Rational gap;  // |extremum - closed_form|
  long feasible_points = 0;
  std::string notice;
};

enum class Parity { even, odd };
enum class SearchMode { fast, full };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }
inline const char* to_string(SearchMode m) { return m == SearchMode::fast ? "fast" : "full"; }

inline Rational sum_quadratic_closed_form(const Rational& s) {
  return Rational(1, 4) + Rational(3, 2) * s - 2 * s * s;
}

inline Rational cross_quadratic_closed_form(const Rational& s, Parity parity) {
  return parity == Parity::even ? Rational(1, 4) + s : Rational(1, 4) + s - s * s / 4;
}

namespace detail {

/// s + (1/2 - s) i / r for i = 0..r, plus the extra points that lie in [s, 1/2].
inline std::vector<Rational> axis_grid(const Rational& s, int resolution, std::vector<Rational> extra) {
  std::set<Rational> points;
  const Rational half(1, 2);
  for (int i = 0; i <= resolution; ++i) points.insert(s + (half - s) * Rational(i, resolution));
  for (const auto& x : extra)
    if (s <= x && x <= half) points.insert(x);
  return {points.begin(), points.end()};
}

/// Minimises a symmetric function over alpha >= beta on the grid; ties go to the
/// lexicographically smallest (alpha, beta).
template <class F, class Feasible>
void minimise_symmetric(GridSearchResult& r, const std::vector<Rational>& grid, F f, Feasible ok) {
  bool found = false;
  for (const auto& a : grid)
    for (const auto& b : grid) {
      if (b > a || !ok(a, b)) continue;
      ++r.feasible_points;
      Rational v = f(a, b);
      if (!found || v < r.extremum) {
        found = true;
        r.extremum = v;
        r.point = {a, b};
      }
    }
  r.feasible = found;
  if (found) r.gap = r.extremum >= r.closed_form ? r.extremum - r.closed_form : r.closed_form - r.extremum;
}

inline void require_resolution(int resolution, int minimum) {
  if (resolution < minimum)
    throw InvalidInput("resolution must be at least " + std::to_string(minimum));
}

}  // namespace detail

/// min (1+s)(a+b) - a^2 - b^2 over s <= a, b <= 1/2, a + b >= 1/2 (the closure of
/// the strict region, so the infimum is attained). The corner (1/2 - s, s) is on
/// the grid whenever it is feasible, which needs s <= 1/4.
inline GridSearchResult search_sum_quadratic_minimum(const Rational& s, int resolution) {
  if (s <= 0 || s > Rational(1, 2)) throw InvalidInput("s must lie in (0, 1/2]");
  detail::require_resolution(resolution, 1);
  const Rational half(1, 2);
  GridSearchResult r;
  r.coordinate_names = {"alpha", "beta"};
  r.resolution = resolution;
  r.step = (half - s) / resolution;
  r.closed_form = sum_quadratic_closed_form(s);
  auto grid = detail::axis_grid(s, resolution, {half - s, s, half});
  detail::minimise_symmetric(
      r, grid, [&](const Rational& a, const Rational& b) { return (1 + s) * (a + b) - a * a - b * b; },
      [&](const Rational& a, const Rational& b) { return a + b >= half; });
  if (half - s < s)
    r.notice = "corner (1/2 - s, s) is outside the region for s > 1/4; minimum is 2s = " + to_string(2 * s);
  return r;
}

/// min (1+s)(a+b) - a^2 - b^2 - ab over s <= a, b <= 1/2 and a + b >= 1/2 + s
/// (even) or 1/2 + s/2 (odd). Corners (1/2,1/2), (1/2,s), (1/2 - s/2, s) are
/// forced onto the grid when feasible.
inline GridSearchResult search_cross_quadratic_minimum(const Rational& s, Parity parity, int resolution) {
  if (s <= 0) throw InvalidInput("s must be positive");
  detail::require_resolution(resolution, 1);
  const Rational half(1, 2);
  GridSearchResult r;
  r.coordinate_names = {"alpha", "beta"};
  r.resolution = resolution;
  r.closed_form = cross_quadratic_closed_form(s, parity);
  if (s > half) {
    r.feasible = false;
    r.notice = "region is empty: s = " + to_string(s) + " exceeds 1/2";
    return r;
  }
  r.step = (half - s) / resolution;
  const Rational floor_sum = parity == Parity::even ? half + s : half + s / 2;
  auto grid = detail::axis_grid(s, resolution, {half, s, half - s / 2});
  detail::minimise_symmetric(
      r, grid,
      [&](const Rational& a, const Rational& b) { return (1 + s) * (a + b) - a * a - b * b - a * b; },
      [&](const Rational& a, const Rational& b) { return a + b >= floor_sum; });
  if (!r.feasible) r.notice = "no grid point satisfies the sum constraint";
  else if (parity == Parity::odd && half - s / 2 < s)
    r.notice = "corner (1/2 - s/2, s) is outside the region for s > 1/3";
  return r;
}

namespace detail {

/// Largest alpha_1 + alpha_2 + alpha_3 with 0 <= alpha_i <= p_i under the three
/// balance constraints. Lowering z only raises the objective, so alpha = p unless
/// one p_i exceeds the other two together; then that alpha_i is projected down
/// to their sum.
template <class T>
std::array<T, 3> balanced_alphas(const std::array<T, 3>& p) {
  std::array<T, 3> a = p;
  for (int i = 0; i < 3; ++i) {
    T others = p[(i + 1) % 3] + p[(i + 2) % 3];
    if (p[i] > others) a[i] = others;
  }
  return a;
}

template <class T>
bool balanced(const std::array<T, 3>& a) {
  for (int i = 0; i < 3; ++i)
    if (a[i] > a[(i + 1) % 3] + a[(i + 2) % 3]) return false;
  return true;
}

inline std::vector<std::array<int, 3>> simplex_points(int r) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a <= r; ++a)
    for (int b = 0; a + b <= r; ++b) out.push_back({a, b, r - a - b});
  return out;
}

}  // namespace detail

/// max sum (x_i y_i - z_i) over x, y on the simplex grid with step 1/r,
/// 0 <= z_i <= x_i y_i and the balance constraints alpha_i <= alpha_j + alpha_k.
/// Full mode also puts z_i on the grid x_i y_i j / r; fast mode takes the exact
/// best z for each (x, y). Only points with alpha_1 >= alpha_2 >= alpha_3 are
/// kept (the problem is symmetric in the index), and ties go to the
/// lexicographically smallest (x_1, y_1, z_1, ..., z_3).
inline GridSearchResult search_separator_balance_maximum(int resolution, SearchMode mode) {
  detail::require_resolution(resolution, 4);
  const int r = resolution;
  GridSearchResult res;
  res.coordinate_names = {"x1", "y1", "z1", "x2", "y2", "z2", "x3", "y3", "z3"};
  res.resolution = r;
  res.step = Rational(1, r);
  res.closed_form = Rational(1, 2);
  // All quantities scaled by r^3: x_i y_i -> a_i b_i r, z_i -> a_i b_i j_i.
  const std::int64_t r3 = std::int64_t{r} * r * r;
  auto simplex = detail::simplex_points(r);
  std::int64_t best = -1;
  std::vector<std::int64_t> best_coords;
  auto offer = [&](const std::array<int, 3>& x, const std::array<int, 3>& y, const std::array<std::int64_t, 3>& z,
                   const std::array<std::int64_t, 3>& alpha) {
    if (alpha[0] < alpha[1] || alpha[1] < alpha[2]) return;
    ++res.feasible_points;
    std::int64_t value = alpha[0] + alpha[1] + alpha[2];
    std::vector<std::int64_t> coords;
    for (int i = 0; i < 3; ++i) coords.insert(coords.end(), {std::int64_t{x[i]} * r * r, std::int64_t{y[i]} * r * r, z[i]});
    if (value > best || (value == best && coords < best_coords)) {
      best = value;
      best_coords = std::move(coords);
    }
  };
  for (const auto& x : simplex)
    for (const auto& y : simplex) {
      std::array<std::int64_t, 3> p;
      for (int i = 0; i < 3; ++i) p[i] = std::int64_t{x[i]} * y[i] * r;
      if (mode == SearchMode::fast) {
        auto alpha = detail::balanced_alphas(p);
        offer(x, y, {p[0] - alpha[0], p[1] - alpha[1], p[2] - alpha[2]}, alpha);
        continue;
      }
      for (int j0 = 0; j0 <= r; ++j0)
        for (int j1 = 0; j1 <= r; ++j1)
          for (int j2 = 0; j2 <= r; ++j2) {
            std::array<std::int64_t, 3> z{std::int64_t{x[0]} * y[0] * j0, std::int64_t{x[1]} * y[1] * j1,
                                          std::int64_t{x[2]} * y[2] * j2};
            std::array<std::int64_t, 3> alpha{p[0] - z[0], p[1] - z[1], p[2] - z[2]};
            if (detail::balanced(alpha)) offer(x, y, z, alpha);
          }
    }
  res.extremum = Rational(best, r3);
  for (auto c : best_coords) res.point.push_back(Rational(c, r3));
  res.gap = res.closed_form - res.extremum;
  if (r % 2 != 0) res.notice = "odd resolution: the maximiser x_i = y_i = 1/2 is not on the grid";
  return res;
}

}  // namespace lgtw
