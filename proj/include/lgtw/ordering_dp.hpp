#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "lgtw/graph.hpp"

namespace lgtw::detail {

/// Minimizes, over orderings of items, the maximum over prefixes S of
/// cost(S, last) where last is the final item of S. Items are bit positions
/// 0..k-1 (k <= 30); labels maps them to vertices. Ties go to the lowest item.
template <class Cost>
std::pair<int, std::vector<Vertex>> best_ordering(const std::vector<Vertex>& labels, Cost cost) {
  const int k = static_cast<int>(labels.size());
  if (k == 0) return {0, {}};
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << k) - 1);
  std::vector<std::uint16_t> best(std::size_t{full} + 1, 0);
  std::vector<std::uint8_t> last(std::size_t{full} + 1, 0);
  for (std::uint32_t s = 1;; ++s) {
    int value = 1 << 30;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      int candidate = std::max<int>(best[s & ~(std::uint32_t{1} << u)], cost(s, u));
      if (candidate < value) {
        value = candidate;
        last[s] = static_cast<std::uint8_t>(u);
      }
    }
    best[s] = static_cast<std::uint16_t>(value);
    if (s == full) break;
  }
  std::vector<Vertex> order(k);
  for (std::uint32_t s = full; s; s &= ~(std::uint32_t{1} << last[s]))
    order[std::popcount(s) - 1] = labels[last[s]];
  return {best[full], std::move(order)};
}

}  // namespace lgtw::detail
