#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "cooksched/error.hpp"
#include "cooksched/instance.hpp"

namespace cooksched {

struct ExactSolution {
  double cost = 0.0;
  Tour tour;  // starts at city 0
};

inline constexpr std::size_t kHeldKarpDefaultCap = 20;
inline constexpr std::size_t kBruteForceCap = 10;

/// Held-Karp subset DP with city 0 as the anchor. Memory is about
/// (n-1) * 2^(n-1) doubles, roughly 80 MB at n = 20.
inline ExactSolution held_karp(const CostMatrix& m, std::size_t cap = kHeldKarpDefaultCap) {
  const std::size_t n = m.size();
  if (n < 2) throw SizeError("held_karp needs at least 2 cities");
  if (n > cap) {
    throw SizeError("held_karp: n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
  }
  if (n == 2) return {m(0, 1) + m(1, 0), Tour{{0, 1}}};

  // Bit j of a mask stands for city j + 1.
  const std::size_t k = n - 1;
  const std::size_t full = (std::size_t{1} << k) - 1;
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best((full + 1) * k, inf);
  std::vector<std::uint8_t> parent((full + 1) * k, 0);
  auto cell = [k](std::size_t mask, std::size_t last) { return mask * k + last; };

  for (std::size_t j = 0; j < k; ++j) best[cell(std::size_t{1} << j, j)] = m(0, j + 1);

  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (std::size_t last = 0; last < k; ++last) {
      if (!(mask & (std::size_t{1} << last))) continue;
      const double here = best[cell(mask, last)];
      if (here == inf) continue;
      for (std::size_t next = 0; next < k; ++next) {
        if (mask & (std::size_t{1} << next)) continue;
        const std::size_t grown = mask | (std::size_t{1} << next);
        const double cand = here + m(last + 1, next + 1);
        if (cand < best[cell(grown, next)]) {
          best[cell(grown, next)] = cand;
          parent[cell(grown, next)] = static_cast<std::uint8_t>(last);
        }
      }
    }
  }

  double cost = inf;
  std::size_t last = 0;
  for (std::size_t j = 0; j < k; ++j) {
    const double cand = best[cell(full, j)] + m(j + 1, 0);
    if (cand < cost) {
      cost = cand;
      last = j;
    }
  }

  std::vector<int> reversed;
  reversed.reserve(n);
  std::size_t mask = full;
  for (std::size_t step = 0; step < k; ++step) {
    reversed.push_back(static_cast<int>(last + 1));
    const std::size_t prev = parent[cell(mask, last)];
    mask &= ~(std::size_t{1} << last);
    last = prev;
  }
  Tour tour;
  tour.order.push_back(0);
  tour.order.insert(tour.order.end(), reversed.rbegin(), reversed.rend());
  return {cost, std::move(tour)};
}

/// Enumerates every cyclic order with city 0 first; the lexicographically
/// smallest optimal order wins ties.
inline ExactSolution brute_force(const CostMatrix& m) {
  const std::size_t n = m.size();
  if (n < 2) throw SizeError("brute_force needs at least 2 cities");
  if (n > kBruteForceCap) {
    throw SizeError("brute_force: n = " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(kBruteForceCap));
  }
  Tour tour = identity_tour(n);
  ExactSolution best{std::numeric_limits<double>::infinity(), tour};
  do {
    const double c = tour_cost_unchecked(tour, m);
    if (c < best.cost) best = {c, tour};
  } while (std::next_permutation(tour.order.begin() + 1, tour.order.end()));
  return best;
}

}  // namespace cooksched
