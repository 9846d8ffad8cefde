#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "cooksched/error.hpp"
#include "cooksched/geometry.hpp"
#include "cooksched/instance.hpp"
#include "cooksched/neighborhood.hpp"

namespace cooksched {

/// Moves whose delta is not below -kImprovementEpsilon are treated as
/// non-improving, so accepted moves always lower the recomputed cost too.
inline constexpr double kImprovementEpsilon = 1e-10;

/// Greedy walk that always goes to the quickest reachable order; ties go to the
/// lowest index.
inline Tour nearest_neighbor(const CostMatrix& m, std::size_t start = 0) {
  const std::size_t n = m.size();
  if (start >= n) throw ValidationError("nearest_neighbor: start " + std::to_string(start) + " out of range");
  Tour tour;
  tour.order.reserve(n);
  std::vector<char> visited(n, 0);
  std::size_t cur = start;
  visited[cur] = 1;
  tour.order.push_back(static_cast<int>(cur));
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t best = n;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (!visited[j] && m(cur, j) < best_cost) {
        best_cost = m(cur, j);
        best = j;
      }
    }
    visited[best] = 1;
    tour.order.push_back(static_cast<int>(best));
    cur = best;
  }
  return tour;
}

/// Hull-then-cheapest-insertion order over bare points. Each step picks the
/// outside point closest to any subtour edge (point-to-segment distance) and
/// splits that edge. Ties go to the lowest city index, then the lowest edge.
inline Tour convex_hull_order(std::span<const Point> points) {
  const std::size_t n = points.size();
  std::vector<int> sub = geometry::convex_hull(points);
  std::vector<char> in_tour(n, 0);
  for (const int c : sub) in_tour[static_cast<std::size_t>(c)] = 1;

  auto pt = [&](int i) -> const Point& { return points[static_cast<std::size_t>(i)]; };
  while (sub.size() < n) {
    std::size_t best_city = n;
    std::size_t best_edge = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n; ++c) {
      if (in_tour[c]) continue;
      for (std::size_t e = 0; e < sub.size(); ++e) {
        const double d = geometry::point_segment_distance(points[c], pt(sub[e]),
                                                          pt(sub[(e + 1) % sub.size()]));
        if (d < best_dist) {
          best_dist = d;
          best_city = c;
          best_edge = e;
        }
      }
    }
    sub.insert(sub.begin() + static_cast<std::ptrdiff_t>(best_edge + 1), static_cast<int>(best_city));
    in_tour[best_city] = 1;
  }
  return Tour{std::move(sub)};
}

/// Convex-hull insertion built on the symmetric geometric distances. The tour
/// is then priced with the asymmetric matrix by the caller.
inline Tour convex_hull_tour(const Instance& inst) {
  const auto* g = inst.geometry();
  if (g == nullptr) {
    throw UnsupportedInstanceError("convex_hull_tour: instance '" + inst.name + "' has no coordinates");
  }
  validate(inst);
  return convex_hull_order(g->points);
}

// ---------------------------------------------------------------------------
// Or-opt

struct OrOptOptions {
  /// Run segment lengths 3, 2, 1 once instead of cycling to a local optimum.
  bool single_pass = false;
};

inline constexpr std::size_t kMinOrOptSize = 5;

namespace detail {

/// One sweep of segment relocations of length `len`; returns whether anything moved.
inline bool or_opt_sweep(Tour& tour, const CostMatrix& m, std::size_t len) {
  const std::size_t n = tour.size();
  const std::size_t rest_len = n - len;
  bool improved = false;
  const std::vector<int> pivots = tour.order;
  std::vector<int> seg(len);
  std::vector<int> rest(rest_len);

  for (const int pivot : pivots) {
    const auto start = static_cast<std::size_t>(
        std::find(tour.order.begin(), tour.order.end(), pivot) - tour.order.begin());
    for (std::size_t i = 0; i < len; ++i) seg[i] = tour[(start + i) % n];
    // The remaining cities, starting right after the removed segment.
    for (std::size_t i = 0; i < rest_len; ++i) rest[i] = tour[(start + len + i) % n];

    double forward = 0.0;
    double backward = 0.0;
    for (std::size_t i = 0; i + 1 < len; ++i) {
      forward += arc(m, seg[i], seg[i + 1]);
      backward += arc(m, seg[i + 1], seg[i]);
    }
    const int head = seg.front();
    const int tail = seg.back();
    const int prev = rest.back();
    const int next = rest.front();
    const double removal = arc(m, prev, head) + forward + arc(m, tail, next) - arc(m, prev, next);

    for (std::size_t k = 0; k < rest_len; ++k) {
      const int x = rest[k];
      const int y = rest[(k + 1) % rest_len];
      const bool original_gap = (k + 1 == rest_len);
      const double base = -arc(m, x, y) - removal;
      const std::array<bool, 2> orientations{false, true};
      bool moved = false;
      for (const bool reversed : orientations) {
        if (reversed && len == 1) continue;
        if (!reversed && original_gap) continue;  // identity
        const double delta = reversed ? base + arc(m, x, tail) + backward + arc(m, head, y)
                                      : base + arc(m, x, head) + forward + arc(m, tail, y);
        if (delta < -kImprovementEpsilon) {
          std::vector<int> next_order;
          next_order.reserve(n);
          next_order.insert(next_order.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(k + 1));
          if (reversed) {
            next_order.insert(next_order.end(), seg.rbegin(), seg.rend());
          } else {
            next_order.insert(next_order.end(), seg.begin(), seg.end());
          }
          next_order.insert(next_order.end(), rest.begin() + static_cast<std::ptrdiff_t>(k + 1), rest.end());
          tour.order = std::move(next_order);
          moved = true;
          break;
        }
      }
      if (moved) {
        improved = true;
        break;
      }
    }
  }
  return improved;
}

}  // namespace detail

/// Or-opt relocation of segments of 3, 2 and 1 consecutive cities, each tried
/// in normal and reversed orientation at every other edge, first improvement.
/// Tours shorter than kMinOrOptSize are returned unchanged.
inline Tour or_opt(Tour tour, const CostMatrix& m, OrOptOptions options = {}) {
  validate_tour(tour, m.size());
  if (tour.size() < kMinOrOptSize) return tour;
  for (;;) {
    bool improved = false;
    for (const std::size_t len : {std::size_t{3}, std::size_t{2}, std::size_t{1}}) {
      improved = detail::or_opt_sweep(tour, m, len) || improved;
    }
    if (!improved || options.single_pass) break;
  }
  return tour;
}

/// Repeated first-improvement 2-opt scans with exact asymmetric deltas until a
/// full scan finds nothing.
inline Tour two_opt_descent(Tour tour, const CostMatrix& m) {
  validate_tour(tour, m.size());
  const std::size_t n = tour.size();
  if (n < kMinTwoOptSize) return tour;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t a = 0; a + 2 < n; ++a) {
      for (std::size_t b = a + 2; b < n && b - a <= n - 2; ++b) {
        if (detail::two_opt_delta(tour, a, b, m) < -kImprovementEpsilon) {
          apply_move_in_place(tour, Move::two_opt(a, b));
          improved = true;
        }
      }
    }
  }
  return tour;
}

}  // namespace cooksched
