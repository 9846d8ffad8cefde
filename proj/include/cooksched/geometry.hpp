#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "cooksched/error.hpp"
#include "cooksched/instance.hpp"

namespace cooksched::geometry {

inline double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double point_segment_distance(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return euclidean(p, a);
  const double s = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return euclidean(p, Point{a.x + s * dx, a.y + s * dy});
}

/// Indices of the strict convex hull in counter-clockwise order, starting from
/// the lowest (x, y) point (Andrew's monotone chain). Points lying on a hull
/// edge are left out; they sit at distance zero from that edge, so cheapest
/// insertion puts them back in boundary order immediately.
inline std::vector<int> convex_hull(std::span<const Point> points) {
  const std::size_t n = points.size();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto& pa = points[static_cast<std::size_t>(a)];
    const auto& pb = points[static_cast<std::size_t>(b)];
    if (pa.x != pb.x) return pa.x < pb.x;
    if (pa.y != pb.y) return pa.y < pb.y;
    return a < b;
  });
  // Coincident points collapse onto the lowest index.
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](int a, int b) {
                          return points[static_cast<std::size_t>(a)] ==
                                 points[static_cast<std::size_t>(b)];
                        }),
            idx.end());
  if (idx.size() < 3) throw DegenerateHullError("convex hull needs 3 distinct points");

  auto at = [&](int i) -> const Point& { return points[static_cast<std::size_t>(i)]; };
  std::vector<int> hull(2 * idx.size());
  std::size_t k = 0;
  for (const int i : idx) {
    while (k >= 2 && cross(at(hull[k - 2]), at(hull[k - 1]), at(i)) <= 0.0) --k;
    hull[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, lower = k + 1; j-- > 0;) {
    const int i = idx[j];
    while (k >= lower && cross(at(hull[k - 2]), at(hull[k - 1]), at(i)) <= 0.0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DegenerateHullError("all points are collinear");
  return hull;
}

}  // namespace cooksched::geometry
