#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "cooksched/constructive.hpp"
#include "cooksched/error.hpp"
#include "cooksched/instance.hpp"
#include "cooksched/rng.hpp"

namespace cooksched {

struct Rect {
  double width = 20.0;
  double height = 30.0;
};

struct Range {
  double low = 2.0;
  double high = 4.0;
};

struct GeneratorSpec {
  std::size_t n = 20;
  std::uint64_t seed = 1;
  Rect rect{};
  Range stove{};
  double target_fraction = 0.5;
};

inline constexpr double kCalibrationTolerance = 0.05;
inline constexpr int kCalibrationIterations = 64;

/// Fraction of consecutive pairs (A, B) along the cycle, closing arc included,
/// where the stove time p_A is at least the preparation time d_AB.
inline double stove_dominance_fraction(const Tour& tour, std::span<const Point> points,
                                       std::span<const double> stove, double speed) {
  const std::size_t n = tour.size();
  std::size_t dominated = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<std::size_t>(tour[i]);
    const auto b = static_cast<std::size_t>(tour[(i + 1) % n]);
    if (stove[a] >= euclidean(points[a], points[b]) / speed) ++dominated;
  }
  return static_cast<double>(dominated) / static_cast<double>(n);
}

inline double stove_dominance_fraction(const Tour& tour, const Instance& inst) {
  const auto* g = inst.geometry();
  if (g == nullptr) throw UnsupportedInstanceError("stove_dominance_fraction needs coordinates");
  return stove_dominance_fraction(tour, g->points, inst.stove_times, g->speed);
}

/// Speed at which about `target_fraction` of the convex-hull tour's arcs are
/// stove-dominated. The fraction is nondecreasing in speed, so a log-space
/// bisection keeps fraction(low) < target <= fraction(high).
inline double calibrate_speed(std::span<const Point> points, std::span<const double> stove,
                              double target_fraction) {
  if (!(target_fraction > 0.0 && target_fraction < 1.0)) {
    throw ConfigError("target fraction must lie in (0, 1)");
  }
  if (points.size() != stove.size()) throw ValidationError("calibrate_speed: points/stove length mismatch");
  const std::size_t n = points.size();
  if (n < 2) throw SizeError("calibrate_speed needs at least 2 points");

  const Tour tour = n >= 3 ? convex_hull_order(points) : identity_tour(n);
  auto fraction = [&](double speed) { return stove_dominance_fraction(tour, points, stove, speed); };

  // Each arc flips to stove-dominated at speed = |AB| / p_A.
  double min_threshold = std::numeric_limits<double>::infinity();
  double max_threshold = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<std::size_t>(tour[i]);
    const auto b = static_cast<std::size_t>(tour[(i + 1) % n]);
    const double dist = euclidean(points[a], points[b]);
    if (stove[a] > 0.0 && dist > 0.0) {
      min_threshold = std::min(min_threshold, dist / stove[a]);
      max_threshold = std::max(max_threshold, dist / stove[a]);
    }
  }
  if (!(max_threshold > 0.0)) {
    const double f = fraction(1.0);
    throw CalibrationError("stove dominance does not depend on speed for this instance", f, 1.0);
  }

  double lo = min_threshold / 2.0;
  double hi = max_threshold * 2.0;
  double f_lo = fraction(lo);
  double f_hi = fraction(hi);
  if (f_lo >= target_fraction) {
    hi = lo;
    f_hi = f_lo;
  } else {
    for (int it = 0; it < kCalibrationIterations && f_hi > f_lo; ++it) {
      const double mid = std::sqrt(lo * hi);
      if (mid <= lo || mid >= hi) break;
      const double f_mid = fraction(mid);
      if (f_mid < target_fraction) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
        f_hi = f_mid;
      }
    }
  }

  const bool hi_closer = std::abs(f_hi - target_fraction) <= std::abs(f_lo - target_fraction);
  const double best_speed = hi_closer ? hi : lo;
  const double best_fraction = hi_closer ? f_hi : f_lo;
  if (std::abs(best_fraction - target_fraction) > kCalibrationTolerance + 1e-12) {
    throw CalibrationError("could not reach stove-dominance fraction " + std::to_string(target_fraction) +
                               "; closest was " + std::to_string(best_fraction),
                           best_fraction, best_speed);
  }
  return best_speed;
}

/// Uniform points in [0, width] x [0, height], stove times ~ U(low, high), and
/// a calibrated speed. A pure function of the spec.
inline Instance generate_instance(const GeneratorSpec& spec) {
  if (spec.n < 2) throw ConfigError("generate_instance: need at least 2 orders");
  if (!(spec.rect.width > 0.0) || !(spec.rect.height > 0.0)) {
    throw ConfigError("generate_instance: degenerate rectangle");
  }
  if (!(spec.stove.low >= 0.0) || spec.stove.low > spec.stove.high) {
    throw ConfigError("generate_instance: stove range must satisfy 0 <= low <= high");
  }
  if (!(spec.target_fraction > 0.0 && spec.target_fraction < 1.0)) {
    throw ConfigError("generate_instance: target fraction must lie in (0, 1)");
  }

  Rng rng(spec.seed);
  Geometry g;
  g.points.resize(spec.n);
  for (auto& p : g.points) {
    p.x = uniform_real(rng, 0.0, spec.rect.width);
    p.y = uniform_real(rng, 0.0, spec.rect.height);
  }
  std::vector<double> stove(spec.n);
  for (auto& s : stove) s = uniform_real(rng, spec.stove.low, spec.stove.high);
  g.speed = calibrate_speed(g.points, stove, spec.target_fraction);

  Instance inst;
  inst.name = "gen-n" + std::to_string(spec.n) + "-s" + std::to_string(spec.seed);
  inst.stove_times = std::move(stove);
  inst.source = std::move(g);
  return inst;
}

}  // namespace cooksched
