#pragma once

// Problem model: one cook, one stove. The time from the start of cooking order
// A to the start of cooking order B is t_AB = max(p_A, d_AB), where p_A is A's
// stove time and d_AB the table work (cleaning after A plus preparing B) that
// has to happen before B can go on the stove.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cooksched/error.hpp"

namespace cooksched {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline double euclidean(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Dense n x n travel-time matrix; row = from, column = to. The diagonal is unused.
class CostMatrix {
 public:
  CostMatrix() = default;

  explicit CostMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  CostMatrix(std::size_t n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
    if (data_.size() != n_ * n_) {
      throw ValidationError("cost matrix needs " + std::to_string(n_ * n_) + " entries, got " +
                            std::to_string(data_.size()));
    }
  }

  static CostMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    CostMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) {
        throw ValidationError("cost matrix row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(n));
      }
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * n));
    }
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t from, std::size_t to) const noexcept { return data_[from * n_ + to]; }
  double& operator()(std::size_t from, std::size_t to) noexcept { return data_[from * n_ + to]; }

  std::span<const double> row(std::size_t from) const noexcept {
    return {data_.data() + from * n_, n_};
  }

  const std::vector<double>& data() const noexcept { return data_; }

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Orders as planar points; preparation time is distance / speed.
struct Geometry {
  std::vector<Point> points;
  double speed = 1.0;  // cm per time unit
};

/// Explicit kitchen timings: d_AB = clean[A] + prep[B].
struct KitchenTable {
  std::vector<double> clean;
  std::vector<double> prep;
};

using DistanceSource = std::variant<Geometry, KitchenTable, CostMatrix>;

struct Instance {
  std::string name;
  /// p_i per order. May be empty for explicit-matrix instances.
  std::vector<double> stove_times;
  DistanceSource source;

  std::size_t size() const {
    return std::visit(
        [](const auto& s) -> std::size_t {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, Geometry>) {
            return s.points.size();
          } else if constexpr (std::is_same_v<S, KitchenTable>) {
            return s.clean.size();
          } else {
            return s.size();
          }
        },
        source);
  }

  bool has_points() const noexcept { return std::holds_alternative<Geometry>(source); }
  const Geometry* geometry() const noexcept { return std::get_if<Geometry>(&source); }
  const KitchenTable* kitchen() const noexcept { return std::get_if<KitchenTable>(&source); }
  const CostMatrix* explicit_matrix() const noexcept { return std::get_if<CostMatrix>(&source); }
};

namespace detail {

inline void require_nonnegative(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0) || !std::isfinite(values[i])) {
      throw ValidationError(std::string(what) + "[" + std::to_string(i) +
                            "] must be finite and nonnegative");
    }
  }
}

}  // namespace detail

/// Checks the Instance invariants; throws ConfigError or ValidationError.
inline void validate(const Instance& inst) {
  const std::size_t n = inst.size();
  if (n < 2) throw ConfigError("instance '" + inst.name + "' needs at least 2 orders");
  detail::require_nonnegative(inst.stove_times, "stove_times");

  if (const auto* g = inst.geometry()) {
    if (inst.stove_times.size() != n) {
      throw ValidationError("instance '" + inst.name + "': " + std::to_string(n) + " points but " +
                            std::to_string(inst.stove_times.size()) + " stove times");
    }
    if (!(g->speed > 0.0) || !std::isfinite(g->speed)) {
      throw ConfigError("instance '" + inst.name + "': speed must be positive");
    }
    for (const auto& p : g->points) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw ValidationError("instance '" + inst.name + "': non-finite coordinate");
      }
    }
  } else if (const auto* k = inst.kitchen()) {
    if (k->prep.size() != n || inst.stove_times.size() != n) {
      throw ValidationError("instance '" + inst.name + "': kitchen table lengths differ");
    }
    detail::require_nonnegative(k->clean, "clean");
    detail::require_nonnegative(k->prep, "prep");
  } else {
    const auto& m = *inst.explicit_matrix();
    if (!inst.stove_times.empty() && inst.stove_times.size() != n) {
      throw ValidationError("instance '" + inst.name + "': stove_times length differs from matrix");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && (!(m(i, j) >= 0.0) || !std::isfinite(m(i, j)))) {
          throw ValidationError("instance '" + inst.name + "': matrix entry (" + std::to_string(i) +
                                "," + std::to_string(j) + ") must be finite and nonnegative");
        }
      }
    }
  }
}

/// t[A][B] = max(p_A, |AB| / speed) for a geometric instance.
inline CostMatrix build_cost_matrix(const Instance& inst) {
  const auto* g = inst.geometry();
  if (g == nullptr) throw ConfigError("build_cost_matrix: instance '" + inst.name + "' has no points");
  validate(inst);
  const std::size_t n = g->points.size();
  CostMatrix m(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      m(a, b) = std::max(inst.stove_times[a], euclidean(g->points[a], g->points[b]) / g->speed);
    }
  }
  return m;
}

/// t[A][B] = max(p_A, clean_A + prep_B).
inline CostMatrix kitchen_cost_matrix(std::span<const double> stove, std::span<const double> clean,
                                      std::span<const double> prep) {
  if (stove.size() != clean.size() || stove.size() != prep.size()) {
    throw ValidationError("kitchen_cost_matrix: stove/clean/prep lengths differ (" +
                          std::to_string(stove.size()) + ", " + std::to_string(clean.size()) + ", " +
                          std::to_string(prep.size()) + ")");
  }
  detail::require_nonnegative(stove, "stove");
  detail::require_nonnegative(clean, "clean");
  detail::require_nonnegative(prep, "prep");
  const std::size_t n = stove.size();
  CostMatrix m(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) m(a, b) = std::max(stove[a], clean[a] + prep[b]);
    }
  }
  return m;
}

/// Cost matrix for any distance source.
inline CostMatrix cost_matrix(const Instance& inst) {
  if (inst.has_points()) return build_cost_matrix(inst);
  validate(inst);
  if (const auto* k = inst.kitchen()) return kitchen_cost_matrix(inst.stove_times, k->clean, k->prep);
  return *inst.explicit_matrix();
}

/// Table work d_AB that must finish before B can start cooking after A.
inline double preparation_time(const Instance& inst, std::size_t from, std::size_t to) {
  if (const auto* g = inst.geometry()) return euclidean(g->points[from], g->points[to]) / g->speed;
  if (const auto* k = inst.kitchen()) return k->clean[from] + k->prep[to];
  throw UnsupportedInstanceError("instance '" + inst.name +
                                 "' has an explicit matrix; preparation times are not decomposable");
}

// ---------------------------------------------------------------------------
// Tours

/// Cyclic visiting order; the last order connects back to the first.
struct Tour {
  std::vector<int> order;

  std::size_t size() const noexcept { return order.size(); }
  int operator[](std::size_t pos) const noexcept { return order[pos]; }

  friend bool operator==(const Tour&, const Tour&) = default;
};

inline bool is_permutation(const Tour& tour, std::size_t n) {
  if (tour.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (const int city : tour.order) {
    if (city < 0 || static_cast<std::size_t>(city) >= n || seen[static_cast<std::size_t>(city)]) {
      return false;
    }
    seen[static_cast<std::size_t>(city)] = 1;
  }
  return true;
}

inline void validate_tour(const Tour& tour, std::size_t n) {
  if (!is_permutation(tour, n)) {
    throw ValidationError("tour of length " + std::to_string(tour.size()) +
                          " is not a permutation of 0.." + std::to_string(n == 0 ? 0 : n - 1));
  }
}

inline Tour identity_tour(std::size_t n) {
  Tour t;
  t.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.order[i] = static_cast<int>(i);
  return t;
}

/// Rotates the tour so that city 0 comes first.
inline Tour normalized(Tour tour) {
  const auto it = std::find(tour.order.begin(), tour.order.end(), 0);
  if (it != tour.order.end()) std::rotate(tour.order.begin(), it, tour.order.end());
  return tour;
}

/// Cycle cost without validation; callers guarantee a permutation.
inline double tour_cost_unchecked(const Tour& tour, const CostMatrix& m) noexcept {
  const std::size_t n = tour.size();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    total += m(static_cast<std::size_t>(tour[i]), static_cast<std::size_t>(tour[i + 1]));
  }
  if (n > 1) total += m(static_cast<std::size_t>(tour[n - 1]), static_cast<std::size_t>(tour[0]));
  return total;
}

inline double tour_cost(const Tour& tour, const CostMatrix& m) {
  validate_tour(tour, m.size());
  return tour_cost_unchecked(tour, m);
}

// ---------------------------------------------------------------------------
// Schedules

struct ScheduleEvent {
  int order = 0;
  double prep_start = 0.0;
  double prep_end = 0.0;
  double cook_start = 0.0;
  double cook_end = 0.0;
};

struct Schedule {
  std::vector<ScheduleEvent> events;
  /// Preparation of the first order on a clean table, before anything cooks.
  double first_prep_offset = 0.0;
  /// Time at which the cycle closes: the last cook_start plus t[last][first].
  double makespan = 0.0;
};

/// Preparation of an order on a clean table (no cleaning term).
inline double first_preparation(const Instance& inst, std::size_t order) {
  if (inst.kitchen() != nullptr) return inst.kitchen()->prep[order];
  if (inst.has_points()) return 0.0;  // geometric instances only define pairwise work
  throw UnsupportedInstanceError("instance '" + inst.name +
                                 "' has an explicit matrix; no schedule can be expanded");
}

/// Simulates the cook/stove timeline for the given order sequence.
///
/// The first order is prepared on a clean table and starts cooking at
/// first_prep_offset. Each later order is prepared while its predecessor cooks,
/// and starts once both the stove is free and its own preparation is done. The
/// closing arc (finishing the last meal and turning the table around for the
/// first) adds t[last][first], so makespan - first_prep_offset == tour_cost.
inline Schedule expand_schedule(const Tour& tour, const Instance& inst) {
  if (inst.explicit_matrix() != nullptr) {
    throw UnsupportedInstanceError("instance '" + inst.name +
                                   "' has an explicit matrix; no schedule can be expanded");
  }
  validate(inst);
  const std::size_t n = inst.size();
  validate_tour(tour, n);

  auto stove = [&](std::size_t order) { return inst.stove_times[order]; };

  Schedule s;
  s.events.reserve(n);
  const auto first = static_cast<std::size_t>(tour[0]);
  s.first_prep_offset = first_preparation(inst, first);
  s.events.push_back({tour[0], 0.0, s.first_prep_offset, s.first_prep_offset,
                      s.first_prep_offset + stove(first)});

  for (std::size_t pos = 1; pos < n; ++pos) {
    const auto& prev = s.events.back();
    const auto prev_order = static_cast<std::size_t>(prev.order);
    const auto cur = static_cast<std::size_t>(tour[pos]);
    ScheduleEvent e;
    e.order = tour[pos];
    e.prep_start = prev.cook_start;
    e.prep_end = e.prep_start + preparation_time(inst, prev_order, cur);
    e.cook_start = std::max(prev.cook_end, e.prep_end);
    e.cook_end = e.cook_start + stove(cur);
    s.events.push_back(e);
  }

  const auto& last = s.events.back();
  const auto last_order = static_cast<std::size_t>(last.order);
  const double closing = std::max(stove(last_order), preparation_time(inst, last_order, first));
  s.makespan = last.cook_start + closing;
  return s;
}

// ---------------------------------------------------------------------------
// Triangle inequality

struct TriangleViolation {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  double excess = 0.0;  // t_AC - (t_AB + t_BC)

  friend bool operator==(const TriangleViolation&, const TriangleViolation&) = default;
};

inline constexpr double kTriangleEpsilon = 1e-9;

/// All ordered triples of distinct cities with t_AC > t_AB + t_BC + eps.
inline std::vector<TriangleViolation> triangle_report(const CostMatrix& m,
                                                      double eps = kTriangleEpsilon) {
  std::vector<TriangleViolation> out;
  const std::size_t n = m.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        const double excess = m(a, c) - (m(a, b) + m(b, c));
        if (excess > eps) out.push_back({a, b, c, excess});
      }
    }
  }
  return out;
}

}  // namespace cooksched
