#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "cooksched/instance.hpp"
#include "cooksched/rng.hpp"

namespace testing_support {

using namespace cooksched;

/// Asymmetric matrix with entries in [1, 10), no structure.
inline CostMatrix random_matrix(std::size_t n, Rng& rng) {
  CostMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? 0.0 : uniform_real(rng, 1.0, 10.0);
  }
  return m;
}

/// Forward arcs i -> i+1 cost 1, every other arc 5.
inline CostMatrix ring_matrix(std::size_t n) {
  CostMatrix m(n, 5.0);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 0.0;
    m(i, (i + 1) % n) = 1.0;
  }
  return m;
}

/// Cycle cost straight from the definition, independent of tour_cost.
inline double cycle_cost(const std::vector<int>& order, const CostMatrix& m) {
  double c = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    c += m(static_cast<std::size_t>(order[i]), static_cast<std::size_t>(order[(i + 1) % order.size()]));
  }
  return c;
}

/// Optimum by enumerating every permutation (no anchor), for tiny n.
inline double enumerate_optimum(const CostMatrix& m) {
  std::vector<int> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, cycle_cost(p, m));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline Tour shuffled_tour(std::size_t n, Rng& rng) {
  Tour t = identity_tour(n);
  for (std::size_t i = n; i > 1; --i) std::swap(t.order[i - 1], t.order[uniform_index(rng, i)]);
  return t;
}

inline Instance geometric_instance(std::size_t n, Rng& rng) {
  Instance inst;
  inst.name = "geo";
  Geometry g;
  for (std::size_t i = 0; i < n; ++i) {
    g.points.push_back({uniform_real(rng, 0.0, 20.0), uniform_real(rng, 0.0, 30.0)});
    inst.stove_times.push_back(uniform_real(rng, 2.0, 4.0));
  }
  g.speed = uniform_real(rng, 1.0, 6.0);
  inst.source = std::move(g);
  return inst;
}

inline Instance kitchen_instance(std::size_t n, Rng& rng) {
  Instance inst;
  inst.name = "kitchen";
  KitchenTable k;
  for (std::size_t i = 0; i < n; ++i) {
    inst.stove_times.push_back(uniform_real(rng, 2.0, 4.0));
    k.clean.push_back(uniform_real(rng, 0.0, 3.0));
    k.prep.push_back(uniform_real(rng, 0.0, 3.0));
  }
  inst.source = std::move(k);
  return inst;
}

inline bool close_rel(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace testing_support
