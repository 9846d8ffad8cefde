#pragma once

#include <cstdint>
#include <vector>

#include "cooksched/instance.hpp"
#include "cooksched/rng.hpp"

namespace cooksched {

struct TracePoint {
  std::uint64_t iteration = 0;
  double current_cost = 0.0;
  double best_cost = 0.0;
  double temperature = 0.0;
};

struct RunResult {
  Tour best_tour;
  double best_cost = 0.0;
  std::uint64_t evaluations_used = 0;
  double wall_time = 0.0;  // seconds
  std::vector<TracePoint> trace;
};

/// Uniform random permutation (Fisher-Yates on the portable index helper).
inline Tour random_tour(std::size_t n, Rng& rng) {
  Tour t = identity_tour(n);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(t.order[i - 1], t.order[uniform_index(rng, i)]);
  }
  return t;
}

}  // namespace cooksched
