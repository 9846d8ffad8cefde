#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "cooksched/constructive.hpp"
#include "cooksched/error.hpp"
#include "cooksched/instance.hpp"
#include "cooksched/neighborhood.hpp"
#include "cooksched/rng.hpp"
#include "cooksched/run.hpp"

namespace cooksched {

enum class SaInit { Random, Reference };

struct SaParams {
  std::uint64_t K = 40'000;  // neighbor evaluations
  std::uint64_t L = 10;      // evaluations per temperature
  /// Cooling factor; when unset it is derived as (Tf/T0)^(L/K).
  std::optional<double> alpha = 0.995;
  /// Temperatures; when unset they are anchored to the reference cost.
  std::optional<double> T0;
  std::optional<double> Tf;
  double x_frac = 0.10;  // initial temperature accepts x_frac-worse moves ...
  double y_prob = 0.50;  // ... with this probability
  bool bsf = false;
  double bsf_cutoff = 0.90;
  Scheme scheme = Scheme::Insertion;
  SaInit init = SaInit::Random;
  /// Record a trace point every this many evaluations (0 = no trace).
  std::uint64_t trace_every = 0;
};

struct TemperatureBounds {
  double initial = 0.0;
  double final = 0.0;
};

/// T0 accepts an (x_frac * c_ref)-worse move with probability y_prob; Tf
/// accepts a 1%-worse move with probability 1e-4.
inline TemperatureBounds temperature_bounds(double c_ref, double x_frac = 0.10, double y_prob = 0.50) {
  if (!(c_ref > 0.0)) throw ConfigError("reference cost must be positive");
  if (!(x_frac > 0.0)) throw ConfigError("x_frac must be positive");
  if (!(y_prob > 0.0 && y_prob < 1.0)) throw ConfigError("y_prob must lie in (0, 1)");
  return {-(x_frac * c_ref) / std::log(y_prob), -(0.01 * c_ref) / std::log(1e-4)};
}

/// Metropolis rule: improving moves always pass, others with probability e^(-delta/T).
inline bool accept(double delta, double temperature, double u) {
  return delta < 0.0 || u < std::exp(-delta / temperature);
}

/// Temperature after `coolings` multiplications, floored at the final temperature.
inline double temperature_at(double T0, double alpha, std::uint64_t coolings, double Tf) {
  return std::max(T0 * std::pow(alpha, static_cast<double>(coolings)), Tf);
}

/// Cost of the tour used to anchor the temperatures: Or-opt on top of
/// convex-hull insertion, or on top of nearest neighbor without coordinates.
inline Tour reference_tour(const Instance& inst, const CostMatrix& m) {
  if (inst.has_points() && inst.size() >= 3) {
    try {
      return or_opt(convex_hull_tour(inst), m);
    } catch (const DegenerateHullError&) {
    }
  }
  return or_opt(nearest_neighbor(m, 0), m);
}

struct ResolvedSchedule {
  double T0;
  double Tf;
  double alpha;
};

inline ResolvedSchedule resolve_schedule(const SaParams& p, double c_ref) {
  if (p.K == 0) throw ConfigError("SA: K must be positive");
  if (p.L == 0 || p.L > p.K) throw ConfigError("SA: L must satisfy 0 < L <= K");
  if (!(p.bsf_cutoff > 0.0 && p.bsf_cutoff < 1.0)) throw ConfigError("SA: bsf_cutoff must lie in (0, 1)");
  TemperatureBounds bounds{};
  if (!p.T0 || !p.Tf) bounds = temperature_bounds(c_ref, p.x_frac, p.y_prob);
  const double T0 = p.T0.value_or(bounds.initial);
  const double Tf = p.Tf.value_or(bounds.final);
  if (!(Tf > 0.0 && Tf < T0)) throw ConfigError("SA: temperatures must satisfy 0 < Tf < T0");
  const double alpha =
      p.alpha.value_or(std::pow(Tf / T0, static_cast<double>(p.L) / static_cast<double>(p.K)));
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("SA: alpha must lie in (0, 1)");
  return {T0, Tf, alpha};
}

/// Runs exactly K neighbor evaluations and returns the best tour seen. With
/// bsf set, the walk jumps back to the best-so-far tour after
/// ceil(bsf_cutoff * K) evaluations and accepts only improving moves from then on.
inline RunResult run_sa(const CostMatrix& m, const SaParams& params, Rng& rng, double c_ref,
                        std::optional<Tour> reference = std::nullopt) {
  const auto schedule = resolve_schedule(params, c_ref);
  const std::size_t n = m.size();
  if (n < min_size(params.scheme)) {
    throw SizeError("SA: scheme " + std::string(to_string(params.scheme)) + " needs at least " +
                    std::to_string(min_size(params.scheme)) + " cities");
  }
  const auto started = std::chrono::steady_clock::now();

  Tour current;
  if (params.init == SaInit::Reference) {
    current = reference ? *reference : or_opt(nearest_neighbor(m, 0), m);
    validate_tour(current, n);
  } else {
    current = random_tour(n, rng);
  }
  double current_cost = tour_cost_unchecked(current, m);
  RunResult result;
  result.best_tour = current;
  result.best_cost = current_cost;

  const std::uint64_t cutoff =
      params.bsf ? static_cast<std::uint64_t>(std::ceil(params.bsf_cutoff * static_cast<double>(params.K)))
                 : params.K;
  bool greedy = false;
  double temperature = schedule.T0;

  for (std::uint64_t e = 0; e < params.K; ++e) {
    if (e == cutoff) {
      current = result.best_tour;
      current_cost = result.best_cost;
      greedy = true;
    }
    const Move mv = sample_move(current, params.scheme, rng);
    const double delta = mv.kind == MoveKind::TwoOpt ? detail::two_opt_delta(current, mv.a, mv.b, m)
                                                     : detail::insertion_delta(current, mv.a, mv.b, m);
    const bool take = greedy ? delta < 0.0 : (delta < 0.0 || accept(delta, temperature, uniform01(rng)));
    if (take) {
      apply_move_in_place(current, mv);
      current_cost += delta;
      if (current_cost < result.best_cost) {
        // Re-price exactly so accumulated deltas never drift into the record.
        current_cost = tour_cost_unchecked(current, m);
        if (current_cost < result.best_cost) {
          result.best_cost = current_cost;
          result.best_tour = current;
        }
      }
    }
    if ((e + 1) % params.L == 0) {
      temperature = temperature_at(schedule.T0, schedule.alpha, (e + 1) / params.L, schedule.Tf);
    }
    if (params.trace_every != 0 && (e + 1) % params.trace_every == 0) {
      result.trace.push_back({e + 1, current_cost, result.best_cost, temperature});
    }
  }

  result.evaluations_used = params.K;
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace cooksched
