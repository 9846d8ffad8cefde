// Generates one 20-order instance and compares a few solvers on it.

#include <cstdio>

#include "cooksched/constructive.hpp"
#include "cooksched/exact.hpp"
#include "cooksched/generate.hpp"
#include "cooksched/mbo.hpp"
#include "cooksched/sa.hpp"

int main() {
  using namespace cooksched;
  const Instance inst = generate_instance({.n = 20, .seed = 7});
  const CostMatrix m = build_cost_matrix(inst);

  const Tour nn = nearest_neighbor(m, 0);
  const Tour ref = reference_tour(inst, m);
  const double c_ref = tour_cost(ref, m);

  Rng sa_rng(1);
  SaParams sa;
  sa.bsf = true;
  const RunResult sa_run = run_sa(m, sa, sa_rng, c_ref);

  Rng mbo_rng(1);
  const RunResult mbo_run = run_mbo(m, MboParams{}, mbo_rng);

  const ExactSolution opt = held_karp(m);

  std::printf("instance   %s (speed %.4f)\n", inst.name.c_str(), inst.geometry()->speed);
  std::printf("NN         %.2f\n", tour_cost(nn, m));
  std::printf("CH+Or-opt  %.2f\n", c_ref);
  std::printf("SA-BSF     %.2f\n", sa_run.best_cost);
  std::printf("MBO-DC-S   %.2f\n", mbo_run.best_cost);
  std::printf("optimum    %.2f\n", opt.cost);
}
