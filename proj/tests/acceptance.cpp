// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.
// Set COOKSCHED_S1 to the published S1 instance file to run the reproduction
// check; without it that criterion is covered by the small-problem experiment.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "cooksched/bench.hpp"
#include "cooksched/constructive.hpp"
#include "cooksched/exact.hpp"
#include "cooksched/generate.hpp"
#include "cooksched/io.hpp"
#include "cooksched/mbo.hpp"
#include "cooksched/sa.hpp"
#include "support.hpp"

using namespace cooksched;
using namespace testing_support;

namespace {

int failures = 0;

void report(const std::string& id, const std::string& status, const std::string& detail) {
  if (status == "FAIL") ++failures;
  std::cout << status << "  " << id << "  " << detail << std::endl;
}

void verdict(const std::string& id, bool ok, const std::string& detail) { report(id, ok ? "PASS" : "FAIL", detail); }

std::string num(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void exact_oracles() {
  const auto started = std::chrono::steady_clock::now();
  Rng rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const CostMatrix m = random_matrix(2 + uniform_index(rng, 9), rng);
    const double a = held_karp(m).cost, b = brute_force(m).cost;
    worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
  }
  const double t = seconds_since(started);
  verdict("C1 exact-oracle", worst <= 1e-9 && t < 60.0,
          "held_karp vs brute_force on 200 matrices: max rel diff " + num(worst, 12) + ", " + num(t, 2) + " s");
}

void schedule_identity() {
  Rng rng(102);
  double worst = 0.0;
  bool formula = true;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + uniform_index(rng, 29);
    const Instance inst = geometric_instance(n, rng);
    const CostMatrix m = build_cost_matrix(inst);
    const auto& g = *inst.geometry();
    for (std::size_t a = 0; a < inst.size(); ++a) {
      for (std::size_t b = 0; b < inst.size(); ++b) {
        if (a != b) formula = formula && m(a, b) == std::max(inst.stove_times[a], euclidean(g.points[a], g.points[b]) / g.speed);
      }
    }
    const Tour t = shuffled_tour(inst.size(), rng);
    const Schedule s = expand_schedule(t, inst);
    const double c = tour_cost(t, m);
    worst = std::max(worst, std::abs((s.makespan - s.first_prep_offset) - c) / c);
  }
  verdict("C2 formula-schedule", formula && worst <= 1e-9,
          std::string("matrix entries == max(p, d): ") + (formula ? "exact" : "MISMATCH") +
              "; makespan identity max rel diff " + num(worst, 12));
}

void delta_soundness() {
  Rng rng(103);
  double worst = 0.0;
  std::size_t reversals = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    const std::size_t n = 4 + uniform_index(rng, 27);
    const Instance inst = trial % 2 ? geometric_instance(n, rng) : kitchen_instance(n, rng);
    const CostMatrix m = cost_matrix(inst);
    const Tour t = shuffled_tour(n, rng);
    const Move mv = sample_move(t, Scheme::Mixed, rng);
    if (mv.kind == MoveKind::TwoOpt && mv.b - mv.a >= 2) ++reversals;
    const double before = cycle_cost(t.order, m);
    const double expect = cycle_cost(apply_move(t, mv).order, m) - before;
    worst = std::max(worst, std::abs(move_delta(t, mv, m) - expect) / before);
  }
  verdict("C3 delta-soundness", worst <= 1e-9,
          "100000 fuzzed moves (" + std::to_string(reversals) + " asymmetric reversals): max rel diff " +
              num(worst, 12));
}

void published_reproduction() {
  const char* path = std::getenv("COOKSCHED_S1");
  if (path == nullptr) {
    report("C4 published-data", "SUBSTITUTED",
           "published instances not available offline; covered by C5 (set COOKSCHED_S1 to run it)");
    return;
  }
  const Instance inst = read_instance(path);
  const CostMatrix m = cost_matrix(inst);
  const double nn = tour_cost(nearest_neighbor(m, 0), m);
  const double opt = held_karp(m).cost;
  const Tour ch = convex_hull_tour(inst);
  const double c_ch = tour_cost(ch, m);
  const double c_or = tour_cost(or_opt(ch, m), m);
  const bool ok = std::abs(nn - 85.54) <= 0.01 && std::abs(opt - 83.45) <= 0.01 &&
                  std::abs(c_ch - 92.53) <= 0.01 * 92.53 && std::abs(c_or - 91.61) <= 0.01 * 91.61;
  verdict("C4 published-data", ok,
          "NN " + num(nn, 2) + " (85.54), optimum " + num(opt, 2) + " (83.45), CH " + num(c_ch, 2) + " (92.53), CHOrOpt " +
              num(c_or, 2) + " (91.61)");
}

void small_problem_quality() {
  const auto started = std::chrono::steady_clock::now();
  const auto cfg = bench::parse_config(nlohmann::json::parse(R"({
    "instances": [{"generate": {"n": 20, "count": 10, "seed": 1, "prefix": "S"}}],
    "algorithms": ["NN", "SA", "MBO-IC-M", "MBO-DC-S", "EXACT"],
    "schemes": ["2opt", "insertion"],
    "replications": 10, "master_seed": 2024, "presets": "small", "timing": false
  })"));
  const auto records = bench::run_experiment(cfg);
  const auto rows = bench::summarize(records, bench::references_from(records));
  auto dev = [&](const char* alg, const char* scheme) {
    const auto* r = bench::find_row(rows, alg, scheme);
    return r && r->deviation_pct ? *r->deviation_pct : std::nan("");
  };
  const double dcs_ins = dev("MBO-DC-S", "insertion");
  const double icm_ins = dev("MBO-IC-M", "insertion");
  const double dcs_2opt = dev("MBO-DC-S", "2opt");
  const double sa_ins = dev("SA", "insertion");
  const double nn = dev("NN", "-");
  const std::string t = " [" + std::to_string(records.size()) + " runs, " + num(seconds_since(started), 1) + " s]";

  verdict("C5 small-quality", dcs_ins <= 1.5 && sa_ins <= 3.5 && nn >= 5.0 && nn <= 25.0,
          "deviation %: MBO-DC-S/insertion " + num(dcs_ins, 2) + " (<= 1.5), SA/insertion " + num(sa_ins, 2) +
              " (<= 3.5), NN " + num(nn, 2) + " (5..25)" + t);
  verdict("C6 enhancement-order", icm_ins - dcs_ins >= 0.5 && dcs_ins < dcs_2opt,
          "MBO-IC-M/insertion - MBO-DC-S/insertion = " + num(icm_ins - dcs_ins, 2) +
              " pp (>= 0.5); MBO-DC-S insertion " + num(dcs_ins, 2) + " vs 2opt " + num(dcs_2opt, 2) +
              " (insertion must be lower)");
}

void sa_statistics() {
  Rng rng(107);
  const double T = 1.7;
  int hits = 0;
  bool improving = true;
  for (int i = 0; i < 100000; ++i) {
    hits += accept(T, T, uniform01(rng));
    improving = improving && accept(-uniform_real(rng, 1e-12, 10.0), T, uniform01(rng));
  }
  const double rate = hits / 100000.0;
  verdict("C7 sa-acceptance", std::abs(rate - std::exp(-1.0)) <= 0.01 && improving,
          "rate at delta=T " + num(rate, 4) + " (e^-1 = 0.3679 +- 0.01); improving moves always accepted: " +
              (improving ? "yes" : "NO"));
}

void mbo_accounting() {
  const Instance inst = generate_instance({20, 108});
  const CostMatrix m = cost_matrix(inst);
  MboParams p;  // 21 birds, k = 7, x = 1
  Rng rng(108);
  Flock f = initial_flock(m, p, rng);
  const std::uint64_t one_tour = flock_tour(f, m, p, rng);

  bool monotone = true, pure = true;
  for (const auto c : {Consideration::Immediate, Consideration::Delayed}) {
    MboParams q = p;
    q.consideration = c;
    q.sharing = Sharing::Single;
    std::map<int, double> last;
    const FlockObserver observe = [&](const Flock& flock, std::uint64_t) {
      flock.for_each([&](const Bird& b) {
        const auto it = last.find(b.id);
        if (it != last.end() && b.cost > it->second) monotone = false;
        last[b.id] = b.cost;
      });
    };
    const ShareHook hook = [&](int giver, std::span<const Candidate> shared) {
      for (const auto& s : shared) pure = pure && s.source == giver;
    };
    Rng r(109);
    run_mbo(m, q, r, observe, hook);
  }
  verdict("C8 mbo-accounting", one_tour == 127 && monotone && pure,
          "one flock tour = " + std::to_string(one_tour) + " evaluations (127); bird costs nonincreasing: " +
              (monotone ? "yes" : "NO") + "; S-sharing forwards only own neighbors: " + (pure ? "yes" : "NO"));
}

void determinism() {
  const auto config = nlohmann::json::parse(R"({
    "instances": [{"generate": {"n": 20, "count": 2, "seed": 31, "prefix": "D"}}],
    "algorithms": ["NN", "CH", "CHOrOpt", "SA", "SA-BSF", "MBO-IC-M", "MBO-IC-S", "MBO-DC-M", "MBO-DC-S", "EXACT"],
    "schemes": ["2opt", "insertion", "mixed"],
    "replications": 2, "master_seed": 7, "presets": "small", "timing": false
  })");
  const std::string a = bench::to_csv(bench::run_experiment(bench::parse_config(config)));
  const std::string b = bench::to_csv(bench::run_experiment(bench::parse_config(config)));
  verdict("C9 determinism", a == b,
          "two runs of the same bench config: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
              " bytes, " + (a == b ? "identical" : "DIFFERENT"));
}

void medium_ordering() {
  const auto started = std::chrono::steady_clock::now();
  const auto cfg = bench::parse_config(nlohmann::json::parse(R"({
    "instances": [{"generate": {"n": 50, "count": 10, "seed": 1, "prefix": "M"}}],
    "algorithms": ["SA", "MBO-DC-S"],
    "schemes": ["insertion"],
    "replications": 3, "master_seed": 2024, "presets": "medium", "timing": false
  })"));
  const auto records = bench::run_experiment(cfg);
  const auto rows = bench::summarize(records, bench::references_from({}, bench::update_best_known(records)));
  const double mbo = *bench::find_row(rows, "MBO-DC-S", "insertion")->deviation_pct;
  const double sa = *bench::find_row(rows, "SA", "insertion")->deviation_pct;
  report("soft medium-ordering", mbo <= sa ? "PASS" : "WARN",
         "best-known deviation %: MBO-DC-S/insertion " + num(mbo, 2) + " vs SA/insertion " + num(sa, 2) + " [" +
             num(seconds_since(started), 1) + " s]");
}

}  // namespace

int main() {
  try {
    exact_oracles();
    schedule_identity();
    delta_soundness();
    published_reproduction();
    small_problem_quality();
    sa_statistics();
    mbo_accounting();
    determinism();
    medium_ordering();
  } catch (const std::exception& e) {
    std::cout << "FAIL  acceptance suite aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
