// Command-line front end: gen, solve, exact, bench, table.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cooksched/bench.hpp"
#include "cooksched/constructive.hpp"
#include "cooksched/exact.hpp"
#include "cooksched/generate.hpp"
#include "cooksched/io.hpp"
#include "cooksched/mbo.hpp"
#include "cooksched/sa.hpp"

namespace fs = std::filesystem;
using namespace cooksched;

namespace {

std::string tour_text(const Tour& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(t[i]);
  }
  return s;
}

void print_solution(const std::string& label, double cost, const Tour& tour, bool as_json) {
  if (as_json) {
    nlohmann::ordered_json j;
    j["algorithm"] = label;
    j["cost"] = cost;
    j["tour"] = tour.order;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << label << " cost " << format_double(cost) << "\n" << "tour " << tour_text(tour) << "\n";
  }
}

struct GenOptions {
  std::size_t n = 20;
  std::size_t count = 10;
  std::uint64_t seed = 1;
  double width = 20.0;
  double height = 30.0;
  double p_low = 2.0;
  double p_high = 4.0;
  double target = 0.5;
  std::string prefix = "S";
  std::string out = ".";
};

int cmd_gen(const GenOptions& o) {
  fs::create_directories(o.out);
  for (std::size_t i = 0; i < o.count; ++i) {
    GeneratorSpec spec{o.n, o.seed + i, {o.width, o.height}, {o.p_low, o.p_high}, o.target};
    Instance inst = generate_instance(spec);
    inst.name = o.prefix + std::to_string(i + 1);
    const fs::path path = fs::path(o.out) / (inst.name + ".json");
    write_instance(path, inst);
    std::cout << path.string() << "\n";
  }
  return 0;
}

struct SolveOptions {
  std::string instance;
  std::string algorithm = "MBO-DC-S";
  std::string scheme = "insertion";
  std::uint64_t seed = 1;
  std::string preset = "auto";
  std::uint64_t K = 0;
  std::string trace;
  std::uint64_t trace_every = 100;
  bool or_opt_single_pass = false;
  bool json = false;
};

int cmd_solve(const SolveOptions& o) {
  const Instance inst = read_instance(o.instance);
  const CostMatrix m = cost_matrix(inst);
  const bench::Algorithm alg = bench::parse_algorithm(o.algorithm);
  const Scheme scheme = parse_scheme(o.scheme);
  bench::Preset preset = bench::preset_for(o.preset, inst.size());
  if (o.K != 0) {
    preset.K = o.K;
    preset.sa_alpha.reset();
    preset.sa_L = std::min(preset.sa_L, o.K);
  }

  switch (alg.family) {
    case bench::Family::NN: {
      const Tour t = nearest_neighbor(m, 0);
      print_solution(alg.id(), tour_cost(t, m), t, o.json);
      return 0;
    }
    case bench::Family::CH:
    case bench::Family::CHOrOpt: {
      Tour t = convex_hull_tour(inst);
      if (alg.family == bench::Family::CHOrOpt) {
        if (inst.size() < kMinOrOptSize) std::cerr << "note: Or-opt needs at least 5 orders; tour unchanged\n";
        t = or_opt(t, m, {o.or_opt_single_pass});
      }
      print_solution(alg.id(), tour_cost(t, m), t, o.json);
      return 0;
    }
    case bench::Family::Exact: {
      const auto s = held_karp(m);
      print_solution(alg.id(), s.cost, s.tour, o.json);
      return 0;
    }
    case bench::Family::SA:
    case bench::Family::SABsf: {
      SaParams p = bench::sa_params(preset, scheme, alg.family == bench::Family::SABsf);
      if (!o.trace.empty()) p.trace_every = o.trace_every;
      const Tour ref = reference_tour(inst, m);
      Rng rng(o.seed);
      const RunResult r = run_sa(m, p, rng, tour_cost(ref, m), ref);
      if (!o.trace.empty()) {
        std::string csv = "iteration,current_cost,best_cost,T\n";
        for (const auto& tp : r.trace) {
          csv += std::to_string(tp.iteration) + "," + format_double(tp.current_cost) + "," +
                 format_double(tp.best_cost) + "," + format_double(tp.temperature) + "\n";
        }
        write_text(o.trace, csv);
      }
      print_solution(alg.id() + "/" + o.scheme, r.best_cost, r.best_tour, o.json);
      return 0;
    }
    case bench::Family::MBO: {
      Rng rng(o.seed);
      const RunResult r = run_mbo(m, bench::mbo_params(preset, alg, scheme), rng);
      print_solution(alg.id() + "/" + o.scheme, r.best_cost, r.best_tour, o.json);
      return 0;
    }
  }
  return 1;
}

int cmd_exact(const std::string& instance, std::size_t cap, bool json) {
  const Instance inst = read_instance(instance);
  const auto s = held_karp(cost_matrix(inst), cap);
  print_solution("EXACT", s.cost, s.tour, json);
  return 0;
}

struct BenchOptions {
  std::string config;
  std::string out = "runs.csv";
  std::string summary;
  std::string best_known;
  bool no_timing = false;
  std::size_t workers = 0;
};

int cmd_bench(const BenchOptions& o) {
  const fs::path cfg_path = o.config;
  bench::ExperimentConfig cfg =
      bench::parse_config(nlohmann::json::parse(read_text(cfg_path)), cfg_path.parent_path());
  if (o.no_timing) cfg.record_timing = false;
  if (o.workers) cfg.workers = o.workers;
  const auto records = bench::run_experiment(cfg);
  write_text(o.out, bench::to_csv(records));
  std::cerr << records.size() << " runs written to " << o.out << "\n";

  std::map<std::string, double> known;
  if (!o.best_known.empty()) {
    known = bench::update_best_known(records, bench::read_best_known(o.best_known));
    bench::write_best_known(o.best_known, known);
  }
  if (!o.summary.empty()) {
    const auto rows = bench::summarize(records, bench::references_from(records, known));
    write_text(o.summary, bench::instance_markdown(records) + "\n" + bench::summary_markdown(rows));
  }
  return 0;
}

int cmd_table(const std::string& runs, const std::string& best_known, const std::string& layout) {
  const auto records = bench::from_csv(read_text(runs));
  const auto known = best_known.empty() ? std::map<std::string, double>{} : bench::read_best_known(best_known);
  if (layout == "instances") {
    std::cout << bench::instance_markdown(records);
  } else {
    std::cout << bench::summary_markdown(bench::summarize(records, bench::references_from(records, known)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cook-scheduling ATSP solvers and benchmark harness"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate random instances");
  g->add_option("-n,--orders", gen.n, "Orders per instance");
  g->add_option("--count", gen.count, "Number of instances");
  g->add_option("--seed", gen.seed, "Seed of the first instance; later ones use seed+1, ...");
  g->add_option("--width", gen.width);
  g->add_option("--height", gen.height);
  g->add_option("--p-low", gen.p_low, "Lowest stove time");
  g->add_option("--p-high", gen.p_high, "Highest stove time");
  g->add_option("--target-fraction", gen.target, "Stove-dominated share of convex-hull arcs");
  g->add_option("--prefix", gen.prefix, "Instance name prefix");
  g->add_option("-o,--out", gen.out, "Output directory");

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Run one algorithm on one instance");
  s->add_option("instance", solve.instance)->required()->check(CLI::ExistingFile);
  s->add_option("-a,--algorithm", solve.algorithm, "NN, CH, CHOrOpt, SA, SA-BSF, MBO-{IC,DC}-{M,S}, EXACT");
  s->add_option("-s,--scheme", solve.scheme, "2opt, insertion or mixed");
  s->add_option("--seed", solve.seed);
  s->add_option("--preset", solve.preset, "small, medium, large or auto");
  s->add_option("-K,--evaluations", solve.K, "Override the evaluation budget");
  s->add_option("--trace", solve.trace, "SA only: write a cost trace CSV");
  s->add_option("--trace-every", solve.trace_every);
  s->add_flag("--single-pass", solve.or_opt_single_pass, "CHOrOpt: one pass of Or-opt instead of a local optimum");
  s->add_flag("--json", solve.json);

  std::string exact_instance;
  std::size_t exact_cap = kHeldKarpDefaultCap;
  bool exact_json = false;
  auto* e = app.add_subcommand("exact", "Held-Karp optimum");
  e->add_option("instance", exact_instance)->required()->check(CLI::ExistingFile);
  e->add_option("--cap", exact_cap, "Largest n accepted");
  e->add_flag("--json", exact_json);

  BenchOptions bo;
  auto* b = app.add_subcommand("bench", "Run an experiment from a JSON config");
  b->add_option("config", bo.config)->required()->check(CLI::ExistingFile);
  b->add_option("-o,--out", bo.out, "Run records CSV");
  b->add_option("--summary", bo.summary, "Markdown tables");
  b->add_option("--best-known", bo.best_known, "Best-known sidecar JSON (read and updated)");
  b->add_flag("--no-timing", bo.no_timing, "Write time_s as 0 for byte-reproducible output");
  b->add_option("-j,--workers", bo.workers);

  std::string table_runs;
  std::string table_best_known;
  std::string table_layout = "summary";
  auto* t = app.add_subcommand("table", "Summarize a run CSV as markdown");
  t->add_option("runs", table_runs)->required()->check(CLI::ExistingFile);
  t->add_option("--best-known", table_best_known);
  t->add_option("--layout", table_layout)->check(CLI::IsMember({"summary", "instances"}));

  CLI11_PARSE(app, argc, argv);
  try {
    if (*g) return cmd_gen(gen);
    if (*s) return cmd_solve(solve);
    if (*e) return cmd_exact(exact_instance, exact_cap, exact_json);
    if (*b) return cmd_bench(bo);
    if (*t) return cmd_table(table_runs, table_best_known, table_layout);
  } catch (const cooksched::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 1;
}
