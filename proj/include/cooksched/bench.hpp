#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cooksched/constructive.hpp"
#include "cooksched/error.hpp"
#include "cooksched/exact.hpp"
#include "cooksched/generate.hpp"
#include "cooksched/instance.hpp"
#include "cooksched/io.hpp"
#include "cooksched/mbo.hpp"
#include "cooksched/neighborhood.hpp"
#include "cooksched/rng.hpp"
#include "cooksched/sa.hpp"

namespace cooksched::bench {

// ---------------------------------------------------------------------------
// Algorithms

enum class Family { NN, CH, CHOrOpt, SA, SABsf, MBO, Exact };

struct Algorithm {
  Family family = Family::NN;
  Consideration consideration = Consideration::Delayed;  // MBO only
  Sharing sharing = Sharing::Single;                     // MBO only

  /// Deterministic algorithms run once per instance and take no scheme.
  bool deterministic() const {
    return family == Family::NN || family == Family::CH || family == Family::CHOrOpt ||
           family == Family::Exact;
  }

  std::string id() const {
    switch (family) {
      case Family::NN: return "NN";
      case Family::CH: return "CH";
      case Family::CHOrOpt: return "CHOrOpt";
      case Family::SA: return "SA";
      case Family::SABsf: return "SA-BSF";
      case Family::MBO: return variant_name(consideration, sharing);
      case Family::Exact: return "EXACT";
    }
    return "?";
  }

  friend bool operator==(const Algorithm&, const Algorithm&) = default;
};

inline Algorithm parse_algorithm(std::string_view text) {
  if (text == "NN") return {Family::NN};
  if (text == "CH") return {Family::CH};
  if (text == "CHOrOpt") return {Family::CHOrOpt};
  if (text == "SA") return {Family::SA};
  if (text == "SA-BSF") return {Family::SABsf};
  if (text == "EXACT") return {Family::Exact};
  if (text.size() == 8 && text.substr(0, 4) == "MBO-" && text[6] == '-') {
    const auto c = text.substr(4, 2);
    const char s = text[7];
    if ((c == "IC" || c == "DC") && (s == 'M' || s == 'S')) {
      return {Family::MBO, c == "IC" ? Consideration::Immediate : Consideration::Delayed,
              s == 'M' ? Sharing::Multi : Sharing::Single};
    }
  }
  throw ConfigError("unknown algorithm '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Presets

struct Preset {
  std::string name;
  std::uint64_t K = 0;
  std::uint64_t sa_L = 0;
  std::optional<double> sa_alpha;  // unset: derived from the temperature bounds
  MboParams mbo{};
  std::size_t replications = 1;
};

inline Preset small_preset() {
  Preset p{"small", 40'000, 10, 0.995, {}, 10};
  p.mbo.n_birds = 21;
  p.mbo.k = 7;
  return p;
}

inline Preset medium_preset() {
  Preset p{"medium", 625'000, 312, 0.986, {}, 3};
  p.mbo.n_birds = 101;
  p.mbo.k = 7;
  return p;
}

inline Preset large_preset() {
  Preset p{"large", 5'000'000, 312, 0.9987, {}, 1};
  p.mbo.n_birds = 501;
  p.mbo.k = 11;
  return p;
}

inline std::uint64_t cubic_budget(std::size_t n) { return 5ULL * n * n * n; }

/// Named presets keep their published parameters. "auto" picks by size and,
/// when n is not 20 / 50 / 100, uses K = 5n^3 with a derived cooling factor.
inline Preset preset_for(std::string_view name, std::size_t n) {
  if (name == "small") return small_preset();
  if (name == "medium") return medium_preset();
  if (name == "large") return large_preset();
  if (name != "auto") throw ConfigError("unknown preset '" + std::string(name) + "'");
  Preset p = n <= 20 ? small_preset() : n <= 50 ? medium_preset() : large_preset();
  if (n != 20 && n != 50 && n != 100) {
    p.name += "-derived";
    p.K = cubic_budget(n);
    p.sa_alpha.reset();
    p.sa_L = std::min(p.sa_L, p.K);
    while (p.K < evaluations_per_flock_tour(p.mbo) && p.mbo.n_birds > 3) p.mbo.n_birds -= 2;
  }
  return p;
}

inline SaParams sa_params(const Preset& p, Scheme scheme, bool bsf) {
  SaParams s;
  s.K = p.K;
  s.L = p.sa_L;
  s.alpha = p.sa_alpha;
  s.scheme = scheme;
  s.bsf = bsf;
  return s;
}

inline MboParams mbo_params(const Preset& p, const Algorithm& alg, Scheme scheme) {
  MboParams m = p.mbo;
  m.K = p.K;
  m.consideration = alg.consideration;
  m.sharing = alg.sharing;
  m.scheme = scheme;
  return m;
}

// ---------------------------------------------------------------------------
// Records

struct RunRecord {
  std::string instance;
  std::string algorithm;
  std::string scheme;  // "-" for deterministic algorithms
  std::size_t replication = 0;
  std::uint64_t seed = 0;
  double cost = 0.0;
  double time_s = 0.0;
  std::uint64_t evaluations = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Seed of one replication: splitmix64(FNV-1a("master|instance|algorithm|scheme|rep")).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view instance, std::string_view algorithm,
                                 std::string_view scheme, std::size_t replication) {
  std::string key = std::to_string(master);
  key += '|';
  key += instance;
  key += '|';
  key += algorithm;
  key += '|';
  key += scheme;
  key += '|';
  key += std::to_string(replication);
  return mix64(fnv1a(key));
}

// ---------------------------------------------------------------------------
// Experiment configuration

struct ExperimentConfig {
  std::vector<Instance> instances;
  std::vector<Algorithm> algorithms;
  std::vector<Scheme> schemes;
  std::optional<std::size_t> replications;  // unset: preset default
  std::uint64_t master_seed = 1;
  std::string preset = "auto";
  std::optional<std::uint64_t> K;  // overrides the preset budget
  bool record_timing = true;
  std::size_t workers = 0;  // 0: COOKSCHED_WORKERS or hardware concurrency
  std::size_t exact_cap = kHeldKarpDefaultCap;
};

inline std::size_t default_workers() {
  if (const char* env = std::getenv("COOKSCHED_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Generator entries look like
///   {"generate": {"n": 20, "count": 10, "seed": 1, "prefix": "S",
///                 "rect": [20, 30], "stove": [2, 4], "target_fraction": 0.5}}
/// and expand into `count` instances with consecutive seeds.
inline std::vector<Instance> expand_generator(const nlohmann::json& g) {
  GeneratorSpec spec;
  spec.n = g.at("n").get<std::size_t>();
  spec.seed = g.value("seed", std::uint64_t{1});
  if (g.contains("rect")) spec.rect = {g["rect"].at(0).get<double>(), g["rect"].at(1).get<double>()};
  if (g.contains("stove")) spec.stove = {g["stove"].at(0).get<double>(), g["stove"].at(1).get<double>()};
  spec.target_fraction = g.value("target_fraction", 0.5);
  const auto count = g.value("count", std::size_t{1});
  const std::string prefix = g.value("prefix", std::string{});
  std::vector<Instance> out;
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorSpec s = spec;
    s.seed = spec.seed + i;
    Instance inst = generate_instance(s);
    if (!prefix.empty()) inst.name = prefix + std::to_string(i + 1);
    out.push_back(std::move(inst));
  }
  return out;
}

inline ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {}) {
  ExperimentConfig cfg;
  try {
    for (const auto& entry : j.at("instances")) {
      if (entry.is_string()) {
        std::filesystem::path p = entry.get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        cfg.instances.push_back(read_instance(p));
      } else if (entry.contains("generate")) {
        for (auto& inst : expand_generator(entry.at("generate"))) cfg.instances.push_back(std::move(inst));
      } else {
        cfg.instances.push_back(instance_from_json(entry));
      }
    }
    for (const auto& a : j.at("algorithms")) cfg.algorithms.push_back(parse_algorithm(a.get<std::string>()));
    if (j.contains("schemes")) {
      for (const auto& s : j.at("schemes")) cfg.schemes.push_back(parse_scheme(s.get<std::string>()));
    }
    if (j.contains("replications")) cfg.replications = j.at("replications").get<std::size_t>();
    cfg.master_seed = j.value("master_seed", std::uint64_t{1});
    cfg.preset = j.value("presets", std::string("auto"));
    if (j.contains("K")) cfg.K = j.at("K").get<std::uint64_t>();
    cfg.record_timing = j.value("timing", true);
    if (j.contains("workers")) cfg.workers = j.at("workers").get<std::size_t>();
    if (j.contains("exact_cap")) cfg.exact_cap = j.at("exact_cap").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad bench config: ") + e.what());
  }
  std::map<std::string, int> names;
  for (const auto& inst : cfg.instances) {
    if (++names[inst.name] > 1) throw ConfigError("duplicate instance name '" + inst.name + "'");
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Running

namespace detail {

struct Task {
  std::size_t instance = 0;
  Algorithm algorithm;
  Scheme scheme = Scheme::Insertion;
  std::size_t replication = 0;
};

struct Prepared {
  CostMatrix matrix;
  Preset preset;
  double c_ref = 0.0;
  std::optional<Tour> reference;
};

inline double elapsed(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

inline RunRecord execute(const Task& task, const Instance& inst, const Prepared& prep,
                         const ExperimentConfig& cfg) {
  RunRecord rec;
  rec.instance = inst.name;
  rec.algorithm = task.algorithm.id();
  rec.scheme = task.algorithm.deterministic() ? "-" : std::string(to_string(task.scheme));
  rec.replication = task.replication;
  rec.seed = derive_seed(cfg.master_seed, rec.instance, rec.algorithm, rec.scheme, rec.replication);
  const auto& m = prep.matrix;
  const auto started = std::chrono::steady_clock::now();
  switch (task.algorithm.family) {
    case Family::NN: rec.cost = tour_cost(nearest_neighbor(m, 0), m); break;
    case Family::CH: rec.cost = tour_cost(convex_hull_tour(inst), m); break;
    case Family::CHOrOpt: rec.cost = tour_cost(or_opt(convex_hull_tour(inst), m), m); break;
    case Family::Exact: rec.cost = held_karp(m, cfg.exact_cap).cost; break;
    case Family::SA:
    case Family::SABsf: {
      Rng rng(rec.seed);
      const auto r = run_sa(m, sa_params(prep.preset, task.scheme, task.algorithm.family == Family::SABsf), rng,
                            prep.c_ref, prep.reference);
      rec.cost = r.best_cost;
      rec.evaluations = r.evaluations_used;
      break;
    }
    case Family::MBO: {
      Rng rng(rec.seed);
      const auto r = run_mbo(m, mbo_params(prep.preset, task.algorithm, task.scheme), rng);
      rec.cost = r.best_cost;
      rec.evaluations = r.evaluations_used;
      break;
    }
  }
  rec.time_s = cfg.record_timing ? elapsed(started) : 0.0;
  return rec;
}

}  // namespace detail

/// Runs the cross product instances x algorithms x schemes x replications.
/// Deterministic algorithms run once per instance. Every record derives its
/// seed from the master seed, so the output is independent of worker count.
/// Throws if any heuristic beats a proven optimum.
inline std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.instances.empty()) throw ConfigError("bench: no instances");
  if (cfg.algorithms.empty()) throw ConfigError("bench: no algorithms");
  const bool needs_scheme = std::any_of(cfg.algorithms.begin(), cfg.algorithms.end(),
                                        [](const Algorithm& a) { return !a.deterministic(); });
  if (needs_scheme && cfg.schemes.empty()) throw ConfigError("bench: metaheuristics need at least one scheme");

  std::vector<detail::Prepared> prepared;
  std::vector<detail::Task> tasks;
  for (std::size_t i = 0; i < cfg.instances.size(); ++i) {
    const Instance& inst = cfg.instances[i];
    detail::Prepared prep;
    prep.matrix = cost_matrix(inst);
    prep.preset = preset_for(cfg.preset, inst.size());
    if (cfg.K) {
      prep.preset.K = *cfg.K;
      prep.preset.sa_alpha.reset();
      prep.preset.sa_L = std::min(prep.preset.sa_L, *cfg.K);
    }
    const std::size_t reps = cfg.replications.value_or(prep.preset.replications);
    bool wants_sa = false;
    for (const auto& alg : cfg.algorithms) {
      if (alg.deterministic()) {
        if ((alg.family == Family::CH || alg.family == Family::CHOrOpt) && !inst.has_points()) continue;
        if (alg.family == Family::Exact && inst.size() > cfg.exact_cap) continue;
        tasks.push_back({i, alg, Scheme::Insertion, 0});
        continue;
      }
      wants_sa = wants_sa || alg.family == Family::SA || alg.family == Family::SABsf;
      for (const Scheme s : cfg.schemes) {
        for (std::size_t r = 0; r < reps; ++r) tasks.push_back({i, alg, s, r});
      }
    }
    if (wants_sa) {
      prep.reference = reference_tour(inst, prep.matrix);
      prep.c_ref = tour_cost(*prep.reference, prep.matrix);
    }
    prepared.push_back(std::move(prep));
  }

  std::vector<RunRecord> records(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      try {
        const auto& task = tasks[t];
        records[t] = detail::execute(task, cfg.instances[task.instance], prepared[task.instance], cfg);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(cfg.workers ? cfg.workers : default_workers(), tasks.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::map<std::string, double> optimum;
  for (const auto& r : records) {
    if (r.algorithm == "EXACT") optimum[r.instance] = r.cost;
  }
  for (const auto& r : records) {
    const auto it = optimum.find(r.instance);
    if (it != optimum.end() && r.cost < it->second - 1e-9 * (1.0 + it->second)) {
      throw Error("sanity gate: " + r.algorithm + "/" + r.scheme + " on " + r.instance + " reports " +
                  format_double(r.cost) + " below the optimum " + format_double(it->second));
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view kCsvHeader = "instance,algorithm,scheme,replication,seed,cost,time_s,evaluations";

inline std::string to_csv(const std::vector<RunRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    if (r.instance.find_first_of(",\"\n\r") != std::string::npos) {
      throw ValidationError("instance name '" + r.instance + "' cannot be written to CSV");
    }
    out += r.instance + ',' + r.algorithm + ',' + r.scheme + ',' + std::to_string(r.replication) + ',' +
           std::to_string(r.seed) + ',' + format_double(r.cost) + ',' + format_double(r.time_s) + ',' +
           std::to_string(r.evaluations) + '\n';
  }
  return out;
}

inline std::vector<RunRecord> from_csv(std::string_view text) {
  std::vector<RunRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw ValidationError("run CSV: unexpected header");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() != 8) throw ValidationError("run CSV line " + std::to_string(line_no) + ": expected 8 fields");
    try {
      out.push_back({f[0], f[1], f[2], std::stoull(f[3]), std::stoull(f[4]), parse_double(f[5]),
                     parse_double(f[6]), std::stoull(f[7])});
    } catch (const std::logic_error&) {
      throw ValidationError("run CSV line " + std::to_string(line_no) + ": bad integer field");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Summaries

struct Reference {
  double value = 0.0;
  bool proven = true;  // false: best-known only
};

using ReferenceTable = std::map<std::string, Reference>;

struct SummaryRow {
  std::string algorithm;
  std::string scheme;
  double best = 0.0;
  double avg = 0.0;
  double worst = 0.0;
  std::optional<double> deviation_pct;
  bool against_best_known = false;
};

/// Optima from EXACT records; other instances fall back to `best_known`.
inline ReferenceTable references_from(const std::vector<RunRecord>& records,
                                      const std::map<std::string, double>& best_known = {}) {
  ReferenceTable refs;
  for (const auto& [name, value] : best_known) refs[name] = {value, false};
  for (const auto& r : records) {
    if (r.algorithm == "EXACT") refs[r.instance] = {r.cost, true};
  }
  return refs;
}

/// Lowest cost per instance, merged with previously known values.
inline std::map<std::string, double> update_best_known(const std::vector<RunRecord>& records,
                                                       std::map<std::string, double> known = {}) {
  for (const auto& r : records) {
    auto [it, inserted] = known.emplace(r.instance, r.cost);
    if (!inserted) it->second = std::min(it->second, r.cost);
  }
  return known;
}

namespace detail {

inline double sorted_mean(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double s = 0.0;
  for (const double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace detail

/// One row per (algorithm, scheme). avg is the mean of per-instance averages;
/// the deviation is the mean of per-instance (avg_i - ref_i) / ref_i * 100 and
/// is omitted when any instance lacks a reference value. Rows are ordered by
/// deviation, then name, so the output does not depend on record order.
inline std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records, const ReferenceTable& refs) {
  if (records.empty()) throw ValidationError("summarize: no records");
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::vector<double>>> groups;
  for (const auto& r : records) groups[{r.algorithm, r.scheme}][r.instance].push_back(r.cost);

  std::vector<SummaryRow> rows;
  for (const auto& [key, per_instance] : groups) {
    SummaryRow row{key.first, key.second, std::numeric_limits<double>::infinity(), 0.0,
                   -std::numeric_limits<double>::infinity(), std::nullopt, false};
    std::vector<double> averages;
    std::vector<double> deviations;
    bool all_refs = true;
    for (const auto& [name, costs] : per_instance) {
      const double avg = detail::sorted_mean(costs);
      averages.push_back(avg);
      row.best = std::min(row.best, *std::min_element(costs.begin(), costs.end()));
      row.worst = std::max(row.worst, *std::max_element(costs.begin(), costs.end()));
      const auto it = refs.find(name);
      if (it == refs.end()) {
        all_refs = false;
        continue;
      }
      row.against_best_known = row.against_best_known || !it->second.proven;
      deviations.push_back((avg - it->second.value) / it->second.value * 100.0);
    }
    row.avg = detail::sorted_mean(averages);
    if (all_refs) row.deviation_pct = detail::sorted_mean(deviations);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
    const double da = a.deviation_pct.value_or(std::numeric_limits<double>::infinity());
    const double db = b.deviation_pct.value_or(std::numeric_limits<double>::infinity());
    if (da != db) return da < db;
    if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
    return a.scheme < b.scheme;
  });
  return rows;
}

inline const SummaryRow* find_row(const std::vector<SummaryRow>& rows, std::string_view algorithm,
                                  std::string_view scheme) {
  for (const auto& r : rows) {
    if (r.algorithm == algorithm && r.scheme == scheme) return &r;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Markdown

inline std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

/// Deviation table, best first.
inline std::string summary_markdown(const std::vector<SummaryRow>& rows) {
  const bool any_best_known =
      std::any_of(rows.begin(), rows.end(), [](const SummaryRow& r) { return r.against_best_known; });
  std::string out = "| Algorithm | Neighborhood | Best | Avg | Worst | Dev. (%) |\n";
  out += "|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    std::string dev = "n/a";
    if (r.deviation_pct) dev = fixed2(*r.deviation_pct) + (r.against_best_known ? "*" : "");
    out += "| " + r.algorithm + " | " + (r.scheme == "-" ? "" : r.scheme) + " | " + fixed2(r.best) + " | " +
           fixed2(r.avg) + " | " + fixed2(r.worst) + " | " + dev + " |\n";
  }
  if (any_best_known) out += "\n\\* deviation from the best-known value, not a proven optimum.\n";
  return out;
}

/// Per-instance table: one column per deterministic algorithm, Best/Avg/Worst
/// per (metaheuristic, scheme), and a closing Average row.
inline std::string instance_markdown(const std::vector<RunRecord>& records) {
  std::vector<std::string> instances;
  std::vector<std::pair<std::string, std::string>> columns;
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::vector<double>>> cells;
  for (const auto& r : records) {
    if (std::find(instances.begin(), instances.end(), r.instance) == instances.end()) instances.push_back(r.instance);
    const std::pair<std::string, std::string> key{r.algorithm, r.scheme};
    if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    cells[key][r.instance].push_back(r.cost);
  }
  std::string header = "| Problem |";
  std::string rule = "|---|";
  for (const auto& [alg, scheme] : columns) {
    if (scheme == "-") {
      header += " " + alg + " |";
      rule += "---|";
    } else {
      for (const char* stat : {"Best", "Avg", "Worst"}) {
        header += " " + alg + "/" + scheme + " " + stat + " |";
        rule += "---|";
      }
    }
  }
  std::string out = header + "\n" + rule + "\n";
  std::map<std::pair<std::string, std::string>, std::vector<std::array<double, 3>>> column_stats;
  for (const auto& inst : instances) {
    out += "| " + inst + " |";
    for (const auto& key : columns) {
      const auto it = cells[key].find(inst);
      const int width = key.second == "-" ? 1 : 3;
      if (it == cells[key].end()) {
        for (int i = 0; i < width; ++i) out += "  |";
        continue;
      }
      const auto& v = it->second;
      const std::array<double, 3> s{*std::min_element(v.begin(), v.end()), detail::sorted_mean(v),
                                    *std::max_element(v.begin(), v.end())};
      column_stats[key].push_back(s);
      if (width == 1) {
        out += " " + fixed2(s[1]) + " |";
      } else {
        out += " " + fixed2(s[0]) + " | " + fixed2(s[1]) + " | " + fixed2(s[2]) + " |";
      }
    }
    out += "\n";
  }
  out += "| Average |";
  for (const auto& key : columns) {
    const auto& stats = column_stats[key];
    const int width = key.second == "-" ? 1 : 3;
    for (int i = (width == 1 ? 1 : 0); i < (width == 1 ? 2 : 3); ++i) {
      std::vector<double> col;
      for (const auto& s : stats) col.push_back(s[static_cast<std::size_t>(i)]);
      out += col.empty() ? std::string("  |") : " " + fixed2(detail::sorted_mean(col)) + " |";
    }
  }
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Best-known sidecar

inline std::map<std::string, double> read_best_known(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  try {
    return nlohmann::json::parse(read_text(path)).get<std::map<std::string, double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

inline void write_best_known(const std::filesystem::path& path, const std::map<std::string, double>& known) {
  write_text(path, nlohmann::json(known).dump(2) + "\n");
}

}  // namespace cooksched::bench
