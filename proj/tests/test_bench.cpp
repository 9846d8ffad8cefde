#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <random>

#include "cooksched/bench.hpp"
#include "cooksched/io.hpp"
#include "support.hpp"

using namespace cooksched;
using namespace cooksched::bench;
using namespace testing_support;

namespace {

RunRecord rec(std::string inst, std::string alg, std::string scheme, double cost, std::size_t rep = 0) {
  return {std::move(inst), std::move(alg), std::move(scheme), rep, 0, cost, 0.0, 0};
}

ExperimentConfig tiny_config() {
  ExperimentConfig cfg = parse_config(nlohmann::json::parse(R"({
    "instances": [{"generate": {"n": 10, "count": 2, "seed": 5, "prefix": "T"}}],
    "algorithms": ["NN", "CH", "CHOrOpt", "SA", "SA-BSF", "MBO-IC-M", "MBO-DC-S", "EXACT"],
    "schemes": ["2opt", "insertion"],
    "replications": 3, "master_seed": 11, "K": 2000, "timing": false, "workers": 2
  })"));
  return cfg;
}

}  // namespace

TEST(Algorithm, ParseIds) {
  for (const char* id : {"NN", "CH", "CHOrOpt", "SA", "SA-BSF", "MBO-IC-M", "MBO-IC-S", "MBO-DC-M", "MBO-DC-S", "EXACT"}) {
    EXPECT_EQ(parse_algorithm(id).id(), id);
  }
  EXPECT_THROW(parse_algorithm("MBO-XX-S"), ConfigError);
  EXPECT_THROW(parse_algorithm("GA"), ConfigError);
}

TEST(Presets, SizeBudgets) {
  EXPECT_EQ(preset_for("small", 20).K, 40000u);
  EXPECT_EQ(preset_for("medium", 50).K, 625000u);
  EXPECT_EQ(preset_for("large", 100).K, 5000000u);
  EXPECT_EQ(preset_for("auto", 20).K, 40000u);
  EXPECT_EQ(preset_for("auto", 12).K, 5u * 12 * 12 * 12);
  EXPECT_EQ(preset_for("small", 20).replications, 10u);
  EXPECT_EQ(preset_for("medium", 50).replications, 3u);
  EXPECT_EQ(preset_for("large", 100).replications, 1u);
  EXPECT_THROW(preset_for("huge", 20), ConfigError);
}

TEST(Seeds, StableAndDistinct) {
  EXPECT_EQ(derive_seed(1, "S1", "SA", "insertion", 0), derive_seed(1, "S1", "SA", "insertion", 0));
  EXPECT_NE(derive_seed(1, "S1", "SA", "insertion", 0), derive_seed(1, "S1", "SA", "insertion", 1));
  EXPECT_NE(derive_seed(1, "S1", "SA", "insertion", 0), derive_seed(2, "S1", "SA", "insertion", 0));
  EXPECT_NE(derive_seed(1, "S1", "SA", "insertion", 0), derive_seed(1, "S1", "SA", "2opt", 0));
}

TEST(Summarize, DeviationExample) {
  const auto rows = summarize({rec("S1", "MBO-DC-S", "insertion", 81.44), rec("S1", "EXACT", "-", 81.13)},
                              references_from({rec("S1", "EXACT", "-", 81.13)}));
  const SummaryRow* r = find_row(rows, "MBO-DC-S", "insertion");
  ASSERT_NE(r, nullptr);
  ASSERT_TRUE(r->deviation_pct.has_value());
  EXPECT_EQ(fixed2(*r->deviation_pct), "0.38");
  EXPECT_EQ(fixed2(*find_row(rows, "EXACT", "-")->deviation_pct), "0.00");
}

TEST(Summarize, SingleRecord) {
  const auto rows = summarize({rec("S1", "NN", "-", 90.0)}, {});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].best, 90.0);
  EXPECT_EQ(rows[0].avg, 90.0);
  EXPECT_EQ(rows[0].worst, 90.0);
  EXPECT_FALSE(rows[0].deviation_pct.has_value());
}

TEST(Summarize, MeanOfInstanceMeans) {
  // Instance A has four runs, B one: the average weighs instances equally.
  std::vector<RunRecord> rs{rec("A", "SA", "mixed", 10), rec("A", "SA", "mixed", 10, 1), rec("A", "SA", "mixed", 10, 2),
                            rec("A", "SA", "mixed", 10, 3), rec("B", "SA", "mixed", 20)};
  ReferenceTable refs{{"A", {10.0, true}}, {"B", {10.0, true}}};
  const auto rows = summarize(rs, refs);
  EXPECT_DOUBLE_EQ(rows[0].avg, 15.0);
  EXPECT_DOUBLE_EQ(*rows[0].deviation_pct, 50.0);
  EXPECT_EQ(rows[0].best, 10.0);
  EXPECT_EQ(rows[0].worst, 20.0);
}

TEST(Summarize, MissingReferenceOmitsDeviation) {
  const auto rows = summarize({rec("A", "SA", "mixed", 10), rec("B", "SA", "mixed", 12)}, {{"A", {9.0, true}}});
  EXPECT_FALSE(rows[0].deviation_pct.has_value());
  EXPECT_NE(summary_markdown(rows).find("n/a"), std::string::npos);
}

TEST(Summarize, BestKnownIsLabelled) {
  const auto known = update_best_known({rec("M1", "SA", "mixed", 12), rec("M1", "NN", "-", 14)});
  EXPECT_EQ(known.at("M1"), 12.0);
  const auto rows = summarize({rec("M1", "NN", "-", 14)}, references_from({}, known));
  EXPECT_TRUE(rows[0].against_best_known);
  EXPECT_NE(summary_markdown(rows).find("*"), std::string::npos);
}

TEST(Summarize, SortedByDeviationAndOrderFree) {
  std::vector<RunRecord> rs;
  Rng rng(1);
  for (const char* inst : {"A", "B", "C"}) {
    rs.push_back(rec(inst, "EXACT", "-", 50.0));
    for (const char* alg : {"SA", "MBO-DC-S", "NN"}) {
      for (std::size_t rep = 0; rep < 5; ++rep) rs.push_back(rec(inst, alg, "insertion", 50.0 + uniform_real(rng, 0, 10), rep));
    }
  }
  const auto rows = summarize(rs, references_from(rs));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(*rows[i - 1].deviation_pct, *rows[i].deviation_pct);
  std::mt19937_64 shuffler(7);
  for (int t = 0; t < 10; ++t) {
    std::shuffle(rs.begin(), rs.end(), shuffler);
    const auto again = summarize(rs, references_from(rs));
    ASSERT_EQ(again.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_EQ(again[i].algorithm, rows[i].algorithm);
      EXPECT_EQ(again[i].avg, rows[i].avg);
      EXPECT_EQ(*again[i].deviation_pct, *rows[i].deviation_pct);
    }
  }
}

TEST(Csv, EmptyIsHeaderOnly) {
  EXPECT_EQ(to_csv({}), std::string(kCsvHeader) + "\n");
  EXPECT_TRUE(from_csv(to_csv({})).empty());
}

TEST(Csv, RoundTrip) {
  Rng rng(3);
  std::vector<RunRecord> rs;
  for (std::size_t i = 0; i < 50; ++i) {
    rs.push_back({"S" + std::to_string(i % 4), "MBO-DC-S", "mixed", i, rng(), uniform_real(rng, 50, 150),
                  uniform_real(rng, 0, 2), 40005});
  }
  EXPECT_EQ(from_csv(to_csv(rs)), rs);
  EXPECT_THROW(from_csv("instance,cost\nA,1\n"), ValidationError);
}

TEST(Config, RejectsUnknownKeys) {
  EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"instances": [], "algorithms": ["GA"]})")), ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"instances": [], "algorithms": ["SA"], "schemes": ["3opt"]})")),
               ConfigError);
  EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"instances": ["/nonexistent/x.json"], "algorithms": ["SA"]})")),
               IoError);
  EXPECT_THROW(parse_config(nlohmann::json::parse(R"({"algorithms": ["SA"]})")), ConfigError);
}

TEST(Experiment, CrossProductShape) {
  const auto records = run_experiment(tiny_config());
  std::map<std::pair<std::string, std::string>, std::size_t> count;
  for (const auto& r : records) {
    ++count[{r.algorithm, r.scheme}];
    EXPECT_GT(r.cost, 0.0);
    EXPECT_EQ(r.time_s, 0.0);
    const bool meta = r.algorithm.starts_with("SA") || r.algorithm.starts_with("MBO");
    if (meta) {
      EXPECT_GE(r.evaluations, 2000u);
    } else {
      EXPECT_EQ(r.evaluations, 0u);
    }
  }
  EXPECT_EQ((count[{"EXACT", "-"}]), 2u);
  EXPECT_EQ((count[{"NN", "-"}]), 2u);
  EXPECT_EQ((count[{"SA", "2opt"}]), 6u);
  EXPECT_EQ((count[{"MBO-DC-S", "insertion"}]), 6u);
  EXPECT_EQ(records.size(), 4u * 2 + 4u * 2 * 2 * 3);
}

TEST(Experiment, Deterministic) {
  const auto a = run_experiment(tiny_config());
  auto cfg = tiny_config();
  cfg.workers = 1;
  const auto b = run_experiment(cfg);
  EXPECT_EQ(to_csv(a), to_csv(b));
}

TEST(Experiment, SkipsInapplicable) {
  ExperimentConfig cfg;
  Instance m;
  m.name = "M";
  Rng rng(2);
  m.source = random_matrix(6, rng);
  cfg.instances.push_back(m);
  cfg.algorithms = {parse_algorithm("CH"), parse_algorithm("NN"), parse_algorithm("EXACT")};
  cfg.exact_cap = 5;
  const auto records = run_experiment(cfg);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].algorithm, "NN");
}

TEST(Markdown, InstanceTableHasAverageRow) {
  const std::vector<RunRecord> rs{rec("S1", "NN", "-", 85.5), rec("S2", "NN", "-", 90.5),
                                  rec("S1", "SA", "insertion", 83), rec("S2", "SA", "insertion", 85)};
  const std::string md = instance_markdown(rs);
  EXPECT_NE(md.find("| Average | 88.00 | 84.00 | 84.00 | 84.00 |"), std::string::npos) << md;
}
