#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

#include "pipeforge/core/csv.hpp"
#include "pipeforge/core/text.hpp"
#include "pipeforge/eval/metrics.hpp"
#include "pipeforge/eval/results.hpp"
#include "test_util.hpp"

using namespace pipeforge;
using namespace pipeforge::eval;

TEST(MacroF1, PerfectThreeClasses) {
  const std::vector<std::string> y{"a", "b", "c", "a", "b", "c"};
  EXPECT_DOUBLE_EQ(macro_f1(y, y), 1.0);
}

TEST(MacroF1, HalfRightBinary) {
  const std::vector<std::string> labels{"A", "A", "B", "B"};
  const std::vector<std::string> preds{"A", "B", "A", "B"};
  EXPECT_NEAR(macro_f1(preds, labels), 0.5, 1e-9);
}

TEST(MacroF1, SingleClassPredictionIsOneThird) {
  const std::vector<int> labels{0, 0, 1, 1};
  const std::vector<int> preds{0, 0, 0, 0};
  EXPECT_NEAR(macro_f1(preds, labels), 1.0 / 3.0, 1e-9);
}

TEST(MacroF1, InvariantUnderRelabeling) {
  const std::vector<int> labels{0, 1, 2, 2, 1, 0, 0, 2, 1, 1};
  const std::vector<int> preds{0, 2, 2, 1, 1, 0, 1, 2, 0, 1};
  const std::vector<int> perm{2, 0, 1};
  std::vector<int> l2, p2;
  for (int v : labels) l2.push_back(perm[static_cast<std::size_t>(v)]);
  for (int v : preds) p2.push_back(perm[static_cast<std::size_t>(v)]);
  EXPECT_NEAR(macro_f1(preds, labels), macro_f1(p2, l2), 1e-12);
}

TEST(MacroF1, PredictedClassAbsentFromLabelsOnlyCostsPrecision) {
  // Class c is never a label: it is excluded from the mean, but its
  // predictions count as misses for the true classes.
  const std::vector<std::string> labels{"a", "a", "b", "b"};
  const std::vector<std::string> preds{"a", "c", "b", "b"};
  // a: tp1 fn1 fp0 -> 2/3; b: tp2 -> 1.
  EXPECT_NEAR(macro_f1(preds, labels), (2.0 / 3.0 + 1.0) / 2.0, 1e-12);
}

TEST(MacroF1, Errors) {
  EXPECT_THROW(macro_f1(std::vector<int>{1}, std::vector<int>{1, 2}), LengthMismatch);
  EXPECT_THROW(macro_f1(std::vector<int>{}, std::vector<int>{}), InvalidArgument);
}

TEST(R2, Examples) {
  EXPECT_DOUBLE_EQ(r2({1, 2, 3}, {1, 2, 3}), 1.0);
  EXPECT_NEAR(r2({2, 2, 2}, {1, 2, 3}), 0.0, 1e-12);
  EXPECT_NEAR(r2({1, 2, 4}, {1, 2, 3}), 0.5, 1e-9);
}

TEST(R2, ShiftInvariant) {
  const std::vector<double> p{0.3, 1.9, 2.2, 4.5}, t{0.5, 2.0, 2.5, 4.0};
  std::vector<double> p2, t2;
  for (double x : p) p2.push_back(x + 17.25);
  for (double x : t) t2.push_back(x + 17.25);
  EXPECT_NEAR(r2(p, t), r2(p2, t2), 1e-12);
}

TEST(R2, Errors) {
  EXPECT_THROW(r2({1, 2}, {3, 3}), ZeroVariance);
  EXPECT_THROW(r2({1}, {1}), InvalidArgument);
  EXPECT_THROW(r2({1, 2}, {1, 2, 3}), LengthMismatch);
}

TEST(Mrr, Examples) {
  EXPECT_DOUBLE_EQ(mrr({1, 1, 1}), 1.0);
  EXPECT_NEAR(mrr({1, 2, 4}), 0.5833333333333334, 1e-9);
  EXPECT_THROW(mrr({}), InvalidArgument);
  EXPECT_THROW(mrr({0}), InvalidArgument);
}

TEST(Mrr, MonotoneInEachRank) {
  std::vector<int> ranks{3, 5, 2, 7};
  double prev = mrr(ranks);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    while (ranks[i] > 1) {
      --ranks[i];
      const double now = mrr(ranks);
      EXPECT_GE(now, prev);
      prev = now;
    }
  }
}

TEST(DiversityCorrelation, Examples) {
  EXPECT_NEAR(diversity_correlation({1, 2, 3, 4}, {2, 1, 4, 3}), 0.6, 1e-12);
  EXPECT_NEAR(diversity_correlation({4, 9, 1, 7}, {4, 9, 1, 7}), 1.0, 1e-12);
  EXPECT_NEAR(diversity_correlation({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0, 1e-12);
}

TEST(DiversityCorrelation, TiesMatchScipy) {
  EXPECT_NEAR(diversity_correlation({1, 1, 2, 3, 5}, {4, 2, 2, 3, 1}), -0.5526315789473686, 1e-12);
}

TEST(DiversityCorrelation, TruncatesToShorterRun) {
  EXPECT_NEAR(diversity_correlation({1, 2, 3, 4, 99, 0}, {2, 1, 4, 3}), 0.6, 1e-12);
}

TEST(DiversityCorrelation, Errors) {
  EXPECT_THROW(diversity_correlation({3, 3, 3}, {1, 2, 3}), DegenerateSequence);
  EXPECT_THROW(diversity_correlation({1}, {1, 2}), InvalidArgument);
}

TEST(PairedTTest, MatchesScipy) {
  const auto r = paired_t_test({0.81, 0.77, 0.92, 0.64, 0.70, 0.88}, {0.79, 0.71, 0.90, 0.66, 0.61, 0.80});
  EXPECT_NEAR(r.t, 2.421371388206437, 1e-9);
  EXPECT_NEAR(r.p_two_tailed, 0.06001579035332373, 1e-9);
  EXPECT_DOUBLE_EQ(r.degrees_of_freedom, 5.0);
  EXPECT_THROW(paired_t_test({1, 2}, {0, 1}), ZeroVariance);
}

TEST(FrequencyReport, SinglePipeline) {
  const auto f = frequency_report({RankedPipelines{{{"xgboost"}}, std::size_t{0}}});
  EXPECT_EQ(f.first_position, (CountTable{{"xgboost", 1}}));
  EXPECT_EQ(f.all_positions, (CountTable{{"xgboost", 1}}));
  EXPECT_EQ(f.top_model, (CountTable{{"xgboost", 1}}));
}

TEST(FrequencyReport, Empty) {
  const auto f = frequency_report({});
  EXPECT_TRUE(f.first_position.empty());
  EXPECT_TRUE(f.all_positions.empty());
  EXPECT_TRUE(f.top_model.empty());
}

TEST(FrequencyReport, HandTally) {
  const std::vector<RankedPipelines> runs{
      {{{"standardize", "lrl2"}, {"xgboost"}, {"standardize", "rf"}}, std::size_t{1}},
      {{{"xgboost"}, {"pca", "xgboost"}}, std::size_t{1}},
      {{{"standardize", "xgboost"}, {"rf"}}, std::nullopt},
  };
  const auto f = frequency_report(runs);
  EXPECT_EQ(f.first_position, (CountTable{{"standardize", 2}, {"xgboost", 2}, {"lrl2", 1}}));
  EXPECT_EQ(f.all_positions,
            (CountTable{{"xgboost", 4}, {"standardize", 3}, {"rf", 2}, {"lrl2", 1}, {"pca", 1}}));
  EXPECT_EQ(f.top_model, (CountTable{{"xgboost", 2}, {"pca", 1}}));
}

TEST(FrequencyReport, CsvLayout) {
  const auto dir = testutil::scratch_dir("freq_csv");
  const auto f = frequency_report({RankedPipelines{{{"a,b"}, {"c"}}, std::size_t{1}}});
  write_frequency_csv(f, dir / "freq.csv");
  EXPECT_EQ(testutil::read_file((dir / "freq.csv").string()),
            "table,operator,count\n"
            "first_position,\"a,b\",1\n"
            "all_positions,\"a,b\",1\n"
            "all_positions,c,1\n"
            "top_model,c,1\n");
}

namespace {

nlohmann::json run_json(const std::string& dataset, double best, const std::string& best_id) {
  return {{"dataset", dataset},
          {"task", "classification"},
          {"results",
           {{{"skeleton_id", "g#0/1"}, {"status", "Ok"}, {"best_score", best - 0.1}, {"estimator", "rf"}},
            {{"skeleton_id", "g#1/1"}, {"status", "Ok"}, {"best_score", best}, {"estimator", "xgboost"},
             {"preprocessors", {"standardize"}}}}},
          {"best", {{"skeleton_id", best_id}, {"best_score", best}}}};
}

void write_json(const std::filesystem::path& p, const nlohmann::json& j) { std::ofstream(p) << j.dump(); }

}  // namespace

TEST(Results, ParsesBridgeOutput) {
  const auto r = parse_run_result(run_json("titanic", 0.8, "g#1/1"), "/x/run1.json");
  EXPECT_EQ(r.dataset, "titanic");
  EXPECT_EQ(r.system, "pipeforge");
  ASSERT_EQ(r.results.size(), 2u);
  EXPECT_EQ(r.results[1].operators, (std::vector<std::string>{"standardize", "xgboost"}));
  EXPECT_EQ(r.best_rank(), 2);
}

TEST(Results, DatasetDefaultsToFileStem) {
  auto j = run_json("x", 0.5, "g#0/1");
  j.erase("dataset");
  EXPECT_EQ(parse_run_result(j, "/tmp/adult.json").dataset, "adult");
}

TEST(Results, NullBestCountsAsFailedRun) {
  auto j = run_json("x", 0.5, "g#0/1");
  j["best"] = nullptr;
  const auto ev = evaluate_runs({parse_run_result(j, "a.json")});
  EXPECT_EQ(ev.failed_runs, 1u);
  EXPECT_FALSE(ev.mrr.has_value());
  EXPECT_TRUE(ev.rows.empty());
}

TEST(Results, MalformedFilesAreFormatErrors) {
  EXPECT_THROW(parse_run_result(nlohmann::json::array()), FormatError);
  EXPECT_THROW(parse_run_result({{"results", 3}}), FormatError);
  EXPECT_THROW(parse_run_result({{"results", {{{"status", "Ok"}}}}}), FormatError);
  EXPECT_THROW(parse_run_result(run_json("x", 0.5, "nope")), FormatError);
}

TEST(Results, AveragesThreeRunsAndScoresRanks) {
  const auto dir = testutil::scratch_dir("eval_runs");
  write_json(dir / "run1.json", run_json("d", 0.7, "g#0/1"));
  write_json(dir / "run2.json", run_json("d", 0.8, "g#1/1"));
  write_json(dir / "run3.json", run_json("d", 0.9, "g#1/1"));
  std::ofstream(dir / "notes.txt") << "ignored";
  const auto runs = load_runs(dir);
  ASSERT_EQ(runs.size(), 3u);
  const auto ev = evaluate_runs(runs);
  ASSERT_EQ(ev.rows.size(), 1u);
  EXPECT_NEAR(ev.rows[0].score, 0.8, 1e-12);
  EXPECT_EQ(ev.rows[0].runs, 3u);
  EXPECT_EQ(ev.best_ranks, (std::vector<int>{1, 2, 2}));
  ASSERT_TRUE(ev.mrr.has_value());
  EXPECT_NEAR(*ev.mrr, (1.0 + 0.5 + 0.5) / 3.0, 1e-12);
  EXPECT_EQ(ev.frequencies.first_position, (CountTable{{"rf", 3}}));
  EXPECT_EQ(ev.frequencies.top_model, (CountTable{{"standardize", 2}, {"xgboost", 2}, {"rf", 1}}));

  write_results_csv(ev.rows, dir / "results.csv");
  const auto t = csv::read_table((dir / "results.csv").string());
  EXPECT_EQ(t.column_names, (std::vector<std::string>{"dataset", "system", "score", "task", "source"}));
  EXPECT_NEAR(*text::parse_number(t.columns[2][0]), 0.8, 1e-12);
}

TEST(Results, LoadErrors) {
  EXPECT_THROW(load_runs("/nonexistent/pipeforge"), FormatError);
  const auto dir = testutil::scratch_dir("eval_bad");
  std::ofstream(dir / "broken.json") << "{ not json";
  EXPECT_THROW(load_runs(dir), FormatError);
}

TEST(Csv, FieldQuoting) {
  EXPECT_EQ(csv::field("plain"), "plain");
  EXPECT_EQ(csv::field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::field("say \"hi\""), "\"say \"\"hi\"\"\"");
  const auto t = csv::parse_table("x,y\n" + csv::field("a,\"b\"") + ",1\n");
  EXPECT_EQ(t.columns[0][0], "a,\"b\"");
}
