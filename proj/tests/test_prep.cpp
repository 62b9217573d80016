#include <gtest/gtest.h>

#include <cmath>

#include "pipeforge/core/hash.hpp"
#include "pipeforge/prep/prepare.hpp"
#include "test_util.hpp"

using namespace pipeforge;
using namespace pipeforge::prep;

TEST(DetectTask, NonNumericIsClassification) {
  EXPECT_EQ(detect_task({"cat", "dog", "cat"}), Task::Classification);
}

TEST(DetectTask, ContinuousIsRegression) {
  SplitMix64 rng(1);
  std::vector<std::string> v;
  for (int i = 0; i < 10000; ++i) v.push_back(text::format_number(rng.uniform(-5, 5)));
  EXPECT_EQ(detect_task(v), Task::Regression);
}

TEST(DetectTask, SmallIntegerRangeIsClassification) {
  std::vector<std::string> v;
  for (int i = 0; i < 5000; ++i) v.push_back(std::to_string(i % 10));
  EXPECT_EQ(detect_task(v), Task::Classification);
}

TEST(DetectTask, CardinalityLimitIsMaxOfTwentyAndFivePercent) {
  // 100 rows: limit 20. 21 distinct integers -> regression.
  std::vector<std::string> v;
  for (int i = 0; i < 100; ++i) v.push_back(std::to_string(i % 21));
  EXPECT_EQ(detect_task(v), Task::Regression);
  v.clear();
  for (int i = 0; i < 100; ++i) v.push_back(std::to_string(i % 20));
  EXPECT_EQ(detect_task(v), Task::Classification);
  // 1000 rows: limit 50.
  v.clear();
  for (int i = 0; i < 1000; ++i) v.push_back(std::to_string(i % 50));
  EXPECT_EQ(detect_task(v), Task::Classification);
  v.push_back("51");
  EXPECT_EQ(detect_task(v), Task::Regression);
  EXPECT_EQ(detect_task({"1", "2.5", "1"}), Task::Regression);
}

TEST(DetectTask, MissingIgnoredEmptyRejected) {
  EXPECT_EQ(detect_task({"1", "", "NA", "0"}), Task::Classification);
  EXPECT_THROW(detect_task({"", "nan"}), EmptyTarget);
  EXPECT_THROW(detect_task({}), EmptyTarget);
}

TEST(DetectTask, RowOrderInvariant) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> v;
    const int n = 10 + static_cast<int>(rng.below(200));
    const int distinct = 1 + static_cast<int>(rng.below(40));
    for (int i = 0; i < n; ++i) v.push_back(std::to_string(rng.below(static_cast<std::uint64_t>(distinct))));
    if (rng.uniform() < 0.3) v.push_back("0.5");
    const Task before = detect_task(v);
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    EXPECT_EQ(detect_task(v), before);
  }
}

TEST(InferTypes, Examples) {
  Table t;
  t.column_names = {"num", "country", "review"};
  t.columns.resize(3);
  const char* countries[] = {"France", "Spain", "Italy", "Peru", "Chile", "Japan", "Kenya", "Ghana", "Nepal",
                             "India", "China", "Chad", "Mali", "Oman", "Iran", "Iraq", "Cuba", "Fiji", "Laos", "Togo"};
  SplitMix64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    t.columns[0].push_back(i < 3 ? std::vector<std::string>{"1", "2", "3.5"}[static_cast<std::size_t>(i)] : "4");
    t.columns[1].push_back(countries[i % 20]);
    t.columns[2].push_back("Order " + std::to_string(i) + " arrived " + std::to_string(rng.below(30)) +
                           " days late and the packaging was damaged, support never answered my emails");
  }
  const auto types = infer_types(t);
  EXPECT_EQ(types[0], ColumnType::Numeric);
  EXPECT_EQ(types[1], ColumnType::Categorical);
  EXPECT_EQ(types[2], ColumnType::Text);
  EXPECT_EQ(infer_column_type({"1", "2", "3.5"}), ColumnType::Numeric);
}

TEST(VectorizeText, EmptyIdenticalAndOracleBand) {
  const auto v = vectorize_text({"", "Good food", "good  FOOD!", "The quick brown fox jumps over",
                                 "the quick brown cat sleeps under"});
  ASSERT_EQ(v.size(), 5u);
  for (double x : v[0]) EXPECT_EQ(x, 0.0);
  EXPECT_EQ(v[1], v[2]);
  EXPECT_EQ(v[1].size(), kTextDimension);
  double dot = 0.0, na = 0.0;
  for (std::size_t i = 0; i < kTextDimension; ++i) {
    dot += v[3][i] * v[4][i];
    na += v[1][i] * v[1][i];
  }
  EXPECT_NEAR(na, 1.0, 1e-12);
  // Frozen from tests/oracles/text_oracle.py.
  EXPECT_NEAR(dot, 0.5000000000000001, 1e-12);
}

TEST(Impute, MedianModeAndAllMissing) {
  const auto a = impute({"1", "", "3"}, ColumnType::Numeric);
  ASSERT_TRUE(a);
  EXPECT_EQ(a->cells, (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(a->applied, Imputation::Median);
  const auto b = impute({"a", "a", "NA"}, ColumnType::Categorical);
  EXPECT_EQ(b->cells, (std::vector<std::string>{"a", "a", "a"}));
  EXPECT_EQ(b->applied, Imputation::Mode);
  EXPECT_FALSE(impute({"", "nan"}, ColumnType::Numeric));
  EXPECT_FALSE(impute({"", "?"}, ColumnType::Text));
  // Mode ties go to the smallest label; no-missing columns report None.
  EXPECT_EQ(impute({"b", "a", "b", "a", ""}, ColumnType::Categorical)->cells.back(), "a");
  EXPECT_EQ(impute({"4", "2"}, ColumnType::Numeric)->applied, Imputation::None);
  EXPECT_EQ(impute({"4", "2", "", "1", "9"}, ColumnType::Numeric)->cells[2], "3");
}

TEST(PlanBudget, Examples) {
  EXPECT_EQ(plan_budget(3600, 60, 3).per_graph, 1180.0);
  EXPECT_EQ(plan_budget(100, 25, 1).per_graph, 75.0);
  EXPECT_THROW(plan_budget(100, 100, 2), BudgetExhausted);
  EXPECT_THROW(plan_budget(100, 150, 2), BudgetExhausted);
  EXPECT_THROW(plan_budget(0, 0, 1), InvalidArgument);
  EXPECT_THROW(plan_budget(10, -1, 1), InvalidArgument);
  EXPECT_THROW(plan_budget(10, 1, 0), InvalidArgument);
}

TEST(PlanBudget, NeverExceedsTotal) {
  SplitMix64 rng(9);
  for (int i = 0; i < 100000; ++i) {
    const double total = rng.uniform(1e-3, 1e6);
    const double used = rng.uniform() * total * 0.999;
    const std::size_t k = 1 + rng.below(50);
    const auto p = plan_budget(total, used, k);
    EXPECT_GT(p.per_graph, 0.0);
    EXPECT_LE(static_cast<double>(k) * p.per_graph + used, total);
  }
}

TEST(PrepareDataset, MixedTableEmitsNumericMatrix) {
  Table t;
  t.name = "mixed";
  t.column_names = {"age", "city", "note", "empty", "label"};
  t.columns = {{"30", "", "50", "41", "22", "35"},
               {"paris", "lyon", "paris", "", "paris", "lyon"},
               {"great service fast", "slow and rude staff", "", "ok ok", "fine food nice view",
                "would come back again soon"},
               {"", "", "", "", "", ""},
               {"yes", "no", "yes", "yes", "", "no"}};
  const auto d = prepare_dataset(t, "label");
  EXPECT_EQ(d.task, Task::Classification);
  EXPECT_EQ(d.row_count, 5u);
  ASSERT_EQ(d.columns.size(), 4u);
  EXPECT_EQ(d.columns[0].imputation, Imputation::Median);
  EXPECT_EQ(d.columns[1].inferred_type, ColumnType::Categorical);
  EXPECT_EQ(d.columns[1].imputation, Imputation::Mode);
  EXPECT_EQ(d.columns[2].inferred_type, ColumnType::Text);
  EXPECT_EQ(d.warnings.size(), 2u);
  // numeric + categorical + 64 text + target
  EXPECT_EQ(d.emitted_columns.size(), 1u + 1u + kTextDimension + 1u);
  EXPECT_EQ(d.target_index, d.emitted_columns.size() - 1);
  for (const auto& row : d.matrix) {
    ASSERT_EQ(row.size(), d.emitted_columns.size());
    for (double x : row) EXPECT_TRUE(std::isfinite(x));
  }
  // Median of {30, 50, 41, 35} = 38 fills row 1; "yes" is the most frequent label -> code 0.
  EXPECT_EQ(d.matrix[1][0], 38.0);
  EXPECT_EQ(d.matrix[0][d.target_index], 0.0);
  EXPECT_EQ(d.matrix[1][d.target_index], 1.0);

  const auto dir = testutil::scratch_dir("prep");
  write_prepared(d, dir / "d.csv", dir / "d.json");
  const auto manifest = testutil::read_json((dir / "d.json").string());
  EXPECT_EQ(manifest.size(), 3u);
  EXPECT_EQ(manifest.at("task"), "classification");
  EXPECT_EQ(manifest.at("target_index"), d.target_index);
  EXPECT_EQ(manifest.at("columns").size(), d.emitted_columns.size());
  const auto back = csv::parse_records(testutil::read_file((dir / "d.csv").string()));
  ASSERT_EQ(back.size(), 5u);
  EXPECT_EQ(back[0].size(), d.emitted_columns.size());
  EXPECT_EQ(back[1][0], "38");
}

TEST(PrepareDataset, MissingTarget) {
  Table t;
  t.column_names = {"a"};
  t.columns = {{"1"}};
  EXPECT_THROW(prepare_dataset(t, "zzz"), InvalidArgument);
}
