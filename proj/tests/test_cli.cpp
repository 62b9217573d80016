#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "pipeforge/cli/commands.hpp"
#include "test_util.hpp"

using namespace pipeforge;
using namespace pipeforge::cli;

namespace {

const fs::path kFixtures = testutil::data_path("fixtures");

Config fixture_config(const fs::path& corpus_dir) {
  Config c;
  c.whitelist = testutil::data_path("whitelist.json");
  c.registry = testutil::data_path("registries/flaml.json");
  c.corpus_dir = corpus_dir;
  c.model = corpus_dir / "model.pgen";
  return c;
}

MineOptions fixture_mine(const fs::path& out) {
  return {kFixtures / "corpus/scripts", kFixtures / "corpus/datasets", kFixtures / "corpus/sidecar.json", out};
}

// Fixture corpus mined and a model trained once for the whole suite.
const Config& trained_corpus() {
  static const Config c = [] {
    const auto dir = testutil::scratch_dir("cli_corpus");
    auto cfg = fixture_config(dir);
    cmd_mine(fixture_mine(dir), cfg);
    cmd_train({dir / kPipelineGraphsFile, cfg.vocabulary_path(), cfg.model, {}, false}, cfg);
    return cfg;
  }();
  return c;
}

int exit_code(const std::function<void()>& body) {
  std::ostringstream err;
  return run_guarded(body, err);
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + PIPEFORGE_CLI + "' " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::size_t line_count(const fs::path& p) {
  const auto text = testutil::read_file(p.string());
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

void write_result(const fs::path& path, const std::string& dataset, double score) {
  nlohmann::json j = {{"dataset", dataset},
                      {"results",
                       {{{"skeleton_id", "a"}, {"status", "ok"}, {"best_score", score}, {"estimator", "LGBMClassifier"}},
                        {{"skeleton_id", "b"}, {"status", "ok"}, {"best_score", score - 0.1}}}},
                      {"best", {{"skeleton_id", "a"}, {"best_score", score}}}};
  std::ofstream(path) << j.dump();
}

}  // namespace

TEST(ParseConfig, KeysCommentsAndDefaults) {
  const auto c = parse_config("# comment\nk = 5\nseed=9  # trailing\n\ncorpus_dir = mined\nlearning_rate = 0.01\n");
  EXPECT_EQ(c.k, 5u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.corpus_dir, "mined");
  EXPECT_DOUBLE_EQ(c.learning_rate, 0.01);
  EXPECT_EQ(c.epochs, 15);
  EXPECT_EQ(c.index_path(), fs::path("mined") / kIndexFile);
  EXPECT_EQ(c.vocabulary_path(), fs::path("mined") / kVocabularyFile);
}

TEST(ParseConfig, Errors) {
  EXPECT_THROW(parse_config("colour = red\n"), FormatError);
  EXPECT_THROW(parse_config("k\n"), FormatError);
  EXPECT_THROW(parse_config("k = 0\n"), FormatError);
  EXPECT_THROW(parse_config("k = 2.5\n"), FormatError);
  EXPECT_THROW(parse_config("seed = -1\n"), FormatError);
}

TEST(ApplyEnvironment, SeedOverridesConfig) {
  auto c = parse_config("seed = 3\n");
  ::setenv("PIPEFORGE_SEED", "42", 1);
  apply_environment(c);
  EXPECT_EQ(c.seed, 42u);
  ::setenv("PIPEFORGE_SEED", "x", 1);
  EXPECT_THROW(apply_environment(c), FormatError);
  ::unsetenv("PIPEFORGE_SEED");
  apply_environment(c);
  EXPECT_EQ(c.seed, 42u);
}

TEST(Under, ResolvesRelativePathsOnly) {
  EXPECT_EQ(under("/w", "a/b"), fs::path("/w/a/b"));
  EXPECT_EQ(under("/w", "/abs"), fs::path("/abs"));
  EXPECT_EQ(under("/w", ""), fs::path());
}

TEST(RunGuarded, ExitCodes) {
  EXPECT_EQ(exit_code([] {}), kExitOk);
  EXPECT_EQ(exit_code([] { throw DivergedLoss("nan"); }), kExitDiverged);
  EXPECT_EQ(exit_code([] { throw NoValidGraph("none"); }), kExitNoGraph);
  EXPECT_EQ(exit_code([] { throw FormatError("bad"); }), kExitInput);
  EXPECT_EQ(exit_code([] { throw std::runtime_error("boom"); }), kExitUnexpected);
}

TEST(CmdMine, FixtureCorpusCensus) {
  const auto dir = testutil::scratch_dir("cli_mine");
  const auto s = cmd_mine(fixture_mine(dir), fixture_config(dir));
  const auto census = testutil::read_json((kFixtures / "corpus/census.json").string());
  EXPECT_EQ(s.report.graphs_out, census.at("estimator_scripts").get<std::size_t>());
  EXPECT_EQ(s.report.rejected_no_estimator, census.at("eda_scripts").get<std::size_t>());
  EXPECT_EQ(s.lex_errors, census.at("lex_error_scripts").get<std::size_t>());
  EXPECT_EQ(s.warnings.size(), 2u);
  EXPECT_EQ(s.datasets_indexed, 12u);
  EXPECT_GE(s.report.reduction_rate_combined(), 0.9);
  for (const char* f : {kCodeGraphsFile, kPipelineGraphsFile, kVocabularyFile, kIndexFile, kReportFile}) {
    EXPECT_TRUE(fs::is_regular_file(dir / f)) << f;
  }
  EXPECT_EQ(line_count(dir / kPipelineGraphsFile), 82u);
  EXPECT_EQ(testutil::read_json((dir / kReportFile).string()).at("lex_errors"), 2);
}

TEST(CmdMine, EmptyScriptsDirectoryWarns) {
  const auto dir = testutil::scratch_dir("cli_mine_empty");
  fs::create_directories(dir / "scripts");
  auto o = fixture_mine(dir / "out");
  o.scripts_dir = dir / "scripts";
  o.sidecar.clear();
  const auto s = cmd_mine(o, fixture_config(dir / "out"));
  EXPECT_EQ(s.report.graphs_out, 0u);
  ASSERT_EQ(s.warnings.size(), 1u);
  EXPECT_EQ(line_count(dir / "out" / kPipelineGraphsFile), 0u);
}

TEST(CmdMine, MissingDirectoriesAreInputErrors) {
  const auto dir = testutil::scratch_dir("cli_mine_missing");
  auto o = fixture_mine(dir);
  o.datasets_dir = dir / "nope";
  EXPECT_EQ(exit_code([&] { cmd_mine(o, fixture_config(dir)); }), kExitInput);
  o = fixture_mine(dir);
  o.scripts_dir = dir / "nope";
  EXPECT_EQ(exit_code([&] { cmd_mine(o, fixture_config(dir)); }), kExitInput);
}

TEST(CmdTrain, FifteenEpochsAndLossLog) {
  const auto dir = testutil::scratch_dir("cli_train");
  const auto& base = trained_corpus();
  auto c = base;
  c.epochs = 15;
  const auto s = cmd_train({base.corpus_dir / kPipelineGraphsFile, base.vocabulary_path(), dir / "m.pgen",
                            dir / "loss.csv", false},
                           c);
  EXPECT_EQ(s.traces, 80u);
  EXPECT_EQ(s.excluded_unknown, 2u);
  ASSERT_EQ(s.log.size(), 15u);
  EXPECT_LE(s.log.back().mean_nll, 0.6 * s.log.front().mean_nll);
  EXPECT_EQ(line_count(dir / "loss.csv"), 16u);
  EXPECT_EQ(testutil::read_file((dir / "loss.csv").string()).substr(0, 22), "epoch,mean_nll,seconds");
  EXPECT_TRUE(fs::is_regular_file(dir / "m.pgen"));
}

TEST(CmdTrain, IncludeUnknownKeepsEveryGraph) {
  const auto dir = testutil::scratch_dir("cli_train_unknown");
  auto c = trained_corpus();
  c.epochs = 1;
  const auto s = cmd_train({c.corpus_dir / kPipelineGraphsFile, c.vocabulary_path(), dir / "m.pgen", {}, true}, c);
  EXPECT_EQ(s.traces, 82u);
  EXPECT_EQ(s.excluded_unknown, 0u);
}

TEST(CmdTrain, EmptyOrMissingCorpusIsInputError) {
  const auto dir = testutil::scratch_dir("cli_train_empty");
  std::ofstream(dir / "empty.jsonl").close();
  const auto& c = trained_corpus();
  EXPECT_EQ(exit_code([&] { cmd_train({dir / "empty.jsonl", c.vocabulary_path(), dir / "m.pgen", {}, false}, c); }),
            kExitInput);
  EXPECT_EQ(exit_code([&] { cmd_train({dir / "none.jsonl", c.vocabulary_path(), dir / "m.pgen", {}, false}, c); }),
            kExitInput);
}

TEST(CmdRecommend, SingleGraphGetsRemainingBudget) {
  auto c = trained_corpus();
  c.k = 1;
  RecommendOptions o;
  o.dataset_csv = kFixtures / "toy/clinic_visits.csv";
  o.target = "disease";
  o.budget_seconds = 100.0;
  const auto s = cmd_recommend(o, c);
  ASSERT_EQ(s.document.skeletons.size(), 1u);
  ASSERT_TRUE(s.plan.has_value());
  EXPECT_EQ(s.plan->k, 1u);
  EXPECT_EQ(s.plan->consumed_seconds, s.elapsed_seconds);
  EXPECT_EQ(s.document.skeletons[0].budget_seconds, 100.0 - s.elapsed_seconds);
  EXPECT_EQ(s.document.task, Task::Classification);
  EXPECT_EQ(s.document.registry, "flaml");
}

TEST(CmdRecommend, DocumentRoundTripsThroughSchema) {
  const auto dir = testutil::scratch_dir("cli_recommend_schema");
  RecommendOptions o;
  o.dataset_csv = kFixtures / "toy/clinic_visits.csv";
  o.target = "disease";
  o.prepared_dir = dir;
  const auto s = cmd_recommend(o, trained_corpus());
  EXPECT_FALSE(s.plan.has_value());
  EXPECT_GE(s.document.skeletons.size(), 1u);
  EXPECT_LE(s.document.skeletons.size(), 3u);
  const auto text = skeleton::to_json(s.document).dump();
  EXPECT_EQ(skeleton::skeleton_document_from_json(nlohmann::json::parse(text)), s.document);
  EXPECT_TRUE(fs::is_regular_file(dir / "clinic_visits.csv"));
  const auto manifest = testutil::read_json((dir / "clinic_visits.manifest.json").string());
  EXPECT_EQ(manifest.at("task"), "classification");
}

TEST(CmdRecommend, IndexedDatasetRetrievesItself) {
  RecommendOptions o;
  o.dataset_csv = kFixtures / "corpus/datasets/house_prices.csv";
  o.target = "price";
  const auto s = cmd_recommend(o, trained_corpus());
  ASSERT_FALSE(s.neighbors.empty());
  EXPECT_EQ(s.neighbors[0].dataset_name, "house_prices");
  EXPECT_EQ(s.neighbors[0].distance, 0.0);
  EXPECT_EQ(s.seed_dataset, "house_prices");
  EXPECT_EQ(s.document.task, Task::Regression);
}

TEST(CmdRecommend, NoMappableGraphExitsFour) {
  const auto dir = testutil::scratch_dir("cli_recommend_none");
  std::ofstream(dir / "registry.json")
      << R"({"optimizer": "none", "preprocessors": ["StandardScaler"], "estimators": ["NotAnEstimator"]})";
  auto c = trained_corpus();
  c.registry = dir / "registry.json";
  c.retries = 5;
  RecommendOptions o;
  o.dataset_csv = kFixtures / "toy/clinic_visits.csv";
  o.target = "disease";
  EXPECT_EQ(exit_code([&] { cmd_recommend(o, c); }), kExitNoGraph);
}

TEST(CmdRecommend, InputErrors) {
  RecommendOptions o;
  o.dataset_csv = kFixtures / "toy/clinic_visits.csv";
  o.target = "no_such_column";
  EXPECT_EQ(exit_code([&] { cmd_recommend(o, trained_corpus()); }), kExitInput);
  o.target = "disease";
  o.budget_seconds = -1.0;
  EXPECT_EQ(exit_code([&] { cmd_recommend(o, trained_corpus()); }), kExitInput);
  o.budget_seconds.reset();
  o.dataset_csv = "/nonexistent.csv";
  EXPECT_EQ(exit_code([&] { cmd_recommend(o, trained_corpus()); }), kExitInput);
}

TEST(CmdEvaluate, AveragesRunsAndWritesReports) {
  const auto dir = testutil::scratch_dir("cli_evaluate");
  fs::create_directories(dir / "results");
  write_result(dir / "results/run1.json", "heart", 0.7);
  write_result(dir / "results/run2.json", "heart", 0.8);
  write_result(dir / "results/run3.json", "heart", 0.9);
  const auto s = cmd_evaluate({dir / "results", dir / "out"});
  EXPECT_EQ(s.runs, 3u);
  ASSERT_EQ(s.evaluation.rows.size(), 1u);
  EXPECT_NEAR(s.evaluation.rows[0].score, 0.8, 1e-12);
  EXPECT_EQ(s.evaluation.rows[0].runs, 3u);
  ASSERT_TRUE(s.evaluation.mrr.has_value());
  EXPECT_EQ(*s.evaluation.mrr, 1.0);
  for (const char* f : {"results.csv", "frequencies.csv", "report.json"}) {
    EXPECT_TRUE(fs::is_regular_file(dir / "out" / f)) << f;
  }
  EXPECT_EQ(line_count(dir / "out/results.csv"), 2u);
}

TEST(CmdEvaluate, MissingOrEmptyDirectoryIsInputError) {
  const auto dir = testutil::scratch_dir("cli_evaluate_missing");
  EXPECT_EQ(exit_code([&] { cmd_evaluate({dir / "none", dir / "out"}); }), kExitInput);
  EXPECT_EQ(exit_code([&] { cmd_evaluate({dir, dir / "out"}); }), kExitInput);
}

TEST(Binary, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli(""), kExitInput);
  EXPECT_EQ(run_cli("recommend"), kExitInput);
  EXPECT_EQ(run_cli("train --no-such-flag"), kExitInput);
  EXPECT_EQ(run_cli("--help"), kExitOk);
}

TEST(Binary, ConfigThenFlagPrecedenceUnderWorkdir) {
  const auto dir = testutil::scratch_dir("cli_binary");
  const std::string wd = "--workdir '" + dir.string() + "' ";
  std::ofstream(dir / "pf.conf") << "epochs = 2\ncorpus_dir = mined\n";
  ASSERT_EQ(run_cli(wd + "--config pf.conf mine --scripts '" + (kFixtures / "corpus/scripts").string() +
                    "' --datasets '" + (kFixtures / "corpus/datasets").string() + "'"),
            kExitOk);
  EXPECT_TRUE(fs::is_regular_file(dir / "mined" / kPipelineGraphsFile));
  ASSERT_EQ(run_cli(wd + "--config pf.conf train --out a.pgen"), kExitOk);
  EXPECT_EQ(line_count(dir / "a.pgen.loss.csv"), 3u);
  ASSERT_EQ(run_cli(wd + "--config pf.conf train --epochs 3 --out b.pgen"), kExitOk);
  EXPECT_EQ(line_count(dir / "b.pgen.loss.csv"), 4u);
  ASSERT_EQ(run_cli(wd + "--config pf.conf recommend '" + (kFixtures / "toy/clinic_visits.csv").string() +
                    "' --target disease --model a.pgen --budget 60 --k 2 --out rec/skeletons.json"),
            kExitOk);
  const auto doc = testutil::read_json((dir / "rec/skeletons.json").string());
  EXPECT_EQ(doc.at("version"), 1);
  EXPECT_EQ(doc.at("registry"), "flaml");
  EXPECT_LE(doc.at("skeletons").size(), 2u);
  EXPECT_EQ(run_cli(wd + "--config missing.conf train"), kExitInput);
  EXPECT_EQ(run_cli(wd + "evaluate none"), kExitInput);
}
