#include <gtest/gtest.h>

#include "pipeforge/core/hash.hpp"
#include "pipeforge/skeleton/skeleton.hpp"
#include "test_util.hpp"

using namespace pipeforge;
using namespace pipeforge::skeleton;

namespace {

const NodeVocabulary& vocab() {
  static const NodeVocabulary v = filter::build_vocabulary(testutil::data_path("whitelist.json"));
  return v;
}

filter::VocabId id(const std::string& label) { return *vocab().find(label); }

PipelineGraph graph(std::vector<std::string> labels, std::vector<filter::PipelineEdge> edges) {
  PipelineGraph g{"g", "d", {{0, filter::kDataset}, {1, filter::kReadCsv}}, {{0, 1}}};
  for (const auto& l : labels) g.nodes.push_back({static_cast<int>(g.nodes.size()), id(l)});
  g.edges.insert(g.edges.end(), edges.begin(), edges.end());
  return g;
}

CapabilityRegistry registry(const std::string& name) {
  return CapabilityRegistry::load(testutil::data_path("registries/" + name + ".json"));
}

}  // namespace

TEST(ToSkeletons, ChainGivesScalerThenEstimator) {
  const auto s = to_skeletons(graph({"StandardScaler", "LogisticRegression"}, {{1, 2}, {2, 3}}), vocab(), -1.25);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].preprocessors, std::vector<std::string>{"StandardScaler"});
  EXPECT_EQ(s[0].estimator, "LogisticRegression");
  EXPECT_EQ(s[0].log_prob, -1.25);
  EXPECT_EQ(s[0].source_graph_id, "g");
}

TEST(ToSkeletons, SharedScalerFansOut) {
  const auto s = to_skeletons(
      graph({"StandardScaler", "LogisticRegression", "XGBClassifier"}, {{1, 2}, {2, 3}, {2, 4}}), vocab());
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].preprocessors, s[1].preprocessors);
  EXPECT_EQ(s[0].estimator, "LogisticRegression");
  EXPECT_EQ(s[1].estimator, "XGBClassifier");
  EXPECT_NE(s[0].skeleton_id, s[1].skeleton_id);
}

TEST(ToSkeletons, ScalerOnlyHasNoEstimator) {
  EXPECT_THROW(to_skeletons(graph({"StandardScaler"}, {{1, 2}}), vocab()), NoEstimator);
}

TEST(ToSkeletons, OnlyPreprocessorsOnPathsToTheEstimator) {
  // PCA feeds the forest only; the scaler feeds the regression only.
  const auto s = to_skeletons(graph({"StandardScaler", "PCA", "LogisticRegression", "RandomForestClassifier"},
                                    {{1, 2}, {1, 3}, {2, 4}, {3, 5}}),
                              vocab());
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].preprocessors, std::vector<std::string>{"StandardScaler"});
  EXPECT_EQ(s[1].preprocessors, std::vector<std::string>{"PCA"});
  // train_test_split and other non-preprocessors never appear.
  const auto t = to_skeletons(graph({"train_test_split", "LogisticRegression"}, {{1, 2}, {2, 3}}), vocab());
  EXPECT_TRUE(t[0].preprocessors.empty());
}

TEST(ToSkeletons, ParallelPreprocessorsOrderedByVocabId) {
  const auto s = to_skeletons(graph({"MinMaxScaler", "StandardScaler", "SVC"}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}), vocab());
  EXPECT_EQ(s[0].preprocessors, (std::vector<std::string>{"StandardScaler", "MinMaxScaler"}));
}

TEST(ToSkeletons, ConsecutiveDuplicatesCollapsed) {
  const auto s = to_skeletons(graph({"PCA", "PCA", "SVC"}, {{1, 2}, {2, 3}, {3, 4}}), vocab());
  EXPECT_EQ(s[0].preprocessors, std::vector<std::string>{"PCA"});
}

TEST(ToSkeletons, CountEqualsEstimatorNodes) {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    PipelineGraph g{"r", "d", {{0, filter::kDataset}, {1, filter::kReadCsv}}, {{0, 1}}};
    const int n_ops = 1 + static_cast<int>(rng.below(10));
    for (int i = 0; i < n_ops; ++i) {
      const int v = static_cast<int>(g.nodes.size());
      g.nodes.push_back({v, filter::kReservedCount + static_cast<int>(rng.below(vocab().size() - 3))});
      g.edges.push_back({1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(v - 1))), v});
    }
    const auto estimators = filter::count_category(g, vocab(), Category::Estimator);
    if (estimators == 0) {
      EXPECT_THROW(to_skeletons(g, vocab()), NoEstimator);
      continue;
    }
    const auto s = to_skeletons(g, vocab());
    EXPECT_EQ(s.size(), estimators);
    for (const auto& k : s) {
      EXPECT_EQ(vocab().category(*vocab().find(k.estimator)), Category::Estimator);
      for (std::size_t i = 0; i < k.preprocessors.size(); ++i) {
        EXPECT_EQ(vocab().category(*vocab().find(k.preprocessors[i])), Category::Preprocessor);
        if (i > 0) {
          EXPECT_NE(k.preprocessors[i], k.preprocessors[i - 1]);
        }
      }
    }
    EXPECT_EQ(to_skeletons(g, vocab()), s);
  }
}

TEST(Registry, ShippedRegistriesLoad) {
  const auto f = registry("flaml");
  EXPECT_EQ(f.optimizer_name, "flaml");
  EXPECT_EQ(f.renamed("XGBClassifier"), "xgboost");
  const auto a = registry("autosklearn");
  EXPECT_EQ(a.renamed("StandardScaler"), "standardize");
  for (const auto* r : {&f, &a}) {
    for (const auto& p : r->preprocessors) EXPECT_EQ(vocab().category(*vocab().find(p)), Category::Preprocessor) << p;
    for (const auto& e : r->estimators) EXPECT_EQ(vocab().category(*vocab().find(e)), Category::Estimator) << e;
  }
}

TEST(Registry, MalformedRejected) {
  using nlohmann::json;
  EXPECT_THROW(CapabilityRegistry::from_json(json::parse(R"({"optimizer":"x","preprocessors":[],"estimators":["A"]})")),
               FormatError);
  EXPECT_THROW(CapabilityRegistry::from_json(
                   json::parse(R"({"optimizer":"x","preprocessors":["P"],"estimators":["A"],"rename":{"Q":"q"}})")),
               FormatError);
  EXPECT_THROW(CapabilityRegistry::from_json(json::parse(R"({"preprocessors":["P"],"estimators":["A"]})")), FormatError);
  EXPECT_THROW(CapabilityRegistry::load("/nonexistent/registry.json"), FormatError);
}

TEST(ValidateAgainst, FullySupportedIsRenamed) {
  const PipelineSkeleton s{"k", {"StandardScaler"}, "XGBClassifier", -1.0, "g", 0.0};
  const auto v = validate_against(s, registry("flaml"));
  ASSERT_TRUE(std::holds_alternative<Accepted>(v));
  const auto& a = std::get<Accepted>(v);
  EXPECT_EQ(a.skeleton.preprocessors, std::vector<std::string>{"StandardScaler"});
  EXPECT_EQ(a.skeleton.estimator, "xgboost");
  EXPECT_TRUE(a.dropped.empty());
  EXPECT_EQ(a.skeleton.log_prob, -1.0);
}

TEST(ValidateAgainst, UnsupportedEstimatorRejected) {
  const PipelineSkeleton s{"k", {"StandardScaler"}, "LogisticRegression", -1.0, "g", 0.0};
  const auto v = validate_against(s, registry("autosklearn"));
  ASSERT_TRUE(std::holds_alternative<Rejected>(v));
  EXPECT_EQ(std::get<Rejected>(v).reason, "estimator_unsupported");
}

TEST(ValidateAgainst, UnsupportedPreprocessorDroppedAndNoted) {
  const PipelineSkeleton s{"k", {"StandardScaler", "TfidfVectorizer"}, "RandomForestClassifier", -2.0, "g", 0.0};
  const auto v = validate_against(s, registry("autosklearn"));
  ASSERT_TRUE(std::holds_alternative<Accepted>(v));
  const auto& a = std::get<Accepted>(v);
  EXPECT_EQ(a.skeleton.preprocessors, std::vector<std::string>{"standardize"});
  EXPECT_EQ(a.skeleton.estimator, "random_forest");
  EXPECT_EQ(a.dropped, std::vector<std::string>{"TfidfVectorizer"});
}

TEST(ValidateAgainst, TaskMismatchRejected) {
  const PipelineSkeleton s{"k", {}, "Lasso", -1.0, "g", 0.0};
  const auto flaml = registry("flaml");
  EXPECT_TRUE(std::holds_alternative<Accepted>(validate_against(s, flaml)));
  EXPECT_TRUE(std::holds_alternative<Accepted>(validate_against(s, flaml, Task::Regression)));
  const auto v = validate_against(s, flaml, Task::Classification);
  ASSERT_TRUE(std::holds_alternative<Rejected>(v));
  EXPECT_EQ(std::get<Rejected>(v).reason, "task_mismatch");
}

TEST(CapabilityRegistryTest, EstimatorTasks) {
  const auto r = CapabilityRegistry::from_json(nlohmann::json::parse(
      R"({"optimizer":"x","preprocessors":["P"],"estimators":["A","B"],"estimator_tasks":{"A":["regression"]}})"));
  EXPECT_TRUE(r.supports("A", Task::Regression));
  EXPECT_FALSE(r.supports("A", Task::Classification));
  EXPECT_TRUE(r.supports("B", Task::Classification));
  EXPECT_THROW(CapabilityRegistry::from_json(nlohmann::json::parse(
                   R"({"optimizer":"x","preprocessors":["P"],"estimators":["A"],"estimator_tasks":{"Z":["regression"]}})")),
               FormatError);
  EXPECT_THROW(CapabilityRegistry::from_json(nlohmann::json::parse(
                   R"({"optimizer":"x","preprocessors":["P"],"estimators":["A"],"estimator_tasks":{"A":["ranking"]}})")),
               FormatError);
  EXPECT_THROW(CapabilityRegistry::from_json(
                   nlohmann::json::parse(R"({"optimizer":"x","preprocessors":["P"],"estimators":["A"],"estimator_tasks":{"A":[]}})")),
               FormatError);
  for (const char* name : {"flaml", "autosklearn"}) {
    const auto reg = registry(name);
    EXPECT_EQ(reg.estimator_tasks.size(), reg.estimators.size()) << name;
  }
}

TEST(DedupeRank, KeepsBestOfDuplicates) {
  const auto out = dedupe_rank({{"a", {"StandardScaler"}, "SVC", -2.0, "g", 0},
                                {"b", {"StandardScaler"}, "SVC", -1.0, "g", 0}});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].log_prob, -1.0);
  EXPECT_TRUE(dedupe_rank({}).empty());
}

TEST(DedupeRank, MatchesHandSortedGolden) {
  const auto j = testutil::read_json(testutil::test_path("golden/dedupe_rank.json"));
  std::vector<PipelineSkeleton> in;
  for (const auto& s : j.at("input")) {
    in.push_back({s.at("id"), s.at("preprocessors").get<std::vector<std::string>>(), s.at("estimator"),
                  s.at("log_prob").get<double>(), "g", 0.0});
  }
  ASSERT_EQ(in.size(), 7u);
  std::vector<std::string> ids;
  for (const auto& s : dedupe_rank(in)) ids.push_back(s.skeleton_id);
  EXPECT_EQ(ids, j.at("expected_ids").get<std::vector<std::string>>());
}

TEST(SkeletonDocument, SchemaExactAndRoundTrips) {
  SkeletonDocument d{"heart", Task::Classification,
                     {{"s1", {"standardize"}, "random_forest", -0.123456789012345, "g", 1180.0},
                      {"s2", {}, "sgd", -7.5, "g", 1180.0}},
                     "autosklearn"};
  const auto j = to_json(d);
  EXPECT_EQ(j.dump(),
            R"({"version":1,"dataset":"heart","task":"classification","skeletons":[{"id":"s1","preprocessors":)"
            R"(["standardize"],"estimator":"random_forest","log_prob":-0.123456789012345,"budget_seconds":1180.0},)"
            R"({"id":"s2","preprocessors":[],"estimator":"sgd","log_prob":-7.5,"budget_seconds":1180.0}],)"
            R"("registry":"autosklearn"})");
  EXPECT_EQ(skeleton_document_from_json(nlohmann::json::parse(j.dump())), d);
}

TEST(SkeletonDocument, StrictReader) {
  using nlohmann::json;
  const std::string ok =
      R"({"version":1,"dataset":"x","task":"regression","skeletons":[{"id":"a","preprocessors":[],"estimator":"rf","log_prob":-1,"budget_seconds":0}],"registry":"flaml"})";
  EXPECT_EQ(skeleton_document_from_json(json::parse(ok)).task, Task::Regression);
  auto mutate = [&](const std::string& from, const std::string& to) {
    std::string s = ok;
    s.replace(s.find(from), from.size(), to);
    return json::parse(s);
  };
  EXPECT_THROW(skeleton_document_from_json(mutate("\"version\":1", "\"version\":2")), FormatError);
  EXPECT_THROW(skeleton_document_from_json(mutate("regression", "ranking")), FormatError);
  EXPECT_THROW(skeleton_document_from_json(mutate("\"log_prob\":-1", "\"log_prob\":1")), FormatError);
  EXPECT_THROW(skeleton_document_from_json(mutate("\"registry\"", "\"extra\":0,\"registry\"")), FormatError);
  EXPECT_THROW(skeleton_document_from_json(mutate("\"estimator\":\"rf\",", "")), FormatError);
}
