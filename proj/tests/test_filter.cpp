#include <gtest/gtest.h>

#include <fstream>

#include "pipeforge/core/hash.hpp"
#include "pipeforge/filter/graph_filter.hpp"
#include "pipeforge/script/analyzer.hpp"
#include "test_util.hpp"

using namespace pipeforge;
using namespace pipeforge::filter;
using script::CodeGraph;

namespace {

const NodeVocabulary& default_vocab() {
  static const NodeVocabulary v = build_vocabulary(testutil::data_path("whitelist.json"));
  return v;
}

CodeGraph graph_of(const std::string& text, const std::string& id = "s") {
  return script::analyze_script(script::ScriptSource::from_text(id + ".py", text), id).graph;
}

PipelineGraph accepted(const FilterResult& r) {
  EXPECT_TRUE(std::holds_alternative<PipelineGraph>(r));
  return std::holds_alternative<PipelineGraph>(r) ? std::get<PipelineGraph>(r) : PipelineGraph{};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = testutil::scratch_dir("filter") / name;
  std::ofstream(path) << body;
  return path.string();
}

// Closure of DataFlow reachability over a code graph.
std::vector<std::vector<bool>> dataflow_reach(const CodeGraph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> stack{static_cast<int>(s)};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges) {
        if (e.kind == script::EdgeKind::DataFlow && e.src == v && !r[s][e.dst]) {
          r[s][e.dst] = true;
          stack.push_back(e.dst);
        }
      }
    }
  }
  return r;
}

// Random notebook-like script over a small pool of variables.
std::string random_script(std::uint64_t seed) {
  SplitMix64 rng(seed);
  static const char* kOps[] = {"StandardScaler", "PCA", "MinMaxScaler", "LogisticRegression",
                               "RandomForestClassifier", "XGBClassifier", "SimpleImputer"};
  std::string s =
      "import numpy as np\nimport pandas as pd\nimport matplotlib.pyplot as plt\n"
      "from sklearn.preprocessing import StandardScaler, MinMaxScaler\nfrom sklearn.decomposition import PCA\n"
      "from sklearn.impute import SimpleImputer\n"
      "from sklearn.linear_model import LogisticRegression\nfrom sklearn.ensemble import RandomForestClassifier\n"
      "from xgboost import XGBClassifier\n"
      "v0 = pd.read_csv('../input/data.csv')\n";
  int vars = 1;
  const int statements = 5 + static_cast<int>(rng.below(25));
  for (int i = 0; i < statements; ++i) {
    const std::string a = "v" + std::to_string(rng.below(static_cast<std::uint64_t>(vars)));
    const std::string b = "v" + std::to_string(rng.below(static_cast<std::uint64_t>(vars)));
    const std::string out = "v" + std::to_string(vars);
    const auto kind = rng.below(8);
    switch (kind) {
      case 0: s += out + " = " + kOps[rng.below(7)] + "()\n"; break;
      case 1: s += out + " = " + a + ".fit_transform(" + b + ")\n"; break;
      case 2: s += a + ".fit(" + b + ")\n"; break;
      case 3: s += "print(" + a + ".head())\n"; break;
      case 4: s += out + " = np.hstack([" + a + ", " + b + "])\n"; break;
      case 5: s += "plt.plot(" + a + ")\n"; break;
      case 6: s += out + " = " + a + ".predict(" + b + ")\n"; break;
      default: s += out + " = " + a + ".drop(['y'], axis=1)\n"; break;
    }
    if (kind != 2 && kind != 3 && kind != 5) ++vars;
  }
  return s;
}

}  // namespace

TEST(BuildVocabulary, ReservedIdsThenFileOrder) {
  const auto path = write_temp("wl.json",
                               R"({"operators":[{"label":"StandardScaler","category":"Preprocessor"},)"
                               R"({"label":"LogisticRegression","category":"Estimator"}]})");
  const auto v = build_vocabulary(path);
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(*v.find("DATASET"), 0);
  EXPECT_EQ(*v.find("READ_CSV"), 1);
  EXPECT_EQ(*v.find("STOP"), 2);
  EXPECT_EQ(*v.find("StandardScaler"), 3);
  EXPECT_EQ(*v.find("LogisticRegression"), 4);
  EXPECT_EQ(v.category(4), Category::Estimator);
}

TEST(BuildVocabulary, DuplicateLabel) {
  const auto path = write_temp("dup.json",
                               R"({"operators":[{"label":"SVC","category":"Estimator"},)"
                               R"({"label":"SVC","category":"Estimator"}]})");
  EXPECT_THROW(build_vocabulary(path), DuplicateLabel);
}

TEST(BuildVocabulary, MissingEstimator) {
  const auto path = write_temp("noest.json", R"({"operators":[{"label":"PCA","category":"Preprocessor"}]})");
  EXPECT_THROW(build_vocabulary(path), MissingEstimatorCategory);
}

TEST(BuildVocabulary, DefaultWhitelistCoversTargetLibraries) {
  const auto& v = default_vocab();
  for (const char* label : {"StandardScaler", "LogisticRegression", "RandomForestClassifier", "XGBClassifier",
                            "XGBRegressor", "LGBMClassifier", "LGBMRegressor"}) {
    EXPECT_TRUE(v.find(label).has_value()) << label;
  }
  EXPECT_EQ(v.category(*v.find("XGBClassifier")), Category::Estimator);
  EXPECT_EQ(v.category(*v.find("StandardScaler")), Category::Preprocessor);
}

TEST(BuildVocabulary, JsonRoundTrip) {
  const auto& v = default_vocab();
  EXPECT_EQ(NodeVocabulary::from_json(nlohmann::json::parse(v.to_json().dump())), v);
}

TEST(MatchOperator, LibraryAndMethodRules) {
  const auto& v = default_vocab();
  EXPECT_EQ(match_operator("pandas.read_csv", v)->id, kReadCsv);
  const auto ctor = match_operator("sklearn.linear_model.LogisticRegression", v);
  ASSERT_TRUE(ctor);
  EXPECT_FALSE(ctor->method);
  const auto fit = match_operator("sklearn.linear_model.LogisticRegression.fit", v);
  ASSERT_TRUE(fit);
  EXPECT_TRUE(fit->method);
  EXPECT_EQ(fit->id, ctor->id);
  EXPECT_FALSE(match_operator("mylib.LogisticRegression", v));
  EXPECT_FALSE(match_operator("matplotlib.pyplot.plot", v));
  EXPECT_FALSE(match_operator("sklearn.metrics.accuracy_score", v));
}

TEST(FilterGraph, LogisticSnippetKeepsOperatorCore) {
  const auto g = graph_of(
      "import pandas as pd\nimport matplotlib.pyplot as plt\n"
      "from sklearn.model_selection import train_test_split\n"
      "from sklearn.linear_model import LogisticRegression\nfrom sklearn.metrics import accuracy_score\n"
      "df = pd.read_csv('example.csv')\n"
      "X_train, X_test, y_train, y_test = train_test_split(df[['A', 'B']], df['Y'], test_size=0.2)\n"
      "lr = LogisticRegression()\nlr.fit(X_train, y_train)\ny_pred = lr.predict(X_test)\n"
      "print(accuracy_score(y_test, y_pred))\nplt.scatter(y_test, y_pred)\nplt.show()\n");
  const auto& v = default_vocab();
  const auto p = accepted(filter_graph(g, v, "example"));
  EXPECT_EQ(validate(p, v), "");
  ASSERT_EQ(p.nodes.size(), 4u);
  EXPECT_EQ(v.label(p.nodes[0].vocab_id), "DATASET");
  EXPECT_EQ(v.label(p.nodes[1].vocab_id), "READ_CSV");
  EXPECT_EQ(v.label(p.nodes[2].vocab_id), "train_test_split");
  EXPECT_EQ(v.label(p.nodes[3].vocab_id), "LogisticRegression");
  EXPECT_EQ(p.edges, (std::vector<PipelineEdge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(FilterGraph, PlottingOnlyRejected) {
  const auto g = graph_of(
      "import matplotlib.pyplot as plt\nimport pandas as pd\ndf = pd.read_csv('a.csv')\n"
      "plt.plot(df['x'])\nplt.show()\n");
  const auto r = filter_graph(g, default_vocab(), "a");
  ASSERT_TRUE(std::holds_alternative<Rejected>(r));
  EXPECT_EQ(std::get<Rejected>(r).reason, RejectReason::NoEstimator);
}

TEST(FilterGraph, ScalerXgbFixtureMatchesGolden) {
  const auto g = graph_of(
      "import pandas as pd\n"
      "import matplotlib.pyplot as plt\n"
      "from sklearn.preprocessing import StandardScaler\n"
      "from xgboost import XGBClassifier\n"
      "df = pd.read_csv('../input/heart.csv')\n"
      "print(df.head())\n"
      "plt.hist(df['age'])\n"
      "plt.show()\n"
      "y = df['target']\n"
      "X = df.drop(['target'], axis=1)\n"
      "scaler = StandardScaler()\n"
      "Xs = scaler.fit_transform(X)\n"
      "print(Xs.shape)\n"
      "model = XGBClassifier(n_estimators=100)\n"
      "model.fit(Xs, y)\n"
      "print(model.score(Xs, y))\n",
      "scaler_xgb");
  const std::string name = normalize_dataset_name(resolve_dataset_name(g, {}));
  const auto p = accepted(filter_graph(g, default_vocab(), name));
  const auto golden = pipeline_graph_from_json(testutil::read_json(testutil::test_path("golden/scaler_xgb_pipeline.json")));
  EXPECT_EQ(p, golden);
}

TEST(FilterGraph, AllInVocabularyGraphOnlyGainsDatasetNode) {
  CodeGraph g;
  g.script_id = "clean";
  g.nodes = {{0, script::NodeKind::CallSite, "pandas.read_csv", 1},
             {1, script::NodeKind::CallSite, "sklearn.preprocessing.StandardScaler", 2},
             {2, script::NodeKind::CallSite, "sklearn.linear_model.LogisticRegression", 3}};
  g.edges = {{0, 1, script::EdgeKind::DataFlow}, {1, 2, script::EdgeKind::DataFlow}};
  const auto p = accepted(filter_graph(g, default_vocab(), "d"));
  ASSERT_EQ(p.nodes.size(), 4u);
  EXPECT_EQ(p.edges, (std::vector<PipelineEdge>{{0, 1}, {1, 2}, {2, 3}}));
  // Filtering the operator view again is a fixed point.
  CodeGraph again;
  again.script_id = "clean";
  const auto& v = default_vocab();
  const char* paths[] = {"", "pandas.read_csv", "sklearn.preprocessing.StandardScaler",
                         "sklearn.linear_model.LogisticRegression"};
  for (int i = 1; i < 4; ++i) again.nodes.push_back({i - 1, script::NodeKind::CallSite, paths[i], i});
  for (const auto& e : p.edges) {
    if (e.src > 0) again.edges.push_back({e.src - 1, e.dst - 1, script::EdgeKind::DataFlow});
  }
  EXPECT_EQ(accepted(filter_graph(again, v, "d")), p);
}

TEST(FilterGraph, MissingReadCallRejected) {
  CodeGraph g;
  g.nodes = {{0, script::NodeKind::CallSite, "sklearn.svm.SVC", 1}};
  const auto r = filter_graph(g, default_vocab(), "d");
  ASSERT_TRUE(std::holds_alternative<Rejected>(r));
  EXPECT_EQ(std::get<Rejected>(r).reason, RejectReason::NoReadCall);
}

TEST(FilterGraph, EstimatorNotFedByDataIsDropped) {
  const auto g = graph_of(
      "import pandas as pd\nfrom sklearn.svm import SVC\nfrom sklearn.decomposition import PCA\n"
      "df = pd.read_csv('a.csv')\np = PCA().fit_transform(df)\nm = SVC()\n");
  const auto r = filter_graph(g, default_vocab(), "a");
  ASSERT_TRUE(std::holds_alternative<Rejected>(r));
  EXPECT_EQ(std::get<Rejected>(r).reason, RejectReason::NoEstimator);
}

TEST(FilterGraph, TooLargeRejected) {
  std::string s = "import pandas as pd\nfrom sklearn.svm import SVC\nfrom sklearn.decomposition import PCA\n"
                  "x0 = pd.read_csv('a.csv')\n";
  for (int i = 0; i < 10; ++i) s += "x" + std::to_string(i + 1) + " = PCA().fit_transform(x" + std::to_string(i) + ")\n";
  s += "SVC().fit(x10)\n";
  const auto g = graph_of(s);
  EXPECT_TRUE(std::holds_alternative<PipelineGraph>(filter_graph(g, default_vocab(), "a", 13)));
  const auto r = filter_graph(g, default_vocab(), "a", 12);
  ASSERT_TRUE(std::holds_alternative<Rejected>(r));
  EXPECT_EQ(std::get<Rejected>(r).reason, RejectReason::TooLarge);
}

TEST(ResolveDatasetName, LiteralSidecarSentinel) {
  const auto lit = graph_of("import pandas as pd\ndf = pd.read_csv('../input/train.csv')\n", "a");
  EXPECT_EQ(resolve_dataset_name(lit, {}), "train.csv");
  const auto var = graph_of("import pandas as pd\np = 'x'\ndf = pd.read_csv(p)\n", "b");
  EXPECT_EQ(resolve_dataset_name(var, {{"b", "titanic"}}), "titanic");
  EXPECT_EQ(resolve_dataset_name(var, {}), kUnknownDataset);
}

TEST(NormalizeDatasetName, BasenameLowerNoExtension) {
  EXPECT_EQ(normalize_dataset_name("../input/Train.CSV"), "train");
  EXPECT_EQ(normalize_dataset_name("titanic"), "titanic");
  EXPECT_EQ(normalize_dataset_name(kUnknownDataset), kUnknownDataset);
}

TEST(FilterCorpus, EmptyCorpusZeroReport) {
  const auto out = filter_corpus({}, default_vocab(), {});
  EXPECT_TRUE(out.graphs.empty());
  EXPECT_EQ(out.report.scripts_in, 0u);
  EXPECT_EQ(out.report.nodes_before, 0u);
  EXPECT_EQ(out.report.reduction_rate_nodes(), 0.0);
}

TEST(FilterCorpus, CountsEstimatorBearingScripts) {
  std::vector<CodeGraph> graphs;
  const char* models[] = {"LogisticRegression", "SVC", "Ridge", "KMeans", "GaussianNB", "Lasso", "LinearSVC"};
  const char* modules[] = {"linear_model", "svm", "linear_model", "cluster", "naive_bayes", "linear_model", "svm"};
  for (int i = 0; i < 7; ++i) {
    graphs.push_back(graph_of(std::string("import pandas as pd\nfrom sklearn.") + modules[i] + " import " + models[i] +
                                  "\ndf = pd.read_csv('d" + std::to_string(i) + ".csv')\nm = " + models[i] +
                                  "()\nm.fit(df)\nprint(m)\n",
                              "est" + std::to_string(i)));
  }
  for (int i = 0; i < 3; ++i) {
    graphs.push_back(graph_of("import pandas as pd\ndf = pd.read_csv('e.csv')\nprint(df.describe())\n",
                              "eda" + std::to_string(i)));
  }
  const auto out = filter_corpus(graphs, default_vocab(), {});
  EXPECT_EQ(out.report.scripts_in, 10u);
  EXPECT_EQ(out.report.graphs_out, 7u);
  EXPECT_EQ(out.report.rejected_no_estimator, 3u);
  EXPECT_EQ(out.graphs[0].dataset_name, "d0");
  std::size_t nodes = 0;
  for (const auto& p : out.graphs) nodes += p.nodes.size();
  EXPECT_EQ(out.report.nodes_after, nodes);
}

TEST(FilterProperties, RandomScripts) {
  const auto& v = default_vocab();
  int accepted_count = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto g = graph_of(random_script(seed), "r" + std::to_string(seed));
    ASSERT_EQ(script::validate(g), "");
    std::vector<int> map;
    const auto r = filter_graph(g, v, "data", kDefaultMaxNodes, &map);
    EXPECT_EQ(r, filter_graph(g, v, "data")) << "deterministic";
    const auto* p = std::get_if<PipelineGraph>(&r);
    if (p == nullptr) continue;
    ++accepted_count;
    ASSERT_EQ(validate(*p, v), "") << random_script(seed);
    EXPECT_LE(p->nodes.size(), g.nodes.size());
    EXPECT_LE(p->edges.size(), g.edges.size());
    for (const auto& n : p->nodes) {
      EXPECT_TRUE(n.vocab_id == kDataset || n.vocab_id == kReadCsv || v.category(n.vocab_id) != Category::Reserved);
    }
    // Operator-to-operator reachability survives contraction.
    const auto reach = dataflow_reach(g);
    const auto preach = [&](int a, int b) { return a == b || reachable_from(*p, a)[static_cast<std::size_t>(b)]; };
    for (std::size_t a = 0; a < g.nodes.size(); ++a) {
      for (std::size_t b = 0; b < g.nodes.size(); ++b) {
        if (map[a] >= 0 && map[b] >= 0 && reach[a][b]) {
          EXPECT_TRUE(preach(map[a], map[b])) << seed;
        }
      }
    }
  }
  EXPECT_GT(accepted_count, 50);
}

TEST(PipelineGraphValidate, DetectsViolations) {
  const auto& v = default_vocab();
  PipelineGraph g{"g", "d", {{0, kDataset}, {1, kReadCsv}, {2, 25}}, {{0, 1}, {1, 2}}};
  EXPECT_EQ(validate(g, v), "");
  auto bad = g;
  bad.edges.push_back({2, 1});
  EXPECT_NE(validate(bad, v), "");
  bad = g;
  bad.nodes[2].vocab_id = kStop;
  EXPECT_NE(validate(bad, v), "");
  bad = g;
  bad.edges = {{1, 2}};
  EXPECT_NE(validate(bad, v), "");
  bad = g;
  bad.nodes.push_back({3, 25});
  EXPECT_NE(validate(bad, v), "");
  EXPECT_NE(validate(g, v, 2), "");
  EXPECT_EQ(pipeline_graph_from_json(nlohmann::json::parse(to_json(g).dump())), g);
}
