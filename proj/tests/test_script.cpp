#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "pipeforge/core/error.hpp"
#include "pipeforge/script/analyzer.hpp"
#include "test_util.hpp"

using namespace pipeforge;
using namespace pipeforge::script;

namespace {

const char* kLogisticSnippet =
    "import pandas as pd\n"
    "from sklearn.model_selection import train_test_split\n"
    "from sklearn.linear_model import LogisticRegression\n"
    "\n"
    "df = pd.read_csv('example.csv')\n"
    "X_train, X_test, y_train, y_test = train_test_split(df[['A', 'B']], df['Y'], test_size=0.2)\n"
    "lr = LogisticRegression()\n"
    "lr.fit(X_train, y_train)\n"
    "y_pred = lr.predict(X_test)\n";

StatementList parse(const std::string& text) { return parse_script(ScriptSource::from_text("t.py", text)); }

CodeGraph graph_of(const std::string& text, const std::string& id = "s") {
  return analyze_script(ScriptSource::from_text(id + ".py", text), id).graph;
}

std::vector<std::string> call_order(const Expr& e) {
  std::vector<std::string> out;
  if (e.kind == ExprKind::Call) {
    // Callee and receiver are evaluated before the call itself.
    for (const auto& c : e.children) {
      auto sub = call_order(c);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    out.push_back(e.callee().name);
    return out;
  }
  for (const auto& c : e.children) {
    auto sub = call_order(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool has_edge(const CodeGraph& g, const std::string& src, const std::string& dst, EdgeKind kind) {
  for (const auto& e : g.edges) {
    if (e.kind == kind && g.nodes[e.src].label == src && g.nodes[e.dst].label == dst) return true;
  }
  return false;
}

}  // namespace

TEST(ParseScript, SingleImport) {
  const auto list = parse("import pandas as pd\n");
  ASSERT_EQ(list.statements.size(), 1u);
  const auto& imp = std::get<Import>(list.statements[0].node);
  EXPECT_EQ(imp.module, "pandas");
  EXPECT_EQ(imp.alias, "pd");
}

TEST(ParseScript, FromImportAndDottedImport) {
  const auto list = parse("from sklearn.svm import SVC as S, LinearSVC\nimport os.path\n");
  ASSERT_EQ(list.statements.size(), 3u);
  EXPECT_EQ(std::get<Import>(list.statements[0].node).module, "sklearn.svm.SVC");
  EXPECT_EQ(std::get<Import>(list.statements[0].node).alias, "S");
  EXPECT_EQ(std::get<Import>(list.statements[1].node).alias, "LinearSVC");
  EXPECT_EQ(std::get<Import>(list.statements[2].node).alias, "os");
  EXPECT_EQ(std::get<Import>(list.statements[2].node).module, "os");
}

TEST(ParseScript, LogisticSnippetCallsInOrder) {
  const auto list = parse(kLogisticSnippet);
  std::vector<std::string> calls;
  for (const auto& s : list.statements) {
    if (const auto* a = std::get_if<Assign>(&s.node)) {
      auto c = call_order(a->value);
      calls.insert(calls.end(), c.begin(), c.end());
    } else if (const auto* x = std::get_if<ExprStmt>(&s.node)) {
      auto c = call_order(x->value);
      calls.insert(calls.end(), c.begin(), c.end());
    }
  }
  EXPECT_EQ(calls, (std::vector<std::string>{"read_csv", "train_test_split", "LogisticRegression", "fit", "predict"}));
}

TEST(ParseScript, ComprehensionIsUnresolvedAndCounted) {
  const auto list = parse("x = [f(i) for i in y]\n");
  ASSERT_EQ(list.statements.size(), 1u);
  const auto& a = std::get<Assign>(list.statements[0].node);
  EXPECT_EQ(a.targets.at(0).name, "x");
  EXPECT_EQ(a.value.kind, ExprKind::Unresolved);
  EXPECT_EQ(list.total_skipped(), 1);
  EXPECT_EQ(list.skipped.at("comprehension"), 1);
}

TEST(ParseScript, FunctionAndClassBodiesSkipped) {
  const auto list = parse(
      "def f(a):\n"
      "    return a.fit()\n"
      "class C:\n"
      "    def g(self):\n"
      "        pass\n"
      "y = f(1)\n");
  ASSERT_EQ(list.statements.size(), 1u);
  EXPECT_EQ(list.skipped.at("function_def"), 1);
  EXPECT_EQ(list.skipped.at("class_def"), 1);
}

TEST(ParseScript, LoopAndConditionalBodiesLinearized) {
  const auto list = parse(
      "for i in range(3):\n"
      "    a = g(i)\n"
      "    if a:\n"
      "        b = h(a)\n"
      "    else:\n"
      "        b = k(a)\n"
      "c = m(b)\n");
  std::vector<int> lines;
  for (const auto& s : list.statements) lines.push_back(s.line);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  EXPECT_EQ(count_calls(list), 5u);
}

TEST(ParseScript, NotebookMagicsSkipped) {
  const auto list = parse("%matplotlib inline\n!pip install xgboost\nimport numpy as np\n");
  ASSERT_EQ(list.statements.size(), 1u);
  EXPECT_EQ(list.skipped.at("magic"), 2);
}

TEST(ParseScript, UnterminatedStringIsLexError) {
  EXPECT_THROW(parse("x = 'abc\n"), LexError);
  EXPECT_THROW(parse("x = \"\"\"never closed\n"), LexError);
}

TEST(ParseScript, InvalidUtf8IsLexError) { EXPECT_THROW(parse("x = '\xff\xfe'\n"), LexError); }

TEST(ParseScript, UnparseableLineSkippedNotFatal) {
  const auto list = parse("a = f(\nb = 1\n)\nc = g(1) +\nd = h(2)\n");
  EXPECT_GE(list.total_skipped(), 1);
  bool has_d = false;
  for (const auto& s : list.statements) {
    if (const auto* a = std::get_if<Assign>(&s.node); a && a->targets.at(0).name == "d") has_d = true;
  }
  EXPECT_TRUE(has_d);
}

TEST(ResolveNames, AliasChainToDataframe) {
  const auto env = resolve_names(parse("import pandas as pd\ndf = pd.read_csv('f.csv')\n"));
  EXPECT_EQ(env.at("pd").describe(), "pandas");
  EXPECT_EQ(env.at("df").describe(), "dataframe");
}

TEST(ResolveNames, ConstructorBindsClassPath) {
  const auto env =
      resolve_names(parse("from sklearn.linear_model import LogisticRegression\nclf = LogisticRegression()\n"));
  EXPECT_EQ(env.at("clf").kind, Binding::Kind::Instance);
  EXPECT_EQ(env.at("clf").describe(), "sklearn.linear_model.LogisticRegression");
}

TEST(ResolveNames, UnknownSymbolUnresolved) {
  const auto env = resolve_names(parse("z = mystery()\n"));
  EXPECT_EQ(env.at("z").kind, Binding::Kind::Unresolved);
}

TEST(ResolveNames, FitReturnsSameInstanceAndMutationKeepsType) {
  const auto env = resolve_names(parse(
      "import pandas as pd\nfrom sklearn.svm import SVC\nm = SVC().fit(1, 2)\ndf = pd.read_csv('x')\ndf['a'] = 3\n"));
  EXPECT_EQ(env.at("m").describe(), "sklearn.svm.SVC");
  EXPECT_EQ(env.at("df").describe(), "dataframe");
}

TEST(BuildCodeGraph, EmptyScript) {
  const auto g = graph_of("");
  EXPECT_TRUE(g.nodes.empty());
  EXPECT_TRUE(g.edges.empty());
}

TEST(BuildCodeGraph, KMeansFixtureMatchesGolden) {
  const auto g = graph_of(
      "import pandas as pd\n"
      "from sklearn.cluster import KMeans\n"
      "df = pd.read_csv('a.csv')\n"
      "m = KMeans()\n"
      "m.fit(df)\n",
      "kmeans_fixture");
  const auto golden = code_graph_from_json(testutil::read_json(testutil::test_path("golden/kmeans_code_graph.json")));
  EXPECT_EQ(g, golden);
  EXPECT_EQ(validate(g), "");
}

TEST(BuildCodeGraph, LogisticSnippetStructure) {
  const auto g = graph_of(kLogisticSnippet);
  EXPECT_EQ(validate(g), "");
  EXPECT_EQ(g.count(NodeKind::CallSite), 5u);
  EXPECT_EQ(g.count(NodeKind::DataSource), 1u);
  EXPECT_TRUE(has_edge(g, "example.csv", "pandas.read_csv", EdgeKind::DataFlow));
  EXPECT_TRUE(has_edge(g, "pandas.read_csv", "sklearn.model_selection.train_test_split", EdgeKind::DataFlow));
  EXPECT_TRUE(has_edge(g, "sklearn.linear_model.LogisticRegression", "sklearn.linear_model.LogisticRegression.fit",
                       EdgeKind::DataFlow));
  EXPECT_TRUE(has_edge(g, "sklearn.linear_model.LogisticRegression.fit",
                       "sklearn.linear_model.LogisticRegression.predict", EdgeKind::DataFlow));
  EXPECT_EQ(g.count(EdgeKind::ControlFlow), 4u);
}

TEST(BuildCodeGraph, ChainedCallsFlattenLeftToRight) {
  const auto g = graph_of("import pandas as pd\nx = pd.read_csv('a.csv').dropna().head()\n");
  ASSERT_EQ(g.nodes.size(), 4u);
  EXPECT_EQ(g.nodes[1].label, "pandas.read_csv");
  EXPECT_EQ(g.nodes[2].label, "pandas.DataFrame.dropna");
  EXPECT_EQ(g.nodes[3].label, "pandas.DataFrame.head");
  EXPECT_TRUE(has_edge(g, "pandas.read_csv", "pandas.DataFrame.dropna", EdgeKind::DataFlow));
  EXPECT_TRUE(has_edge(g, "pandas.DataFrame.dropna", "pandas.DataFrame.head", EdgeKind::DataFlow));
}

TEST(BuildCodeGraph, LastWriteWins) {
  const auto g = graph_of("a = f()\na = g()\nh(a)\n");
  ASSERT_EQ(g.nodes.size(), 3u);
  EXPECT_TRUE(has_edge(g, "g", "h", EdgeKind::DataFlow));
  EXPECT_FALSE(has_edge(g, "f", "h", EdgeKind::DataFlow));
  EXPECT_EQ(g.count(NodeKind::Unresolved), 3u);
}

TEST(BuildCodeGraph, ReadPathFromVariableHasNoDataSource) {
  const auto g = graph_of("import pandas as pd\np = '/data/x.csv'\ndf = pd.read_csv(p)\n");
  EXPECT_EQ(g.count(NodeKind::DataSource), 0u);
  ASSERT_EQ(g.nodes.size(), 1u);
}

TEST(BuildCodeGraph, LabelsNeverContainWhitespace) {
  const auto g = graph_of("import pandas as pd\ndf = pd.read_csv('my data file.csv')\n");
  EXPECT_EQ(g.nodes[0].label, "my_data_file.csv");
  EXPECT_EQ(validate(g), "");
}

TEST(BuildCodeGraph, DeterministicSerialization) {
  const auto a = to_json(graph_of(kLogisticSnippet)).dump();
  const auto b = to_json(graph_of(kLogisticSnippet)).dump();
  EXPECT_EQ(a, b);
}

TEST(BuildCodeGraph, JsonRoundTrip) {
  const auto g = graph_of(kLogisticSnippet);
  EXPECT_EQ(code_graph_from_json(nlohmann::json::parse(to_json(g).dump())), g);
}

TEST(BuildCodeGraph, CallNodesMatchCallExpressions) {
  const char* text =
      "import numpy as np\nimport pandas as pd\nfrom sklearn.preprocessing import StandardScaler\n"
      "df = pd.read_csv('t.csv')\nprint(df.shape, len(df))\n"
      "for c in df.columns:\n    df[c] = df[c].fillna(df[c].median())\n"
      "s = StandardScaler()\nX = s.fit_transform(np.log1p(df.drop(['y'], axis=1)))\n";
  const auto a = analyze_script(ScriptSource::from_text("c.py", text), "c");
  EXPECT_EQ(a.graph.count(NodeKind::CallSite) + a.graph.count(NodeKind::Unresolved), count_calls(a.statements));
  EXPECT_EQ(validate(a.graph), "");
}

TEST(CodeGraphValidate, DetectsViolations) {
  CodeGraph g;
  g.nodes = {{0, NodeKind::CallSite, "a", 1}, {1, NodeKind::CallSite, "b", 2}};
  g.edges = {{0, 1, EdgeKind::DataFlow}, {1, 0, EdgeKind::DataFlow}};
  EXPECT_NE(validate(g), "");
  g.edges = {{0, 1, EdgeKind::ControlFlow}, {0, 1, EdgeKind::ControlFlow}};
  EXPECT_NE(validate(g), "");
  g.edges = {{0, 5, EdgeKind::DataFlow}};
  EXPECT_NE(validate(g), "");
  g.edges.clear();
  g.nodes[1].label = "has space";
  EXPECT_NE(validate(g), "");
}
