#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pipeforge/core/error.hpp"
#include "pipeforge/script/ast.hpp"
#include "pipeforge/script/resolver.hpp"

namespace pipeforge::script {

enum class NodeKind { CallSite, DataSource, Unresolved };
enum class EdgeKind { DataFlow, ControlFlow };

struct CodeNode {
  int id = 0;
  NodeKind kind = NodeKind::CallSite;
  std::string label;
  int line = 0;

  friend bool operator==(const CodeNode&, const CodeNode&) = default;
};

struct CodeEdge {
  int src = 0;
  int dst = 0;
  EdgeKind kind = EdgeKind::DataFlow;

  friend bool operator==(const CodeEdge&, const CodeEdge&) = default;
  friend auto operator<=>(const CodeEdge&, const CodeEdge&) = default;
};

struct CodeGraph {
  std::string script_id;
  std::vector<CodeNode> nodes;
  std::vector<CodeEdge> edges;

  std::size_t count(EdgeKind kind) const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const CodeEdge& e) { return e.kind == kind; }));
  }
  std::size_t count(NodeKind kind) const {
    return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [&](const CodeNode& n) { return n.kind == kind; }));
  }

  friend bool operator==(const CodeGraph&, const CodeGraph&) = default;
};

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::CallSite: return "CallSite";
    case NodeKind::DataSource: return "DataSource";
    case NodeKind::Unresolved: return "Unresolved";
  }
  return "";
}

inline const char* to_string(EdgeKind k) { return k == EdgeKind::DataFlow ? "DataFlow" : "ControlFlow"; }

// ---- serialization: one JSON document per script ----

inline nlohmann::ordered_json to_json(const CodeGraph& g) {
  nlohmann::ordered_json j;
  j["script_id"] = g.script_id;
  auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : g.nodes) {
    nodes.push_back({{"id", n.id}, {"kind", to_string(n.kind)}, {"label", n.label}, {"line", n.line}});
  }
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) edges.push_back({{"src", e.src}, {"dst", e.dst}, {"kind", to_string(e.kind)}});
  return j;
}

inline CodeGraph code_graph_from_json(const nlohmann::json& j) {
  try {
    CodeGraph g;
    g.script_id = j.at("script_id").get<std::string>();
    for (const auto& n : j.at("nodes")) {
      const std::string kind = n.at("kind").get<std::string>();
      NodeKind k = NodeKind::CallSite;
      if (kind == "DataSource") {
        k = NodeKind::DataSource;
      } else if (kind == "Unresolved") {
        k = NodeKind::Unresolved;
      } else if (kind != "CallSite") {
        throw FormatError("unknown node kind " + kind);
      }
      g.nodes.push_back({n.at("id").get<int>(), k, n.at("label").get<std::string>(), n.at("line").get<int>()});
    }
    for (const auto& e : j.at("edges")) {
      const std::string kind = e.at("kind").get<std::string>();
      if (kind != "DataFlow" && kind != "ControlFlow") throw FormatError("unknown edge kind " + kind);
      g.edges.push_back({e.at("src").get<int>(), e.at("dst").get<int>(),
                         kind == "DataFlow" ? EdgeKind::DataFlow : EdgeKind::ControlFlow});
    }
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("malformed code graph: ") + ex.what());
  }
}

// Structural invariants: dense ids, valid endpoints, single control-flow chain,
// acyclic data flow, whitespace-free labels. Returns an empty string when valid.
inline std::string validate(const CodeGraph& g) {
  const int n = static_cast<int>(g.nodes.size());
  for (int i = 0; i < n; ++i) {
    if (g.nodes[i].id != i) return "node ids are not dense";
    if (g.nodes[i].label.empty()) return "empty label";
    if (g.nodes[i].label.find_first_of(" \t\r\n") != std::string::npos) return "label contains whitespace";
  }
  std::vector<int> cf_out(n, 0);
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (const auto& e : g.edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) return "edge endpoint out of range";
    if (e.kind == EdgeKind::ControlFlow) {
      if (++cf_out[e.src] > 1) return "call site with more than one outgoing control-flow edge";
    } else {
      succ[e.src].push_back(e.dst);
      ++indeg[e.dst];
    }
  }
  std::vector<int> ready;
  for (int i = 0; i < n; ++i) {
    if (indeg[i] == 0) ready.push_back(i);
  }
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : succ[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (seen != n) return "data-flow edges contain a cycle";
  return {};
}

namespace detail {

// Walks statements in order, creating one node per call expression.
class GraphBuilder {
 public:
  GraphBuilder(const AliasEnvironment& env, std::string script_id) {
    graph_.script_id = std::move(script_id);
    // Imports anywhere in the script are visible from the start; variable
    // bindings are tracked in order.
    AliasEnvironment imports;
    for (const auto& [name, b] : env) {
      if (b.kind == Binding::Kind::Path) imports.emplace(name, b);
    }
    resolver_ = Resolver(std::move(imports));
  }

  CodeGraph build(const StatementList& statements) {
    for (const auto& s : statements.statements) statement(s);
    return std::move(graph_);
  }

 private:
  using Producers = std::vector<int>;

  void statement(const Statement& s) {
    if (const auto* a = std::get_if<Assign>(&s.node)) {
      const Producers producers = visit(a->value);
      for (const auto& t : a->targets) {
        if (t.mutation) {
          if (!producers.empty()) defs_[t.name] = producers;
        } else {
          defs_[t.name] = producers;
        }
      }
    } else if (const auto* x = std::get_if<ExprStmt>(&s.node)) {
      visit(x->value);
    }
    resolver_.apply(s);
  }

  static void merge(Producers& into, const Producers& from) {
    for (int p : from) {
      if (std::find(into.begin(), into.end(), p) == into.end()) into.push_back(p);
    }
  }

  Producers visit(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Name: {
        auto it = defs_.find(e.name);
        return it == defs_.end() ? Producers{} : it->second;
      }
      case ExprKind::Literal:
      case ExprKind::Unresolved:
        return {};
      case ExprKind::Attribute:
        return visit(e.base());
      case ExprKind::Subscript:
      case ExprKind::Operation: {
        Producers out;
        for (const auto& c : e.children) merge(out, visit(c));
        return out;
      }
      case ExprKind::Call:
        return call(e);
    }
    return {};
  }

  Producers call(const Expr& e) {
    const Expr& callee = e.callee();
    // Receiver first (left-to-right flattening of chained calls), then args.
    Producers inputs;
    const Expr* receiver = nullptr;
    if (callee.kind == ExprKind::Attribute) {
      receiver = &callee.base();
      inputs = visit(*receiver);
    } else if (callee.kind != ExprKind::Name) {
      inputs = visit(callee);
    }
    const auto label = resolver_.label_of_call(e);
    const bool read_like = label.resolved && api::is_read_like(label.label);
    for (std::size_t i = 1; i < e.children.size(); ++i) {
      const Expr& arg = e.children[i];
      if (read_like && i == 1 && arg.kind == ExprKind::Literal && arg.literal == LiteralKind::String) {
        inputs.push_back(add_node(NodeKind::DataSource, sanitize(arg.name), arg.line));
        continue;
      }
      merge(inputs, visit(arg));
    }
    for (const auto& [key, value] : e.kwargs) {
      if (read_like && e.children.size() == 1 && key == "filepath_or_buffer" && value.kind == ExprKind::Literal &&
          value.literal == LiteralKind::String) {
        inputs.push_back(add_node(NodeKind::DataSource, sanitize(value.name), value.line));
        continue;
      }
      merge(inputs, visit(value));
    }
    const int id = add_node(label.resolved ? NodeKind::CallSite : NodeKind::Unresolved, label.label, e.line);
    for (int p : inputs) graph_.edges.push_back({p, id, EdgeKind::DataFlow});
    if (last_call_ >= 0) graph_.edges.push_back({last_call_, id, EdgeKind::ControlFlow});
    last_call_ = id;
    // A method call on a variable is the latest write to that object.
    if (receiver != nullptr && receiver->kind == ExprKind::Name) {
      const auto kind = resolver_.lookup(receiver->name).kind;
      if (kind == Binding::Kind::Instance || kind == Binding::Kind::DataFrame) defs_[receiver->name] = {id};
    }
    return {id};
  }

  static std::string sanitize(const std::string& literal) {
    std::string out = literal.empty() ? std::string("<empty>") : literal;
    for (char& c : out) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') c = '_';
    }
    return out;
  }

  int add_node(NodeKind kind, std::string label, int line) {
    const int id = static_cast<int>(graph_.nodes.size());
    graph_.nodes.push_back({id, kind, std::move(label), line});
    return id;
  }

  CodeGraph graph_;
  Resolver resolver_;
  std::map<std::string, Producers> defs_;
  int last_call_ = -1;
};

}  // namespace detail

// One CallSite (or Unresolved) node per call expression; DataFlow edges from
// the latest definitions of consumed variables; ControlFlow edges chaining
// calls in evaluation order; DataSource nodes for literal paths given to
// read-like calls. Edges into a method call list the receiver's producers
// first.
inline CodeGraph build_code_graph(const StatementList& statements, const AliasEnvironment& env,
                                  std::string script_id) {
  return detail::GraphBuilder(env, std::move(script_id)).build(statements);
}

}  // namespace pipeforge::script
