#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pipeforge::script {

// Raw script handed to the analyzer.
struct ScriptSource {
  std::string path;
  std::string text;
  std::size_t line_count = 0;

  static ScriptSource from_text(std::string path, std::string text) {
    std::size_t lines = 0;
    for (char c : text) lines += (c == '\n');
    if (!text.empty() && text.back() != '\n') ++lines;
    return ScriptSource{std::move(path), std::move(text), lines};
  }
};

enum class ExprKind {
  Call,        // children[0] is the callee, children[1..] positional args; kwargs separate
  Attribute,   // children[0] is the base; name holds the attribute
  Name,        // name holds the identifier
  Subscript,   // children[0] is the base; children[1..] the index expressions
  Literal,     // literal holds the kind; name holds a string literal's value
  Operation,   // operators, containers and slices; children are the operands
  Unresolved,  // constructs outside the supported subset (comprehensions, lambdas)
};

enum class LiteralKind { None, String, Number, Bool, NoneValue, Ellipsis };

struct Expr {
  ExprKind kind = ExprKind::Unresolved;
  std::string name;
  LiteralKind literal = LiteralKind::None;
  std::vector<Expr> children;
  std::vector<std::pair<std::string, Expr>> kwargs;
  int line = 0;

  static Expr make_name(std::string id, int line) {
    Expr e;
    e.kind = ExprKind::Name;
    e.name = std::move(id);
    e.line = line;
    return e;
  }
  static Expr make_literal(LiteralKind kind, std::string value, int line) {
    Expr e;
    e.kind = ExprKind::Literal;
    e.literal = kind;
    e.name = std::move(value);
    e.line = line;
    return e;
  }
  static Expr make_unresolved(int line) {
    Expr e;
    e.kind = ExprKind::Unresolved;
    e.line = line;
    return e;
  }
  static Expr make(ExprKind kind, std::vector<Expr> children, int line) {
    Expr e;
    e.kind = kind;
    e.children = std::move(children);
    e.line = line;
    return e;
  }

  const Expr& callee() const { return children.front(); }
  const Expr& base() const { return children.front(); }
};

struct Import {
  std::string module;  // dotted path the alias refers to
  std::string alias;
};

// Assignment target. A mutation target (df['x'] = ..., obj.attr = ..., x += ...)
// updates the base variable without rebinding its type.
struct Target {
  std::string name;
  bool mutation = false;
};

struct Assign {
  std::vector<Target> targets;
  bool unpack = false;  // a, b = ...
  Expr value;
};

struct ExprStmt {
  Expr value;
};

struct Statement {
  std::variant<Import, Assign, ExprStmt> node;
  int line = 0;
};

struct StatementList {
  std::vector<Statement> statements;
  // Construct name -> number of occurrences skipped (function defs, classes,
  // comprehensions, lambdas, notebook magics, unparseable statements).
  std::map<std::string, int> skipped;

  int total_skipped() const {
    int n = 0;
    for (const auto& [_, c] : skipped) n += c;
    return n;
  }
};

// Number of Call expressions reachable in an expression tree.
inline std::size_t count_calls(const Expr& e) {
  std::size_t n = e.kind == ExprKind::Call ? 1 : 0;
  for (const auto& c : e.children) n += count_calls(c);
  for (const auto& [_, v] : e.kwargs) n += count_calls(v);
  return n;
}

inline std::size_t count_calls(const StatementList& list) {
  std::size_t n = 0;
  for (const auto& s : list.statements) {
    if (const auto* a = std::get_if<Assign>(&s.node)) n += count_calls(a->value);
    if (const auto* x = std::get_if<ExprStmt>(&s.node)) n += count_calls(x->value);
  }
  return n;
}

}  // namespace pipeforge::script
