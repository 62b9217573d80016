#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>

#include "pipeforge/script/ast.hpp"

namespace pipeforge::script {

// What a name (or expression) is known to denote.
struct Binding {
  enum class Kind {
    Path,        // module, function or class reachable by a dotted import path
    DataFrame,   // result of a read-like or frame-producing call
    Instance,    // object constructed from the class at `path`
    Value,       // some other value
    Unresolved,  // unknown symbol
  };
  Kind kind = Kind::Unresolved;
  std::string path;

  static Binding of_path(std::string p) { return {Kind::Path, std::move(p)}; }
  static Binding dataframe() { return {Kind::DataFrame, "dataframe"}; }
  static Binding instance(std::string cls) { return {Kind::Instance, std::move(cls)}; }
  static Binding value() { return {Kind::Value, {}}; }
  static Binding unresolved() { return {Kind::Unresolved, {}}; }

  // Rendering used by the alias environment: dotted path, "dataframe" or
  // "<unresolved>".
  std::string describe() const {
    switch (kind) {
      case Kind::Path:
      case Kind::Instance: return path;
      case Kind::DataFrame: return "dataframe";
      case Kind::Value: return "<value>";
      case Kind::Unresolved: return "<unresolved>";
    }
    return {};
  }

  friend bool operator==(const Binding&, const Binding&) = default;
};

using AliasEnvironment = std::map<std::string, Binding>;

namespace api {

inline bool is_read_like(std::string_view label) {
  static const std::set<std::string_view> kRead = {
      "pandas.read_csv",  "pandas.read_table",   "pandas.read_excel", "pandas.read_json",
      "pandas.read_parquet", "pandas.read_feather", "pandas.read_pickle"};
  return kRead.count(label) > 0;
}

inline bool returns_dataframe(std::string_view path) {
  static const std::set<std::string_view> kFrames = {
      "pandas.DataFrame",   "pandas.Series",       "pandas.concat",
      "pandas.merge",       "pandas.get_dummies",  "sklearn.model_selection.train_test_split"};
  return is_read_like(path) || kFrames.count(path) > 0;
}

inline bool is_builtin(std::string_view name) {
  static const std::set<std::string_view> kBuiltins = {
      "print", "len",    "range", "list",  "dict",    "set",      "tuple",  "sorted", "open",  "int",
      "float", "str",    "bool",  "zip",   "enumerate", "isinstance", "type", "round", "sum", "min",
      "max",   "abs",    "map",   "filter", "any",    "all",      "reversed", "display", "input", "format",
      "iter",  "next",   "getattr", "setattr", "hasattr", "vars", "repr",   "divmod", "pow",   "hash"};
  return kBuiltins.count(name) > 0;
}

// Estimator/transformer methods that return the receiver itself.
inline bool returns_self(std::string_view method) { return method == "fit" || method == "set_params"; }

inline std::string last_component(std::string_view path) {
  const auto pos = path.rfind('.');
  return std::string(pos == std::string_view::npos ? path : path.substr(pos + 1));
}

inline bool looks_like_class(std::string_view path) {
  const std::string last = last_component(path);
  return !last.empty() && std::isupper(static_cast<unsigned char>(last.front()));
}

}  // namespace api

// Incremental name resolution over statements in source order. The final
// environment is what resolve_names returns; the code-graph builder drives the
// same object statement by statement so later rebindings do not leak backwards.
class Resolver {
 public:
  Resolver() = default;
  explicit Resolver(AliasEnvironment env) : env_(std::move(env)) {}

  const AliasEnvironment& environment() const { return env_; }

  Binding lookup(const std::string& name) const {
    if (auto it = env_.find(name); it != env_.end()) return it->second;
    if (api::is_builtin(name)) return Binding::of_path("builtins." + name);
    return Binding::unresolved();
  }

  void bind(const std::string& name, Binding b) { env_[name] = std::move(b); }

  // Static type of an expression under the current environment.
  Binding type_of(const Expr& e) const {
    switch (e.kind) {
      case ExprKind::Name:
        return lookup(e.name);
      case ExprKind::Attribute: {
        const Binding base = type_of(e.base());
        if (base.kind == Binding::Kind::Path) return Binding::of_path(base.path + "." + e.name);
        if (base.kind == Binding::Kind::DataFrame) return Binding::dataframe();
        if (base.kind == Binding::Kind::Unresolved) return Binding::unresolved();
        return Binding::value();
      }
      case ExprKind::Call:
        return result_of_call(e);
      case ExprKind::Subscript: {
        const Binding base = type_of(e.base());
        return base.kind == Binding::Kind::DataFrame ? Binding::dataframe() : Binding::value();
      }
      case ExprKind::Operation: {
        for (const auto& c : e.children) {
          if (type_of(c).kind == Binding::Kind::DataFrame) return Binding::dataframe();
        }
        return Binding::value();
      }
      case ExprKind::Literal:
        return Binding::value();
      case ExprKind::Unresolved:
        return Binding::unresolved();
    }
    return Binding::unresolved();
  }

  // Label of a call site and whether it resolved to a known API.
  struct CallLabel {
    std::string label;
    bool resolved = false;
  };

  CallLabel label_of_call(const Expr& call) const {
    const Expr& callee = call.callee();
    if (callee.kind == ExprKind::Name) {
      const Binding b = lookup(callee.name);
      if (b.kind == Binding::Kind::Path) return {b.path, true};
      if (b.kind == Binding::Kind::Instance) return {b.path + ".__call__", true};
      return {callee.name, false};
    }
    if (callee.kind == ExprKind::Attribute) {
      const Binding base = type_of(callee.base());
      switch (base.kind) {
        case Binding::Kind::Path: return {base.path + "." + callee.name, true};
        case Binding::Kind::DataFrame: return {"pandas.DataFrame." + callee.name, true};
        case Binding::Kind::Instance: return {base.path + "." + callee.name, true};
        default: break;
      }
      if (callee.base().kind == ExprKind::Literal && callee.base().literal == LiteralKind::String) {
        return {"builtins.str." + callee.name, true};
      }
      if (callee.base().kind == ExprKind::Name) return {callee.base().name + "." + callee.name, false};
      return {"unknown." + callee.name, false};
    }
    return {"unknown.__call__", false};
  }

  Binding result_of_call(const Expr& call) const {
    const Expr& callee = call.callee();
    if (callee.kind == ExprKind::Attribute) {
      const Binding base = type_of(callee.base());
      if (base.kind == Binding::Kind::DataFrame) return Binding::dataframe();
      if (base.kind == Binding::Kind::Instance) {
        return api::returns_self(callee.name) ? base : Binding::value();
      }
    }
    const CallLabel label = label_of_call(call);
    if (!label.resolved) return Binding::unresolved();
    if (api::returns_dataframe(label.label)) return Binding::dataframe();
    const bool path_call = (callee.kind == ExprKind::Name && lookup(callee.name).kind == Binding::Kind::Path) ||
                           (callee.kind == ExprKind::Attribute &&
                            type_of(callee.base()).kind == Binding::Kind::Path);
    if (path_call && api::looks_like_class(label.label) && !label.label.starts_with("builtins.")) {
      return Binding::instance(label.label);
    }
    return Binding::value();
  }

  // Applies one statement's bindings.
  void apply(const Statement& s) {
    if (const auto* imp = std::get_if<Import>(&s.node)) {
      bind(imp->alias, Binding::of_path(imp->module));
    } else if (const auto* a = std::get_if<Assign>(&s.node)) {
      Binding value = type_of(a->value);
      if (a->unpack && a->value.kind == ExprKind::Call && value.kind != Binding::Kind::DataFrame &&
          value.kind != Binding::Kind::Unresolved) {
        value = Binding::value();
      }
      for (const auto& t : a->targets) {
        if (!t.mutation) bind(t.name, value);
      }
    }
  }

 private:
  AliasEnvironment env_;
};

// Alias environment after all statements: import aliases to module paths,
// constructor results to class paths, read-like results to "dataframe",
// unknown symbols to Unresolved.
inline AliasEnvironment resolve_names(const StatementList& statements) {
  Resolver r;
  for (const auto& s : statements.statements) r.apply(s);
  return r.environment();
}

}  // namespace pipeforge::script
