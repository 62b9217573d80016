#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pipeforge/script/ast.hpp"
#include "pipeforge/script/lexer.hpp"

namespace pipeforge::script {

namespace detail {

inline bool is_keyword(std::string_view w) {
  static const std::set<std::string_view> kKeywords = {
      "False", "None",   "True",  "and",   "as",     "assert", "async",  "await",    "break",
      "class", "continue", "def", "del",   "elif",   "else",   "except", "finally",  "for",
      "from",  "global", "if",    "import", "in",    "is",     "lambda", "nonlocal", "not",
      "or",    "pass",   "raise", "return", "try",   "while",  "with",   "yield"};
  return kKeywords.count(w) > 0;
}

// Raised inside the parser for a statement outside the subset; the statement is
// skipped and counted, parsing continues.
struct ParseFailure {
  std::string reason;
};

}  // namespace detail

// Recursive-descent parser producing the normalized statement list. Control
// structures are linearized: headers contribute their expressions, bodies are
// parsed in source order. Function and class definitions are skipped whole.
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  StatementList parse() {
    while (!at(TokenKind::End)) {
      if (at(TokenKind::Newline) || at(TokenKind::Indent) || at(TokenKind::Dedent)) {
        ++pos_;
        continue;
      }
      if (at(TokenKind::Magic)) {
        skip("magic");
        ++pos_;
        continue;
      }
      const std::size_t start = pos_;
      try {
        statement();
      } catch (const detail::ParseFailure&) {
        pos_ = start;
        skip("unparseable");
        skip_logical_line();
      }
    }
    return std::move(out_);
  }

 private:
  // ---- token helpers ----
  const Token& peek(std::size_t k = 0) const {
    const std::size_t i = std::min(pos_ + k, toks_.size() - 1);
    return toks_[i];
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_op(std::string_view op, std::size_t k = 0) const {
    return peek(k).kind == TokenKind::Op && peek(k).text == op;
  }
  bool at_kw(std::string_view kw, std::size_t k = 0) const {
    return peek(k).kind == TokenKind::Name && peek(k).text == kw;
  }
  bool accept_op(std::string_view op) {
    if (!at_op(op)) return false;
    ++pos_;
    return true;
  }
  bool accept_kw(std::string_view kw) {
    if (!at_kw(kw)) return false;
    ++pos_;
    return true;
  }
  void expect_op(std::string_view op) {
    if (!accept_op(op)) fail("expected '" + std::string(op) + "'");
  }
  std::string expect_name() {
    if (!at(TokenKind::Name) || detail::is_keyword(peek().text)) fail("expected identifier");
    return toks_[pos_++].text;
  }
  [[noreturn]] void fail(std::string reason) const { throw detail::ParseFailure{std::move(reason)}; }
  void skip(const std::string& construct) { ++out_.skipped[construct]; }

  void skip_logical_line() {
    while (!at(TokenKind::End) && !at(TokenKind::Newline)) ++pos_;
    if (at(TokenKind::Newline)) ++pos_;
  }

  // Skips a compound statement's body after its header (positioned at ':').
  void skip_block() {
    while (!at(TokenKind::End) && !at_op(":")) ++pos_;
    accept_op(":");
    if (!at(TokenKind::Newline)) {
      skip_logical_line();
      return;
    }
    ++pos_;
    if (!at(TokenKind::Indent)) return;
    int depth = 0;
    while (!at(TokenKind::End)) {
      if (at(TokenKind::Indent)) ++depth;
      if (at(TokenKind::Dedent)) {
        --depth;
        if (depth == 0) {
          ++pos_;
          return;
        }
      }
      ++pos_;
    }
  }

  void push(Statement s) { out_.statements.push_back(std::move(s)); }

  void push_expr(Expr e, int line) { push(Statement{ExprStmt{std::move(e)}, line}); }

  // ---- statements ----
  void statement() {
    const Token& t = peek();
    const int line = t.line;
    if (t.kind == TokenKind::Op && t.text == "@") {
      skip_logical_line();  // decorator; the definition that follows is counted
      return;
    }
    if (t.kind == TokenKind::Name) {
      const std::string& w = t.text;
      if (w == "def" || (w == "async" && at_kw("def", 1))) {
        skip("function_def");
        skip_block();
        return;
      }
      if (w == "class") {
        skip("class_def");
        skip_block();
        return;
      }
      if (w == "if" || w == "elif" || w == "while") {
        ++pos_;
        Expr cond = test();
        expect_op(":");
        push_expr(std::move(cond), line);
        after_header();
        return;
      }
      if (w == "else" || w == "try" || w == "finally") {
        ++pos_;
        expect_op(":");
        after_header();
        return;
      }
      if (w == "except") {
        ++pos_;
        while (!at(TokenKind::End) && !at(TokenKind::Newline) && !at_op(":")) ++pos_;
        expect_op(":");
        after_header();
        return;
      }
      if (w == "for" || (w == "async" && at_kw("for", 1))) {
        if (w == "async") ++pos_;
        ++pos_;
        Expr target = target_list();
        if (!accept_kw("in")) fail("expected 'in'");
        Expr iter = expr_list();
        expect_op(":");
        Assign a;
        a.value = std::move(iter);
        collect_targets(target, a, false);
        push(Statement{std::move(a), line});
        after_header();
        return;
      }
      if (w == "with" || (w == "async" && at_kw("with", 1))) {
        if (w == "async") ++pos_;
        ++pos_;
        do {
          Expr item = test();
          if (accept_kw("as")) {
            Expr target = atom_with_trailers();
            Assign a;
            a.value = std::move(item);
            collect_targets(target, a, false);
            push(Statement{std::move(a), line});
          } else {
            push_expr(std::move(item), line);
          }
        } while (accept_op(","));
        expect_op(":");
        after_header();
        return;
      }
    }
    simple_statements();
  }

  // After a compound header's ':' either a newline (body follows as indented
  // statements, parsed by the main loop) or inline simple statements.
  void after_header() {
    if (at(TokenKind::Newline)) {
      ++pos_;
      return;
    }
    simple_statements();
  }

  void simple_statements() {
    while (true) {
      simple_statement();
      if (accept_op(";")) {
        if (at(TokenKind::Newline) || at(TokenKind::End)) break;
        continue;
      }
      break;
    }
    if (at(TokenKind::Newline)) {
      ++pos_;
    } else if (!at(TokenKind::End)) {
      fail("expected end of statement");
    }
  }

  void simple_statement() {
    const int line = peek().line;
    if (at(TokenKind::Name)) {
      const std::string w = peek().text;
      if (w == "import") {
        ++pos_;
        do {
          std::string module = dotted_name();
          std::string alias;
          if (accept_kw("as")) {
            alias = expect_name();
          } else {
            // `import a.b` binds `a`
            alias = module.substr(0, module.find('.'));
            module = alias;
          }
          push(Statement{Import{module, alias}, line});
        } while (accept_op(","));
        return;
      }
      if (w == "from") {
        ++pos_;
        std::string module;
        while (accept_op(".") || accept_op("...")) module += ".";
        if (!at_kw("import")) module += dotted_name();
        if (!accept_kw("import")) fail("expected 'import'");
        if (accept_op("*")) {
          skip("star_import");
          return;
        }
        const bool paren = accept_op("(");
        do {
          if (paren && at_op(")")) break;
          const std::string name = expect_name();
          std::string alias = name;
          if (accept_kw("as")) alias = expect_name();
          push(Statement{Import{module.empty() ? name : module + "." + name, alias}, line});
        } while (accept_op(","));
        if (paren) expect_op(")");
        return;
      }
      if (w == "pass" || w == "break" || w == "continue") {
        ++pos_;
        return;
      }
      if (w == "global" || w == "nonlocal" || w == "del") {
        while (!at(TokenKind::End) && !at(TokenKind::Newline) && !at_op(";")) ++pos_;
        return;
      }
      if (w == "return" || w == "raise" || w == "assert" || w == "yield") {
        ++pos_;
        if (!at(TokenKind::Newline) && !at(TokenKind::End) && !at_op(";")) {
          Expr e = expr_list();
          if (w == "raise" && accept_kw("from")) test();
          if (w == "assert" && accept_op(",")) test();
          push_expr(std::move(e), line);
        }
        return;
      }
    }
    Expr first = star_expr_list();
    if (at_op("=")) {
      std::vector<Expr> chain;
      chain.push_back(std::move(first));
      while (accept_op("=")) chain.push_back(at_kw("yield") ? yield_expr() : star_expr_list());
      Assign a;
      a.value = std::move(chain.back());
      chain.pop_back();
      for (const auto& lhs : chain) collect_targets(lhs, a, false);
      push(Statement{std::move(a), line});
      return;
    }
    static const std::set<std::string_view> kAugmented = {"+=", "-=", "*=", "/=", "//=", "%=", "**=",
                                                          ">>=", "<<=", "&=", "|=", "^=", "@="};
    if (peek().kind == TokenKind::Op && kAugmented.count(peek().text) > 0) {
      ++pos_;
      Assign a;
      a.value = expr_list();
      collect_targets(first, a, true);
      push(Statement{std::move(a), line});
      return;
    }
    if (accept_op(":")) {  // annotated assignment
      test();
      if (accept_op("=")) {
        Assign a;
        a.value = expr_list();
        collect_targets(first, a, false);
        push(Statement{std::move(a), line});
      }
      return;
    }
    push_expr(std::move(first), line);
  }

  Expr yield_expr() {
    ++pos_;
    if (at(TokenKind::Newline) || at_op(")")) return Expr::make_literal(LiteralKind::NoneValue, "", peek().line);
    return expr_list();
  }

  std::string dotted_name() {
    std::string name = expect_name();
    while (accept_op(".")) name += "." + expect_name();
    return name;
  }

  // Maps an assignment left-hand side onto variable targets.
  void collect_targets(const Expr& lhs, Assign& a, bool mutation) {
    switch (lhs.kind) {
      case ExprKind::Name:
        a.targets.push_back(Target{lhs.name, mutation});
        return;
      case ExprKind::Attribute:
      case ExprKind::Subscript: {
        const Expr* root = &lhs;
        while ((root->kind == ExprKind::Attribute || root->kind == ExprKind::Subscript) && !root->children.empty()) {
          root = &root->children.front();
        }
        if (root->kind == ExprKind::Name) a.targets.push_back(Target{root->name, true});
        return;
      }
      case ExprKind::Operation:
        if (lhs.name == "tuple" || lhs.name == "list" || lhs.name == "*") {
          if (lhs.name != "*") a.unpack = true;
          for (const auto& c : lhs.children) collect_targets(c, a, mutation);
          return;
        }
        fail("unsupported assignment target");
      default:
        fail("unsupported assignment target");
    }
  }

  // ---- expressions ----
  Expr target_list() {
    const int line = peek().line;
    std::vector<Expr> items;
    items.push_back(star_or(&Parser::bitor_expr));
    bool tuple = false;
    while (accept_op(",")) {
      tuple = true;
      if (at_kw("in")) break;
      items.push_back(star_or(&Parser::bitor_expr));
    }
    if (!tuple) return std::move(items.front());
    Expr e = Expr::make(ExprKind::Operation, std::move(items), line);
    e.name = "tuple";
    return e;
  }

  Expr star_or(Expr (Parser::*fn)()) {
    const int line = peek().line;
    if (accept_op("*")) {
      std::vector<Expr> c;
      c.push_back((this->*fn)());
      Expr e = Expr::make(ExprKind::Operation, std::move(c), line);
      e.name = "*";
      return e;
    }
    return (this->*fn)();
  }

  Expr star_expr_list() {
    const int line = peek().line;
    std::vector<Expr> items;
    items.push_back(star_or(&Parser::test));
    bool tuple = false;
    while (at_op(",")) {
      ++pos_;
      tuple = true;
      if (at(TokenKind::Newline) || at_op("=") || at_op(")") || at(TokenKind::End) || at_op(";")) break;
      items.push_back(star_or(&Parser::test));
    }
    if (!tuple) return std::move(items.front());
    Expr e = Expr::make(ExprKind::Operation, std::move(items), line);
    e.name = "tuple";
    return e;
  }

  Expr expr_list() { return star_expr_list(); }

  Expr test() {
    const int line = peek().line;
    if (at_kw("lambda")) {
      ++pos_;
      int depth = 0;
      while (!at(TokenKind::End)) {
        if (at_op("(") || at_op("[") || at_op("{")) ++depth;
        if (at_op(")") || at_op("]") || at_op("}")) --depth;
        if (depth == 0 && at_op(":")) break;
        ++pos_;
      }
      expect_op(":");
      test();
      skip("lambda");
      return Expr::make_unresolved(line);
    }
    if (at(TokenKind::Name) && !detail::is_keyword(peek().text) && at_op(":=", 1)) {
      Expr target = Expr::make_name(peek().text, line);
      pos_ += 2;
      std::vector<Expr> c;
      c.push_back(std::move(target));
      c.push_back(test());
      Expr e = Expr::make(ExprKind::Operation, std::move(c), line);
      e.name = ":=";
      return e;
    }
    Expr body = or_test();
    if (at_kw("if") ) {
      // ternary; `if` inside a comprehension clause is handled by the caller
      const std::size_t save = pos_;
      ++pos_;
      Expr cond = or_test();
      if (!accept_kw("else")) {
        pos_ = save;
        return body;
      }
      Expr other = test();
      std::vector<Expr> c;
      c.push_back(std::move(body));
      c.push_back(std::move(cond));
      c.push_back(std::move(other));
      Expr e = Expr::make(ExprKind::Operation, std::move(c), line);
      e.name = "ifelse";
      return e;
    }
    return body;
  }

  Expr binary(std::string name, Expr lhs, Expr rhs, int line) {
    std::vector<Expr> c;
    c.push_back(std::move(lhs));
    c.push_back(std::move(rhs));
    Expr e = Expr::make(ExprKind::Operation, std::move(c), line);
    e.name = std::move(name);
    return e;
  }

  Expr or_test() {
    const int line = peek().line;
    Expr lhs = and_test();
    while (accept_kw("or")) lhs = binary("or", std::move(lhs), and_test(), line);
    return lhs;
  }

  Expr and_test() {
    const int line = peek().line;
    Expr lhs = not_test();
    while (accept_kw("and")) lhs = binary("and", std::move(lhs), not_test(), line);
    return lhs;
  }

  Expr not_test() {
    const int line = peek().line;
    if (accept_kw("not")) {
      std::vector<Expr> c;
      c.push_back(not_test());
      Expr e = Expr::make(ExprKind::Operation, std::move(c), line);
      e.name = "not";
      return e;
    }
    return comparison();
  }

  Expr comparison() {
    const int line = peek().line;
    Expr lhs = bitor_expr();
    while (true) {
      static const std::set<std::string_view> kCmp = {"<", ">", "==", ">=", "<=", "!="};
      if (peek().kind == TokenKind::Op && kCmp.count(peek().text)) {
        const std::string op = peek().text;
        ++pos_;
        lhs = binary(op, std::move(lhs), bitor_expr(), line);
      } else if (at_kw("in") || at_kw("is")) {
        const std::string op = peek().text;
        ++pos_;
        accept_kw("not");
        lhs = binary(op, std::move(lhs), bitor_expr(), line);
      } else if (at_kw("not") && at_kw("in", 1)) {
        pos_ += 2;
        lhs = binary("not in", std::move(lhs), bitor_expr(), line);
      } else {
        return lhs;
      }
    }
  }

  template <typename Next>
  Expr left_assoc(std::initializer_list<std::string_view> ops, Next next) {
    const int line = peek().line;
    Expr lhs = (this->*next)();
    while (peek().kind == TokenKind::Op && std::find(ops.begin(), ops.end(), peek().text) != ops.end()) {
      const std::string op = peek().text;
      ++pos_;
      lhs = binary(op, std::move(lhs), (this->*next)(), line);
    }
    return lhs;
  }

  Expr bitor_expr() { return left_assoc({"|"}, &Parser::xor_expr); }
  Expr xor_expr() { return left_assoc({"^"}, &Parser::and_expr); }
  Expr and_expr() { return left_assoc({"&"}, &Parser::shift_expr); }
  Expr shift_expr() { return left_assoc({"<<", ">>"}, &Parser::arith_expr); }
  Expr arith_expr() { return left_assoc({"+", "-"}, &Parser::term); }
  Expr term() { return left_assoc({"*", "/", "//", "%", "@"}, &Parser::factor); }

  Expr factor() {
    const int line = peek().line;
    if (at_op("-") || at_op("+") || at_op("~")) {
      const std::string op = peek().text;
      ++pos_;
      std::vector<Expr> c;
      c.push_back(factor());
      Expr e = Expr::make(ExprKind::Operation, std::move(c), line);
      e.name = "unary" + op;
      return e;
    }
    return power();
  }

  Expr power() {
    const int line = peek().line;
    accept_kw("await");
    Expr base = atom_with_trailers();
    if (accept_op("**")) return binary("**", std::move(base), factor(), line);
    return base;
  }

  Expr atom_with_trailers() {
    Expr e = atom();
    while (true) {
      const int line = peek().line;
      if (accept_op("(")) {
        std::vector<Expr> c;
        c.push_back(std::move(e));
        Expr call = Expr::make(ExprKind::Call, std::move(c), line);
        arguments(call);
        e = std::move(call);
      } else if (accept_op("[")) {
        std::vector<Expr> c;
        c.push_back(std::move(e));
        Expr sub = Expr::make(ExprKind::Subscript, std::move(c), line);
        do {
          if (at_op("]")) break;
          sub.children.push_back(slice_item());
        } while (accept_op(","));
        expect_op("]");
        e = std::move(sub);
      } else if (accept_op(".")) {
        const std::string name = expect_name();
        std::vector<Expr> c;
        c.push_back(std::move(e));
        Expr attr = Expr::make(ExprKind::Attribute, std::move(c), line);
        attr.name = name;
        e = std::move(attr);
      } else {
        return e;
      }
    }
  }

  Expr slice_item() {
    const int line = peek().line;
    std::vector<Expr> parts;
    bool slice = false;
    if (!at_op(":")) parts.push_back(test());
    while (accept_op(":")) {
      slice = true;
      if (!at_op(":") && !at_op("]") && !at_op(",")) parts.push_back(test());
    }
    if (!slice) return std::move(parts.front());
    Expr e = Expr::make(ExprKind::Operation, std::move(parts), line);
    e.name = "slice";
    return e;
  }

  void arguments(Expr& call) {
    while (!accept_op(")")) {
      const int line = peek().line;
      if (accept_op("*") || accept_op("**")) {
        std::vector<Expr> c;
        c.push_back(test());
        Expr e = Expr::make(ExprKind::Operation, std::move(c), line);
        e.name = "*";
        call.children.push_back(std::move(e));
      } else if (at(TokenKind::Name) && at_op("=", 1)) {
        std::string key = peek().text;
        pos_ += 2;
        call.kwargs.emplace_back(std::move(key), test());
      } else {
        Expr arg = test();
        if (at_kw("for") || at_kw("async")) {
          skip_comprehension_tail(")");
          skip("comprehension");
          call.children.push_back(Expr::make_unresolved(line));
          return;
        }
        call.children.push_back(std::move(arg));
      }
      if (!accept_op(",")) {
        expect_op(")");
        return;
      }
    }
  }

  // Positioned at `for` inside a bracketed comprehension; consumes through the
  // matching closing bracket.
  void skip_comprehension_tail(std::string_view close) {
    int depth = 0;
    while (!at(TokenKind::End)) {
      if (at_op("(") || at_op("[") || at_op("{")) ++depth;
      if (at_op(")") || at_op("]") || at_op("}")) {
        if (depth == 0) {
          if (!at_op(close)) fail("mismatched bracket");
          ++pos_;
          return;
        }
        --depth;
      }
      ++pos_;
    }
    fail("unterminated comprehension");
  }

  Expr container(std::string name, std::string_view close, int line) {
    std::vector<Expr> items;
    while (!accept_op(close)) {
      if (accept_op("**")) {
        items.push_back(bitor_expr());
      } else {
        items.push_back(star_or(&Parser::test));
        if (accept_op(":")) items.push_back(test());
      }
      if (at_kw("for") || at_kw("async")) {
        skip_comprehension_tail(close);
        skip("comprehension");
        return Expr::make_unresolved(line);
      }
      if (!accept_op(",")) {
        expect_op(close);
        break;
      }
    }
    Expr e = Expr::make(ExprKind::Operation, std::move(items), line);
    e.name = std::move(name);
    return e;
  }

  Expr atom() {
    const Token& t = peek();
    const int line = t.line;
    switch (t.kind) {
      case TokenKind::Name: {
        if (t.text == "True" || t.text == "False") {
          ++pos_;
          return Expr::make_literal(LiteralKind::Bool, t.text, line);
        }
        if (t.text == "None") {
          ++pos_;
          return Expr::make_literal(LiteralKind::NoneValue, "", line);
        }
        if (detail::is_keyword(t.text)) fail("unexpected keyword " + t.text);
        ++pos_;
        return Expr::make_name(t.text, line);
      }
      case TokenKind::Number:
        ++pos_;
        return Expr::make_literal(LiteralKind::Number, t.text, line);
      case TokenKind::String: {
        std::string value;
        while (at(TokenKind::String)) value += toks_[pos_++].text;
        return Expr::make_literal(LiteralKind::String, std::move(value), line);
      }
      case TokenKind::Op: {
        if (accept_op("...")) return Expr::make_literal(LiteralKind::Ellipsis, "", line);
        if (accept_op("(")) {
          if (accept_op(")")) {
            Expr e = Expr::make(ExprKind::Operation, {}, line);
            e.name = "tuple";
            return e;
          }
          if (at_kw("yield")) {
            Expr y = yield_expr();
            expect_op(")");
            return y;
          }
          Expr first = star_or(&Parser::test);
          if (at_kw("for") || at_kw("async")) {
            skip_comprehension_tail(")");
            skip("comprehension");
            return Expr::make_unresolved(line);
          }
          if (accept_op(")")) return first;
          std::vector<Expr> items;
          items.push_back(std::move(first));
          while (accept_op(",")) {
            if (at_op(")")) break;
            items.push_back(star_or(&Parser::test));
          }
          expect_op(")");
          Expr e = Expr::make(ExprKind::Operation, std::move(items), line);
          e.name = "tuple";
          return e;
        }
        if (accept_op("[")) return container("list", "]", line);
        if (accept_op("{")) return container("dict", "}", line);
        fail("unexpected operator " + t.text);
      }
      default:
        fail("unexpected token");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  StatementList out_;
};

// Front end: tokenizes and parses one script. LexError propagates; everything
// else outside the subset is skipped and counted in the result.
inline StatementList parse_script(const ScriptSource& source) { return Parser(tokenize(source.text)).parse(); }

}  // namespace pipeforge::script
