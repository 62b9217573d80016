#pragma once

#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "pipeforge/core/error.hpp"

namespace pipeforge::script {

enum class TokenKind { Name, Number, String, Op, Newline, Indent, Dedent, Magic, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // identifier, operator, number spelling, or string contents
  int line = 0;
  bool formatted = false;  // f-string literal
};

namespace detail {

inline bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    if (c < 0x80) {
      extra = 0;
    } else if ((c >> 5) == 0x6 && c >= 0xc2) {
      extra = 1;
    } else if ((c >> 4) == 0xe) {
      extra = 2;
    } else if ((c >> 3) == 0x1e && c <= 0xf4) {
      extra = 3;
    } else {
      return false;
    }
    if (extra > 0 && i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return false;
    }
    i += extra + 1;
  }
  return true;
}

inline bool ident_start(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || u >= 0x80;
}

inline bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace detail

// Tokenizer for the supported Python surface syntax. Produces INDENT/DEDENT
// tokens like the reference tokenizer; newlines inside brackets are implicit
// continuations. Throws LexError on invalid UTF-8, unterminated strings,
// inconsistent dedents and characters outside the language.
class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> tokenize() {
    if (!detail::valid_utf8(src_)) throw LexError("script is not valid UTF-8");
    indents_.assign(1, 0);
    at_line_start_ = true;
    while (pos_ < src_.size()) {
      if (at_line_start_ && depth_ == 0) {
        if (!begin_logical_line()) continue;
      }
      scan_token();
    }
    if (!tokens_.empty() && tokens_.back().kind != TokenKind::Newline && tokens_.back().kind != TokenKind::Dedent) {
      emit(TokenKind::Newline, "");
    }
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit(TokenKind::Dedent, "");
    }
    emit(TokenKind::End, "");
    return std::move(tokens_);
  }

 private:
  // Handles indentation at the start of a physical line. Returns false when
  // the line was consumed entirely (blank, comment or magic).
  bool begin_logical_line() {
    int col = 0;
    std::size_t p = pos_;
    while (p < src_.size() && (src_[p] == ' ' || src_[p] == '\t' || src_[p] == '\f')) {
      col = src_[p] == '\t' ? (col / 8 + 1) * 8 : col + 1;
      ++p;
    }
    if (p >= src_.size()) {
      pos_ = p;
      return false;
    }
    const char c = src_[p];
    if (c == '\n' || c == '\r' || c == '#') {
      skip_to_eol(p);
      return false;
    }
    if (c == '%' || c == '!') {
      const std::size_t start = p;
      const int line = line_;
      skip_to_eol(p);
      tokens_.push_back(Token{TokenKind::Magic, std::string(text_trim_eol(src_.substr(start, pos_ - start))), line});
      return false;
    }
    pos_ = p;
    at_line_start_ = false;
    if (col > indents_.back()) {
      indents_.push_back(col);
      emit(TokenKind::Indent, "");
    } else {
      while (col < indents_.back()) {
        indents_.pop_back();
        emit(TokenKind::Dedent, "");
      }
      if (col != indents_.back()) throw LexError("inconsistent dedent at line " + std::to_string(line_));
    }
    return true;
  }

  static std::string_view text_trim_eol(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  }

  void skip_to_eol(std::size_t p) {
    while (p < src_.size() && src_[p] != '\n') ++p;
    if (p < src_.size()) {
      ++p;
      ++line_;
    }
    pos_ = p;
    at_line_start_ = true;
  }

  void emit(TokenKind kind, std::string text, bool formatted = false) {
    tokens_.push_back(Token{kind, std::move(text), line_, formatted});
  }

  void scan_token() {
    const char c = src_[pos_];
    if (c == ' ' || c == '\t' || c == '\f') {
      ++pos_;
      return;
    }
    if (c == '#') {
      while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      return;
    }
    if (c == '\r') {
      ++pos_;
      return;
    }
    if (c == '\n') {
      ++pos_;
      if (depth_ == 0) {
        if (!tokens_.empty() && tokens_.back().kind != TokenKind::Newline) emit(TokenKind::Newline, "");
        at_line_start_ = true;
      }
      ++line_;
      return;
    }
    if (c == '\\') {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && src_[p] == '\r') ++p;
      if (p < src_.size() && src_[p] == '\n') {
        pos_ = p + 1;
        ++line_;
        return;
      }
      throw LexError("stray backslash at line " + std::to_string(line_));
    }
    if (detail::ident_start(c)) {
      std::size_t p = pos_;
      while (p < src_.size() && detail::ident_char(src_[p])) ++p;
      std::string_view word = src_.substr(pos_, p - pos_);
      if (p < src_.size() && (src_[p] == '\'' || src_[p] == '"') && is_string_prefix(word)) {
        pos_ = p;
        scan_string(word);
        return;
      }
      emit(TokenKind::Name, std::string(word));
      pos_ = p;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      scan_number();
      return;
    }
    if (c == '\'' || c == '"') {
      scan_string({});
      return;
    }
    scan_operator();
  }

  static bool is_string_prefix(std::string_view word) {
    if (word.size() > 2) return false;
    for (char ch : word) {
      const char l = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      if (l != 'r' && l != 'b' && l != 'u' && l != 'f') return false;
    }
    return true;
  }

  void scan_number() {
    std::size_t p = pos_;
    auto digitish = [&](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.';
    };
    while (p < src_.size()) {
      const char ch = src_[p];
      if ((ch == '+' || ch == '-') && p > pos_ && (src_[p - 1] == 'e' || src_[p - 1] == 'E') &&
          !(src_[pos_] == '0' && p > pos_ + 1 && (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X'))) {
        ++p;
        continue;
      }
      if (!digitish(ch)) break;
      ++p;
    }
    emit(TokenKind::Number, std::string(src_.substr(pos_, p - pos_)));
    pos_ = p;
  }

  void scan_string(std::string_view prefix) {
    bool raw = false;
    bool formatted = false;
    for (char ch : prefix) {
      const char l = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      raw = raw || l == 'r';
      formatted = formatted || l == 'f';
    }
    const char quote = src_[pos_];
    const int start_line = line_;
    const bool triple = pos_ + 2 < src_.size() && src_[pos_ + 1] == quote && src_[pos_ + 2] == quote;
    std::size_t p = pos_ + (triple ? 3 : 1);
    std::string value;
    while (true) {
      if (p >= src_.size()) throw LexError("unterminated string starting at line " + std::to_string(start_line));
      const char ch = src_[p];
      if (ch == '\\') {
        if (p + 1 >= src_.size()) throw LexError("unterminated string starting at line " + std::to_string(start_line));
        const char next = src_[p + 1];
        if (next == '\n') ++line_;
        if (raw) {
          value.push_back(ch);
          value.push_back(next);
        } else {
          switch (next) {
            case 'n': value.push_back('\n'); break;
            case 't': value.push_back('\t'); break;
            case '\n': break;
            default: value.push_back(next); break;
          }
        }
        p += 2;
        continue;
      }
      if (ch == '\n') {
        if (!triple) throw LexError("unterminated string at line " + std::to_string(start_line));
        ++line_;
      }
      if (ch == quote) {
        if (!triple) {
          ++p;
          break;
        }
        if (p + 2 < src_.size() && src_[p + 1] == quote && src_[p + 2] == quote) {
          p += 3;
          break;
        }
      }
      value.push_back(ch);
      ++p;
    }
    tokens_.push_back(Token{TokenKind::String, std::move(value), start_line, formatted});
    pos_ = p;
  }

  void scan_operator() {
    static constexpr std::array<std::string_view, 24> kMulti = {
        "**=", "//=", ">>=", "<<=", "...", "->", ":=", "**", "//", "<<", ">>", "<=",
        ">=",  "==",  "!=",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "@="};
    for (auto op : kMulti) {
      if (src_.substr(pos_, op.size()) == op) {
        emit(TokenKind::Op, std::string(op));
        pos_ += op.size();
        return;
      }
    }
    const char c = src_[pos_];
    static constexpr std::string_view kSingle = "+-*/%@&|^~<>()[]{},:.;=!";
    if (kSingle.find(c) == std::string_view::npos) {
      throw LexError(std::string("unexpected character '") + c + "' at line " + std::to_string(line_));
    }
    if (c == '(' || c == '[' || c == '{') ++depth_;
    if ((c == ')' || c == ']' || c == '}') && depth_ > 0) --depth_;
    emit(TokenKind::Op, std::string(1, c));
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int depth_ = 0;
  bool at_line_start_ = true;
  std::vector<int> indents_;
  std::vector<Token> tokens_;
};

inline std::vector<Token> tokenize(std::string_view src) { return Lexer(src).tokenize(); }

}  // namespace pipeforge::script
