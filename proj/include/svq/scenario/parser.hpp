// Copyright 2026 The svq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Recursive-descent parser for `.svq` scenario files.
 *
 *   scenario  := (decl | step | query | set)*
 *   decl      := "state" ID "=" vector
 *              | "prop" ID "=" "span" "(" vector ("," vector)* ")" [STRING]
 *              | "formula" ID "=" boolexpr
 *   set       := "set" ("tol" scalar | "seed" INT | "p_one" scalar)
 *   step      := "record" "at" INT | "clone" ID "->" ID | "unclone" ID "blank" ID
 *              | "blackhole" ID | "evolve" ID "by" matrix | "reconstruct" ["p" scalar]
 *   query     := "eval" ID "in" ID | "super" ID ["in" ID] | "check-past"
 *              | "feasible" ID ID
 *   vector    := "[" scalar ("," scalar)* "]"
 *   matrix    := "[" vector ("," vector)* "]"
 *   scalar    := term (("+" | "-") term)*
 *   term      := unary (("*" | "/") unary)*
 *   unary     := ("+" | "-") unary | NUMBER | NUMBERi | "i" | "sqrt" "(" scalar ")"
 *              | "(" scalar ")"
 *   boolexpr  := or ["->" boolexpr]
 *   or        := and ("|" and)*
 *   and       := not ("&" not)*
 *   not       := "!" not | "(" boolexpr ")" | ID
 *
 * Whitespace, including newlines, only separates tokens; `#` starts a
 * comment running to the end of the line. The words `not`, `and`, `or` and
 * `implies` are accepted as spellings of `!`, `&`, `|` and `->`.
 */

#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "svq/lattice.hpp"
#include "svq/scenario/ast.hpp"

namespace svq::scenario {

enum class TokenKind { Ident, Number, Imaginary, String, Punct, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePos pos;
};

inline const std::unordered_set<std::string>& reserved_words() {
  static const std::unordered_set<std::string> words = {
      "state", "prop",     "formula", "set",   "record",     "at",       "clone",
      "unclone", "blank",  "blackhole", "evolve", "by",      "reconstruct", "eval",
      "in",    "super",    "check-past", "feasible", "span", "sqrt",     "not",
      "and",   "or",       "implies"};
  return words;
}

namespace detail {

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

inline std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End: return "end of input";
    case TokenKind::String: return "string literal";
    default: return "'" + t.text + "'";
  }
}

}  // namespace detail

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const SourcePos pos{line, col};
    if (detail::ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && detail::ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      if (word == "check" && src.substr(j, 5) == "-past" &&
          (j + 5 == src.size() || !detail::ident_char(src[j + 5]))) {
        word = "check-past";
        j += 5;
      }
      advance(j - i);
      out.push_back(Token{TokenKind::Ident, std::move(word), pos});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0 ||
        (c == '.' && i + 1 < src.size() &&
         std::isdigit(static_cast<unsigned char>(src[i + 1])) != 0)) {
      std::size_t j = i;
      auto digits = [&] {
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])) != 0) ++j;
      };
      digits();
      if (j < src.size() && src[j] == '.') {
        ++j;
        digits();
      }
      if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k])) != 0) {
          j = k;
          digits();
        }
      }
      TokenKind kind = TokenKind::Number;
      std::size_t len = j - i;
      if (j < src.size() && src[j] == 'i' &&
          (j + 1 == src.size() || !detail::ident_char(src[j + 1]))) {
        kind = TokenKind::Imaginary;
        ++len;
      }
      out.push_back(Token{kind, std::string(src.substr(i, len)), pos});
      advance(len);
      continue;
    }
    if (c == '"') {
      std::string text;
      advance(1);
      bool closed = false;
      while (i < src.size()) {
        const char d = src[i];
        if (d == '"') {
          closed = true;
          advance(1);
          break;
        }
        if (d == '\n') break;
        if (d == '\\' && i + 1 < src.size()) {
          const char e = src[i + 1];
          text += e == 'n' ? '\n' : e;
          advance(2);
          continue;
        }
        text += d;
        advance(1);
      }
      if (!closed) {
        throw ScenarioError(ErrorCode::SyntaxError, pos, "unterminated string literal");
      }
      out.push_back(Token{TokenKind::String, std::move(text), pos});
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back(Token{TokenKind::Punct, "->", pos});
      advance(2);
      continue;
    }
    static constexpr std::string_view kPunct = "[](),=!&|+-*/";
    if (kPunct.find(c) != std::string_view::npos) {
      out.push_back(Token{TokenKind::Punct, std::string(1, c), pos});
      advance(1);
      continue;
    }
    throw ScenarioError(ErrorCode::SyntaxError, pos,
                        std::string("unexpected character '") + c + "'");
  }
  out.push_back(Token{TokenKind::End, "", SourcePos{line, col}});
  return out;
}

namespace detail {

enum class SymbolKind { State, Prop, Formula };

struct Symbol {
  SymbolKind kind;
  Index dim;
};

constexpr std::string_view to_string(SymbolKind k) {
  switch (k) {
    case SymbolKind::State: return "state";
    case SymbolKind::Prop: return "proposition";
    case SymbolKind::Formula: return "formula";
  }
  return "?";
}

inline CVector to_cvector(const VectorLiteral& v) {
  CVector out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Index>(i)) = v[i].value;
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Scenario parse() {
    Scenario s;
    while (peek().kind != TokenKind::End) s.statements.push_back(statement());
    return s;
  }

  VectorLiteral standalone_vector() {
    VectorLiteral v = vector();
    if (peek().kind != TokenKind::End) fail("end of input");
    return v;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_punct(std::string_view p) const {
    return peek().kind == TokenKind::Punct && peek().text == p;
  }
  bool at_word(std::string_view w) const {
    return peek().kind == TokenKind::Ident && peek().text == w;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw ScenarioError(ErrorCode::SyntaxError, peek().pos,
                        "expected " + expected + ", found " + describe(peek()));
  }

  const Token& expect_punct(std::string_view p) {
    if (!at_punct(p)) fail("'" + std::string(p) + "'");
    return next();
  }
  const Token& expect_word(std::string_view w) {
    if (!at_word(w)) fail("'" + std::string(w) + "'");
    return next();
  }

  /// An identifier that is not a reserved word.
  const Token& expect_name() {
    if (peek().kind != TokenKind::Ident || reserved_words().count(peek().text) != 0) {
      fail("identifier");
    }
    return next();
  }

  const Symbol& lookup(const Token& name, SymbolKind want) const {
    const auto it = symbols_.find(name.text);
    if (it == symbols_.end()) {
      throw ScenarioError(ErrorCode::UnknownIdentifier, name.pos,
                          "unknown " + std::string(to_string(want)) + " '" + name.text + "'");
    }
    if (it->second.kind != want) {
      throw ScenarioError(ErrorCode::UnknownIdentifier, name.pos,
                          "'" + name.text + "' is a " + std::string(to_string(it->second.kind)) +
                              ", not a " + std::string(to_string(want)));
    }
    return it->second;
  }

  void declare(const Token& name, SymbolKind kind, Index dim) {
    if (symbols_.count(name.text) != 0) {
      throw ScenarioError(ErrorCode::DuplicateIdentifier, name.pos,
                          "'" + name.text + "' is already declared");
    }
    symbols_.emplace(name.text, Symbol{kind, dim});
    if (kind == SymbolKind::State) states_.push_back(name.text);
  }

  static void same_dim(Index a, Index b, SourcePos pos, const std::string& what) {
    if (a != b) {
      throw ScenarioError(ErrorCode::DimensionMismatch, pos,
                          what + ": dimension " + std::to_string(a) + " vs " +
                              std::to_string(b));
    }
  }

  Located statement() {
    const Token& head = peek();
    const SourcePos pos = head.pos;
    if (head.kind != TokenKind::Ident) fail("a statement keyword");
    const std::string word = head.text;
    next();
    if (word == "state") return {pos, state_decl()};
    if (word == "prop") return {pos, prop_decl()};
    if (word == "formula") return {pos, formula_decl()};
    if (word == "set") return {pos, set_stmt()};
    if (word == "record") {
      expect_word("at");
      return {pos, RecordStep{Timestamp{integer()}}};
    }
    if (word == "clone") {
      const Token& src = expect_name();
      expect_punct("->");
      const Token& dst = expect_name();
      same_dim(lookup(src, SymbolKind::State).dim, lookup(dst, SymbolKind::State).dim, dst.pos,
               "clone source and target");
      return {pos, CloneStep{src.text, dst.text}};
    }
    if (word == "unclone") {
      const Token& target = expect_name();
      expect_word("blank");
      const Token& blank = expect_name();
      same_dim(lookup(target, SymbolKind::State).dim, lookup(blank, SymbolKind::State).dim,
               blank.pos, "unclone target and blank");
      return {pos, UncloneStep{target.text, blank.text}};
    }
    if (word == "blackhole") {
      const Token& target = expect_name();
      lookup(target, SymbolKind::State);
      return {pos, BlackholeStep{target.text}};
    }
    if (word == "evolve") return {pos, evolve_step()};
    if (word == "reconstruct") {
      ReconstructStep step;
      if (at_word("p")) {
        next();
        const SourcePos at = peek().pos;
        step.p_one = scalar();
        check_probability(*step.p_one, at);
      }
      return {pos, step};
    }
    if (word == "eval") {
      const Token& state = expect_name();
      expect_word("in");
      const Token& prop = expect_name();
      same_dim(lookup(state, SymbolKind::State).dim, lookup(prop, SymbolKind::Prop).dim,
               prop.pos, "eval state and proposition");
      return {pos, EvalQuery{state.text, prop.text}};
    }
    if (word == "super") return {pos, super_query()};
    if (word == "check-past") return {pos, CheckPastQuery{}};
    if (word == "feasible") {
      const Token& a = expect_name();
      const Token& b = expect_name();
      same_dim(lookup(a, SymbolKind::State).dim, lookup(b, SymbolKind::State).dim, b.pos,
               "feasibility pair");
      return {pos, FeasibleQuery{a.text, b.text}};
    }
    throw ScenarioError(ErrorCode::SyntaxError, pos,
                        "expected a statement keyword, found '" + word + "'");
  }

  StateDecl state_decl() {
    const Token& name = expect_name();
    expect_punct("=");
    const SourcePos at = peek().pos;
    VectorLiteral v = vector();
    try {
      make_state(to_cvector(v));
    } catch (const Error& e) {
      throw ScenarioError(e.code(), at, "state '" + name.text + "': " + e.what());
    }
    declare(name, SymbolKind::State, static_cast<Index>(v.size()));
    return StateDecl{name.text, std::move(v)};
  }

  PropDecl prop_decl() {
    const Token& name = expect_name();
    expect_punct("=");
    expect_word("span");
    expect_punct("(");
    const SourcePos at = peek().pos;
    std::vector<VectorLiteral> spanning;
    spanning.push_back(vector());
    while (at_punct(",")) {
      next();
      const SourcePos vpos = peek().pos;
      spanning.push_back(vector());
      same_dim(static_cast<Index>(spanning.front().size()),
               static_cast<Index>(spanning.back().size()), vpos, "spanning vectors");
    }
    expect_punct(")");
    const Index dim = static_cast<Index>(spanning.front().size());
    if (dim < 2) {
      throw ScenarioError(ErrorCode::DimensionTooSmall, at,
                          "propositions live in dimension >= 2");
    }
    std::vector<CVector> columns;
    for (const auto& v : spanning) columns.push_back(to_cvector(v));
    try {
      span_subspace(columns, dim);
    } catch (const Error& e) {
      throw ScenarioError(e.code(), at, "prop '" + name.text + "': " + e.what());
    }
    std::optional<std::string> label;
    if (peek().kind == TokenKind::String) label = next().text;
    declare(name, SymbolKind::Prop, dim);
    return PropDecl{name.text, std::move(spanning), std::move(label)};
  }

  FormulaDecl formula_decl() {
    const Token& name = expect_name();
    expect_punct("=");
    formula_dim_.reset();
    Formula f = implication();
    declare(name, SymbolKind::Formula, formula_dim_.value_or(0));
    return FormulaDecl{name.text, std::move(f)};
  }

  SetStmt set_stmt() {
    const Token& key = peek();
    if (key.kind != TokenKind::Ident) fail("'tol', 'seed' or 'p_one'");
    const SourcePos at = peek(1).pos;
    if (key.text == "tol") {
      next();
      Scalar v = scalar();
      if (v.value.imag() != 0.0 || !(v.value.real() > 0.0)) {
        throw ScenarioError(ErrorCode::SyntaxError, at, "tol must be a positive real");
      }
      return SetStmt{ConfigKey::Tol, std::move(v)};
    }
    if (key.text == "seed") {
      next();
      const Token& t = peek();
      const std::uint64_t seed = integer();
      return SetStmt{ConfigKey::Seed, Scalar{Complex(static_cast<double>(seed), 0.0), t.text}};
    }
    if (key.text == "p_one") {
      next();
      Scalar v = scalar();
      check_probability(v, at);
      return SetStmt{ConfigKey::POne, std::move(v)};
    }
    fail("'tol', 'seed' or 'p_one'");
  }

  EvolveStep evolve_step() {
    const Token& target = expect_name();
    const Index dim = lookup(target, SymbolKind::State).dim;
    expect_word("by");
    const SourcePos at = peek().pos;
    expect_punct("[");
    MatrixLiteral m;
    m.push_back(vector());
    while (at_punct(",")) {
      next();
      m.push_back(vector());
    }
    expect_punct("]");
    same_dim(static_cast<Index>(m.size()), dim, at, "evolution matrix rows");
    for (const auto& row : m) {
      same_dim(static_cast<Index>(row.size()), dim, at, "evolution matrix columns");
    }
    return EvolveStep{target.text, std::move(m)};
  }

  SuperQuery super_query() {
    const Token& name = expect_name();
    const Index dim = lookup(name, SymbolKind::Formula).dim;
    SuperQuery q{name.text, std::nullopt};
    if (at_word("in")) {
      next();
      const Token& state = expect_name();
      same_dim(lookup(state, SymbolKind::State).dim, dim, state.pos,
               "super subject and formula atoms");
      q.state = state.text;
    } else if (resolve_subject(dim).empty()) {
      throw ScenarioError(ErrorCode::AmbiguousSubject, name.pos,
                          "no unique state of dimension " + std::to_string(dim) +
                              " to evaluate '" + name.text + "' in; write 'super " +
                              name.text + " in <state>'");
    }
    return q;
  }

  /// The only declared state of dimension `dim`, or "" when there is not
  /// exactly one.
  std::string resolve_subject(Index dim) const {
    std::string found;
    for (const auto& s : states_) {
      if (symbols_.at(s).dim != dim) continue;
      if (!found.empty()) return {};
      found = s;
    }
    return found;
  }

  static void check_probability(const Scalar& v, SourcePos at) {
    const double p = v.value.real();
    if (v.value.imag() != 0.0 || !(p >= 0.0 && p <= 1.0)) {
      throw ScenarioError(ErrorCode::BadProbability, at, "probability must lie in [0, 1]");
    }
  }

  std::uint64_t integer() {
    const Token& t = peek();
    std::uint64_t value = 0;
    const char* end = t.text.data() + t.text.size();
    if (t.kind != TokenKind::Number) fail("non-negative integer");
    const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
    if (ec != std::errc{} || ptr != end) fail("non-negative integer");
    next();
    return value;
  }

  VectorLiteral vector() {
    expect_punct("[");
    VectorLiteral v;
    v.push_back(scalar());
    while (at_punct(",")) {
      next();
      v.push_back(scalar());
    }
    expect_punct("]");
    return v;
  }

  Scalar scalar() {
    const std::size_t first = pos_;
    const SourcePos at = peek().pos;
    const Complex value = sum();
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw ScenarioError(ErrorCode::NonFinite, at, "numeric literal is not finite");
    }
    std::string text;
    for (std::size_t k = first; k < pos_; ++k) text += tokens_[k].text;
    return Scalar{value, std::move(text)};
  }

  Complex sum() {
    Complex v = product();
    while (at_punct("+") || at_punct("-")) {
      const bool plus = next().text == "+";
      const Complex rhs = product();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  Complex product() {
    Complex v = unary();
    while (at_punct("*") || at_punct("/")) {
      const bool times = next().text == "*";
      const Complex rhs = unary();
      v = times ? v * rhs : v / rhs;
    }
    return v;
  }

  Complex unary() {
    if (at_punct("-")) {
      next();
      return -unary();
    }
    if (at_punct("+")) {
      next();
      return unary();
    }
    const Token& t = peek();
    if (t.kind == TokenKind::Number) {
      next();
      return Complex(std::strtod(t.text.c_str(), nullptr), 0.0);
    }
    if (t.kind == TokenKind::Imaginary) {
      next();
      return Complex(0.0, std::strtod(t.text.c_str(), nullptr));
    }
    if (at_word("i")) {
      next();
      return Complex(0.0, 1.0);
    }
    if (at_word("sqrt")) {
      next();
      expect_punct("(");
      const Complex v = sum();
      expect_punct(")");
      return std::sqrt(v);
    }
    if (at_punct("(")) {
      next();
      const Complex v = sum();
      expect_punct(")");
      return v;
    }
    fail("number");
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (at_punct("->") || at_word("implies")) {
      next();
      return implies(std::move(lhs), implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (at_punct("|") || at_word("or")) {
      next();
      f = f | conjunction();
    }
    return f;
  }

  Formula conjunction() {
    Formula f = negation();
    while (at_punct("&") || at_word("and")) {
      next();
      f = f & negation();
    }
    return f;
  }

  Formula negation() {
    if (at_punct("!") || at_word("not")) {
      next();
      return !negation();
    }
    if (at_punct("(")) {
      next();
      Formula f = implication();
      expect_punct(")");
      return f;
    }
    const Token& name = expect_name();
    const Index dim = lookup(name, SymbolKind::Prop).dim;
    if (formula_dim_) same_dim(*formula_dim_, dim, name.pos, "formula atoms");
    formula_dim_ = dim;
    return Formula::atom(name.text);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, Symbol> symbols_;
  std::vector<std::string> states_;
  std::optional<Index> formula_dim_;
};

}  // namespace detail

/// Parses and statically checks a scenario: identifiers resolve to the right
/// kind, dimensions agree, and declared states and spans are non-degenerate.
inline Scenario parse_scenario(std::string_view text) {
  return detail::Parser(text).parse();
}

/// A lone vector literal such as "[1/sqrt(2), 0.5i]".
inline CVector parse_vector(std::string_view text) {
  return detail::to_cvector(detail::Parser(text).standalone_vector());
}

}  // namespace svq::scenario
