/*
   Copyright 2026 The snw Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "snw/cli/parser.hpp"

#include <cctype>
#include <set>

namespace snw::cli {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s;
}

const std::set<std::string> kCommands = {
    "nf",   "decomp", "component", "member", "det",  "inv",   "unit",  "index", "eta", "act",
    "vol",  "size",   "factor",    "comm",   "aut",  "endo",  "ideal", "let",   "setdim"};

const std::set<std::string> kAutSubs = {"make", "compose", "inv", "apply", "recover", "det"};
const std::set<std::string> kAutKinds = {"swap", "torus", "elem", "diag", "inner", "perm", "lambda"};
const std::set<std::string> kEndoSubs = {"check", "apply", "compose", "tapply", "finite"};
const std::set<std::string> kIdealSubs = {"member", "stab", "generic", "index"};

enum class Tok { Number, Ident, Symbol, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t column;
};

std::vector<Token> lex(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const unsigned char ch = line[i];
    if (std::isspace(ch)) {
      ++i;
    } else if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::Number, line.substr(i, j - i), i + 1});
      i = j;
    } else if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Tok::Ident, line.substr(i, j - i), i + 1});
      i = j;
    } else if (std::string("+-*^/()[]{},=").find(static_cast<char>(ch)) != std::string::npos) {
      out.push_back({Tok::Symbol, std::string(1, static_cast<char>(ch)), i + 1});
      ++i;
    } else {
      throw SyntaxError(i + 1, {"token"}, std::string(1, static_cast<char>(ch)));
    }
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

bool all_digits(const std::string& s, std::size_t from) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::shared_ptr<const Command> command() {
    auto cmd = std::make_shared<Command>();
    const Token& t = peek();
    cmd->column = t.column;
    if (t.type == Tok::Ident && kCommands.count(t.text)) {
      cmd->name = next().text;
      if (cmd->name == "let") {
        const Token& id = expect_ident("identifier");
        if (kCommands.count(id.text)) throw SyntaxError(id.column, {"identifier"}, id.text);
        cmd->target = id.text;
        expect_symbol("=");
        cmd->rhs = command();
        return cmd;
      }
      if (cmd->name == "aut") {
        cmd->sub = expect_word(kAutSubs, "aut subcommand");
        if (cmd->sub == "make") cmd->kind = expect_word(kAutKinds, "generator kind");
      } else if (cmd->name == "endo") {
        cmd->sub = expect_word(kEndoSubs, "endo subcommand");
      } else if (cmd->name == "ideal") {
        cmd->sub = expect_word(kIdealSubs, "ideal subcommand");
      }
      cmd->args.push_back(value());
      while (accept_symbol(",")) cmd->args.push_back(value());
    } else {
      cmd->name = "nf";
      cmd->args.push_back(value());
    }
    expect_end();
    return cmd;
  }

  ExprPtr expression_only() {
    auto e = expr();
    expect_end();
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw SyntaxError(t.column, std::move(expected), t.type == Tok::End ? "end of line" : t.text);
  }

  bool is_symbol(const std::string& s, std::size_t ahead = 0) const {
    return peek(ahead).type == Tok::Symbol && peek(ahead).text == s;
  }

  bool accept_symbol(const std::string& s) {
    if (!is_symbol(s)) return false;
    next();
    return true;
  }

  void expect_symbol(const std::string& s) {
    if (!accept_symbol(s)) fail({"'" + s + "'"});
  }

  const Token& expect_ident(const std::string& what) {
    if (peek().type != Tok::Ident) fail({what});
    return next();
  }

  std::string expect_word(const std::set<std::string>& words, const std::string& what) {
    if (peek().type != Tok::Ident || !words.count(peek().text)) fail({what});
    return next().text;
  }

  std::uint64_t expect_natural() {
    if (peek().type != Tok::Number) fail({"natural number"});
    const Token& t = next();
    if (t.text.size() > 18) throw SyntaxError(t.column, {"smaller number"}, t.text);
    return std::stoull(t.text);
  }

  void expect_end() {
    if (peek().type != Tok::End) fail({"',' or end of line"});
  }

  ExprPtr value() {
    if (is_symbol("{")) return collection("}", Expr::Kind::Set);
    if (is_symbol("[")) return collection("]", Expr::Kind::List);
    return expr();
  }

  ExprPtr collection(const std::string& close, Expr::Kind kind) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->column = next().column;
    if (!accept_symbol(close)) {
      e->children.push_back(value());
      while (accept_symbol(",")) e->children.push_back(value());
      if (!accept_symbol(close)) fail({"','", "'" + close + "'"});
    }
    return e;
  }

  static ExprPtr binary(Expr::Kind kind, ExprPtr a, ExprPtr b, std::size_t column) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->column = column;
    e->children = {std::move(a), std::move(b)};
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (is_symbol("+") || is_symbol("-")) {
      const Token& op = next();
      ExprPtr rhs = term();
      lhs = binary(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, lhs, rhs, op.column);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (is_symbol("*")) {
      const Token& op = next();
      ExprPtr rhs = unary();
      lhs = binary(Expr::Kind::Mul, lhs, rhs, op.column);
    }
    return lhs;
  }

  ExprPtr unary() {
    if (is_symbol("-")) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Neg;
      e->column = next().column;
      e->children.push_back(unary());
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (is_symbol("^")) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Pow;
      e->column = next().column;
      const std::uint64_t p = expect_natural();
      if (p > 1000000) throw SyntaxError(e->column, {"smaller exponent"}, std::to_string(p));
      e->power = static_cast<unsigned>(p);
      e->children.push_back(std::move(base));
      return e;
    }
    return base;
  }

  ExprPtr primary() {
    const Token& t = peek();
    auto e = std::make_shared<Expr>();
    e->column = t.column;
    if (t.type == Tok::Number) {
      next();
      std::string text = t.text;
      if (is_symbol("/")) {
        next();
        if (peek().type != Tok::Number) fail({"denominator"});
        const Token& d = next();
        if (d.text.find_first_not_of('0') == std::string::npos)
          throw SyntaxError(d.column, {"nonzero denominator"}, d.text);
        text += "/" + d.text;
      }
      e->kind = Expr::Kind::Number;
      e->number.set_str(text, 10);
      e->number.canonicalize();
      return e;
    }
    if (is_symbol("(")) {
      next();
      ExprPtr inner = expr();
      expect_symbol(")");
      return inner;
    }
    if (t.type != Tok::Ident) fail({"expression"});
    next();
    const std::string& w = t.text;
    if ((w[0] == 'x' || w[0] == 'y') && (w.size() == 1 || all_digits(w, 1))) {
      e->kind = w[0] == 'x' ? Expr::Kind::X : Expr::Kind::Y;
      e->index = w.size() == 1 ? 0 : std::stoul(w.substr(1));
      if (w.size() > 1 && e->index == 0) throw SyntaxError(t.column, {"generator index >= 1"}, w);
      return e;
    }
    if (w == "E" && (is_symbol("[") || is_symbol("("))) {
      e->kind = Expr::Kind::Unit;
      e->index = bracket_index();
      expect_symbol("(");
      e->k = expect_natural();
      expect_symbol(",");
      e->l = expect_natural();
      expect_symbol(")");
      return e;
    }
    if (w == "v" && is_symbol("[")) {
      e->kind = Expr::Kind::Laurent;
      e->index = bracket_index();
      expect_symbol("(");
      const bool neg = accept_symbol("-");
      const auto s = static_cast<std::int64_t>(expect_natural());
      e->shift = neg ? -s : s;
      expect_symbol(")");
      return e;
    }
    if (kCommands.count(w)) throw SyntaxError(t.column, {"expression"}, w);
    e->kind = Expr::Kind::Name;
    e->name = w;
    return e;
  }

  // Optional "[i]"; 0 when omitted.
  std::size_t bracket_index() {
    if (!accept_symbol("[")) return 0;
    const std::uint64_t i = expect_natural();
    if (i == 0) fail({"index >= 1"});
    expect_symbol("]");
    return static_cast<std::size_t>(i);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

SyntaxError::SyntaxError(std::size_t column, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("column " + std::to_string(column) + ": expected " + join(expected) + ", found " +
                         (found.empty() ? "end of line" : "'" + found + "'")),
      column_(column),
      expected_(std::move(expected)) {}

bool is_command_word(const std::string& word) { return kCommands.count(word) > 0; }

std::shared_ptr<const Command> parse(const std::string& line) {
  std::size_t first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos || line[first] == '#') return nullptr;
  Parser p(lex(line));
  return p.command();
}

ExprPtr parse_expression(const std::string& text) {
  Parser p(lex(text));
  return p.expression_only();
}

}  // namespace snw::cli
