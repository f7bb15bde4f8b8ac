// Copyright 2026 The poslog Authors
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

#include "poslog/formulas.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "poslog/error.hpp"

namespace poslog {

namespace {
constexpr std::size_t kNoPos = std::numeric_limits<std::size_t>::max();
}  // namespace

// ---------------------------------------------------------------------------
// Guard

struct Guard::Node {
  GuardKind kind;
  std::string pred;
  Guard a, b;
};

Guard Guard::top() { return Guard(std::make_shared<const Node>(Node{GuardKind::True, {}, {}, {}})); }
Guard Guard::bottom() { return Guard(std::make_shared<const Node>(Node{GuardKind::False, {}, {}, {}})); }
Guard Guard::atom(std::string pred) {
  return Guard(std::make_shared<const Node>(Node{GuardKind::Atom, std::move(pred), {}, {}}));
}
Guard Guard::negate(Guard g) {
  return Guard(std::make_shared<const Node>(Node{GuardKind::Not, {}, g, {}}));
}
Guard Guard::conj(Guard a, Guard b) {
  return Guard(std::make_shared<const Node>(Node{GuardKind::And, {}, a, b}));
}
Guard Guard::disj(Guard a, Guard b) {
  return Guard(std::make_shared<const Node>(Node{GuardKind::Or, {}, a, b}));
}

GuardKind Guard::kind() const { return node_->kind; }
const std::string& Guard::pred() const { return node_->pred; }
const Guard& Guard::lhs() const { return node_->a; }
const Guard& Guard::rhs() const { return node_->b; }

bool Guard::is_positive() const {
  switch (kind()) {
    case GuardKind::True:
    case GuardKind::False:
    case GuardKind::Atom:
      return true;
    case GuardKind::Not:
      return false;
    case GuardKind::And:
    case GuardKind::Or:
      return lhs().is_positive() && rhs().is_positive();
  }
  return false;
}

bool Guard::holds(Letter letter, const PredicateSet& preds) const {
  switch (kind()) {
    case GuardKind::True:
      return true;
    case GuardKind::False:
      return false;
    case GuardKind::Atom: {
      auto idx = preds.index_of(pred());
      if (!idx) throw UsageError("unknown predicate '" + pred() + "' in guard");
      return letter.contains(*idx);
    }
    case GuardKind::Not:
      return !lhs().holds(letter, preds);
    case GuardKind::And:
      return lhs().holds(letter, preds) && rhs().holds(letter, preds);
    case GuardKind::Or:
      return lhs().holds(letter, preds) || rhs().holds(letter, preds);
  }
  return false;
}

namespace {

int guard_prec(GuardKind k) {
  switch (k) {
    case GuardKind::Or: return 1;
    case GuardKind::And: return 2;
    default: return 3;
  }
}

}  // namespace

std::string Guard::render() const {
  auto wrap = [](const Guard& g, int min_prec, bool strict) {
    int p = guard_prec(g.kind());
    bool parens = strict ? p <= min_prec : p < min_prec;
    return parens ? "(" + g.render() + ")" : g.render();
  };
  switch (kind()) {
    case GuardKind::True: return "true";
    case GuardKind::False: return "false";
    case GuardKind::Atom: return pred();
    case GuardKind::Not: return "!" + wrap(lhs(), 3, false);
    case GuardKind::And: return wrap(lhs(), 2, false) + " & " + wrap(rhs(), 2, true);
    case GuardKind::Or: return wrap(lhs(), 1, false) + " | " + wrap(rhs(), 1, true);
  }
  return {};
}

bool operator==(const Guard& a, const Guard& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GuardKind::True:
    case GuardKind::False:
      return true;
    case GuardKind::Atom:
      return a.pred() == b.pred();
    case GuardKind::Not:
      return a.lhs() == b.lhs();
    case GuardKind::And:
    case GuardKind::Or:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Binary predicates and signatures

bool BinaryPredicate::holds(std::size_t x, std::size_t y,
                            std::span<const Letter> word,
                            const PredicateSet& preds) const {
  switch (kind) {
    case BinKind::Eq: return x == y;
    case BinKind::Neq: return x != y;
    case BinKind::Le: return x <= y;
    case BinKind::Lt: return x < y;
    case BinKind::Succ: return y == x + 1;
    case BinKind::NotSucc: return y != x + 1;
    case BinKind::Between: {
      std::size_t lo = std::min(x, y), hi = std::max(x, y);
      for (std::size_t i = lo + 1; i < hi; ++i) {
        if (guard->holds(word[i], preds)) return true;
      }
      return false;
    }
  }
  return false;
}

bool operator==(const BinaryPredicate& a, const BinaryPredicate& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != BinKind::Between) return true;
  return *a.guard == *b.guard;
}

Signature Signature::b0() {
  Signature s;
  s.allow(BinKind::Le).allow(BinKind::Lt).allow(BinKind::Succ).allow(BinKind::NotSucc);
  return s;
}

Signature Signature::less() {
  Signature s;
  s.allow(BinKind::Le).allow(BinKind::Lt);
  return s;
}

Signature Signature::succ() {
  Signature s;
  s.allow(BinKind::Succ).allow(BinKind::NotSucc);
  return s;
}

Signature Signature::all() {
  Signature s = b0();
  s.allow(BinKind::Between);
  return s;
}

Signature& Signature::with_between(Guard g) {
  allow(BinKind::Between);
  guards_.push_back(std::move(g));
  return *this;
}

bool Signature::allows(const BinaryPredicate& p) const { return allows(p.kind); }

std::vector<BinaryPredicate> Signature::predicates() const {
  std::vector<BinaryPredicate> out;
  for (BinKind k : {BinKind::Eq, BinKind::Neq, BinKind::Le, BinKind::Lt,
                    BinKind::Succ, BinKind::NotSucc}) {
    if (allows(k)) out.push_back(BinaryPredicate::of(k));
  }
  for (const auto& g : guards_) out.push_back(BinaryPredicate::between(g));
  return out;
}

std::string Signature::render() const {
  std::string out = "{=,!=";
  if (allows(BinKind::Le)) out += ",<=";
  if (allows(BinKind::Lt)) out += ",<";
  if (allows(BinKind::Succ)) out += ",S";
  if (allows(BinKind::NotSucc)) out += ",!S";
  for (const auto& g : guards_) out += ",btw[" + g.render() + "]";
  if (allows(BinKind::Between) && guards_.empty()) out += ",btw";
  return out + "}";
}

// ---------------------------------------------------------------------------
// Fo

struct Fo::Node {
  FoKind kind;
  std::string pred;
  std::string var;
  std::string var2;
  BinaryPredicate bp;
  Fo a, b;
  std::size_t pos = kNoPos;
  std::size_t size = 1;
};

Fo Fo::top() { return Fo(std::make_shared<const Node>(Node{FoKind::True, {}, {}, {}, {}, {}, {}})); }
Fo Fo::bottom() { return Fo(std::make_shared<const Node>(Node{FoKind::False, {}, {}, {}, {}, {}, {}})); }

Fo Fo::atom(std::string pred, std::string var) {
  Node n{FoKind::Atom, std::move(pred), std::move(var), {}, {}, {}, {}};
  return Fo(std::make_shared<const Node>(std::move(n)));
}

Fo Fo::bin(BinaryPredicate p, std::string var1, std::string var2) {
  if (p.kind == BinKind::Between && !p.guard) {
    throw UsageError("between predicate without a guard");
  }
  Node n{FoKind::Bin, {}, std::move(var1), std::move(var2), std::move(p), {}, {}};
  return Fo(std::make_shared<const Node>(std::move(n)));
}

Fo Fo::negate(Fo body) {
  Node n{FoKind::Not, {}, {}, {}, {}, body, {}};
  n.size = body.size() + 1;
  return Fo(std::make_shared<const Node>(std::move(n)));
}

Fo Fo::conj(Fo a, Fo b) {
  Node n{FoKind::And, {}, {}, {}, {}, a, b};
  n.size = a.size() + b.size() + 1;
  return Fo(std::make_shared<const Node>(std::move(n)));
}

Fo Fo::disj(Fo a, Fo b) {
  Node n{FoKind::Or, {}, {}, {}, {}, a, b};
  n.size = a.size() + b.size() + 1;
  return Fo(std::make_shared<const Node>(std::move(n)));
}

Fo Fo::exists(std::string var, Fo body) {
  Node n{FoKind::Exists, {}, std::move(var), {}, {}, body, {}};
  n.size = body.size() + 1;
  return Fo(std::make_shared<const Node>(std::move(n)));
}

Fo Fo::forall(std::string var, Fo body) {
  Node n{FoKind::Forall, {}, std::move(var), {}, {}, body, {}};
  n.size = body.size() + 1;
  return Fo(std::make_shared<const Node>(std::move(n)));
}

Fo Fo::conj_all(const std::vector<Fo>& parts) {
  if (parts.empty()) return top();
  Fo acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Fo Fo::disj_all(const std::vector<Fo>& parts) {
  if (parts.empty()) return bottom();
  Fo acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

FoKind Fo::kind() const { return node_->kind; }
const std::string& Fo::pred() const { return node_->pred; }
const std::string& Fo::var() const { return node_->var; }
const std::string& Fo::var2() const { return node_->var2; }
const BinaryPredicate& Fo::bin_pred() const { return node_->bp; }
const Fo& Fo::lhs() const { return node_->a; }
const Fo& Fo::rhs() const { return node_->b; }
std::size_t Fo::source_pos() const { return node_->pos; }
std::size_t Fo::size() const { return node_->size; }

Fo Fo::at(std::size_t pos) const {
  Node n = *node_;
  n.pos = pos;
  return Fo(std::make_shared<const Node>(std::move(n)));
}

bool operator==(const Fo& a, const Fo& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case FoKind::True:
    case FoKind::False:
      return true;
    case FoKind::Atom:
      return a.pred() == b.pred() && a.var() == b.var();
    case FoKind::Bin:
      return a.bin_pred() == b.bin_pred() && a.var() == b.var() &&
             a.var2() == b.var2();
    case FoKind::Not:
      return a.lhs() == b.lhs();
    case FoKind::And:
    case FoKind::Or:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case FoKind::Exists:
    case FoKind::Forall:
      return a.var() == b.var() && a.lhs() == b.lhs();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Tl

struct Tl::Node {
  TlKind kind;
  std::string pred;
  Tl a, b;
  std::size_t pos = kNoPos;
  std::size_t size = 1;
};

bool is_unary(TlKind k) {
  switch (k) {
    case TlKind::Not: case TlKind::X: case TlKind::Y: case TlKind::F:
    case TlKind::G: case TlKind::P: case TlKind::H:
      return true;
    default:
      return false;
  }
}

bool is_binary(TlKind k) {
  switch (k) {
    case TlKind::And: case TlKind::Or: case TlKind::U: case TlKind::R:
    case TlKind::S: case TlKind::Q: case TlKind::XU: case TlKind::YS:
      return true;
    default:
      return false;
  }
}

std::string_view tl_operator_name(TlKind k) {
  switch (k) {
    case TlKind::True: return "true";
    case TlKind::False: return "false";
    case TlKind::Atom: return "atom";
    case TlKind::Not: return "!";
    case TlKind::And: return "&";
    case TlKind::Or: return "|";
    case TlKind::X: return "X";
    case TlKind::Y: return "Y";
    case TlKind::F: return "F";
    case TlKind::G: return "G";
    case TlKind::P: return "P";
    case TlKind::H: return "H";
    case TlKind::U: return "U";
    case TlKind::R: return "R";
    case TlKind::S: return "S";
    case TlKind::Q: return "Q";
    case TlKind::XU: return "XU";
    case TlKind::YS: return "YS";
  }
  return "?";
}

Tl Tl::top() { return Tl(std::make_shared<const Node>(Node{TlKind::True, {}, {}, {}})); }
Tl Tl::bottom() { return Tl(std::make_shared<const Node>(Node{TlKind::False, {}, {}, {}})); }
Tl Tl::atom(std::string pred) {
  return Tl(std::make_shared<const Node>(Node{TlKind::Atom, std::move(pred), {}, {}}));
}

Tl Tl::unary(TlKind k, Tl body) {
  if (!is_unary(k)) throw UsageError("not a unary temporal operator");
  Node n{k, {}, body, {}};
  n.size = body.size() + 1;
  return Tl(std::make_shared<const Node>(std::move(n)));
}

Tl Tl::binary(TlKind k, Tl a, Tl b) {
  if (!is_binary(k)) throw UsageError("not a binary temporal operator");
  Node n{k, {}, a, b};
  n.size = a.size() + b.size() + 1;
  return Tl(std::make_shared<const Node>(std::move(n)));
}

Tl Tl::conj_all(const std::vector<Tl>& parts) {
  if (parts.empty()) return top();
  Tl acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Tl Tl::disj_all(const std::vector<Tl>& parts) {
  if (parts.empty()) return bottom();
  Tl acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

TlKind Tl::kind() const { return node_->kind; }
const std::string& Tl::pred() const { return node_->pred; }
const Tl& Tl::lhs() const { return node_->a; }
const Tl& Tl::rhs() const { return node_->b; }
std::size_t Tl::source_pos() const { return node_->pos; }
std::size_t Tl::size() const { return node_->size; }

Tl Tl::at(std::size_t pos) const {
  Node n = *node_;
  n.pos = pos;
  return Tl(std::make_shared<const Node>(std::move(n)));
}

bool operator==(const Tl& a, const Tl& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.kind() == TlKind::Atom) return a.pred() == b.pred();
  if (is_unary(a.kind())) return a.lhs() == b.lhs();
  if (is_binary(a.kind())) return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  return true;
}

// ---------------------------------------------------------------------------
// Lexer shared by the FO, TL and guard parsers.

namespace {

enum class Tok {
  End, Ident, LParen, RParen, LBracket, RBracket, Comma, Dot,
  Not, And, Or, Eq, Neq, Lt, Le, Gt, Ge, NotSucc
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  bool accept(Tok k) {
    if (current_.kind != k) return false;
    advance();
    return true;
  }
  Token expect(Tok k, const char* what) {
    if (current_.kind != k) {
      throw SyntaxError(std::string("expected ") + what, current_.pos);
    }
    return take();
  }
  bool at_ident(std::string_view word) const {
    return current_.kind == Tok::Ident && current_.text == word;
  }

 private:
  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@' ||
           c == '\'';
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, "", start};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      current_ = {k, std::string(1, c), start};
    };
    auto two = [&](Tok k, std::string s) {
      pos_ += 2;
      current_ = {k, std::move(s), start};
    };
    auto next_is = [&](char d) { return pos_ + 1 < text_.size() && text_[pos_ + 1] == d; };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case ',': return single(Tok::Comma);
      case '.': return single(Tok::Dot);
      case '&': return next_is('&') ? two(Tok::And, "&&") : single(Tok::And);
      case '|': return next_is('|') ? two(Tok::Or, "||") : single(Tok::Or);
      case '=': return next_is('=') ? two(Tok::Eq, "==") : single(Tok::Eq);
      case '<': return next_is('=') ? two(Tok::Le, "<=") : single(Tok::Lt);
      case '>': return next_is('=') ? two(Tok::Ge, ">=") : single(Tok::Gt);
      case '~': return single(Tok::Not);
      case '!': {
        if (next_is('=')) return two(Tok::Neq, "!=");
        // "!S(" is the ¬succ atom, not a negated succ.
        std::size_t p = pos_ + 1;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        if (p + 1 < text_.size() && text_[p] == 'S') {
          std::size_t q = p + 1;
          while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q]))) ++q;
          if (q < text_.size() && text_[q] == '(' &&
              !(p + 1 < text_.size() && ident_char(text_[p + 1]))) {
            pos_ = p + 1;
            current_ = {Tok::NotSucc, "!S", start};
            return;
          }
        }
        return single(Tok::Not);
      }
      default:
        break;
    }
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      current_ = {Tok::Ident, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, "", 0};
};

// guard := gor ; gor := gand ('|' gand)* ; gand := gun ('&' gun)*
// gun := '!' gun | 'true' | 'false' | ident | '(' gor ')'
Guard parse_guard_or(Lexer& lx);

Guard parse_guard_unary(Lexer& lx) {
  if (lx.accept(Tok::Not)) return Guard::negate(parse_guard_unary(lx));
  if (lx.accept(Tok::LParen)) {
    Guard g = parse_guard_or(lx);
    lx.expect(Tok::RParen, "')'");
    return g;
  }
  Token t = lx.expect(Tok::Ident, "a predicate");
  if (t.text == "true") return Guard::top();
  if (t.text == "false") return Guard::bottom();
  return Guard::atom(t.text);
}

Guard parse_guard_and(Lexer& lx) {
  Guard g = parse_guard_unary(lx);
  while (lx.accept(Tok::And)) g = Guard::conj(g, parse_guard_unary(lx));
  return g;
}

Guard parse_guard_or(Lexer& lx) {
  Guard g = parse_guard_and(lx);
  while (lx.accept(Tok::Or)) g = Guard::disj(g, parse_guard_and(lx));
  return g;
}

// --- FO ---------------------------------------------------------------------

class FoParser {
 public:
  FoParser(std::string_view text, const Signature& sig) : lx_(text), sig_(sig) {}

  Fo parse() {
    Fo f = parse_or();
    if (lx_.peek().kind != Tok::End) {
      throw SyntaxError("unexpected '" + lx_.peek().text + "'", lx_.peek().pos);
    }
    return f;
  }

 private:
  bool at_quantifier() const { return lx_.at_ident("exists") || lx_.at_ident("forall"); }

  Fo parse_quantifier() {
    Token q = lx_.take();
    Token v = lx_.expect(Tok::Ident, "a variable");
    check_var(v);
    if (!lx_.accept(Tok::Dot)) lx_.accept(Tok::Comma);
    Fo body = parse_or();
    Fo f = q.text == "exists" ? Fo::exists(v.text, body) : Fo::forall(v.text, body);
    return f.at(q.pos);
  }

  Fo parse_or() {
    Fo f = parse_and();
    while (lx_.peek().kind == Tok::Or) {
      std::size_t pos = lx_.take().pos;
      f = Fo::disj(f, parse_and()).at(pos);
    }
    return f;
  }

  Fo parse_and() {
    Fo f = parse_unary();
    while (lx_.peek().kind == Tok::And) {
      std::size_t pos = lx_.take().pos;
      f = Fo::conj(f, parse_unary()).at(pos);
    }
    return f;
  }

  Fo parse_unary() {
    const Token& t = lx_.peek();
    if (t.kind == Tok::Not) {
      std::size_t pos = lx_.take().pos;
      return Fo::negate(parse_unary()).at(pos);
    }
    if (t.kind == Tok::LParen) {
      lx_.take();
      Fo f = parse_or();
      lx_.expect(Tok::RParen, "')'");
      return f;
    }
    if (at_quantifier()) return parse_quantifier();
    return parse_atom();
  }

  void check_var(const Token& v) {
    static const char* kReserved[] = {"exists", "forall", "true", "false", "btw", "S"};
    for (const char* r : kReserved) {
      if (v.text == r) throw SyntaxError("'" + v.text + "' is not a variable name", v.pos);
    }
  }

  Fo make_bin(BinaryPredicate p, std::string a, std::string b, std::size_t pos) {
    if (!sig_.allows(p)) {
      throw SyntaxError("binary predicate outside the signature", pos);
    }
    return Fo::bin(std::move(p), std::move(a), std::move(b)).at(pos);
  }

  std::pair<std::string, std::string> parse_pair() {
    lx_.expect(Tok::LParen, "'('");
    Token a = lx_.expect(Tok::Ident, "a variable");
    check_var(a);
    lx_.expect(Tok::Comma, "','");
    Token b = lx_.expect(Tok::Ident, "a variable");
    check_var(b);
    lx_.expect(Tok::RParen, "')'");
    return {a.text, b.text};
  }

  Fo parse_atom() {
    Token t = lx_.peek();
    if (t.kind == Tok::NotSucc) {
      lx_.take();
      auto [a, b] = parse_pair();
      return make_bin(BinaryPredicate::of(BinKind::NotSucc), a, b, t.pos);
    }
    t = lx_.expect(Tok::Ident, "a formula");
    if (t.text == "true") return Fo::top().at(t.pos);
    if (t.text == "false") return Fo::bottom().at(t.pos);
    if (t.text == "S" && lx_.peek().kind == Tok::LParen) {
      auto [a, b] = parse_pair();
      return make_bin(BinaryPredicate::of(BinKind::Succ), a, b, t.pos);
    }
    if (t.text == "btw" && lx_.peek().kind == Tok::LBracket) {
      lx_.take();
      Guard g = parse_guard_or(lx_);
      lx_.expect(Tok::RBracket, "']'");
      auto [a, b] = parse_pair();
      return make_bin(BinaryPredicate::between(g), a, b, t.pos);
    }
    if (lx_.peek().kind == Tok::LParen) {
      lx_.take();
      Token v = lx_.expect(Tok::Ident, "a variable");
      check_var(v);
      lx_.expect(Tok::RParen, "')'");
      return Fo::atom(t.text, v.text).at(t.pos);
    }
    // Comparison between two variables.
    check_var(t);
    Token op = lx_.take();
    Token rhs = lx_.expect(Tok::Ident, "a variable");
    check_var(rhs);
    switch (op.kind) {
      case Tok::Eq: return make_bin(BinaryPredicate::of(BinKind::Eq), t.text, rhs.text, t.pos);
      case Tok::Neq: return make_bin(BinaryPredicate::of(BinKind::Neq), t.text, rhs.text, t.pos);
      case Tok::Lt: return make_bin(BinaryPredicate::of(BinKind::Lt), t.text, rhs.text, t.pos);
      case Tok::Le: return make_bin(BinaryPredicate::of(BinKind::Le), t.text, rhs.text, t.pos);
      case Tok::Gt: return make_bin(BinaryPredicate::of(BinKind::Lt), rhs.text, t.text, t.pos);
      case Tok::Ge: return make_bin(BinaryPredicate::of(BinKind::Le), rhs.text, t.text, t.pos);
      default:
        throw SyntaxError("expected an atom", t.pos);
    }
  }

  Lexer lx_;
  const Signature& sig_;
};

// --- TL ---------------------------------------------------------------------

bool tl_unary_op(const Token& t, TlKind& k) {
  if (t.kind == Tok::Not) { k = TlKind::Not; return true; }
  if (t.kind != Tok::Ident) return false;
  static const std::pair<const char*, TlKind> kOps[] = {
      {"X", TlKind::X}, {"Y", TlKind::Y}, {"F", TlKind::F},
      {"G", TlKind::G}, {"P", TlKind::P}, {"H", TlKind::H}};
  for (auto [name, kind] : kOps) {
    if (t.text == name) { k = kind; return true; }
  }
  return false;
}

bool tl_binary_op(const Token& t, TlKind& k) {
  if (t.kind != Tok::Ident) return false;
  static const std::pair<const char*, TlKind> kOps[] = {
      {"U", TlKind::U}, {"R", TlKind::R}, {"S", TlKind::S},
      {"Q", TlKind::Q}, {"XU", TlKind::XU}, {"YS", TlKind::YS}};
  for (auto [name, kind] : kOps) {
    if (t.text == name) { k = kind; return true; }
  }
  return false;
}

bool tl_reserved(std::string_view s) {
  static const char* kWords[] = {"X", "Y", "F", "G", "P", "H", "U", "R",
                                 "S", "Q", "XU", "YS", "true", "false"};
  for (const char* w : kWords) {
    if (s == w) return true;
  }
  return false;
}

class TlParser {
 public:
  explicit TlParser(std::string_view text) : lx_(text) {}

  Tl parse() {
    Tl f = parse_or();
    if (lx_.peek().kind != Tok::End) {
      throw SyntaxError("unexpected '" + lx_.peek().text + "'", lx_.peek().pos);
    }
    return f;
  }

 private:
  Tl parse_or() {
    Tl f = parse_and();
    while (lx_.peek().kind == Tok::Or) {
      std::size_t pos = lx_.take().pos;
      f = Tl::disj(f, parse_and()).at(pos);
    }
    return f;
  }

  Tl parse_and() {
    Tl f = parse_temporal();
    while (lx_.peek().kind == Tok::And) {
      std::size_t pos = lx_.take().pos;
      f = Tl::conj(f, parse_temporal()).at(pos);
    }
    return f;
  }

  Tl parse_temporal() {
    Tl lhs = parse_unary();
    TlKind k;
    if (tl_binary_op(lx_.peek(), k)) {
      std::size_t pos = lx_.take().pos;
      Tl rhs = parse_temporal();
      return Tl::binary(k, lhs, rhs).at(pos);
    }
    return lhs;
  }

  Tl parse_unary() {
    TlKind k;
    const Token& t = lx_.peek();
    if (tl_unary_op(t, k)) {
      std::size_t pos = lx_.take().pos;
      return Tl::unary(k, parse_unary()).at(pos);
    }
    if (t.kind == Tok::LParen) {
      lx_.take();
      Tl f = parse_or();
      lx_.expect(Tok::RParen, "')'");
      return f;
    }
    Token a = lx_.expect(Tok::Ident, "a formula");
    if (a.text == "true") return Tl::top().at(a.pos);
    if (a.text == "false") return Tl::bottom().at(a.pos);
    if (tl_reserved(a.text)) {
      throw SyntaxError("operator '" + a.text + "' used as an atom", a.pos);
    }
    return Tl::atom(a.text).at(a.pos);
  }

  Lexer lx_;
};

}  // namespace

Fo parse_fo(std::string_view text, const Signature& signature) {
  return FoParser(text, signature).parse();
}

Tl parse_tl(std::string_view text) { return TlParser(text).parse(); }

Guard parse_guard(std::string_view text) {
  Lexer lx(text);
  Guard g = parse_guard_or(lx);
  if (lx.peek().kind != Tok::End) {
    throw SyntaxError("unexpected '" + lx.peek().text + "'", lx.peek().pos);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Precedence levels: 1 = |, 2 = &, 3 = unary / atoms. Quantifiers extend to
// the right, so they are parenthesized unless nothing follows them.
int fo_prec(FoKind k) {
  switch (k) {
    case FoKind::Or: return 1;
    case FoKind::And: return 2;
    case FoKind::Exists:
    case FoKind::Forall: return 0;
    default: return 3;
  }
}

std::string render_fo(const Fo& f, bool rightmost);

std::string render_fo_child(const Fo& child, int min_prec, bool strict, bool rightmost) {
  int p = fo_prec(child.kind());
  bool parens;
  if (p == 0) {
    parens = !rightmost;
  } else {
    parens = strict ? p <= min_prec : p < min_prec;
  }
  if (parens) return "(" + render_fo(child, true) + ")";
  return render_fo(child, rightmost);
}

std::string render_bin(const Fo& f) {
  const std::string& a = f.var();
  const std::string& b = f.var2();
  switch (f.bin_pred().kind) {
    case BinKind::Eq: return a + "=" + b;
    case BinKind::Neq: return a + "!=" + b;
    case BinKind::Le: return a + "<=" + b;
    case BinKind::Lt: return a + "<" + b;
    case BinKind::Succ: return "S(" + a + "," + b + ")";
    case BinKind::NotSucc: return "!S(" + a + "," + b + ")";
    case BinKind::Between:
      return "btw[" + f.bin_pred().guard->render() + "](" + a + "," + b + ")";
  }
  return {};
}

std::string render_fo(const Fo& f, bool rightmost) {
  switch (f.kind()) {
    case FoKind::True: return "true";
    case FoKind::False: return "false";
    case FoKind::Atom: return f.pred() + "(" + f.var() + ")";
    case FoKind::Bin: return render_bin(f);
    case FoKind::Not: {
      const Fo& c = f.lhs();
      // "!S(x,y)" would read back as the ¬succ atom.
      if (c.kind() == FoKind::Bin && c.bin_pred().kind == BinKind::Succ) {
        return "!(" + render_bin(c) + ")";
      }
      return "!" + render_fo_child(c, 3, false, rightmost);
    }
    case FoKind::And:
      return render_fo_child(f.lhs(), 2, false, false) + " & " +
             render_fo_child(f.rhs(), 2, true, rightmost);
    case FoKind::Or:
      return render_fo_child(f.lhs(), 1, false, false) + " | " +
             render_fo_child(f.rhs(), 1, true, rightmost);
    case FoKind::Exists:
      return "exists " + f.var() + ". " + render_fo(f.lhs(), true);
    case FoKind::Forall:
      return "forall " + f.var() + ". " + render_fo(f.lhs(), true);
  }
  return {};
}

// 1 = |, 2 = &, 3 = binary temporal, 4 = unary / atoms.
int tl_prec(TlKind k) {
  switch (k) {
    case TlKind::Or: return 1;
    case TlKind::And: return 2;
    case TlKind::U: case TlKind::R: case TlKind::S: case TlKind::Q:
    case TlKind::XU: case TlKind::YS:
      return 3;
    default:
      return 4;
  }
}

std::string render_tl(const Tl& f);

std::string render_tl_child(const Tl& c, int min_prec, bool strict) {
  int p = tl_prec(c.kind());
  bool parens = strict ? p <= min_prec : p < min_prec;
  return parens ? "(" + render_tl(c) + ")" : render_tl(c);
}

std::string render_tl(const Tl& f) {
  switch (f.kind()) {
    case TlKind::True: return "true";
    case TlKind::False: return "false";
    case TlKind::Atom: return f.pred();
    case TlKind::Not: return "!" + render_tl_child(f.lhs(), 4, false);
    case TlKind::X: case TlKind::Y: case TlKind::F:
    case TlKind::G: case TlKind::P: case TlKind::H:
      return std::string(tl_operator_name(f.kind())) + " " +
             render_tl_child(f.lhs(), 4, false);
    case TlKind::And:
      return render_tl_child(f.lhs(), 2, false) + " & " + render_tl_child(f.rhs(), 2, true);
    case TlKind::Or:
      return render_tl_child(f.lhs(), 1, false) + " | " + render_tl_child(f.rhs(), 1, true);
    default:
      // Right-associative temporal infix operators.
      return render_tl_child(f.lhs(), 3, true) + " " +
             std::string(tl_operator_name(f.kind())) + " " +
             render_tl_child(f.rhs(), 3, false);
  }
}

}  // namespace

std::string render(const Fo& f) { return render_fo(f, true); }
std::string render(const Tl& f) { return render_tl(f); }

// ---------------------------------------------------------------------------
// Syntactic analysis

bool is_positive(const Fo& f) {
  switch (f.kind()) {
    case FoKind::True: case FoKind::False: case FoKind::Atom:
      return true;
    case FoKind::Bin:
      return f.bin_pred().kind != BinKind::Between || f.bin_pred().guard->is_positive();
    case FoKind::Not:
      return false;
    case FoKind::And: case FoKind::Or:
      return is_positive(f.lhs()) && is_positive(f.rhs());
    case FoKind::Exists: case FoKind::Forall:
      return is_positive(f.lhs());
  }
  return false;
}

bool is_positive(const Tl& f) {
  if (f.kind() == TlKind::Not) return false;
  if (is_unary(f.kind())) return is_positive(f.lhs());
  if (is_binary(f.kind())) return is_positive(f.lhs()) && is_positive(f.rhs());
  return true;
}

namespace {

void collect_vars(const Fo& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FoKind::True: case FoKind::False: return;
    case FoKind::Atom: out.insert(f.var()); return;
    case FoKind::Bin: out.insert(f.var()); out.insert(f.var2()); return;
    case FoKind::Not: collect_vars(f.lhs(), out); return;
    case FoKind::And: case FoKind::Or:
      collect_vars(f.lhs(), out);
      collect_vars(f.rhs(), out);
      return;
    case FoKind::Exists: case FoKind::Forall:
      out.insert(f.var());
      collect_vars(f.lhs(), out);
      return;
  }
}

}  // namespace

std::set<std::string> variables(const Fo& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

std::set<std::string> free_variables(const Fo& f) {
  switch (f.kind()) {
    case FoKind::True: case FoKind::False: return {};
    case FoKind::Atom: return {f.var()};
    case FoKind::Bin: return {f.var(), f.var2()};
    case FoKind::Not: return free_variables(f.lhs());
    case FoKind::And: case FoKind::Or: {
      auto a = free_variables(f.lhs());
      auto b = free_variables(f.rhs());
      a.insert(b.begin(), b.end());
      return a;
    }
    case FoKind::Exists: case FoKind::Forall: {
      auto a = free_variables(f.lhs());
      a.erase(f.var());
      return a;
    }
  }
  return {};
}

std::size_t distinct_vars(const Fo& f) { return variables(f).size(); }

std::size_t quantifier_rank(const Fo& f) {
  switch (f.kind()) {
    case FoKind::True: case FoKind::False: case FoKind::Atom: case FoKind::Bin:
      return 0;
    case FoKind::Not:
      return quantifier_rank(f.lhs());
    case FoKind::And: case FoKind::Or:
      return std::max(quantifier_rank(f.lhs()), quantifier_rank(f.rhs()));
    case FoKind::Exists: case FoKind::Forall:
      return quantifier_rank(f.lhs()) + 1;
  }
  return 0;
}

namespace {

void collect_guard_preds(const Guard& g, std::set<std::string>& out) {
  switch (g.kind()) {
    case GuardKind::Atom: out.insert(g.pred()); return;
    case GuardKind::Not: collect_guard_preds(g.lhs(), out); return;
    case GuardKind::And: case GuardKind::Or:
      collect_guard_preds(g.lhs(), out);
      collect_guard_preds(g.rhs(), out);
      return;
    default: return;
  }
}

void collect_preds(const Fo& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FoKind::Atom: out.insert(f.pred()); return;
    case FoKind::Bin:
      if (f.bin_pred().kind == BinKind::Between) collect_guard_preds(*f.bin_pred().guard, out);
      return;
    case FoKind::Not: case FoKind::Exists: case FoKind::Forall:
      collect_preds(f.lhs(), out);
      return;
    case FoKind::And: case FoKind::Or:
      collect_preds(f.lhs(), out);
      collect_preds(f.rhs(), out);
      return;
    default: return;
  }
}

void collect_preds(const Tl& f, std::set<std::string>& out) {
  if (f.kind() == TlKind::Atom) out.insert(f.pred());
  if (is_unary(f.kind())) collect_preds(f.lhs(), out);
  if (is_binary(f.kind())) {
    collect_preds(f.lhs(), out);
    collect_preds(f.rhs(), out);
  }
}

}  // namespace

std::set<std::string> predicates_of(const Fo& f) {
  std::set<std::string> out;
  collect_preds(f, out);
  return out;
}

std::set<std::string> predicates_of(const Tl& f) {
  std::set<std::string> out;
  collect_preds(f, out);
  return out;
}

bool uses_only(const Fo& f, const Signature& signature) {
  switch (f.kind()) {
    case FoKind::Bin: return signature.allows(f.bin_pred());
    case FoKind::Not: case FoKind::Exists: case FoKind::Forall:
      return uses_only(f.lhs(), signature);
    case FoKind::And: case FoKind::Or:
      return uses_only(f.lhs(), signature) && uses_only(f.rhs(), signature);
    default:
      return true;
  }
}

namespace {

struct FragmentInfo {
  FragmentId id;
  const char* name;
  const char* short_name;
};

constexpr FragmentInfo kFragments[] = {
    {FragmentId::FOplus, "FOplus", "fo+"},
    {FragmentId::FO2, "FO2", "fo2"},
    {FragmentId::FO2plus, "FO2plus", "fo2+"},
    {FragmentId::FO3, "FO3", "fo3"},
    {FragmentId::FO3plus, "FO3plus", "fo3+"},
    {FragmentId::Sigma2, "Sigma2", "sigma2"},
    {FragmentId::Sigma2plus, "Sigma2plus", "sigma2+"},
    {FragmentId::Sigma2minus, "Sigma2minus", "sigma2-"},
    {FragmentId::Pi2, "Pi2", "pi2"},
    {FragmentId::Pi2plus, "Pi2plus", "pi2+"},
    {FragmentId::LTL, "LTL", "ltl"},
    {FragmentId::LTLplus, "LTLplus", "ltl+"},
    {FragmentId::TLplus, "TLplus", "tl+"},
    {FragmentId::UTL, "UTL", "utl"},
    {FragmentId::UTLplus, "UTLplus", "utl+"},
    {FragmentId::UTLplus_PFHG, "UTLplus_PFHG", "utl+pfhg"},
};

bool quantifier_free(const Fo& f) {
  switch (f.kind()) {
    case FoKind::Exists: case FoKind::Forall: return false;
    case FoKind::Not: return quantifier_free(f.lhs());
    case FoKind::And: case FoKind::Or:
      return quantifier_free(f.lhs()) && quantifier_free(f.rhs());
    default: return true;
  }
}

// Prefix shape Q1* Q2* followed by a quantifier-free matrix.
const Fo* prenex_matrix(const Fo& f, FoKind first, FoKind second) {
  const Fo* cur = &f;
  while (cur->kind() == first) cur = &cur->lhs();
  while (cur->kind() == second) cur = &cur->lhs();
  return quantifier_free(*cur) ? cur : nullptr;
}

// Every unary atom sits directly under exactly one ¬ and no other ¬ occurs.
bool negations_on_atoms_only(const Fo& f) {
  switch (f.kind()) {
    case FoKind::Atom: return false;
    case FoKind::Not: return f.lhs().kind() == FoKind::Atom;
    case FoKind::Bin:
      return f.bin_pred().kind != BinKind::Between || f.bin_pred().guard->is_positive();
    case FoKind::And: case FoKind::Or:
      return negations_on_atoms_only(f.lhs()) && negations_on_atoms_only(f.rhs());
    default: return true;
  }
}

bool tl_uses_only(const Tl& f, std::initializer_list<TlKind> allowed) {
  if (std::find(allowed.begin(), allowed.end(), f.kind()) == allowed.end()) return false;
  if (is_unary(f.kind())) return tl_uses_only(f.lhs(), allowed);
  if (is_binary(f.kind())) return tl_uses_only(f.lhs(), allowed) && tl_uses_only(f.rhs(), allowed);
  return true;
}

}  // namespace

std::string_view fragment_name(FragmentId id) {
  for (const auto& info : kFragments) {
    if (info.id == id) return info.name;
  }
  return "?";
}

FragmentId parse_fragment(std::string_view name) {
  for (const auto& info : kFragments) {
    if (name == info.name || name == info.short_name) return info.id;
  }
  throw UsageError("unknown fragment '" + std::string(name) + "'");
}

bool is_fo_fragment(FragmentId id) {
  return static_cast<int>(id) <= static_cast<int>(FragmentId::Pi2plus);
}

bool classify(const Fo& f, FragmentId fragment, const Signature& signature) {
  if (!is_fo_fragment(fragment)) return false;
  if (!uses_only(f, signature)) return false;
  switch (fragment) {
    case FragmentId::FOplus: return is_positive(f);
    case FragmentId::FO2: return distinct_vars(f) <= 2;
    case FragmentId::FO2plus: return is_positive(f) && distinct_vars(f) <= 2;
    case FragmentId::FO3: return distinct_vars(f) <= 3;
    case FragmentId::FO3plus: return is_positive(f) && distinct_vars(f) <= 3;
    case FragmentId::Sigma2:
      return prenex_matrix(f, FoKind::Exists, FoKind::Forall) != nullptr;
    case FragmentId::Sigma2plus:
      return prenex_matrix(f, FoKind::Exists, FoKind::Forall) != nullptr && is_positive(f);
    case FragmentId::Sigma2minus: {
      const Fo* m = prenex_matrix(f, FoKind::Exists, FoKind::Forall);
      return m != nullptr && negations_on_atoms_only(*m);
    }
    case FragmentId::Pi2:
      return prenex_matrix(f, FoKind::Forall, FoKind::Exists) != nullptr;
    case FragmentId::Pi2plus:
      return prenex_matrix(f, FoKind::Forall, FoKind::Exists) != nullptr && is_positive(f);
    default:
      return false;
  }
}

bool classify(const Tl& f, FragmentId fragment) {
  using K = TlKind;
  switch (fragment) {
    case FragmentId::LTL:
      return tl_uses_only(f, {K::True, K::False, K::Atom, K::Not, K::And, K::Or,
                              K::X, K::F, K::G, K::U, K::R, K::XU});
    case FragmentId::LTLplus:
      return tl_uses_only(f, {K::True, K::False, K::Atom, K::And, K::Or,
                              K::X, K::F, K::G, K::U, K::R, K::XU});
    case FragmentId::TLplus:
      return is_positive(f);
    case FragmentId::UTL:
      return tl_uses_only(f, {K::True, K::False, K::Atom, K::Not, K::And, K::Or,
                              K::X, K::Y, K::F, K::G, K::P, K::H});
    case FragmentId::UTLplus:
      return tl_uses_only(f, {K::True, K::False, K::Atom, K::And, K::Or,
                              K::X, K::Y, K::F, K::G, K::P, K::H});
    case FragmentId::UTLplus_PFHG:
      return tl_uses_only(f, {K::True, K::False, K::Atom, K::And, K::Or,
                              K::F, K::G, K::P, K::H});
    default:
      return false;
  }
}

Tl desugar(const Tl& f) {
  switch (f.kind()) {
    case TlKind::XU:
      return Tl::unary(TlKind::X, Tl::binary(TlKind::U, desugar(f.lhs()), desugar(f.rhs())));
    case TlKind::YS:
      return Tl::unary(TlKind::Y, Tl::binary(TlKind::S, desugar(f.lhs()), desugar(f.rhs())));
    default:
      break;
  }
  if (is_unary(f.kind())) return Tl::unary(f.kind(), desugar(f.lhs()));
  if (is_binary(f.kind())) return Tl::binary(f.kind(), desugar(f.lhs()), desugar(f.rhs()));
  return f;
}

Tl simplify_constants(const Tl& f) {
  const TlKind k = f.kind();
  if (is_unary(k)) {
    Tl a = simplify_constants(f.lhs());
    const TlKind ak = a.kind();
    switch (k) {
      case TlKind::Not:
        if (ak == TlKind::True) return Tl::bottom();
        if (ak == TlKind::False) return Tl::top();
        break;
      case TlKind::X: case TlKind::Y: case TlKind::F: case TlKind::P:
        if (ak == TlKind::False) return a;
        break;
      case TlKind::G: case TlKind::H:
        if (ak == TlKind::True) return a;
        break;
      default:
        break;
    }
    return Tl::unary(k, a);
  }
  if (k == TlKind::And || k == TlKind::Or) {
    Tl a = simplify_constants(f.lhs());
    Tl b = simplify_constants(f.rhs());
    const TlKind absorbing = k == TlKind::And ? TlKind::False : TlKind::True;
    const TlKind neutral = k == TlKind::And ? TlKind::True : TlKind::False;
    if (a.kind() == absorbing) return a;
    if (b.kind() == absorbing) return b;
    if (a.kind() == neutral) return b;
    if (b.kind() == neutral) return a;
    if (a == b) return a;
    return Tl::binary(k, a, b);
  }
  if (is_binary(k)) {
    return Tl::binary(k, simplify_constants(f.lhs()), simplify_constants(f.rhs()));
  }
  return f;
}

Fo simplify_constants(const Fo& f) {
  switch (f.kind()) {
    case FoKind::Not: {
      Fo a = simplify_constants(f.lhs());
      if (a.kind() == FoKind::True) return Fo::bottom();
      if (a.kind() == FoKind::False) return Fo::top();
      return Fo::negate(a);
    }
    case FoKind::And: case FoKind::Or: {
      Fo a = simplify_constants(f.lhs());
      Fo b = simplify_constants(f.rhs());
      const bool is_and = f.kind() == FoKind::And;
      const FoKind absorbing = is_and ? FoKind::False : FoKind::True;
      const FoKind neutral = is_and ? FoKind::True : FoKind::False;
      if (a.kind() == absorbing) return a;
      if (b.kind() == absorbing) return b;
      if (a.kind() == neutral) return b;
      if (b.kind() == neutral) return a;
      if (a == b) return a;
      return is_and ? Fo::conj(a, b) : Fo::disj(a, b);
    }
    case FoKind::Exists: {
      Fo a = simplify_constants(f.lhs());
      if (a.kind() == FoKind::False) return a;
      return Fo::exists(f.var(), a);
    }
    case FoKind::Forall: {
      Fo a = simplify_constants(f.lhs());
      if (a.kind() == FoKind::True) return a;
      return Fo::forall(f.var(), a);
    }
    default:
      return f;
  }
}

Fo swap_variables(const Fo& f, const std::string& a, const std::string& b) {
  auto sw = [&](const std::string& v) -> std::string {
    if (v == a) return b;
    if (v == b) return a;
    return v;
  };
  switch (f.kind()) {
    case FoKind::True: case FoKind::False: return f;
    case FoKind::Atom: return Fo::atom(f.pred(), sw(f.var()));
    case FoKind::Bin: return Fo::bin(f.bin_pred(), sw(f.var()), sw(f.var2()));
    case FoKind::Not: return Fo::negate(swap_variables(f.lhs(), a, b));
    case FoKind::And: return Fo::conj(swap_variables(f.lhs(), a, b), swap_variables(f.rhs(), a, b));
    case FoKind::Or: return Fo::disj(swap_variables(f.lhs(), a, b), swap_variables(f.rhs(), a, b));
    case FoKind::Exists: return Fo::exists(sw(f.var()), swap_variables(f.lhs(), a, b));
    case FoKind::Forall: return Fo::forall(sw(f.var()), swap_variables(f.lhs(), a, b));
  }
  return f;
}

namespace {

Fo nnf(const Fo& f, bool negated) {
  switch (f.kind()) {
    case FoKind::True: return negated ? Fo::bottom() : f;
    case FoKind::False: return negated ? Fo::top() : f;
    case FoKind::Atom: return negated ? Fo::negate(f) : f;
    case FoKind::Bin: {
      if (!negated) return f;
      const std::string& x = f.var();
      const std::string& y = f.var2();
      switch (f.bin_pred().kind) {
        case BinKind::Eq: return Fo::bin(BinKind::Neq, x, y);
        case BinKind::Neq: return Fo::bin(BinKind::Eq, x, y);
        case BinKind::Le: return Fo::bin(BinKind::Lt, y, x);
        case BinKind::Lt: return Fo::bin(BinKind::Le, y, x);
        case BinKind::Succ: return Fo::bin(BinKind::NotSucc, x, y);
        case BinKind::NotSucc: return Fo::bin(BinKind::Succ, x, y);
        case BinKind::Between: return Fo::negate(f);
      }
      return f;
    }
    case FoKind::Not: return nnf(f.lhs(), !negated);
    case FoKind::And: {
      Fo a = nnf(f.lhs(), negated), b = nnf(f.rhs(), negated);
      return negated ? Fo::disj(a, b) : Fo::conj(a, b);
    }
    case FoKind::Or: {
      Fo a = nnf(f.lhs(), negated), b = nnf(f.rhs(), negated);
      return negated ? Fo::conj(a, b) : Fo::disj(a, b);
    }
    case FoKind::Exists: {
      Fo a = nnf(f.lhs(), negated);
      return negated ? Fo::forall(f.var(), a) : Fo::exists(f.var(), a);
    }
    case FoKind::Forall: {
      Fo a = nnf(f.lhs(), negated);
      return negated ? Fo::exists(f.var(), a) : Fo::forall(f.var(), a);
    }
  }
  return f;
}

}  // namespace

Fo push_negations(const Fo& f) { return nnf(f, false); }

}  // namespace poslog
