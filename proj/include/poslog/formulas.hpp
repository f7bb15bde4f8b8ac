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

#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "poslog/words.hpp"

namespace poslog {

// ---------------------------------------------------------------------------
// Guards: quantifier-free single-position expressions over Σ, used as the
// condition of between predicates.

enum class GuardKind : std::uint8_t { True, False, Atom, Not, And, Or };

class Guard {
 public:
  static Guard top();
  static Guard bottom();
  static Guard atom(std::string pred);
  static Guard negate(Guard g);
  static Guard conj(Guard a, Guard b);
  static Guard disj(Guard a, Guard b);

  GuardKind kind() const;
  const std::string& pred() const;
  const Guard& lhs() const;
  const Guard& rhs() const;

  bool is_positive() const;
  /// Evaluates against a letter; predicates are resolved through `preds`.
  bool holds(Letter letter, const PredicateSet& preds) const;
  std::string render() const;

  friend bool operator==(const Guard& a, const Guard& b);

 private:
  struct Node;
  Guard() = default;
  explicit Guard(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Binary predicates and signatures.

enum class BinKind : std::uint8_t { Eq, Neq, Le, Lt, Succ, NotSucc, Between };

struct BinaryPredicate {
  BinKind kind = BinKind::Eq;
  std::shared_ptr<const Guard> guard;  // set iff kind == Between

  static BinaryPredicate of(BinKind kind) { return {kind, nullptr}; }
  static BinaryPredicate between(Guard g) {
    return {BinKind::Between, std::make_shared<const Guard>(std::move(g))};
  }
  /// Truth of p(x, y) for concrete positions; `word` is only consulted by
  /// between predicates.
  bool holds(std::size_t x, std::size_t y, std::span<const Letter> word,
             const PredicateSet& preds) const;

  friend bool operator==(const BinaryPredicate& a, const BinaryPredicate& b);
};

/// The binary predicates a formula or game may use. = and ≠ are always
/// available. Between predicates listed in `guards` are the ones a game
/// checks; any guard is accepted syntactically when Between is allowed.
class Signature {
 public:
  Signature() { allow(BinKind::Eq).allow(BinKind::Neq); }

  static Signature b0();    // {≤, <, succ, ¬succ}
  static Signature less();  // {≤, <}
  static Signature succ();  // {succ, ¬succ}
  static Signature all();   // 𝔅₀ plus between predicates

  Signature& allow(BinKind k) {
    kinds_.set(static_cast<std::size_t>(k));
    return *this;
  }
  Signature& with_between(Guard g);
  bool allows(BinKind k) const { return kinds_.test(static_cast<std::size_t>(k)); }
  bool allows(const BinaryPredicate& p) const;
  /// Every concrete predicate this signature constrains in a game.
  std::vector<BinaryPredicate> predicates() const;
  std::string render() const;

 private:
  std::bitset<7> kinds_;
  std::vector<Guard> guards_;
};

// ---------------------------------------------------------------------------
// First-order formulas over words.

enum class FoKind : std::uint8_t {
  True, False, Atom, Bin, Not, And, Or, Exists, Forall
};

class Fo {
 public:
  static Fo top();
  static Fo bottom();
  static Fo atom(std::string pred, std::string var);
  static Fo bin(BinaryPredicate p, std::string var1, std::string var2);
  static Fo bin(BinKind k, std::string var1, std::string var2) {
    return bin(BinaryPredicate::of(k), std::move(var1), std::move(var2));
  }
  static Fo negate(Fo body);
  static Fo conj(Fo a, Fo b);
  static Fo disj(Fo a, Fo b);
  static Fo exists(std::string var, Fo body);
  static Fo forall(std::string var, Fo body);
  /// Folds; the empty list gives ⊤ (resp. ⊥).
  static Fo conj_all(const std::vector<Fo>& parts);
  static Fo disj_all(const std::vector<Fo>& parts);

  FoKind kind() const;
  const std::string& pred() const;  // Atom
  /// Atom variable, first Bin argument or quantified variable.
  const std::string& var() const;
  const std::string& var2() const;  // second Bin argument
  const BinaryPredicate& bin_pred() const;
  const Fo& lhs() const;   // And/Or left, Not/quantifier body
  const Fo& rhs() const;   // And/Or right
  const Fo& body() const { return lhs(); }
  /// Offset in the parsed text, or npos for constructed formulas.
  std::size_t source_pos() const;
  Fo at(std::size_t pos) const;

  std::size_t size() const;
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Fo& a, const Fo& b);

 private:
  struct Node;
  Fo() = default;
  explicit Fo(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Temporal formulas. XU and YS are parse-level sugar removed by desugar();
// F, G, P, H are primitive (strict future/past eventually/always).

enum class TlKind : std::uint8_t {
  True, False, Atom, Not, And, Or,
  X, Y, F, G, P, H,
  U, R, S, Q, XU, YS
};

class Tl {
 public:
  static Tl top();
  static Tl bottom();
  static Tl atom(std::string pred);
  static Tl unary(TlKind k, Tl body);
  static Tl binary(TlKind k, Tl a, Tl b);
  static Tl negate(Tl a) { return unary(TlKind::Not, std::move(a)); }
  static Tl conj(Tl a, Tl b) { return binary(TlKind::And, std::move(a), std::move(b)); }
  static Tl disj(Tl a, Tl b) { return binary(TlKind::Or, std::move(a), std::move(b)); }
  static Tl conj_all(const std::vector<Tl>& parts);
  static Tl disj_all(const std::vector<Tl>& parts);

  TlKind kind() const;
  const std::string& pred() const;
  const Tl& lhs() const;  // operand of unary operators, left of binary ones
  const Tl& rhs() const;
  const Tl& body() const { return lhs(); }
  std::size_t source_pos() const;
  Tl at(std::size_t pos) const;

  std::size_t size() const;
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Tl& a, const Tl& b);

 private:
  struct Node;
  Tl() = default;
  explicit Tl(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool is_unary(TlKind k);
bool is_binary(TlKind k);
std::string_view tl_operator_name(TlKind k);

// ---------------------------------------------------------------------------
// Parsing and printing.

Fo parse_fo(std::string_view text, const Signature& signature = Signature::all());
Tl parse_tl(std::string_view text);
Guard parse_guard(std::string_view text);

std::string render(const Fo& f);
std::string render(const Tl& f);

// ---------------------------------------------------------------------------
// Syntactic analysis.

bool is_positive(const Fo& f);  // no ¬ node, and no ¬ inside between guards
bool is_positive(const Tl& f);
std::set<std::string> variables(const Fo& f);     // every name, bound or free
std::set<std::string> free_variables(const Fo& f);
std::size_t distinct_vars(const Fo& f);
std::size_t quantifier_rank(const Fo& f);
std::set<std::string> predicates_of(const Fo& f);
std::set<std::string> predicates_of(const Tl& f);
/// True iff every binary predicate of f is allowed by the signature.
bool uses_only(const Fo& f, const Signature& signature);

enum class FragmentId : std::uint8_t {
  FOplus, FO2, FO2plus, FO3, FO3plus,
  Sigma2, Sigma2plus, Sigma2minus, Pi2, Pi2plus,
  LTL, LTLplus, TLplus, UTL, UTLplus, UTLplus_PFHG
};

std::string_view fragment_name(FragmentId id);
/// Accepts the names printed by fragment_name ("FO2plus", "UTLplus_PFHG", ...)
/// and the short forms "fo2+", "utl+", "ltl+", "sigma2-", ...
FragmentId parse_fragment(std::string_view name);
bool is_fo_fragment(FragmentId id);

/// Purely syntactic membership. FO fragments on a TL formula (and vice versa)
/// are false. The signature restricts binary predicates for FO fragments.
bool classify(const Fo& f, FragmentId fragment,
              const Signature& signature = Signature::all());
bool classify(const Tl& f, FragmentId fragment);

/// Removes XU / YS sugar: a XU b → X(a U b), a YS b → Y(a S b). Idempotent.
Tl desugar(const Tl& f);

/// Constant folding that preserves semantics on every word, including the
/// empty one (⊤ ∧ φ → φ, X ⊥ → ⊥, G ⊤ → ⊤, ...).
Tl simplify_constants(const Tl& f);
Fo simplify_constants(const Fo& f);

/// Swaps two variable names everywhere (bound and free occurrences).
Fo swap_variables(const Fo& f, const std::string& a, const std::string& b);

/// Negation normal form over the order predicates: ¬ is pushed to unary atoms,
/// negated binary atoms become their complements (¬(x<y) → y≤x, ¬succ →
/// ¬succ-atom, ...). Between atoms keep an explicit ¬.
Fo push_negations(const Fo& f);

}  // namespace poslog
