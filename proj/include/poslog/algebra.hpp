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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "poslog/automata.hpp"
#include "poslog/words.hpp"

namespace poslog {

inline constexpr std::size_t kDefaultMonoidCap = 10'000;

using Element = std::uint32_t;

/// Finite monoid with a morphism from the powerset alphabet and an accepting
/// subset; recognizes h⁻¹(accepting).
class FiniteMonoid {
 public:
  /// Checks ranges, identity laws and associativity; throws UsageError.
  FiniteMonoid(PredicateSetPtr preds, std::size_t size, std::vector<Element> mult,
               Element identity, std::vector<Element> morphism,
               std::vector<bool> accepting);

  const PredicateSet& predicates() const { return *preds_; }
  const PredicateSetPtr& predicates_ptr() const { return preds_; }
  std::size_t size() const { return size_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mult_[a * size_ + b]; }
  Element image(Letter a) const { return h_[a.bits]; }
  Element image(const Word& w) const;
  bool accepting(Element m) const { return accepting_[m]; }
  bool accepts(const Word& w) const { return accepting_[image(w)]; }

  /// A shortest word mapped to each element; empty optional for elements
  /// outside h(A*).
  const std::vector<std::optional<Word>>& representatives() const { return reps_; }
  bool is_surjective() const;

  friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b);

 private:
  struct Unchecked {};
  FiniteMonoid(Unchecked, PredicateSetPtr preds, std::size_t size,
               std::vector<Element> mult, Element identity,
               std::vector<Element> morphism, std::vector<bool> accepting);
  void compute_representatives();

  friend FiniteMonoid transition_monoid(const Dfa&, std::size_t);

  PredicateSetPtr preds_;
  std::size_t size_;
  std::vector<Element> mult_;
  Element identity_;
  std::vector<Element> h_;
  std::vector<bool> accepting_;
  std::vector<std::optional<Word>> reps_;
};

/// Monoid of state transformations generated by the letters; element 0 is
/// the identity and elements are numbered in breadth-first order.
FiniteMonoid transition_monoid(const Dfa& d, std::size_t max_elements = kDefaultMonoidCap);
/// Transition monoid of the minimal DFA.
FiniteMonoid syntactic_monoid(const Dfa& d, std::size_t max_elements = kDefaultMonoidCap);
/// Submonoid generated by the letter images, renumbered from the identity.
FiniteMonoid restrict_to_image(const FiniteMonoid& m);

/// m ≤ n iff every context (p, q) with p·m·q accepting also accepts p·n·q.
class SyntacticOrder {
 public:
  explicit SyntacticOrder(const FiniteMonoid& m);

  std::size_t size() const { return size_; }
  bool leq(Element a, Element b) const { return rel_[a * size_ + b]; }

 private:
  std::size_t size_;
  std::vector<bool> rel_;
};

inline SyntacticOrder syntactic_order(const FiniteMonoid& m) { return SyntacticOrder(m); }

/// Letter-pair criterion: for all s ⊆ s' and all m, n in M,
/// m·h(s)·n accepting implies m·h(s')·n accepting. Restricts to the image of
/// h first. A failure carries the words rep(m)·s·rep(n) ≤ rep(m)·s'·rep(n).
MonotonicityResult is_monotone_monoid(const FiniteMonoid& m);

// Text format:
//   elements: N
//   identity: e
//   accepting: i j …
//   predicates: a,b
//   mult:
//   <N lines of N element indices>
//   h: {letter} -> element      (one line per letter)
FiniteMonoid parse_monoid(std::string_view text);
std::string render_monoid(const FiniteMonoid& m);

}  // namespace poslog
