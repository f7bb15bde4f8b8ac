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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poslog/formulas.hpp"
#include "poslog/words.hpp"

namespace poslog {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

using State = std::uint32_t;

class Dfa;

/// Nondeterministic automaton over the powerset alphabet of its predicates.
class Nfa {
 public:
  struct Edge {
    Letter letter;
    State to;
  };

  explicit Nfa(PredicateSetPtr preds, std::size_t states = 0);

  const PredicateSet& predicates() const { return *preds_; }
  const PredicateSetPtr& predicates_ptr() const { return preds_; }
  std::size_t num_states() const { return edges_.size(); }
  const std::vector<State>& initial() const { return initial_; }
  bool accepting(State q) const { return accepting_[q]; }
  const std::vector<Edge>& edges(State q) const { return edges_[q]; }
  std::size_t num_transitions() const;

  State add_state(bool accepting = false);
  void set_initial(State q);
  void set_accepting(State q, bool value = true);
  /// Duplicate transitions are ignored.
  void add_transition(State from, Letter letter, State to);

  bool accepts(const Word& w) const;

 private:
  void check(State q) const;

  PredicateSetPtr preds_;
  std::vector<State> initial_;
  std::vector<bool> accepting_;
  std::vector<std::vector<Edge>> edges_;
};

/// Complete deterministic automaton.
class Dfa {
 public:
  /// All transitions initially lead to state 0.
  Dfa(PredicateSetPtr preds, std::size_t states, State initial = 0);

  const PredicateSet& predicates() const { return *preds_; }
  const PredicateSetPtr& predicates_ptr() const { return preds_; }
  std::size_t num_states() const { return accepting_.size(); }
  std::size_t alphabet_size() const { return alphabet_; }
  State initial() const { return initial_; }
  bool accepting(State q) const { return accepting_[q]; }
  State next(State q, Letter a) const { return delta_[q * alphabet_ + a.bits]; }

  void set_initial(State q) { initial_ = q; }
  void set_accepting(State q, bool value = true) { accepting_[q] = value; }
  void set_transition(State from, Letter a, State to) { delta_[from * alphabet_ + a.bits] = to; }

  State run(const Word& w) const;
  bool accepts(const Word& w) const { return accepting_[run(w)]; }
  Nfa to_nfa() const;

  friend bool operator==(const Dfa& a, const Dfa& b);

 private:
  PredicateSetPtr preds_;
  std::size_t alphabet_;
  State initial_;
  std::vector<bool> accepting_;
  std::vector<State> delta_;
};

// ---------------------------------------------------------------------------
// Standard operations.

Dfa determinize(const Nfa& n, std::size_t max_states = kDefaultStateCap);
/// Minimal complete DFA with states numbered in breadth-first order from the
/// initial state (letters in increasing order), so equal languages give
/// identical automata.
Dfa minimize(const Dfa& d);
Dfa complement(const Dfa& d);

enum class BoolOp { And, Or, AndNot, Xor };
Dfa product(const Dfa& a, const Dfa& b, BoolOp op,
            std::size_t max_states = kDefaultStateCap);
Dfa intersection(const Dfa& a, const Dfa& b);
Dfa union_of(const Dfa& a, const Dfa& b);

/// Shortest accepted word (length, then letter order), if any.
std::optional<Word> shortest_accepted(const Dfa& d);
std::optional<Word> shortest_accepted(const Nfa& n);
bool is_empty(const Dfa& d);
bool is_empty(const Nfa& n);
bool is_subset(const Dfa& a, const Dfa& b);
bool is_equiv(const Dfa& a, const Dfa& b);

Dfa universal_dfa(PredicateSetPtr preds);
Dfa empty_dfa(PredicateSetPtr preds);

// ---------------------------------------------------------------------------
// Closures and monotonicity.

/// Adds (q, b, q') for every transition (q, a, q') and b ⊇ a: recognizes L↑.
Nfa monotone_closure(const Nfa& n);
/// Adds (q, b, q') for b ⊆ a: recognizes L↓.
Nfa downward_closure(const Nfa& n);
/// Minimal DFA of ((L^c)↓)^c, the greatest monotone language inside L.
Dfa dual_closure(const Dfa& d, std::size_t max_states = kDefaultStateCap);
Dfa upward_closure_dfa(const Dfa& d, std::size_t max_states = kDefaultStateCap);

struct MonotonicityResult {
  bool monotone = true;
  // When not monotone: u ≤ v, u ∈ L, v ∉ L, shortest such pair.
  std::optional<Word> u;
  std::optional<Word> v;
};

/// Searches complement(D) × D↑ breadth-first for a pair u ≤ v with u ∈ L and
/// v ∉ L.
MonotonicityResult is_monotone_automaton(const Dfa& d);

// ---------------------------------------------------------------------------
// Formula compilation.

/// Minimal DFA of the sentence's language over `preds` (default: the
/// predicates occurring in the formula). Throws UsageError on free variables
/// or unknown predicates, ResourceError past the state cap.
Dfa compile_fo(const Fo& sentence, PredicateSetPtr preds = nullptr,
               std::size_t max_states = kDefaultStateCap);
/// Minimal DFA of {u : u ⊨ φ} under eval_ltl, including the empty-word
/// convention.
Dfa compile_tl(const Tl& f, PredicateSetPtr preds = nullptr,
               std::size_t max_states = kDefaultStateCap);

// ---------------------------------------------------------------------------
// Text format:
//   states: N
//   initial: i …
//   accepting: j …
//   predicates: a,b
//   trans: q {letter} q'
// Blank lines and lines starting with '#' are ignored.

Nfa parse_nfa(std::string_view text);
/// Rejects several initial states and non-total or nondeterministic
/// transition relations.
Dfa parse_dfa(std::string_view text);
std::string render_automaton(const Nfa& n);
std::string render_automaton(const Dfa& d);

}  // namespace poslog
