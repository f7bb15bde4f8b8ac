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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "poslog/formulas.hpp"
#include "poslog/words.hpp"

namespace poslog {

/// Partial map from variable names to positions.
using Valuation = std::map<std::string, std::size_t>;

/// Reference evaluators. These follow the inductive definitions literally and
/// serve as the oracle for everything else.
bool eval_fo(const Word& u, const Valuation& nu, const Fo& f);
bool eval_tl_at(const Word& u, std::size_t i, const Tl& f);
/// Truth at position 0; on the empty word see eval_empty.
bool eval_ltl(const Word& u, const Tl& f);
/// Empty-word convention: ⊤ true, ⊥ false, atoms false, X/F/U/XU false,
/// G/R/H true, Y/P/S/YS false, Q true, Boolean connectives compositional.
bool eval_empty(const Tl& f);

using WordChecker = std::function<bool(const Word&)>;

struct EquivalenceResult {
  bool equivalent = true;
  std::optional<Word> counterexample;  // first in enumeration order
  std::uint64_t words_checked = 0;
};

EquivalenceResult equiv_bruteforce(const WordChecker& lhs, const WordChecker& rhs,
                                   PredicateSetPtr preds, std::size_t max_len,
                                   bool nonempty_only,
                                   std::uint64_t cap = kDefaultWordCap);

// ---------------------------------------------------------------------------
// Batch evaluation. A formula is evaluated at once on every model of a fixed
// finite family, giving one bit per model. Used by the exhaustive suites.

class BitTable {
 public:
  BitTable() = default;
  explicit BitTable(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  /// Up to 64 bits starting at `start`.
  std::uint64_t extract(std::size_t start, std::size_t count) const;
  bool none() const;
  std::size_t count() const;

  BitTable& operator&=(const BitTable& o);
  BitTable& operator|=(const BitTable& o);
  /// Complement within the table size.
  BitTable flipped() const;
  /// Result bit i = this bit i+1 (shift towards lower indices).
  BitTable shifted_down() const;
  /// Result bit i = this bit i−1.
  BitTable shifted_up() const;

  friend bool operator==(const BitTable& a, const BitTable& b) = default;
  friend BitTable operator&(BitTable a, const BitTable& b) { return a &= b; }
  friend BitTable operator|(BitTable a, const BitTable& b) { return a |= b; }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// All pairs (word, position) for the non-empty words of length ≤ max_len, in
/// enumeration order; bit index = offset(word) + position.
class PositionSpace {
 public:
  PositionSpace(PredicateSetPtr preds, std::size_t max_len);

  const std::vector<Word>& words() const { return words_; }
  std::size_t offset(std::size_t word_index) const { return offsets_[word_index]; }
  std::size_t bits() const { return total_; }

  /// Truth of f at every (word, position). Shared subterms are evaluated once.
  BitTable evaluate(const Tl& f) const;

 private:
  BitTable eval(const Tl& f, std::unordered_map<const void*, BitTable>& memo) const;

  PredicateSetPtr preds_;
  std::size_t max_len_;
  std::vector<Word> words_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  BitTable first_, last_, universe_;
  std::vector<BitTable> letter_has_;  // per predicate
};

/// All pairs (word, total valuation of `vars`) for the words of length in
/// [min_len, max_len]. Within a word of length ℓ the valuations form a block
/// of ℓ^|vars| consecutive bits; variable j is base-ℓ digit j (least
/// significant first).
class ModelSpace {
 public:
  ModelSpace(PredicateSetPtr preds, std::vector<std::string> vars,
             std::size_t min_len, std::size_t max_len);

  const std::vector<Word>& words() const { return words_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t offset(std::size_t word_index) const { return offsets_[word_index]; }
  std::size_t block_size(std::size_t word_index) const { return blocks_[word_index]; }
  std::size_t bits() const { return total_; }
  /// Index of `word` in words(), assuming it is in range.
  std::size_t index_of(const Word& word) const;
  std::size_t position_of(std::size_t word_index, std::size_t valuation,
                          std::size_t var) const;

  BitTable evaluate(const Fo& f) const;
  // Combinators for building tables bottom-up from children.
  BitTable constant(bool value) const;
  BitTable atom(const std::string& pred, const std::string& var) const;
  BitTable binary(const BinaryPredicate& p, const std::string& v1,
                  const std::string& v2) const;
  BitTable negate(const BitTable& t) const { return t.flipped(); }
  BitTable quantify(const BitTable& body, const std::string& var, bool exists) const;

 private:
  std::size_t var_index(const std::string& var) const;

  PredicateSetPtr preds_;
  std::vector<std::string> vars_;
  std::size_t min_len_;
  std::vector<Word> words_;
  std::vector<std::size_t> offsets_, blocks_;
  std::size_t total_ = 0;
};

}  // namespace poslog
