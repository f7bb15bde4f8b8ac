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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace poslog {

inline constexpr std::size_t kMaxPredicates = 16;
inline constexpr std::uint64_t kDefaultWordCap = 50'000'000;

/// A letter of the powerset alphabet 2^Σ, stored as a bit mask indexed by
/// the position of each predicate in its PredicateSet.
struct Letter {
  std::uint16_t bits = 0;

  constexpr bool contains(std::size_t predicate) const {
    return (bits >> predicate) & 1u;
  }
  constexpr Letter with(std::size_t predicate) const {
    return Letter{static_cast<std::uint16_t>(bits | (1u << predicate))};
  }
  constexpr std::size_t popcount() const {
    return static_cast<std::size_t>(__builtin_popcount(bits));
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// Subset inclusion of letters; the order underlying ≤ on words.
constexpr bool letter_leq(Letter s, Letter t) {
  return (s.bits & ~t.bits) == 0;
}

/// Ordered list of distinct unary predicate names. The index of a name is
/// its bit in every Letter over this set.
class PredicateSet {
 public:
  PredicateSet() = default;
  explicit PredicateSet(std::vector<std::string> names);

  static std::shared_ptr<const PredicateSet> make(
      std::vector<std::string> names);
  /// Comma-separated list, e.g. "a,b,c".
  static std::shared_ptr<const PredicateSet> parse(std::string_view text);

  std::size_t size() const { return names_.size(); }
  std::size_t alphabet_size() const { return std::size_t{1} << names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  Letter full_letter() const {
    return Letter{static_cast<std::uint16_t>(alphabet_size() - 1)};
  }
  std::string render() const;

  friend bool operator==(const PredicateSet&, const PredicateSet&) = default;

 private:
  std::vector<std::string> names_;
};

using PredicateSetPtr = std::shared_ptr<const PredicateSet>;

/// Every letter of 2^Σ in increasing mask order.
std::vector<Letter> all_letters(const PredicateSet& preds);

class Word {
 public:
  explicit Word(PredicateSetPtr preds, std::vector<Letter> letters = {});

  const PredicateSet& predicates() const { return *preds_; }
  const PredicateSetPtr& predicates_ptr() const { return preds_; }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  Word concat(const Word& other) const;
  Word repeat(std::size_t times) const;
  Word prefix(std::size_t length) const;

  friend bool operator==(const Word& u, const Word& v) {
    return *u.preds_ == *v.preds_ && u.letters_ == v.letters_;
  }

 private:
  PredicateSetPtr preds_;
  std::vector<Letter> letters_;
};

/// u ≤ v: same length and pointwise letter inclusion. Throws UsageError when
/// the predicate sets differ.
bool word_leq(const Word& u, const Word& v);

Letter parse_letter(std::string_view text, const PredicateSet& preds);
Word parse_word(std::string_view text, PredicateSetPtr preds);
std::string render_letter(Letter letter, const PredicateSet& preds);
std::string render_word(const Word& word);
/// 0/1 rendering for single-predicate words; throws UsageError otherwise.
std::string render_word_binary(const Word& word);

/// Σ_{ℓ ≤ max_len} (2^num_predicates)^ℓ, saturating at UINT64_MAX.
std::uint64_t word_count(std::size_t num_predicates, std::size_t max_len);

/// Streams every word of length ≤ max_len once, length first then
/// lexicographically by letter mask.
class WordEnumerator {
 public:
  WordEnumerator(PredicateSetPtr preds, std::size_t max_len,
                 std::uint64_t cap = kDefaultWordCap);

  std::uint64_t count() const { return count_; }
  /// Writes the next word into `out`; false once exhausted.
  bool next(Word& out);

 private:
  PredicateSetPtr preds_;
  std::size_t max_len_;
  std::uint64_t count_;
  std::vector<Letter> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Word> enumerate_words(PredicateSetPtr preds, std::size_t max_len,
                                  std::uint64_t cap = kDefaultWordCap);

/// Calls `fn` on every word v with u ≤ v (resp. v ≤ u for the down variant).
void for_each_word_above(const Word& u, const std::function<void(const Word&)>& fn);
void for_each_word_below(const Word& u, const std::function<void(const Word&)>& fn);

}  // namespace poslog
