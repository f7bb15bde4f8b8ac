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

#include "poslog/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "poslog/error.hpp"

namespace poslog {
namespace {

bool valid_predicate_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}' ||
        c == ',' || c == '(' || c == ')') {
      return false;
    }
  }
  return true;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@' ||
         c == '#';
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
}

// Parses one letter starting at `pos`; advances `pos` past it.
Letter parse_letter_at(std::string_view text, std::size_t& pos,
                       const PredicateSet& preds) {
  skip_space(text, pos);
  if (pos >= text.size()) throw SyntaxError("expected a letter", pos);
  char c = text[pos];
  if (c == 'T') {
    ++pos;
    return preds.full_letter();
  }
  if ((c == '0' || c == '1') && preds.size() == 1) {
    ++pos;
    return c == '1' ? Letter{1} : Letter{0};
  }
  if (c != '{') throw SyntaxError("expected '{'", pos);
  ++pos;
  Letter letter;
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
    return letter;
  }
  while (true) {
    skip_space(text, pos);
    std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    if (start == pos) throw SyntaxError("expected a predicate name", pos);
    std::string_view name = text.substr(start, pos - start);
    auto index = preds.index_of(name);
    if (!index) {
      throw SyntaxError("unknown predicate '" + std::string(name) + "'", start);
    }
    letter = letter.with(*index);
    skip_space(text, pos);
    if (pos >= text.size()) throw SyntaxError("unterminated letter", pos);
    if (text[pos] == '}') {
      ++pos;
      return letter;
    }
    if (text[pos] != ',') throw SyntaxError("expected ',' or '}'", pos);
    ++pos;
  }
}

}  // namespace

PredicateSet::PredicateSet(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.size() > kMaxPredicates) {
    throw UsageError("at most " + std::to_string(kMaxPredicates) +
                     " predicates are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_predicate_name(n)) {
      throw UsageError("invalid predicate name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw UsageError("duplicate predicate name '" + n + "'");
    }
  }
}

std::shared_ptr<const PredicateSet> PredicateSet::make(
    std::vector<std::string> names) {
  return std::make_shared<const PredicateSet>(std::move(names));
}

std::shared_ptr<const PredicateSet> PredicateSet::parse(std::string_view text) {
  std::vector<std::string> names;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
      item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
      item.remove_suffix(1);
    if (!item.empty()) names.emplace_back(item);
    pos = comma + 1;
  }
  return make(std::move(names));
}

std::optional<std::size_t> PredicateSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::string PredicateSet::render() const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ',';
    out += names_[i];
  }
  return out;
}

std::vector<Letter> all_letters(const PredicateSet& preds) {
  std::vector<Letter> out;
  out.reserve(preds.alphabet_size());
  for (std::size_t m = 0; m < preds.alphabet_size(); ++m) {
    out.push_back(Letter{static_cast<std::uint16_t>(m)});
  }
  return out;
}

Word::Word(PredicateSetPtr preds, std::vector<Letter> letters)
    : preds_(std::move(preds)), letters_(std::move(letters)) {
  if (!preds_) throw UsageError("word without a predicate set");
  const auto full = preds_->full_letter().bits;
  for (Letter l : letters_) {
    if ((l.bits & ~full) != 0) throw UsageError("letter outside the alphabet");
  }
}

Word Word::concat(const Word& other) const {
  if (*preds_ != *other.preds_) {
    throw UsageError("cannot concatenate words over different predicate sets");
  }
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), other.letters_.begin(), other.letters_.end());
  return Word(preds_, std::move(letters));
}

Word Word::repeat(std::size_t times) const {
  std::vector<Letter> letters;
  letters.reserve(letters_.size() * times);
  for (std::size_t i = 0; i < times; ++i) {
    letters.insert(letters.end(), letters_.begin(), letters_.end());
  }
  return Word(preds_, std::move(letters));
}

Word Word::prefix(std::size_t length) const {
  length = std::min(length, letters_.size());
  return Word(preds_, std::vector<Letter>(letters_.begin(),
                                          letters_.begin() + length));
}

bool word_leq(const Word& u, const Word& v) {
  if (u.predicates() != v.predicates()) {
    throw UsageError("word_leq: words over different predicate sets");
  }
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!letter_leq(u[i], v[i])) return false;
  }
  return true;
}

Letter parse_letter(std::string_view text, const PredicateSet& preds) {
  std::size_t pos = 0;
  Letter l = parse_letter_at(text, pos, preds);
  skip_space(text, pos);
  if (pos != text.size()) throw SyntaxError("trailing input after letter", pos);
  return l;
}

Word parse_word(std::string_view text, PredicateSetPtr preds) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  skip_space(text, pos);
  while (pos < text.size()) {
    letters.push_back(parse_letter_at(text, pos, *preds));
    skip_space(text, pos);
  }
  return Word(std::move(preds), std::move(letters));
}

std::string render_letter(Letter letter, const PredicateSet& preds) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (!letter.contains(i)) continue;
    if (!first) out += ',';
    out += preds.name(i);
    first = false;
  }
  out += '}';
  return out;
}

std::string render_word(const Word& word) {
  std::string out;
  for (Letter l : word.letters()) out += render_letter(l, word.predicates());
  return out;
}

std::string render_word_binary(const Word& word) {
  if (word.predicates().size() != 1) {
    throw UsageError("binary rendering needs exactly one predicate");
  }
  std::string out;
  for (Letter l : word.letters()) out += l.bits ? '1' : '0';
  return out;
}

std::uint64_t word_count(std::size_t num_predicates, std::size_t max_len) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t alphabet = std::uint64_t{1} << num_predicates;
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (total > kMax - layer) return kMax;
    total += layer;
    if (len < max_len) {
      if (layer > kMax / alphabet) return kMax;
      layer *= alphabet;
    }
  }
  return total;
}

WordEnumerator::WordEnumerator(PredicateSetPtr preds, std::size_t max_len,
                               std::uint64_t cap)
    : preds_(std::move(preds)),
      max_len_(max_len),
      count_(word_count(preds_->size(), max_len)) {
  if (count_ > cap) {
    throw ResourceError("word enumeration of " + std::to_string(count_) +
                        " words exceeds the cap of " + std::to_string(cap));
  }
}

bool WordEnumerator::next(Word& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    // Increment the letter vector as a base-|A| counter; on overflow grow.
    const std::uint16_t top = preds_->full_letter().bits;
    std::size_t i = current_.size();
    while (i > 0) {
      --i;
      if (current_[i].bits < top) {
        ++current_[i].bits;
        break;
      }
      current_[i].bits = 0;
      if (i == 0) {
        if (current_.size() == max_len_) {
          done_ = true;
          return false;
        }
        current_.assign(current_.size() + 1, Letter{0});
        break;
      }
    }
    if (current_.empty()) {
      if (max_len_ == 0) {
        done_ = true;
        return false;
      }
      current_.assign(1, Letter{0});
    }
  }
  out = Word(preds_, current_);
  return true;
}

std::vector<Word> enumerate_words(PredicateSetPtr preds, std::size_t max_len,
                                  std::uint64_t cap) {
  WordEnumerator en(preds, max_len, cap);
  std::vector<Word> out;
  out.reserve(en.count());
  Word w(preds);
  while (en.next(w)) out.push_back(w);
  return out;
}

namespace {

void for_each_comparable(const Word& u, bool above,
                         const std::function<void(const Word&)>& fn) {
  const std::uint16_t full = u.predicates().full_letter().bits;
  std::vector<Letter> cur(u.letters().begin(), u.letters().end());
  // Free bits per position: bits we may add (above) or drop (below).
  std::vector<std::uint16_t> free(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    free[i] = above ? static_cast<std::uint16_t>(full & ~u[i].bits) : u[i].bits;
  }
  // Iterate over all submasks of each free mask, odometer style.
  std::vector<std::uint16_t> sub(u.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      cur[i].bits = above ? static_cast<std::uint16_t>(u[i].bits | sub[i])
                          : static_cast<std::uint16_t>(u[i].bits & ~sub[i]);
    }
    fn(Word(u.predicates_ptr(), cur));
    std::size_t i = 0;
    for (; i < u.size(); ++i) {
      if (sub[i] == free[i]) {
        sub[i] = 0;
        continue;
      }
      sub[i] = static_cast<std::uint16_t>((sub[i] - free[i]) & free[i]);
      break;
    }
    if (i == u.size()) return;
  }
}

}  // namespace

void for_each_word_above(const Word& u,
                         const std::function<void(const Word&)>& fn) {
  for_each_comparable(u, true, fn);
}

void for_each_word_below(const Word& u,
                         const std::function<void(const Word&)>& fn) {
  for_each_comparable(u, false, fn);
}

}  // namespace poslog
