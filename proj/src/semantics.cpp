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

#include "poslog/semantics.hpp"

#include <bit>

#include "poslog/error.hpp"

namespace poslog {

namespace {

std::size_t predicate_index(const PredicateSet& preds, const std::string& name) {
  auto idx = preds.index_of(name);
  if (!idx) throw UsageError("predicate '" + name + "' is not in " + preds.render());
  return *idx;
}

bool eval_fo_rec(const Word& u, Valuation& nu, const Fo& f) {
  auto pos = [&](const std::string& v) {
    auto it = nu.find(v);
    if (it == nu.end()) throw UsageError("variable '" + v + "' is unbound");
    return it->second;
  };
  switch (f.kind()) {
    case FoKind::True: return true;
    case FoKind::False: return false;
    case FoKind::Atom:
      return u[pos(f.var())].contains(predicate_index(u.predicates(), f.pred()));
    case FoKind::Bin:
      return f.bin_pred().holds(pos(f.var()), pos(f.var2()), u.letters(), u.predicates());
    case FoKind::Not: return !eval_fo_rec(u, nu, f.lhs());
    case FoKind::And: return eval_fo_rec(u, nu, f.lhs()) && eval_fo_rec(u, nu, f.rhs());
    case FoKind::Or: return eval_fo_rec(u, nu, f.lhs()) || eval_fo_rec(u, nu, f.rhs());
    case FoKind::Exists:
    case FoKind::Forall: {
      const bool exists = f.kind() == FoKind::Exists;
      std::optional<std::size_t> saved;
      if (auto it = nu.find(f.var()); it != nu.end()) saved = it->second;
      bool result = !exists;
      for (std::size_t i = 0; i < u.size(); ++i) {
        nu[f.var()] = i;
        if (eval_fo_rec(u, nu, f.body()) == exists) {
          result = exists;
          break;
        }
      }
      if (saved) {
        nu[f.var()] = *saved;
      } else {
        nu.erase(f.var());
      }
      return result;
    }
  }
  return false;
}

}  // namespace

bool eval_fo(const Word& u, const Valuation& nu, const Fo& f) {
  for (const auto& [var, p] : nu) {
    if (p >= u.size()) {
      throw UsageError("variable '" + var + "' is assigned position " + std::to_string(p) +
                       " outside a word of length " + std::to_string(u.size()));
    }
  }
  Valuation copy = nu;
  return eval_fo_rec(u, copy, f);
}

bool eval_tl_at(const Word& u, std::size_t i, const Tl& f) {
  const std::size_t n = u.size();
  if (i >= n) {
    throw UsageError("position " + std::to_string(i) + " outside a word of length " +
                     std::to_string(n));
  }
  auto at = [&](const Tl& g, std::size_t j) { return eval_tl_at(u, j, g); };
  const Tl& a = f.lhs();
  const Tl& b = f.rhs();
  switch (f.kind()) {
    case TlKind::True: return true;
    case TlKind::False: return false;
    case TlKind::Atom: return u[i].contains(predicate_index(u.predicates(), f.pred()));
    case TlKind::Not: return !at(a, i);
    case TlKind::And: return at(a, i) && at(b, i);
    case TlKind::Or: return at(a, i) || at(b, i);
    case TlKind::X: return i + 1 < n && at(a, i + 1);
    case TlKind::Y: return i > 0 && at(a, i - 1);
    case TlKind::F:
      for (std::size_t j = i + 1; j < n; ++j) {
        if (at(a, j)) return true;
      }
      return false;
    case TlKind::G:
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!at(a, j)) return false;
      }
      return true;
    case TlKind::P:
      for (std::size_t j = 0; j < i; ++j) {
        if (at(a, j)) return true;
      }
      return false;
    case TlKind::H:
      for (std::size_t j = 0; j < i; ++j) {
        if (!at(a, j)) return false;
      }
      return true;
    case TlKind::U:
      for (std::size_t j = i; j < n; ++j) {
        if (at(b, j)) return true;
        if (!at(a, j)) return false;
      }
      return false;
    case TlKind::R:
      // ψ until φ∧ψ, or ψ forever.
      for (std::size_t j = i; j < n; ++j) {
        if (!at(b, j)) return false;
        if (at(a, j)) return true;
      }
      return true;
    case TlKind::S:
      for (std::size_t j = i + 1; j-- > 0;) {
        if (at(b, j)) return true;
        if (!at(a, j)) return false;
      }
      return false;
    case TlKind::Q:
      for (std::size_t j = i + 1; j-- > 0;) {
        if (!at(b, j)) return false;
        if (at(a, j)) return true;
      }
      return true;
    case TlKind::XU:
      return i + 1 < n && at(Tl::binary(TlKind::U, a, b), i + 1);
    case TlKind::YS:
      return i > 0 && at(Tl::binary(TlKind::S, a, b), i - 1);
  }
  return false;
}

bool eval_empty(const Tl& f) {
  switch (f.kind()) {
    case TlKind::True: return true;
    case TlKind::False: return false;
    case TlKind::Atom: return false;
    case TlKind::Not: return !eval_empty(f.lhs());
    case TlKind::And: return eval_empty(f.lhs()) && eval_empty(f.rhs());
    case TlKind::Or: return eval_empty(f.lhs()) || eval_empty(f.rhs());
    case TlKind::X: case TlKind::F: case TlKind::U: case TlKind::XU:
    case TlKind::Y: case TlKind::P: case TlKind::S: case TlKind::YS:
      return false;
    case TlKind::G: case TlKind::R: case TlKind::H: case TlKind::Q:
      return true;
  }
  return false;
}

bool eval_ltl(const Word& u, const Tl& f) {
  return u.empty() ? eval_empty(f) : eval_tl_at(u, 0, f);
}

EquivalenceResult equiv_bruteforce(const WordChecker& lhs, const WordChecker& rhs,
                                   PredicateSetPtr preds, std::size_t max_len,
                                   bool nonempty_only, std::uint64_t cap) {
  EquivalenceResult result;
  WordEnumerator en(preds, max_len, cap);
  Word w(preds);
  while (en.next(w)) {
    if (nonempty_only && w.empty()) continue;
    ++result.words_checked;
    if (lhs(w) != rhs(w)) {
      result.equivalent = false;
      result.counterexample = w;
      return result;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// BitTable

std::uint64_t BitTable::extract(std::size_t start, std::size_t count) const {
  if (count == 0) return 0;
  const std::size_t w = start >> 6, off = start & 63;
  std::uint64_t v = words_[w] >> off;
  if (off + count > 64 && w + 1 < words_.size()) v |= words_[w + 1] << (64 - off);
  return count == 64 ? v : v & ((std::uint64_t{1} << count) - 1);
}

bool BitTable::none() const {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

std::size_t BitTable::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitTable& BitTable::operator&=(const BitTable& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

BitTable& BitTable::operator|=(const BitTable& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

BitTable BitTable::flipped() const {
  BitTable r = *this;
  for (auto& w : r.words_) w = ~w;
  if (bits_ & 63) r.words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
  return r;
}

BitTable BitTable::shifted_down() const {
  BitTable r(bits_);
  const std::size_t n = words_.size();
  for (std::size_t i = 0; i < n; ++i) {
    r.words_[i] = words_[i] >> 1;
    if (i + 1 < n) r.words_[i] |= words_[i + 1] << 63;
  }
  return r;
}

BitTable BitTable::shifted_up() const {
  BitTable r(bits_);
  const std::size_t n = words_.size();
  for (std::size_t i = 0; i < n; ++i) {
    r.words_[i] = words_[i] << 1;
    if (i > 0) r.words_[i] |= words_[i - 1] >> 63;
  }
  if (bits_ & 63) r.words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
  return r;
}

// ---------------------------------------------------------------------------
// PositionSpace

PositionSpace::PositionSpace(PredicateSetPtr preds, std::size_t max_len)
    : preds_(std::move(preds)), max_len_(max_len) {
  for (Word& w : enumerate_words(preds_, max_len)) {
    if (w.empty()) continue;
    offsets_.push_back(total_);
    total_ += w.size();
    words_.push_back(std::move(w));
  }
  first_ = last_ = BitTable(total_);
  letter_has_.assign(preds_->size(), BitTable(total_));
  for (std::size_t k = 0; k < words_.size(); ++k) {
    const Word& w = words_[k];
    first_.set(offsets_[k]);
    last_.set(offsets_[k] + w.size() - 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t p = 0; p < preds_->size(); ++p) {
        if (w[i].contains(p)) letter_has_[p].set(offsets_[k] + i);
      }
    }
  }
  universe_ = BitTable(total_).flipped();
}

BitTable PositionSpace::evaluate(const Tl& f) const {
  std::unordered_map<const void*, BitTable> memo;
  return eval(f, memo);
}

BitTable PositionSpace::eval(const Tl& f,
                             std::unordered_map<const void*, BitTable>& memo) const {
  if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
  const BitTable not_last = last_.flipped();
  const BitTable not_first = first_.flipped();
  auto next = [&](const BitTable& t) { return t.shifted_down() & not_last; };
  auto prev = [&](const BitTable& t) { return t.shifted_up() & not_first; };
  BitTable r;
  switch (f.kind()) {
    case TlKind::True: r = universe_; break;
    case TlKind::False: r = BitTable(total_); break;
    case TlKind::Atom: r = letter_has_[predicate_index(*preds_, f.pred())]; break;
    case TlKind::Not: r = eval(f.lhs(), memo).flipped(); break;
    case TlKind::And: r = eval(f.lhs(), memo) & eval(f.rhs(), memo); break;
    case TlKind::Or: r = eval(f.lhs(), memo) | eval(f.rhs(), memo); break;
    case TlKind::X: r = next(eval(f.lhs(), memo)); break;
    case TlKind::Y: r = prev(eval(f.lhs(), memo)); break;
    case TlKind::F:
    case TlKind::G:
    case TlKind::P:
    case TlKind::H: {
      const BitTable a = eval(f.lhs(), memo);
      const bool future = f.kind() == TlKind::F || f.kind() == TlKind::G;
      const bool always = f.kind() == TlKind::G || f.kind() == TlKind::H;
      const BitTable& edge = future ? last_ : first_;
      r = always ? universe_ : BitTable(total_);
      for (std::size_t step = 0; step < max_len_; ++step) {
        BitTable step_in = always ? (a & r) : (a | r);
        r = future ? next(step_in) : prev(step_in);
        if (always) r |= edge;
      }
      break;
    }
    case TlKind::U:
    case TlKind::S:
    case TlKind::XU:
    case TlKind::YS: {
      const BitTable a = eval(f.lhs(), memo);
      const BitTable b = eval(f.rhs(), memo);
      const bool future = f.kind() == TlKind::U || f.kind() == TlKind::XU;
      r = b;
      for (std::size_t step = 0; step < max_len_; ++step) {
        r = b | (a & (future ? next(r) : prev(r)));
      }
      if (f.kind() == TlKind::XU) r = next(r);
      if (f.kind() == TlKind::YS) r = prev(r);
      break;
    }
    case TlKind::R:
    case TlKind::Q: {
      const BitTable a = eval(f.lhs(), memo);
      const BitTable b = eval(f.rhs(), memo);
      const bool future = f.kind() == TlKind::R;
      const BitTable& edge = future ? last_ : first_;
      r = b;
      for (std::size_t step = 0; step < max_len_; ++step) {
        r = b & (a | edge | (future ? next(r) : prev(r)));
      }
      break;
    }
  }
  memo.emplace(f.identity(), r);
  return r;
}

// ---------------------------------------------------------------------------
// ModelSpace

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

ModelSpace::ModelSpace(PredicateSetPtr preds, std::vector<std::string> vars,
                       std::size_t min_len, std::size_t max_len)
    : preds_(std::move(preds)), vars_(std::move(vars)), min_len_(min_len) {
  for (Word& w : enumerate_words(preds_, max_len)) {
    if (w.size() < min_len) continue;
    offsets_.push_back(total_);
    blocks_.push_back(ipow(w.size(), vars_.size()));
    total_ += blocks_.back();
    words_.push_back(std::move(w));
  }
}

std::size_t ModelSpace::index_of(const Word& word) const {
  std::size_t idx = 0;
  const std::size_t a = preds_->alphabet_size();
  for (std::size_t len = min_len_; len < word.size(); ++len) idx += ipow(a, len);
  std::size_t rank = 0;
  for (Letter l : word.letters()) rank = rank * a + l.bits;
  return idx + rank;
}

std::size_t ModelSpace::position_of(std::size_t word_index, std::size_t valuation,
                                    std::size_t var) const {
  const std::size_t len = words_[word_index].size();
  return (valuation / ipow(len, var)) % len;
}

std::size_t ModelSpace::var_index(const std::string& var) const {
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    if (vars_[j] == var) return j;
  }
  throw UsageError("variable '" + var + "' is not part of the model space");
}

BitTable ModelSpace::constant(bool value) const {
  BitTable t(total_);
  return value ? t.flipped() : t;
}

BitTable ModelSpace::atom(const std::string& pred, const std::string& var) const {
  const std::size_t p = predicate_index(*preds_, pred);
  const std::size_t j = var_index(var);
  BitTable t(total_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::size_t v = 0; v < blocks_[w]; ++v) {
      if (words_[w][position_of(w, v, j)].contains(p)) t.set(offsets_[w] + v);
    }
  }
  return t;
}

BitTable ModelSpace::binary(const BinaryPredicate& pred, const std::string& v1,
                            const std::string& v2) const {
  const std::size_t j1 = var_index(v1), j2 = var_index(v2);
  BitTable t(total_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::size_t v = 0; v < blocks_[w]; ++v) {
      if (pred.holds(position_of(w, v, j1), position_of(w, v, j2), words_[w].letters(),
                     *preds_)) {
        t.set(offsets_[w] + v);
      }
    }
  }
  return t;
}

BitTable ModelSpace::quantify(const BitTable& body, const std::string& var,
                              bool exists) const {
  const std::size_t j = var_index(var);
  BitTable t(total_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::size_t len = words_[w].size();
    const std::size_t stride = ipow(len, j);
    for (std::size_t v = 0; v < blocks_[w]; ++v) {
      const std::size_t base = v - ((v / stride) % len) * stride;
      bool r = !exists;
      for (std::size_t d = 0; d < len; ++d) {
        if (body.test(offsets_[w] + base + d * stride) == exists) {
          r = exists;
          break;
        }
      }
      if (r) t.set(offsets_[w] + v);
    }
  }
  return t;
}

BitTable ModelSpace::evaluate(const Fo& f) const {
  switch (f.kind()) {
    case FoKind::True: return constant(true);
    case FoKind::False: return constant(false);
    case FoKind::Atom: return atom(f.pred(), f.var());
    case FoKind::Bin: return binary(f.bin_pred(), f.var(), f.var2());
    case FoKind::Not: return evaluate(f.lhs()).flipped();
    case FoKind::And: return evaluate(f.lhs()) & evaluate(f.rhs());
    case FoKind::Or: return evaluate(f.lhs()) | evaluate(f.rhs());
    case FoKind::Exists: return quantify(evaluate(f.body()), f.var(), true);
    case FoKind::Forall: return quantify(evaluate(f.body()), f.var(), false);
  }
  return constant(false);
}

}  // namespace poslog
