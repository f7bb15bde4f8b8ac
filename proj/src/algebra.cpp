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

#include "poslog/algebra.hpp"

#include <charconv>
#include <sstream>
#include <unordered_map>

#include "poslog/error.hpp"

namespace poslog {

namespace {

Letter letter_of(std::size_t bits) {
  return Letter{static_cast<std::uint16_t>(bits)};
}

}  // namespace

FiniteMonoid::FiniteMonoid(Unchecked, PredicateSetPtr preds, std::size_t size,
                           std::vector<Element> mult, Element identity,
                           std::vector<Element> morphism, std::vector<bool> accepting)
    : preds_(std::move(preds)),
      size_(size),
      mult_(std::move(mult)),
      identity_(identity),
      h_(std::move(morphism)),
      accepting_(std::move(accepting)) {
  compute_representatives();
}

FiniteMonoid::FiniteMonoid(PredicateSetPtr preds, std::size_t size,
                           std::vector<Element> mult, Element identity,
                           std::vector<Element> morphism, std::vector<bool> accepting)
    : preds_(std::move(preds)),
      size_(size),
      mult_(std::move(mult)),
      identity_(identity),
      h_(std::move(morphism)),
      accepting_(std::move(accepting)) {
  if (!preds_) throw UsageError("monoid without predicate set");
  if (size_ == 0) throw UsageError("a monoid has at least one element");
  if (mult_.size() != size_ * size_) throw UsageError("multiplication table has the wrong size");
  if (h_.size() != preds_->alphabet_size()) throw UsageError("morphism must map every letter");
  if (accepting_.size() != size_) throw UsageError("accepting set has the wrong size");
  auto in_range = [&](Element e) {
    if (e >= size_) throw UsageError("element " + std::to_string(e) + " out of range");
  };
  in_range(identity_);
  for (Element e : mult_) in_range(e);
  for (Element e : h_) in_range(e);
  for (Element a = 0; a < size_; ++a) {
    if (mul(identity_, a) != a || mul(a, identity_) != a) {
      throw UsageError("identity law fails for element " + std::to_string(a));
    }
  }
  for (Element a = 0; a < size_; ++a) {
    for (Element b = 0; b < size_; ++b) {
      for (Element c = 0; c < size_; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw UsageError("multiplication is not associative at (" + std::to_string(a) +
                           "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  compute_representatives();
}

void FiniteMonoid::compute_representatives() {
  reps_.assign(size_, std::nullopt);
  reps_[identity_] = Word(preds_);
  std::vector<Element> queue{identity_};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element m = queue[i];
    for (std::size_t a = 0; a < h_.size(); ++a) {
      Element n = mul(m, h_[a]);
      if (!reps_[n]) {
        Word w = *reps_[m];
        w.push_back(letter_of(a));
        reps_[n] = std::move(w);
        queue.push_back(n);
      }
    }
  }
}

Element FiniteMonoid::image(const Word& w) const {
  if (!(w.predicates() == *preds_)) {
    throw UsageError("word and monoid use different predicate sets");
  }
  Element m = identity_;
  for (Letter a : w.letters()) m = mul(m, h_[a.bits]);
  return m;
}

bool FiniteMonoid::is_surjective() const {
  for (const auto& r : reps_) {
    if (!r) return false;
  }
  return true;
}

bool operator==(const FiniteMonoid& a, const FiniteMonoid& b) {
  return *a.preds_ == *b.preds_ && a.size_ == b.size_ && a.mult_ == b.mult_ &&
         a.identity_ == b.identity_ && a.h_ == b.h_ && a.accepting_ == b.accepting_;
}

namespace {

struct TransformHash {
  std::size_t operator()(const std::vector<State>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (State s : v) h = (h ^ s) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace

FiniteMonoid transition_monoid(const Dfa& d, std::size_t max_elements) {
  const std::size_t states = d.num_states();
  const std::size_t alpha = d.alphabet_size();
  std::unordered_map<std::vector<State>, Element, TransformHash> index;
  std::vector<std::vector<State>> elems;
  std::vector<Element> parent;
  std::vector<Letter> via;
  std::vector<Element> right;  // right[e * alpha + a] = e·h(a)

  auto intern = [&](std::vector<State> f, Element from, Letter a) {
    auto [it, fresh] = index.try_emplace(f, static_cast<Element>(elems.size()));
    if (fresh) {
      if (elems.size() >= max_elements) {
        throw ResourceError("monoid exceeds the element cap of " +
                            std::to_string(max_elements));
      }
      elems.push_back(std::move(f));
      parent.push_back(from);
      via.push_back(a);
    }
    return it->second;
  };

  std::vector<State> id(states);
  for (State q = 0; q < states; ++q) id[q] = q;
  intern(id, 0, Letter{});
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t a = 0; a < alpha; ++a) {
      std::vector<State> g(states);
      for (State q = 0; q < states; ++q) g[q] = d.next(elems[i][q], letter_of(a));
      right.push_back(intern(std::move(g), static_cast<Element>(i), letter_of(a)));
    }
  }

  const std::size_t n = elems.size();
  // Word for each element from the parent chain; m·e follows e's letters.
  std::vector<std::vector<Letter>> word(n);
  for (Element e = 1; e < n; ++e) {
    word[e] = word[parent[e]];
    word[e].push_back(via[e]);
  }
  std::vector<Element> mult(n * n);
  for (Element m = 0; m < n; ++m) {
    for (Element e = 0; e < n; ++e) {
      Element r = m;
      for (Letter a : word[e]) r = right[r * alpha + a.bits];
      mult[m * n + e] = r;
    }
  }
  std::vector<Element> h(alpha);
  for (std::size_t a = 0; a < alpha; ++a) h[a] = right[a];
  std::vector<bool> acc(n);
  for (Element e = 0; e < n; ++e) acc[e] = d.accepting(elems[e][d.initial()]);
  return FiniteMonoid(FiniteMonoid::Unchecked{}, d.predicates_ptr(), n, std::move(mult), 0,
                      std::move(h), std::move(acc));
}

FiniteMonoid syntactic_monoid(const Dfa& d, std::size_t max_elements) {
  return transition_monoid(minimize(d), max_elements);
}

FiniteMonoid restrict_to_image(const FiniteMonoid& m) {
  // Breadth-first numbering from the identity, as in transition_monoid.
  const std::size_t alpha = m.predicates().alphabet_size();
  constexpr Element kNone = static_cast<Element>(-1);
  std::vector<Element> number(m.size(), kNone);
  std::vector<Element> order{m.identity()};
  number[m.identity()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < alpha; ++a) {
      Element e = m.mul(order[i], m.image(letter_of(a)));
      if (number[e] == kNone) {
        number[e] = static_cast<Element>(order.size());
        order.push_back(e);
      }
    }
  }
  const std::size_t n = order.size();
  std::vector<Element> mult(n * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) mult[i * n + j] = number[m.mul(order[i], order[j])];
  }
  std::vector<Element> h(alpha);
  for (std::size_t a = 0; a < alpha; ++a) h[a] = number[m.image(letter_of(a))];
  std::vector<bool> acc(n);
  for (Element i = 0; i < n; ++i) acc[i] = m.accepting(order[i]);
  return FiniteMonoid(m.predicates_ptr(), n, std::move(mult), 0, std::move(h), std::move(acc));
}

SyntacticOrder::SyntacticOrder(const FiniteMonoid& m) : size_(m.size()) {
  const std::size_t n = m.size();
  const std::size_t words = (n * n + 63) / 64;
  // contexts[e] has bit p*n+q set iff p·e·q is accepting.
  std::vector<std::vector<std::uint64_t>> contexts(n, std::vector<std::uint64_t>(words, 0));
  for (Element e = 0; e < n; ++e) {
    for (Element p = 0; p < n; ++p) {
      Element pe = m.mul(p, e);
      for (Element q = 0; q < n; ++q) {
        if (m.accepting(m.mul(pe, q))) {
          std::size_t bit = p * n + q;
          contexts[e][bit / 64] |= std::uint64_t{1} << (bit % 64);
        }
      }
    }
  }
  rel_.assign(n * n, false);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      bool sub = true;
      for (std::size_t w = 0; w < words && sub; ++w) {
        sub = (contexts[a][w] & ~contexts[b][w]) == 0;
      }
      rel_[a * n + b] = sub;
    }
  }
}

MonotonicityResult is_monotone_monoid(const FiniteMonoid& input) {
  const FiniteMonoid m = input.is_surjective() ? input : restrict_to_image(input);
  const std::size_t n = m.size();
  const std::size_t alpha = m.predicates().alphabet_size();
  const auto& reps = m.representatives();
  // Among all failures keep the one with the shortest witness.
  std::optional<std::size_t> best_len;
  MonotonicityResult result;
  for (std::size_t s = 0; s < alpha; ++s) {
    Element hs = m.image(letter_of(s));
    for (std::size_t t = 0; t < alpha; ++t) {
      if (s == t || (s & ~t) != 0) continue;
      Element ht = m.image(letter_of(t));
      if (hs == ht) continue;
      for (Element a = 0; a < n; ++a) {
        Element as = m.mul(a, hs), at = m.mul(a, ht);
        for (Element b = 0; b < n; ++b) {
          if (!m.accepting(m.mul(as, b)) || m.accepting(m.mul(at, b))) continue;
          std::size_t len = reps[a]->size() + 1 + reps[b]->size();
          if (best_len && *best_len <= len) continue;
          best_len = len;
          Word u = *reps[a], v = *reps[a];
          u.push_back(letter_of(s));
          v.push_back(letter_of(t));
          result.monotone = false;
          result.u = u.concat(*reps[b]);
          result.v = v.concat(*reps[b]);
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<Element> parse_elements(std::string_view s, std::size_t base) {
  std::vector<Element> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    Element v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc() ||
        (ptr != s.data() + s.size() && !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw SyntaxError("expected an element index", base + i);
    }
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

}  // namespace

FiniteMonoid parse_monoid(std::string_view text) {
  std::optional<std::size_t> size;
  std::optional<Element> identity;
  std::vector<Element> accepting;
  PredicateSetPtr preds;
  std::vector<Element> mult;
  std::vector<std::pair<std::string_view, std::size_t>> h_lines;
  std::size_t mult_rows = 0;
  bool in_mult = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const std::size_t start = pos;
    pos = end + 1;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::size_t colon = t.find(':');
    if (colon == std::string_view::npos) {
      if (!in_mult) throw SyntaxError("expected 'key: value'", start);
      if (!size) throw SyntaxError("'elements:' must precede 'mult:'", start);
      auto row = parse_elements(line, start);
      if (row.size() != *size) throw SyntaxError("multiplication row has the wrong length", start);
      mult.insert(mult.end(), row.begin(), row.end());
      ++mult_rows;
      continue;
    }
    in_mult = false;
    std::string_view key = trim(t.substr(0, colon));
    std::string_view value = t.substr(colon + 1);
    const std::size_t value_pos = start + static_cast<std::size_t>(value.data() - line.data());
    if (key == "elements") {
      auto v = parse_elements(value, value_pos);
      if (v.size() != 1) throw SyntaxError("expected one number", value_pos);
      size = v[0];
    } else if (key == "identity") {
      auto v = parse_elements(value, value_pos);
      if (v.size() != 1) throw SyntaxError("expected one element", value_pos);
      identity = v[0];
    } else if (key == "accepting") {
      accepting = parse_elements(value, value_pos);
    } else if (key == "predicates") {
      preds = PredicateSet::parse(trim(value));
    } else if (key == "mult") {
      in_mult = true;
    } else if (key == "h") {
      h_lines.emplace_back(value, value_pos);
    } else {
      throw SyntaxError("unknown key '" + std::string(key) + "'", start);
    }
  }
  if (!size) throw SyntaxError("missing 'elements:' line", text.size());
  if (!identity) throw SyntaxError("missing 'identity:' line", text.size());
  if (!preds) throw SyntaxError("missing 'predicates:' line", text.size());
  if (mult_rows != *size) throw SyntaxError("multiplication table needs one row per element", text.size());

  constexpr Element kNone = static_cast<Element>(-1);
  std::vector<Element> h(preds->alphabet_size(), kNone);
  for (auto [value, off] : h_lines) {
    std::size_t arrow = value.find("->");
    if (arrow == std::string_view::npos) throw SyntaxError("expected '{letter} -> element'", off);
    Letter l = parse_letter(trim(value.substr(0, arrow)), *preds);
    auto e = parse_elements(value.substr(arrow + 2), off + arrow + 2);
    if (e.size() != 1) throw SyntaxError("expected one element", off + arrow + 2);
    h[l.bits] = e[0];
  }
  for (std::size_t a = 0; a < h.size(); ++a) {
    if (h[a] == kNone) {
      throw UsageError("morphism undefined on " + render_letter(letter_of(a), *preds));
    }
  }
  std::vector<bool> acc(*size, false);
  for (Element e : accepting) {
    if (e >= *size) throw UsageError("element " + std::to_string(e) + " out of range");
    acc[e] = true;
  }
  return FiniteMonoid(preds, *size, std::move(mult), *identity, std::move(h), std::move(acc));
}

std::string render_monoid(const FiniteMonoid& m) {
  std::ostringstream os;
  os << "elements: " << m.size() << "\nidentity: " << m.identity() << "\naccepting:";
  for (Element e = 0; e < m.size(); ++e) {
    if (m.accepting(e)) os << ' ' << e;
  }
  os << "\npredicates: " << m.predicates().render() << "\nmult:\n";
  for (Element a = 0; a < m.size(); ++a) {
    for (Element b = 0; b < m.size(); ++b) os << (b ? " " : "") << m.mul(a, b);
    os << '\n';
  }
  for (std::size_t a = 0; a < m.predicates().alphabet_size(); ++a) {
    os << "h: " << render_letter(letter_of(a), m.predicates()) << " -> "
       << m.image(letter_of(a)) << '\n';
  }
  return os.str();
}

}  // namespace poslog
