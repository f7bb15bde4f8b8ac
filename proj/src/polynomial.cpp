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

#include "poslog/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "poslog/error.hpp"

namespace poslog {

bool PolynomialExpr::matches(const Word& w) const {
  // reach[i]: the prefix read so far can end inside star block i.
  const std::size_t blocks = stars.size();
  auto in = [](const std::vector<Letter>& set, Letter l) {
    return std::find(set.begin(), set.end(), l) != set.end();
  };
  std::vector<bool> reach(blocks, false);
  reach[0] = true;
  for (Letter l : w.letters()) {
    std::vector<bool> next(blocks, false);
    for (std::size_t i = 0; i < blocks; ++i) {
      if (!reach[i]) continue;
      if (in(stars[i], l)) next[i] = true;
      if (i < singles.size() && singles[i] == l) next[i + 1] = true;
    }
    reach = std::move(next);
  }
  return reach[blocks - 1];
}

namespace {

void skip_separators(std::string_view text, std::size_t& pos) {
  while (pos < text.size() &&
         (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ';' ||
          text[pos] == '.')) {
    ++pos;
  }
}

std::size_t letter_end(std::string_view text, std::size_t pos) {
  if (text[pos] != '{') return pos + 1;  // T, 0, 1
  std::size_t close = text.find('}', pos);
  if (close == std::string_view::npos) throw SyntaxError("unterminated letter", pos);
  return close + 1;
}

}  // namespace

PolynomialExpr parse_polynomial(std::string_view text, PredicateSetPtr preds) {
  PolynomialExpr p;
  p.preds = preds;
  bool pending_star = false;  // a star block was read and awaits a single
  std::size_t pos = 0;
  skip_separators(text, pos);
  while (pos < text.size()) {
    const std::size_t start = pos;
    if (text[pos] == '(' || (text[pos] == 'A' && pos + 1 < text.size() && text[pos + 1] == '*')) {
      if (pending_star) throw SyntaxError("two star blocks in a row", start);
      std::vector<Letter> set;
      if (text[pos] == 'A') {
        set = all_letters(*preds);
        pos += 2;
      } else {
        ++pos;
        skip_separators(text, pos);
        while (pos < text.size() && text[pos] != ')') {
          std::size_t end = letter_end(text, pos);
          Letter l = parse_letter(text.substr(pos, end - pos), *preds);
          if (std::find(set.begin(), set.end(), l) == set.end()) set.push_back(l);
          pos = end;
          skip_separators(text, pos);
        }
        if (pos >= text.size()) throw SyntaxError("unterminated star block", start);
        ++pos;
        if (pos >= text.size() || text[pos] != '*') throw SyntaxError("expected '*'", pos);
        ++pos;
      }
      std::sort(set.begin(), set.end());
      p.stars.push_back(std::move(set));
      pending_star = true;
    } else {
      std::size_t end = letter_end(text, pos);
      Letter l = parse_letter(text.substr(pos, end - pos), *preds);
      if (!pending_star) p.stars.emplace_back();
      p.singles.push_back(l);
      pending_star = false;
      pos = end;
    }
    skip_separators(text, pos);
  }
  if (!pending_star) p.stars.emplace_back();
  return p;
}

std::string render_polynomial(const PolynomialExpr& p) {
  auto star = [&](const std::vector<Letter>& set) {
    if (set.size() == p.preds->alphabet_size()) return std::string("A*");
    std::string out = "(";
    for (Letter l : set) out += render_letter(l, *p.preds);
    return out + ")*";
  };
  std::string out = star(p.stars[0]);
  for (std::size_t i = 0; i < p.singles.size(); ++i) {
    out += " " + render_letter(p.singles[i], *p.preds) + " " + star(p.stars[i + 1]);
  }
  return out;
}

namespace {

// Letter constraint at variable v: upward means "contains l", downward means
// "contained in l".
Fo letter_condition(Letter l, const PredicateSet& preds, const std::string& v, bool upward) {
  std::vector<Fo> parts;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (l.contains(i) == upward) {
      Fo atom = Fo::atom(preds.name(i), v);
      parts.push_back(upward ? atom : Fo::negate(atom));
    }
  }
  return Fo::conj_all(parts);
}

Fo set_condition(const std::vector<Letter>& set, const PredicateSet& preds,
                 const std::string& v, bool upward) {
  std::vector<Fo> parts;
  for (Letter l : set) parts.push_back(letter_condition(l, preds, v, upward));
  return Fo::disj_all(parts);
}

Fo sigma2_closure(const PolynomialExpr& p, bool upward) {
  const PredicateSet& preds = *p.preds;
  const std::size_t t1 = p.singles.size();  // t + 1
  const std::string y = "y";
  auto x = [](std::size_t i) { return "x" + std::to_string(i); };
  if (t1 == 0) return Fo::forall(y, set_condition(p.stars[0], preds, y, upward));
  std::vector<Fo> matrix;
  for (std::size_t i = 1; i < t1; ++i) matrix.push_back(Fo::bin(BinKind::Lt, x(i - 1), x(i)));
  for (std::size_t i = 0; i < t1; ++i) {
    matrix.push_back(letter_condition(p.singles[i], preds, x(i), upward));
  }
  for (std::size_t i = 0; i <= t1; ++i) {
    // y strictly between x_{i-1} and x_i (open-ended at the borders) ⇒ A_i(y).
    std::vector<Fo> outside;
    if (i > 0) outside.push_back(Fo::bin(BinKind::Le, y, x(i - 1)));
    if (i < t1) outside.push_back(Fo::bin(BinKind::Le, x(i), y));
    outside.push_back(set_condition(p.stars[i], preds, y, upward));
    matrix.push_back(Fo::disj_all(outside));
  }
  Fo f = Fo::forall(y, Fo::conj_all(matrix));
  for (std::size_t i = t1; i-- > 0;) f = Fo::exists(x(i), f);
  return f;
}

}  // namespace

Fo sigma2p_upward_closure(const PolynomialExpr& p) { return sigma2_closure(p, true); }
Fo sigma2m_downward_closure(const PolynomialExpr& p) { return sigma2_closure(p, false); }

Fo pi2p_dual_closure(const PolynomialExpr& pc) {
  return push_negations(Fo::negate(sigma2m_downward_closure(pc)));
}

}  // namespace poslog
