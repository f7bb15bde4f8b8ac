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

#include <string>
#include <string_view>
#include <vector>

#include "poslog/formulas.hpp"
#include "poslog/words.hpp"

namespace poslog {

/// The language A₀* s₀ A₁* s₁ … s_t A_{t+1}*. With no s_i it is A₀*.
/// An empty A_i contributes only the empty word.
struct PolynomialExpr {
  PredicateSetPtr preds;
  std::vector<std::vector<Letter>> stars;  // A₀ … A_{t+1}; singles.size() + 1 entries
  std::vector<Letter> singles;             // s₀ … s_t

  bool matches(const Word& w) const;
};

/// Text form: star blocks `(L L …)*` (or `A*` for the full alphabet, `()*`
/// for the empty set) alternating with single letters, e.g.
/// `({a}{a,b})* {b} A*`. A missing star block between letters, or at either
/// end, stands for `()*`. `;` is accepted as a separator and ignored.
PolynomialExpr parse_polynomial(std::string_view text, PredicateSetPtr preds);
std::string render_polynomial(const PolynomialExpr& p);

/// Σ₂⁺ sentence defining L(P)↑.
Fo sigma2p_upward_closure(const PolynomialExpr& p);
/// Σ₂⁻ sentence defining L(P)↓.
Fo sigma2m_downward_closure(const PolynomialExpr& p);
/// Π₂⁺ sentence defining the dual closure of the complement of L(Pc), i.e.
/// the complement of L(Pc)↓.
Fo pi2p_dual_closure(const PolynomialExpr& pc);

}  // namespace poslog
