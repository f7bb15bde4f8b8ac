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
#include <string>
#include <string_view>
#include <vector>

#include "poslog/automata.hpp"
#include "poslog/formulas.hpp"
#include "poslog/words.hpp"

namespace poslog {

/// {a, b, c}, the predicate set of K.
PredicateSetPtr abc_predicates();
/// {p}; 0 is the letter {} and 1 is {p}.
PredicateSetPtr bit_predicates();

/// K = ((abc)*)↑ ∪ A*⊤A*. `preds` must be exactly {a, b, c} in some order.
Nfa build_K(PredicateSetPtr preds = abc_predicates());
bool in_K(const Word& w);

/// u0 = (abc)^n and u1 = ({a,b}{b,c}{c,a})^n {a,b}{b,c}.
Word gen_u0(std::size_t n);
Word gen_u1(std::size_t n);

/// K ∪ A*({a,b}² ∪ {b,c}² ∪ {c,a}² ∪ {a,b}{c,a} ∪ {b,c}{a,b} ∪ {c,a}{b,c})A*.
Nfa build_K_between(PredicateSetPtr preds = abc_predicates());
bool in_K_between(const Word& w);
/// Two-variable sentence over 𝔅₀ and between predicates defining the
/// language of build_K_between.
Fo fo2_between_formula();

enum class Bracket { A, B, C, Sep, AB, BC, CA };
std::string_view bracket_code(Bracket s);
std::string_view bracket_name(Bracket s);
/// Literal concatenation of the codes as a word over bit_predicates().
Word encode_brackets(const std::vector<Bracket>& symbols);
std::vector<Bracket> parse_brackets(std::string_view text);  // "[a][#][ab]"

/// [K] = (([a][#][b][#][c][#])*)↑ ∪ A*1(A⁴∖0⁴)1A* ∪ A*1⁵A*.
Nfa build_bracketK();
bool in_bracketK(const Word& w);

/// [u0] = ([a][#][b][#][c][#])^n, [u1] = ([ab][#][bc][#][ca][#])^n [ab][#].
Word gen_bracket_u0(std::size_t n);
Word gen_bracket_u1(std::size_t n);

}  // namespace poslog
