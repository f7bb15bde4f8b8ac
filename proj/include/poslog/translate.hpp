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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "poslog/formulas.hpp"

namespace poslog {

// ---------------------------------------------------------------------------
// Temporal → first-order.

/// LTL⁺ to a closed FO³⁺[𝔅₀] sentence: ∃x.((∀y. x≤y) ∧ ⟦φ⟧(x)), variables
/// x, y, z reused. F and G are accepted and translated with strict order.
/// Throws UsageError outside LTL⁺.
Fo ltlp_to_fo3p(const Tl& f);

/// UTL⁺ to FO²⁺[𝔅₀] with the single free variable `var`; the output avoids
/// succ when f has no X or Y.
Fo utlp_to_fo2p(const Tl& f, const std::string& var = "x");

/// Any temporal formula (negation, past and sugar included) to an FO³[𝔅₀]
/// formula with free variable `var`, true at exactly the positions where f
/// holds. Used by the automaton compiler.
Fo tl_to_fo(const Tl& f, const std::string& var = "x");

// ---------------------------------------------------------------------------
// First-order → temporal.

/// Relative position of y with respect to x.
enum class RelPos : std::uint8_t { FarBefore, Pred, Same, Next, FarAfter };
/// The coarse system for the order-only signature.
enum class CoarsePos : std::uint8_t { Before, Same, After };

inline constexpr std::array<RelPos, 5> kRelPositions{
    RelPos::FarBefore, RelPos::Pred, RelPos::Same, RelPos::Next, RelPos::FarAfter};
inline constexpr std::array<CoarsePos, 3> kCoarsePositions{
    CoarsePos::Before, CoarsePos::Same, CoarsePos::After};

/// Truth of k(x, y) when y sits at `tau` relative to x. Between is not
/// decided by relative position and throws.
bool position_truth(BinKind k, RelPos tau);
bool position_truth(BinKind k, CoarsePos tau);

/// τ(x, y) as an FO formula over 𝔅₀.
Fo position_formula(RelPos tau, const std::string& x, const std::string& y);
Fo position_formula(CoarsePos tau, const std::string& x, const std::string& y);

/// FO²⁺[𝔅₀] with at most one free variable to an equivalent UTL⁺ formula,
/// evaluated at the position of the free variable (any position when closed).
Tl fo2p_to_utlp(const Fo& f);
/// FO²⁺[𝔅_<] to UTL⁺[P,F,H,G]; the output has no X or Y.
Tl fo2p_less_to_utlp(const Fo& f);

/// ⋁_{S} (⋀_{i∈S} a_i(pivot)) ∧ ψ^S where a_1..a_n are the unary atoms applied
/// to the free pivot and ψ^S replaces a_i(pivot) by ⊤ for i ∈ S and by ⊥
/// otherwise. Equivalent to ψ for positive ψ.
Fo monotone_rewrite(const Fo& psi, const std::string& pivot);

/// ψ^S for an explicit atom list and subset mask (bit i ↔ atoms[i]).
Fo substitute_pivot_atoms(const Fo& psi, const std::string& pivot,
                          const std::vector<std::string>& atoms, std::uint64_t subset);
/// Distinct unary predicates applied to the free occurrences of `pivot`.
std::vector<std::string> pivot_atoms(const Fo& psi, const std::string& pivot);

}  // namespace poslog
