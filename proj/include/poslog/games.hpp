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
#include <unordered_map>
#include <vector>

#include "poslog/formulas.hpp"
#include "poslog/words.hpp"

namespace poslog {

inline constexpr std::size_t kDefaultGameStateCap = 20'000'000;

enum class Player { Spoiler, Duplicator };
std::string_view player_name(Player p);

/// Token placements on both words; token i is unplaced when both entries
/// are empty.
struct GameState {
  std::vector<std::optional<std::size_t>> on0;
  std::vector<std::optional<std::size_t>> on1;

  static GameState empty(std::size_t tokens) {
    return {std::vector<std::optional<std::size_t>>(tokens),
            std::vector<std::optional<std::size_t>>(tokens)};
  }
  friend bool operator==(const GameState&, const GameState&) = default;
};

struct GameConfig {
  Word u0;
  Word u1;
  std::size_t rounds = 0;
  std::size_t tokens = 0;
  Signature signature = Signature::b0();
  std::optional<GameState> initial;  // default: no token placed
  std::size_t max_states = kDefaultGameStateCap;
};

struct Move {
  int side = 0;  // word Spoiler plays on
  std::size_t token = 0;
  std::size_t position = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

struct Round {
  Move spoiler;
  std::optional<std::size_t> reply;  // empty when Duplicator has no legal reply
};

/// Binary predicates agree on both sides; unary predicates transfer from u0
/// to u1 only.
bool legal(const Word& u0, const Word& u1, const GameState& state,
           const Signature& signature);

/// Memoized exhaustive solver. Spoiler wins iff some move leaves Duplicator
/// with no legal reply from which Duplicator survives the remaining rounds.
class EfSolver {
 public:
  explicit EfSolver(GameConfig config);

  const GameConfig& config() const { return config_; }
  const GameState& initial() const { return initial_; }

  Player winner();
  bool duplicator_wins(const GameState& state, std::size_t rounds_left);
  /// Lowest-index winning move for Spoiler, if there is one.
  std::optional<Move> spoiler_move(const GameState& state, std::size_t rounds_left);
  /// Lowest-index winning reply, else the lowest legal one.
  std::optional<std::size_t> duplicator_reply(const GameState& state,
                                              std::size_t rounds_left, const Move& m);
  /// Play from the initial state: the winner follows its strategy and the
  /// loser picks the lowest-index option.
  std::vector<Round> principal_line();

  GameState apply(const GameState& state, const Move& m, std::size_t reply) const;
  bool legal(const GameState& state) const;
  std::size_t states_explored() const { return memo_.size(); }

 private:
  bool legal_after(const GameState& state, std::size_t token) const;
  std::uint64_t key(const GameState& state, std::size_t rounds_left) const;
  std::size_t length(int side) const { return side == 0 ? config_.u0.size() : config_.u1.size(); }

  GameConfig config_;
  GameState initial_;
  std::vector<BinaryPredicate> preds_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

struct GameResult {
  Player winner = Player::Duplicator;
  std::vector<Round> trace;
  std::size_t states_explored = 0;
};

GameResult ef_winner(const GameConfig& config);
std::string render_trace(const GameConfig& config, const std::vector<Round>& trace);

enum class SoundnessVerdict { NotSeparating, SpoilerWins, Violation };
std::string_view verdict_name(SoundnessVerdict v);

/// If φ separates (u0 ⊨ φ, u1 ⊭ φ), solves EF with k = qr(φ) and `tokens`
/// tokens (default: number of variables of φ, at least 1). The game signature
/// is `signature` plus the between predicates of φ. Throws UsageError when φ
/// is not positive, not a sentence, or needs more than `tokens` variables.
SoundnessVerdict ef_soundness_check(const Fo& phi, const Word& u0, const Word& u1,
                                    std::optional<std::size_t> tokens = std::nullopt,
                                    Signature signature = Signature::b0());

}  // namespace poslog
