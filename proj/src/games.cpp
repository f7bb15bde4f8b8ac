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

#include "poslog/games.hpp"

#include <sstream>

#include "poslog/error.hpp"
#include "poslog/semantics.hpp"

namespace poslog {

std::string_view player_name(Player p) {
  return p == Player::Spoiler ? "Spoiler" : "Duplicator";
}

namespace {

void check_placements(const Word& u0, const Word& u1, const GameState& s) {
  if (s.on0.size() != s.on1.size()) throw UsageError("placements differ in token count");
  for (std::size_t i = 0; i < s.on0.size(); ++i) {
    if (s.on0[i].has_value() != s.on1[i].has_value()) {
      throw UsageError("token " + std::to_string(i + 1) + " is placed on one word only");
    }
    if (s.on0[i] && (*s.on0[i] >= u0.size() || *s.on1[i] >= u1.size())) {
      throw UsageError("token " + std::to_string(i + 1) + " is placed out of bounds");
    }
  }
}

bool token_legal(const Word& u0, const Word& u1, const GameState& s, std::size_t i,
                 const std::vector<BinaryPredicate>& preds) {
  if (!s.on0[i]) return true;
  const std::size_t x0 = *s.on0[i], x1 = *s.on1[i];
  if (!letter_leq(u0[x0], u1[x1])) return false;
  for (std::size_t j = 0; j < s.on0.size(); ++j) {
    if (!s.on0[j]) continue;
    const std::size_t y0 = *s.on0[j], y1 = *s.on1[j];
    for (const auto& p : preds) {
      if (p.holds(x0, y0, u0.letters(), u0.predicates()) !=
              p.holds(x1, y1, u1.letters(), u1.predicates()) ||
          p.holds(y0, x0, u0.letters(), u0.predicates()) !=
              p.holds(y1, x1, u1.letters(), u1.predicates())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool legal(const Word& u0, const Word& u1, const GameState& state,
           const Signature& signature) {
  if (!(u0.predicates() == u1.predicates())) {
    throw UsageError("game words use different predicate sets");
  }
  check_placements(u0, u1, state);
  auto preds = signature.predicates();
  for (std::size_t i = 0; i < state.on0.size(); ++i) {
    if (!token_legal(u0, u1, state, i, preds)) return false;
  }
  return true;
}

EfSolver::EfSolver(GameConfig config)
    : config_(std::move(config)),
      initial_(config_.initial ? *config_.initial : GameState::empty(config_.tokens)),
      preds_(config_.signature.predicates()) {
  if (!(config_.u0.predicates() == config_.u1.predicates())) {
    throw UsageError("game words use different predicate sets");
  }
  if (initial_.on0.size() != config_.tokens) {
    throw UsageError("initial configuration has the wrong number of tokens");
  }
  check_placements(config_.u0, config_.u1, initial_);
  // The memo key is a mixed-radix number; make sure it fits.
  long double span = config_.rounds + 1;
  for (std::size_t i = 0; i < config_.tokens; ++i) {
    span *= static_cast<long double>(config_.u0.size() + 1) * (config_.u1.size() + 1);
  }
  if (span > 1.8e19L) throw ResourceError("game state space too large to index");
}

bool EfSolver::legal(const GameState& state) const {
  for (std::size_t i = 0; i < state.on0.size(); ++i) {
    if (!token_legal(config_.u0, config_.u1, state, i, preds_)) return false;
  }
  return true;
}

bool EfSolver::legal_after(const GameState& state, std::size_t token) const {
  return token_legal(config_.u0, config_.u1, state, token, preds_);
}

std::uint64_t EfSolver::key(const GameState& state, std::size_t rounds_left) const {
  std::uint64_t k = rounds_left;
  const std::uint64_t r0 = config_.u0.size() + 1, r1 = config_.u1.size() + 1;
  for (std::size_t i = 0; i < state.on0.size(); ++i) {
    k = k * r0 + (state.on0[i] ? *state.on0[i] + 1 : 0);
    k = k * r1 + (state.on1[i] ? *state.on1[i] + 1 : 0);
  }
  return k;
}

GameState EfSolver::apply(const GameState& state, const Move& m, std::size_t reply) const {
  GameState s = state;
  (m.side == 0 ? s.on0 : s.on1)[m.token] = m.position;
  (m.side == 0 ? s.on1 : s.on0)[m.token] = reply;
  return s;
}

bool EfSolver::duplicator_wins(const GameState& state, std::size_t rounds_left) {
  if (rounds_left == 0) return true;
  const std::uint64_t k = key(state, rounds_left);
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;
  bool result = !spoiler_move(state, rounds_left).has_value();
  if (memo_.size() >= config_.max_states) {
    throw ResourceError("game exceeds the state cap of " + std::to_string(config_.max_states));
  }
  memo_.emplace(k, result);
  return result;
}

std::optional<Move> EfSolver::spoiler_move(const GameState& state, std::size_t rounds_left) {
  if (rounds_left == 0) return std::nullopt;
  for (int side = 0; side < 2; ++side) {
    for (std::size_t t = 0; t < config_.tokens; ++t) {
      for (std::size_t p = 0; p < length(side); ++p) {
        Move m{side, t, p};
        bool answered = false;
        for (std::size_t r = 0; r < length(1 - side) && !answered; ++r) {
          GameState next = apply(state, m, r);
          answered = legal_after(next, t) && duplicator_wins(next, rounds_left - 1);
        }
        if (!answered) return m;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> EfSolver::duplicator_reply(const GameState& state,
                                                      std::size_t rounds_left, const Move& m) {
  std::optional<std::size_t> first_legal;
  for (std::size_t r = 0; r < length(1 - m.side); ++r) {
    GameState next = apply(state, m, r);
    if (!legal_after(next, m.token)) continue;
    if (!first_legal) first_legal = r;
    if (rounds_left > 0 && duplicator_wins(next, rounds_left - 1)) return r;
  }
  return first_legal;
}

Player EfSolver::winner() {
  if (!legal(initial_)) return Player::Spoiler;
  return duplicator_wins(initial_, config_.rounds) ? Player::Duplicator : Player::Spoiler;
}

std::vector<Round> EfSolver::principal_line() {
  std::vector<Round> line;
  if (!legal(initial_)) return line;
  GameState state = initial_;
  for (std::size_t left = config_.rounds; left > 0; --left) {
    std::optional<Move> m = spoiler_move(state, left);
    if (!m) {
      // Duplicator survives; Spoiler plays the lowest-index move.
      if (length(0) > 0) {
        m = Move{0, 0, 0};
      } else if (length(1) > 0) {
        m = Move{1, 0, 0};
      } else {
        break;
      }
      if (config_.tokens == 0) break;
    }
    std::optional<std::size_t> reply = duplicator_reply(state, left, *m);
    line.push_back({*m, reply});
    if (!reply) break;
    state = apply(state, *m, *reply);
  }
  return line;
}

GameResult ef_winner(const GameConfig& config) {
  EfSolver solver(config);
  GameResult r;
  r.winner = solver.winner();
  r.trace = solver.principal_line();
  r.states_explored = solver.states_explored();
  return r;
}

std::string render_trace(const GameConfig& config, const std::vector<Round>& trace) {
  std::ostringstream os;
  auto cell = [&](int side, std::size_t pos) {
    const Word& w = side == 0 ? config.u0 : config.u1;
    return "u" + std::to_string(side) + "[" + std::to_string(pos) + "] " +
           render_letter(w[pos], w.predicates());
  };
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const Round& r = trace[i];
    os << "round " << i + 1 << ": Spoiler token " << r.spoiler.token + 1 << " -> "
       << cell(r.spoiler.side, r.spoiler.position) << "; Duplicator ";
    if (r.reply) {
      os << "-> " << cell(1 - r.spoiler.side, *r.reply);
    } else {
      os << "has no legal reply";
    }
    os << '\n';
  }
  return os.str();
}

std::string_view verdict_name(SoundnessVerdict v) {
  switch (v) {
    case SoundnessVerdict::NotSeparating: return "not a separating pair";
    case SoundnessVerdict::SpoilerWins: return "Spoiler wins";
    case SoundnessVerdict::Violation: return "violation: Duplicator wins";
  }
  return "";
}

namespace {

void add_binary_predicates(const Fo& f, Signature& sig) {
  switch (f.kind()) {
    case FoKind::Bin:
      if (f.bin_pred().kind == BinKind::Between) {
        sig.with_between(*f.bin_pred().guard);
      } else {
        sig.allow(f.bin_pred().kind);
      }
      return;
    case FoKind::Not: case FoKind::Exists: case FoKind::Forall:
      add_binary_predicates(f.lhs(), sig);
      return;
    case FoKind::And: case FoKind::Or:
      add_binary_predicates(f.lhs(), sig);
      add_binary_predicates(f.rhs(), sig);
      return;
    default: return;
  }
}

}  // namespace

SoundnessVerdict ef_soundness_check(const Fo& phi, const Word& u0, const Word& u1,
                                    std::optional<std::size_t> tokens, Signature signature) {
  if (!is_positive(phi)) throw UsageError("soundness check needs a positive formula");
  if (!free_variables(phi).empty()) throw UsageError("soundness check needs a sentence");
  const std::size_t vars = distinct_vars(phi);
  const std::size_t n = tokens ? *tokens : std::max<std::size_t>(vars, 1);
  if (vars > n) {
    throw UsageError("formula uses " + std::to_string(vars) + " variables but the game has " +
                     std::to_string(n) + " tokens");
  }
  if (!eval_fo(u0, {}, phi) || eval_fo(u1, {}, phi)) return SoundnessVerdict::NotSeparating;
  add_binary_predicates(phi, signature);
  GameConfig config{u0, u1, quantifier_rank(phi), n, signature, std::nullopt,
                    kDefaultGameStateCap};
  return EfSolver(config).winner() == Player::Spoiler ? SoundnessVerdict::SpoilerWins
                                                      : SoundnessVerdict::Violation;
}

}  // namespace poslog
