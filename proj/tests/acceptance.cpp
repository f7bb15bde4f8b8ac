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

// Acceptance suite: one PASS/FAIL line per criterion. With arguments, runs
// only the listed criterion numbers. Exit status is nonzero if any fails.

#include <bit>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "poslog/algebra.hpp"
#include "poslog/automata.hpp"
#include "poslog/corpus.hpp"
#include "poslog/formulas.hpp"
#include "poslog/games.hpp"
#include "poslog/polynomial.hpp"
#include "poslog/semantics.hpp"
#include "poslog/translate.hpp"
#include "support/enumerate.hpp"
#include "support/oracles.hpp"

namespace poslog {
namespace {

struct Outcome {
  bool pass = true;
  std::string failure;  // the first one
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) failure = why;
    pass = false;
  }
};

PredicateSetPtr ab() { return PredicateSet::make({"a", "b"}); }

// --- 1: LTL⁺ to FO³⁺ ---------------------------------------------------------

void ltl_to_fo(Outcome& out) {
  testing::TlGrammar g;
  g.binary = {TlKind::And, TlKind::Or, TlKind::U, TlKind::R, TlKind::XU};
  testing::TlEnumerator en(g, 4);
  PositionSpace positions(ab(), 4);
  ModelSpace models(ab(), {"x", "y", "z"}, 1, 4);
  std::size_t formulas = 0;
  for (std::size_t n = 1; n <= 5 && out.pass; ++n) {
    en.for_each(n, [&](const Tl& f) {
      if (!out.pass) return;
      if (!classify(f, FragmentId::LTLplus)) return;
      Fo image = ltlp_to_fo3p(f);
      if (!is_positive(image) || distinct_vars(image) > 3) {
        out.fail("image not FO3+: " + render(f) + " -> " + render(image));
        return;
      }
      BitTable tt = positions.evaluate(f);
      BitTable ft = models.evaluate(image);
      for (std::size_t w = 0; w < positions.words().size(); ++w) {
        const Word& u = positions.words()[w];
        if (tt.test(positions.offset(w)) != ft.test(models.offset(models.index_of(u)))) {
          out.fail("mismatch: " + render(f) + " on " + render_word(u));
          return;
        }
      }
      ++formulas;
    });
  }
  out.detail << formulas << " formulas x " << positions.words().size() << " words";
}

// --- 2: FO²⁺ to UTL⁺ ----------------------------------------------------------

void fo2_to_utl_pass(Outcome& out, bool less, std::size_t& formulas) {
  testing::FoGrammar g;
  if (less) g.bins = {BinKind::Le, BinKind::Lt};
  testing::FoEnumerator en(g, 4);
  PositionSpace positions(ab(), 4);
  ModelSpace models(ab(), {"x", "y"}, 1, 4);
  for (std::size_t n = 1; n <= 5 && out.pass; ++n) {
    en.for_each(n, [&](const Fo& f) {
      if (!out.pass) return;
      auto free = free_variables(f);
      if (free.size() > 1) return;
      Tl t = less ? fo2p_less_to_utlp(f) : fo2p_to_utlp(f);
      if (!classify(t, less ? FragmentId::UTLplus_PFHG : FragmentId::UTLplus)) {
        out.fail("image outside the fragment: " + render(t));
        return;
      }
      BitTable tt = positions.evaluate(t);
      BitTable ft = models.evaluate(f);
      for (std::size_t w = 0; w < positions.words().size(); ++w) {
        const Word& u = positions.words()[w];
        const std::size_t mw = models.index_of(u);
        for (std::size_t i = 0; i < u.size(); ++i) {
          // Valuation index: x is digit 0, y digit 1 (base |u|). Outputs are read at a
          // position, so the empty word is out of scope.
          std::size_t val = free.empty() ? 0 : (*free.begin() == "x" ? i : i * u.size());
          if (tt.test(positions.offset(w) + i) != ft.test(models.offset(mw) + val)) {
            out.fail("mismatch: " + render(f) + " -> " + render(t) + " on " + render_word(u) +
                     " at " + std::to_string(i));
            return;
          }
        }
      }
      ++formulas;
    });
  }
}

void fo2_to_utl(Outcome& out) {
  std::size_t b0 = 0, lt = 0;
  fo2_to_utl_pass(out, false, b0);
  if (out.pass) fo2_to_utl_pass(out, true, lt);
  out.detail << b0 << " formulas over {<=,<,S,!S}, " << lt << " over {<=,<}";
}

// --- 3: positive formulas are monotone ----------------------------------------

void positivity(Outcome& out) {
  testing::FoEnumerator en(testing::FoGrammar{}, 5);
  ModelSpace space(ab(), {"x", "y"}, 1, 3);
  std::vector<std::vector<std::size_t>> above(space.words().size());
  for (std::size_t w = 0; w < space.words().size(); ++w) {
    for_each_word_above(space.words()[w],
                        [&](const Word& v) { above[w].push_back(space.index_of(v)); });
  }
  std::size_t formulas = 0;
  for (std::size_t n = 1; n <= 6 && out.pass; ++n) {
    en.for_each(n, [&](const Fo& f) {
      if (!out.pass) return;
      BitTable t = space.evaluate(f);
      for (std::size_t w = 0; w < above.size(); ++w) {
        std::uint64_t tu = t.extract(space.offset(w), space.block_size(w));
        for (std::size_t v : above[w]) {
          if (tu & ~t.extract(space.offset(v), space.block_size(v))) {
            out.fail("not monotone: " + render(f) + " at " + render_word(space.words()[w]));
            return;
          }
        }
      }
      ++formulas;
    });
  }
  out.detail << formulas << " formulas, words of length 1..3";
}

// --- 4, 5: random DFAs --------------------------------------------------------

std::vector<Dfa> random_dfas() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::bernoulli_distribution acc(0.5);
  std::vector<Dfa> out;
  auto preds = ab();
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = size(rng);
    std::uniform_int_distribution<State> to(0, static_cast<State>(n - 1));
    Dfa d(preds, n, 0);
    for (State q = 0; q < n; ++q) {
      d.set_accepting(q, acc(rng));
      for (Letter l : all_letters(*preds)) d.set_transition(q, l, to(rng));
    }
    out.push_back(std::move(d));
  }
  return out;
}

bool witness_ok(const Dfa& d, const MonotonicityResult& r) {
  return r.u && r.v && word_leq(*r.u, *r.v) && d.accepts(*r.u) && !d.accepts(*r.v);
}

void deciders(Outcome& out) {
  std::size_t monotone = 0;
  int i = 0;
  for (const Dfa& d : random_dfas()) {
    auto by_automaton = is_monotone_automaton(d);
    auto by_monoid = is_monotone_monoid(syntactic_monoid(d));
    if (by_automaton.monotone != by_monoid.monotone) {
      out.fail("deciders disagree on DFA #" + std::to_string(i));
      break;
    }
    if (!by_automaton.monotone && (!witness_ok(d, by_automaton) || !witness_ok(d, by_monoid))) {
      out.fail("bad witness on DFA #" + std::to_string(i));
      break;
    }
    monotone += by_automaton.monotone;
    ++i;
  }
  out.detail << "200 DFAs, " << monotone << " monotone, witnesses verified";
}

void closures(Outcome& out) {
  std::size_t monotone = 0;
  int i = 0;
  for (const Dfa& d : random_dfas()) {
    const std::string id = "DFA #" + std::to_string(i++);
    Dfa up = upward_closure_dfa(d);
    Dfa dual = dual_closure(d);
    if (!is_subset(d, up)) out.fail(id + ": L not inside its upward closure");
    if (!is_subset(dual, d)) out.fail(id + ": dual closure not inside L");
    if (!(upward_closure_dfa(up) == up)) out.fail(id + ": upward closure not idempotent");
    if (!(dual_closure(dual) == dual)) out.fail(id + ": dual closure not idempotent");
    const bool m = is_monotone_automaton(d).monotone;
    if (m != is_equiv(d, dual) || m != is_subset(up, d)) {
      out.fail(id + ": monotonicity characterizations disagree");
    }
    if (!out.pass) return;
    monotone += m;
  }
  out.detail << "200 DFAs, " << monotone << " monotone";
}

// --- 6: corpus pins -----------------------------------------------------------

Word bits(std::string_view s) {
  Word w(bit_predicates());
  for (char ch : s) w.push_back(Letter{static_cast<std::uint16_t>(ch == '1')});
  return w;
}

std::string repeat(const std::string& s, std::size_t n) {
  std::string r;
  for (std::size_t i = 0; i < n; ++i) r += s;
  return r;
}

void corpus(Outcome& out) {
  auto both = [](const Dfa& d) {
    return is_monotone_automaton(d).monotone && is_monotone_monoid(syntactic_monoid(d)).monotone;
  };
  auto minimal = [](const Nfa& n) { return minimize(determinize(n)); };
  if (!both(minimal(build_K()))) out.fail("K not decided monotone");
  if (!both(minimal(build_K_between()))) out.fail("K-between not decided monotone");
  if (!both(minimal(build_bracketK()))) out.fail("bracket K not decided monotone");
  for (std::size_t n = 0; n <= 3; ++n) {
    if (!in_K(gen_u0(n)) || in_K(gen_u1(n))) out.fail("u0/u1 membership at n=" + std::to_string(n));
  }
  const std::map<Bracket, std::string> codes{
      {Bracket::A, "001"}, {Bracket::B, "010"},  {Bracket::C, "100"},  {Bracket::Sep, "100001"},
      {Bracket::AB, "011"}, {Bracket::BC, "110"}, {Bracket::CA, "101"}};
  for (const auto& [b, code] : codes) {
    if (bracket_code(b) != code) out.fail("bracket code of " + std::string(bracket_name(b)));
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    const std::string u0 = repeat("[a][#][b][#][c][#]", n);
    const std::string u1 = repeat("[ab][#][bc][#][ca][#]", n) + "[ab][#]";
    if (encode_brackets(parse_brackets(u0)) != gen_bracket_u0(n) ||
        render_word_binary(gen_bracket_u0(n)) != repeat("001100001010100001100100001", n)) {
      out.fail("[u0] encoding at n=" + std::to_string(n));
    }
    if (encode_brackets(parse_brackets(u1)) != gen_bracket_u1(n) ||
        gen_bracket_u1(n) != bits(repeat("011100001110100001101100001", n) + "011100001")) {
      out.fail("[u1] encoding at n=" + std::to_string(n));
    }
  }
  if (out.pass) out.detail << "three languages monotone, n = 0..3 pinned";
}

// --- 7: the separating pair survives two rounds --------------------------------

GameConfig game(Word u0, Word u1, std::size_t rounds, std::size_t tokens) {
  return GameConfig{std::move(u0), std::move(u1), rounds, tokens, Signature::b0(), std::nullopt};
}

void game_claim(Outcome& out) {
  GameResult r = ef_winner(game(gen_u0(5), gen_u1(5), 2, 2));
  if (r.winner != Player::Duplicator) out.fail("(abc)^5 pair at k=n=2: Spoiler wins");
  GameResult rb = ef_winner(game(gen_bracket_u0(5), gen_bracket_u1(5), 1, 1));
  if (rb.winner != Player::Duplicator) out.fail("bracket pair at k=n=1: Spoiler wins");
  if (out.pass) {
    out.detail << "Duplicator at k=n=2 (" << r.states_explored << " states), bracket pair at k=n=1 ("
               << rb.states_explored << " states)";
  }
}

// --- 8: separating formulas give Spoiler a win ---------------------------------

void soundness(Outcome& out) {
  testing::FoGrammar g;
  g.preds = {"a"};
  testing::FoEnumerator en(g, 4);
  auto preds = PredicateSet::make({"a"});
  const std::vector<Word> words = enumerate_words(preds, 3);
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Player> solved;
  std::size_t sentences = 0, separations = 0;
  for (std::size_t n = 1; n <= 5 && out.pass; ++n) {
    en.for_each(n, [&](const Fo& f) {
      if (!out.pass || !free_variables(f).empty() || quantifier_rank(f) > 2) return;
      ++sentences;
      std::vector<bool> holds;
      for (const Word& w : words) holds.push_back(eval_fo(w, {}, f));
      const std::size_t k = quantifier_rank(f);
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
          if (!holds[i] || holds[j]) continue;
          ++separations;
          auto key = std::make_tuple(i, j, k);
          auto it = solved.find(key);
          if (it == solved.end()) {
            it = solved.emplace(key, ef_winner(game(words[i], words[j], k, 2)).winner).first;
          }
          if (it->second != Player::Spoiler) {
            out.fail(render(f) + " separates " + render_word(words[i]) + " / " +
                     render_word(words[j]) + " but Duplicator wins");
            return;
          }
        }
      }
    });
  }
  out.detail << sentences << " sentences, " << separations << " separations, " << solved.size()
             << " games";
}

// --- 9: closure formulas of polynomials ----------------------------------------

void polynomials(Outcome& out) {
  std::mt19937 rng(4242);
  auto preds = ab();
  const std::vector<Word> words = enumerate_words(preds, 5);
  for (int i = 0; i < 50 && out.pass; ++i) {
    PolynomialExpr p = testing::random_polynomial(rng, preds, 2);
    auto in = [p](const Word& w) { return p.matches(w); };
    const std::string name = render_polynomial(p);
    struct Case {
      const char* what;
      Fo f;
      FragmentId fragment;
      testing::Membership oracle;
    };
    const Case cases[] = {
        {"upward", sigma2p_upward_closure(p), FragmentId::Sigma2plus, testing::upward_closure(in)},
        {"downward", sigma2m_downward_closure(p), FragmentId::Sigma2minus,
         testing::downward_closure(in)},
        {"dual", pi2p_dual_closure(p), FragmentId::Pi2plus,
         testing::dual_closure([in](const Word& w) { return !in(w); })},
    };
    for (const Case& c : cases) {
      if (!classify(c.f, c.fragment)) {
        out.fail(std::string(c.what) + " formula of " + name + " misclassified");
        break;
      }
      for (const Word& w : words) {
        if (eval_fo(w, {}, c.f) != c.oracle(w)) {
          out.fail(std::string(c.what) + " closure of " + name + " wrong on " + render_word(w));
          break;
        }
      }
      if (!out.pass) break;
    }
  }
  if (out.pass) out.detail << "50 polynomials x 3 closures x " << words.size() << " words";
}

// --- 10: a*bc*de* --------------------------------------------------------------

void abcde(Outcome& out) {
  auto preds = PredicateSet::make({"a", "b", "c", "d", "e"});
  auto single = [&](const std::string& p) {
    return Letter{static_cast<std::uint16_t>(1u << *preds->index_of(p))};
  };
  Nfa n(preds, 3);
  n.set_initial(0);
  n.set_accepting(2);
  n.add_transition(0, single("a"), 0);
  n.add_transition(0, single("b"), 1);
  n.add_transition(1, single("c"), 1);
  n.add_transition(1, single("d"), 2);
  n.add_transition(2, single("e"), 2);
  Dfa d = minimize(determinize(n));

  // Independent membership: singleton letters spelled out, then a regex.
  const std::regex re("a*bc*de*");
  auto in = [&](const Word& w) {
    std::string s;
    for (Letter l : w.letters()) {
      if (std::popcount(l.bits) != 1) return false;
      s += preds->name(static_cast<std::size_t>(std::countr_zero(l.bits)));
    }
    return std::regex_match(s, re);
  };

  MonotonicityResult r = is_monotone_automaton(d);
  MonotonicityResult rm = is_monotone_monoid(syntactic_monoid(d));
  if (r.monotone || rm.monotone) {
    out.fail("decided monotone");
    return;
  }
  for (const MonotonicityResult* w : {&r, &rm}) {
    if (!word_leq(*w->u, *w->v) || !in(*w->u) || in(*w->v) || !d.accepts(*w->u) ||
        d.accepts(*w->v)) {
      out.fail("witness not verified");
      return;
    }
  }
  Nfa closure = monotone_closure(n);
  if (!closure.accepts(*r.v) || !closure.accepts(*rm.v)) {
    out.fail("closure rejects the fattened witness");
    return;
  }
  out.detail << "witness u = " << render_word(*r.u) << ", v = " << render_word(*r.v);
}

struct Criterion {
  int number;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace
}  // namespace poslog

int main(int argc, char** argv) {
  using namespace poslog;
  const std::vector<Criterion> all{
      {1, "LTL+ to FO3+ agrees on words up to length 4", ltl_to_fo},
      {2, "FO2+ to UTL+ agrees under both signatures", fo2_to_utl},
      {3, "positive FO formulas define monotone languages", positivity},
      {4, "monoid and automaton monotonicity deciders agree", deciders},
      {5, "closure identities on random DFAs", closures},
      {6, "corpus languages and encodings", corpus},
      {7, "separating pair survives the bounded game", game_claim},
      {8, "separating positive formulas give Spoiler a win", soundness},
      {9, "closure formulas of polynomial expressions", polynomials},
      {10, "a*bc*de* is not monotone", abcde},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  bool all_pass = true;
  for (const Criterion& c : all) {
    if (!wanted.empty() && !wanted.count(c.number)) continue;
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << c.number << ": " << (out.pass ? "PASS" : "FAIL") << "  "
              << c.name << " [" << (out.pass ? out.detail.str() : out.failure) << "] " << std::fixed
              << std::setprecision(1) << secs << "s" << std::endl;
    all_pass = all_pass && out.pass;
  }
  return all_pass ? 0 : 1;
}
