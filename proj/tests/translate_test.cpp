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

#include <gtest/gtest.h>

#include <random>

#include "poslog/error.hpp"
#include "poslog/polynomial.hpp"
#include "poslog/semantics.hpp"
#include "poslog/translate.hpp"
#include "support/enumerate.hpp"
#include "support/oracles.hpp"

namespace poslog {
namespace {

PredicateSetPtr ab() { return PredicateSet::make({"a", "b"}); }

TEST(LtlToFo, ClauseImages) {
  EXPECT_EQ(ltlp_to_fo3p(parse_tl("X a")),
            parse_fo("exists x. (forall y. x<=y) & (exists y. S(x,y) & a(y))"));
  EXPECT_EQ(ltlp_to_fo3p(parse_tl("true")), parse_fo("exists x. (forall y. x<=y) & true"));
  EXPECT_EQ(ltlp_to_fo3p(parse_tl("a U b")),
            parse_fo("exists x. (forall y. x<=y) & "
                     "(exists y. x<=y & b(y) & (forall z. z<x | y<=z | a(z)))"));
  EXPECT_THROW(ltlp_to_fo3p(parse_tl("Y a")), UsageError);
  EXPECT_THROW(ltlp_to_fo3p(parse_tl("!a")), UsageError);
}

TEST(LtlToFo, ReleaseKeepsTheLeftOperandInsideTheUntil) {
  // a R b needs b until a∧b; dropping the conjunct accepts {a}, where b fails.
  Fo f = ltlp_to_fo3p(parse_tl("a R b"));
  EXPECT_FALSE(eval_fo(parse_word("{a}", ab()), {}, f));
  EXPECT_TRUE(eval_fo(parse_word("{a,b}", ab()), {}, f));
  EXPECT_TRUE(eval_fo(parse_word("{b}{b}", ab()), {}, f));
}

TEST(LtlToFo, SmallFormulasAgree) {
  testing::TlGrammar g;
  g.binary = {TlKind::And, TlKind::Or, TlKind::U, TlKind::R, TlKind::XU};
  testing::TlEnumerator en(g, 4);
  auto preds = ab();
  auto words = enumerate_words(preds, 3);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Tl& f : en.of_size(n)) {
      Fo out = ltlp_to_fo3p(f);
      ASSERT_TRUE(is_positive(out));
      ASSERT_LE(distinct_vars(out), 3u);
      ASSERT_TRUE(uses_only(out, Signature::b0()));
      for (const Word& w : words) {
        if (w.empty()) continue;
        ASSERT_EQ(eval_ltl(w, f), eval_fo(w, {}, out)) << render(f) << " on " << render_word(w);
      }
    }
  }
}

TEST(UtlToFo, Clauses) {
  EXPECT_EQ(utlp_to_fo2p(parse_tl("F a")), parse_fo("exists y. x<y & a(y)"));
  EXPECT_EQ(utlp_to_fo2p(parse_tl("G a")), parse_fo("forall y. y<=x | a(y)"));
  EXPECT_EQ(utlp_to_fo2p(parse_tl("H a")), parse_fo("forall y. x<=y | a(y)"));
  EXPECT_EQ(utlp_to_fo2p(parse_tl("X Y a")),
            parse_fo("exists y. S(x,y) & (exists x. S(x,y) & a(x))"));
  EXPECT_TRUE(uses_only(utlp_to_fo2p(parse_tl("P F G H a")), Signature::less()));
  EXPECT_THROW(utlp_to_fo2p(parse_tl("a U b")), UsageError);
}

TEST(TlToFo, AgreesWithEvaluatorIncludingPastAndNegation) {
  testing::TlGrammar g;
  g.unary = {TlKind::Not, TlKind::X, TlKind::Y, TlKind::F, TlKind::G, TlKind::P, TlKind::H};
  g.binary = {TlKind::And, TlKind::U, TlKind::R, TlKind::S, TlKind::Q, TlKind::YS};
  testing::TlEnumerator en(g, 3);
  auto preds = ab();
  auto words = enumerate_words(preds, 3);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Tl& f : en.of_size(n)) {
      Fo out = tl_to_fo(f);
      ASSERT_LE(distinct_vars(out), 3u);
      for (const Word& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
          ASSERT_EQ(eval_tl_at(w, i, f), eval_fo(w, {{"x", i}}, out)) << render(f);
        }
      }
    }
  }
}

TEST(PositionFormulas, TruthTableMatchesConcretePositions) {
  auto preds = PredicateSet::make({"a"});
  Word w(preds, std::vector<Letter>(7));
  for (BinKind k : {BinKind::Eq, BinKind::Neq, BinKind::Le, BinKind::Lt, BinKind::Succ,
                    BinKind::NotSucc}) {
    BinaryPredicate bp = BinaryPredicate::of(k);
    for (std::size_t x = 0; x < 7; ++x) {
      for (std::size_t y = 0; y < 7; ++y) {
        std::size_t hits = 0;
        for (RelPos tau : kRelPositions) {
          Valuation nu{{"x", x}, {"y", y}};
          if (!eval_fo(w, nu, position_formula(tau, "x", "y"))) continue;
          ++hits;
          EXPECT_EQ(position_truth(k, tau), bp.holds(x, y, w.letters(), *preds));
        }
        EXPECT_EQ(hits, 1u);
        if (k == BinKind::Succ || k == BinKind::NotSucc) continue;
        hits = 0;
        for (CoarsePos tau : kCoarsePositions) {
          Valuation nu{{"x", x}, {"y", y}};
          if (!eval_fo(w, nu, position_formula(tau, "x", "y"))) continue;
          ++hits;
          EXPECT_EQ(position_truth(k, tau), bp.holds(x, y, w.letters(), *preds));
        }
        EXPECT_EQ(hits, 1u);
      }
    }
  }
  EXPECT_THROW(position_truth(BinKind::Between, RelPos::Same), UsageError);
  EXPECT_THROW(position_truth(BinKind::Succ, CoarsePos::Same), UsageError);
}

// Agreement of an FO formula with ≤ 1 free variable and a temporal formula
// at every position of every non-empty word.
void expect_same_at_positions(const Fo& f, const Tl& t, std::size_t max_len) {
  auto free = free_variables(f);
  std::string v = free.empty() ? "x" : *free.begin();
  for (const Word& w : enumerate_words(ab(), max_len)) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      Valuation nu;
      if (!free.empty()) nu[v] = i;
      ASSERT_EQ(eval_fo(w, nu, f), eval_tl_at(w, i, t))
          << render(f) << " vs " << render(t) << " on " << render_word(w) << " at " << i;
    }
  }
}

TEST(FoToUtl, Examples) {
  Fo f = parse_fo("exists y. x<y & a(y)");
  expect_same_at_positions(f, fo2p_to_utlp(f), 4);
  EXPECT_EQ(fo2p_less_to_utlp(f), parse_tl("F a"));
  EXPECT_EQ(fo2p_to_utlp(parse_fo("a(x)")), parse_tl("a"));
  Fo g = parse_fo("forall y. y<=x | a(y)");
  expect_same_at_positions(g, fo2p_to_utlp(g), 4);
  Fo h = parse_fo("b(x) & (exists y. y<x & a(y))");
  EXPECT_EQ(fo2p_less_to_utlp(h), parse_tl("b & P a"));
  EXPECT_EQ(fo2p_less_to_utlp(parse_fo("true")), parse_tl("true"));
  // Nested rebinding of the free variable.
  Fo n = parse_fo("exists y. S(x,y) & (forall x. x<=y | b(x)) & (exists x. y<x & a(x))");
  expect_same_at_positions(n, fo2p_to_utlp(n), 4);
}

TEST(FoToUtl, UniversalAtWordBoundaries) {
  // Vacuous universals at the first and last position.
  for (const char* text : {"forall y. !S(y,x) & y<x | b(y) | x<=y",
                           "forall y. !S(x,y) & x<y | y<=x | a(y)",
                           "forall y. S(x,y) | !S(x,y) & a(y)"}) {
    Fo f = parse_fo(text);
    ASSERT_TRUE(is_positive(f));
    expect_same_at_positions(f, fo2p_to_utlp(f), 4);
  }
}

TEST(FoToUtl, Errors) {
  EXPECT_THROW(fo2p_to_utlp(parse_fo("exists y. exists z. x<y & y<z")), UsageError);
  EXPECT_THROW(fo2p_to_utlp(parse_fo("!a(x)")), UsageError);
  EXPECT_THROW(fo2p_to_utlp(parse_fo("x<y")), UsageError);
  EXPECT_THROW(fo2p_less_to_utlp(parse_fo("exists y. S(x,y)")), UsageError);
  EXPECT_THROW(fo2p_to_utlp(parse_fo("exists y. btw[a](x,y)")), UsageError);
}

TEST(FoToUtl, SmallFormulasAgree) {
  testing::FoGrammar g;
  testing::FoEnumerator en(g, 4);
  PositionSpace space(ab(), 3);
  ModelSpace models(ab(), {"x", "y"}, 1, 3);
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Fo& f : en.of_size(n)) {
      if (free_variables(f).size() > 1 || free_variables(f).count("y")) continue;
      Tl t = fo2p_to_utlp(f);
      ASSERT_TRUE(classify(t, FragmentId::UTLplus)) << render(t);
      BitTable tt = space.evaluate(t);
      BitTable ft = models.evaluate(f);
      for (std::size_t w = 0; w < space.words().size(); ++w) {
        std::size_t mw = models.index_of(space.words()[w]);
        std::size_t len = space.words()[w].size();
        for (std::size_t i = 0; i < len; ++i) {
          // valuation x = i, y = 0
          ASSERT_EQ(tt.test(space.offset(w) + i), ft.test(models.offset(mw) + i))
              << render(f) << " -> " << render(t) << " on " << render_word(space.words()[w]);
        }
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 5000u);
}

TEST(MonotoneRewrite, Examples) {
  Fo a = parse_fo("a(x)");
  Fo r = monotone_rewrite(a, "x");
  EXPECT_EQ(r, parse_fo("false | a(x) & true"));
  Fo none = parse_fo("exists y. x<y & b(y)");
  EXPECT_EQ(monotone_rewrite(none, "x"), none);
  Fo mixed = parse_fo("a(x) | b(y)");
  auto preds = ab();
  for (const Word& w : enumerate_words(preds, 3)) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        Valuation nu{{"x", i}, {"y", j}};
        ASSERT_EQ(eval_fo(w, nu, mixed), eval_fo(w, nu, monotone_rewrite(mixed, "x")));
      }
    }
  }
  EXPECT_THROW(monotone_rewrite(parse_fo("!a(x)"), "x"), UsageError);
}

TEST(MonotoneRewrite, EquivalentAndChainOrdered) {
  testing::FoGrammar g;
  testing::FoEnumerator en(g, 4);
  ModelSpace models(ab(), {"x", "y"}, 1, 3);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Fo& f : en.of_size(n)) {
      auto atoms = pivot_atoms(f, "x");
      if (atoms.empty()) continue;
      ASSERT_EQ(models.evaluate(f), models.evaluate(monotone_rewrite(f, "x"))) << render(f);
      const std::uint64_t full = (std::uint64_t{1} << atoms.size()) - 1;
      for (std::uint64_t s = 0; s <= full; ++s) {
        BitTable ts = models.evaluate(substitute_pivot_atoms(f, "x", atoms, s));
        for (std::uint64_t s2 = s; s2 <= full; s2 = (s2 + 1) | s) {
          BitTable ts2 = models.evaluate(substitute_pivot_atoms(f, "x", atoms, s2));
          ASSERT_TRUE((ts & ts2.flipped()).none()) << render(f);
        }
      }
    }
  }
}

TEST(Polynomials, ParseRenderAndMatch) {
  auto preds = PredicateSet::make({"a", "b", "c"});
  PolynomialExpr p = parse_polynomial("({a})* {b} ({c})*", preds);
  ASSERT_EQ(p.singles.size(), 1u);
  EXPECT_TRUE(p.matches(parse_word("{a}{a}{b}{c}", preds)));
  EXPECT_TRUE(p.matches(parse_word("{b}", preds)));
  EXPECT_FALSE(p.matches(parse_word("{a}{c}", preds)));
  EXPECT_EQ(parse_polynomial(render_polynomial(p), preds).stars, p.stars);
  PolynomialExpr q = parse_polynomial("{a}{b}", preds);
  EXPECT_EQ(q.stars.size(), 3u);
  EXPECT_TRUE(q.matches(parse_word("{a}{b}", preds)));
  EXPECT_FALSE(q.matches(parse_word("{a}{b}{b}", preds)));
  PolynomialExpr full = parse_polynomial("A*", preds);
  EXPECT_TRUE(full.singles.empty());
  EXPECT_TRUE(full.matches(Word(preds)));
  EXPECT_EQ(parse_polynomial("({a})* ; {b} ; A*", preds).singles.size(), 1u);
  EXPECT_THROW(parse_polynomial("({a})* ({b})*", preds), SyntaxError);
}

void expect_defines(const Fo& f, const testing::Membership& oracle, PredicateSetPtr preds,
                    std::size_t max_len) {
  auto r = equiv_bruteforce(testing::fo_sentence(f), oracle, preds, max_len, false);
  EXPECT_TRUE(r.equivalent) << render(f) << " differs on " << render_word(*r.counterexample);
}

TEST(Polynomials, ClosureExamples) {
  auto p3 = PredicateSet::make({"a", "b", "c"});
  auto p2 = ab();
  PolynomialExpr any_a = parse_polynomial("A* {a} A*", p2);
  Fo up = sigma2p_upward_closure(any_a);
  EXPECT_TRUE(classify(up, FragmentId::Sigma2plus));
  expect_defines(up, testing::upward_closure([&](const Word& w) { return any_a.matches(w); }),
                 p2, 5);
  PolynomialExpr degenerate = parse_polynomial("({a})*", p2);
  Fo d = sigma2p_upward_closure(degenerate);
  EXPECT_EQ(d.kind(), FoKind::Forall);
  EXPECT_TRUE(classify(d, FragmentId::Sigma2plus));
  PolynomialExpr abc = parse_polynomial("({a})* {b} ({c})*", p3);
  expect_defines(sigma2p_upward_closure(abc),
                 testing::upward_closure([&](const Word& w) { return abc.matches(w); }), p3, 4);
  Fo down = sigma2m_downward_closure(parse_polynomial("({a})*", p2));
  EXPECT_TRUE(classify(down, FragmentId::Sigma2minus));
  expect_defines(down, [](const Word& w) {
    for (Letter l : w.letters()) {
      if (l.contains(1)) return false;
    }
    return true;
  }, p2, 4);
  expect_defines(sigma2m_downward_closure(parse_polynomial("A*", p2)),
                 [](const Word&) { return true; }, p2, 4);
  Fo pi_full = pi2p_dual_closure(parse_polynomial("A*", p2));
  EXPECT_TRUE(classify(pi_full, FragmentId::Pi2plus));
  expect_defines(pi_full, [](const Word&) { return false; }, p2, 4);
  PolynomialExpr first_a = parse_polynomial("{a} A*", p2);
  expect_defines(pi2p_dual_closure(first_a),
                 testing::dual_closure([&](const Word& w) { return !first_a.matches(w); }), p2,
                 4);
}

TEST(Polynomials, RandomClosuresMatchOracles) {
  std::mt19937 rng(7);
  auto preds = ab();
  for (int i = 0; i < 10; ++i) {
    PolynomialExpr p = testing::random_polynomial(rng, preds, 2);
    auto in = [p](const Word& w) { return p.matches(w); };
    Fo up = sigma2p_upward_closure(p);
    Fo down = sigma2m_downward_closure(p);
    Fo dual = pi2p_dual_closure(p);
    ASSERT_TRUE(classify(up, FragmentId::Sigma2plus));
    ASSERT_TRUE(classify(down, FragmentId::Sigma2minus));
    ASSERT_TRUE(classify(dual, FragmentId::Pi2plus)) << render(dual);
    expect_defines(up, testing::upward_closure(in), preds, 4);
    expect_defines(down, testing::downward_closure(in), preds, 4);
    expect_defines(dual, testing::dual_closure([in](const Word& w) { return !in(w); }), preds,
                   4);
  }
}

}  // namespace
}  // namespace poslog
