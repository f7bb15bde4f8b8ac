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

#include "poslog/error.hpp"
#include "poslog/semantics.hpp"
#include "support/enumerate.hpp"

namespace poslog {
namespace {

PredicateSetPtr abc() { return PredicateSet::make({"a", "b", "c"}); }

TEST(EvalFo, ExampleVerdicts) {
  auto p = abc();
  Fo f = parse_fo("exists x. forall y. (x=y | !a(y))");
  EXPECT_FALSE(eval_fo(parse_word("{a}{a,b}", p), {}, f));
  EXPECT_TRUE(eval_fo(parse_word("{a,b,c}{b}{}", p), {}, f));
  EXPECT_TRUE(eval_fo(Word(p), {}, parse_fo("forall y. a(y)")));
  EXPECT_FALSE(eval_fo(Word(p), {}, parse_fo("exists y. a(y)")));
}

TEST(EvalFo, Errors) {
  auto p = abc();
  Word w = parse_word("{a}{b}", p);
  EXPECT_THROW(eval_fo(w, {}, parse_fo("a(x)")), UsageError);
  EXPECT_THROW(eval_fo(w, {{"x", 2}}, parse_fo("a(x)")), UsageError);
  EXPECT_THROW(eval_fo(w, {{"x", 0}}, parse_fo("d(x)")), UsageError);
}

TEST(EvalFo, BetweenIsStrictAndSymmetric) {
  auto p = abc();
  Word w = parse_word("{a}{b}{c}", p);
  Fo f = parse_fo("btw[b](x,y)");
  EXPECT_TRUE(eval_fo(w, {{"x", 0}, {"y", 2}}, f));
  EXPECT_TRUE(eval_fo(w, {{"x", 2}, {"y", 0}}, f));
  EXPECT_FALSE(eval_fo(w, {{"x", 1}, {"y", 2}}, f));
  EXPECT_FALSE(eval_fo(w, {{"x", 1}, {"y", 1}}, f));
}

TEST(EvalTl, PositionExamples) {
  auto p = abc();
  Word ab = parse_word("{a}{b}", p);
  EXPECT_TRUE(eval_tl_at(ab, 0, parse_tl("X b")));
  EXPECT_FALSE(eval_tl_at(ab, 1, parse_tl("X b")));
  EXPECT_FALSE(eval_tl_at(ab, 0, parse_tl("Y a")));
  EXPECT_TRUE(eval_tl_at(parse_word("{a}{a}{b}", p), 0, parse_tl("a U b")));
  EXPECT_THROW(eval_tl_at(ab, 2, parse_tl("a")), UsageError);
  // F, G, P, H are strict.
  EXPECT_FALSE(eval_tl_at(ab, 0, parse_tl("F a")));
  EXPECT_TRUE(eval_tl_at(ab, 1, parse_tl("G a")));
  EXPECT_TRUE(eval_tl_at(ab, 0, parse_tl("H b")));
  EXPECT_TRUE(eval_tl_at(ab, 1, parse_tl("P a")));
}

TEST(EvalTl, EmptyWordConvention) {
  auto p = abc();
  Word e(p);
  EXPECT_TRUE(eval_ltl(parse_word("{a}", p), parse_tl("a")));
  EXPECT_TRUE(eval_ltl(e, parse_tl("G a")));
  EXPECT_FALSE(eval_ltl(e, parse_tl("F a")));
  EXPECT_FALSE(eval_ltl(e, parse_tl("a")));
  EXPECT_TRUE(eval_ltl(e, parse_tl("a R b")));
  EXPECT_TRUE(eval_ltl(e, parse_tl("a Q b")));
  EXPECT_FALSE(eval_ltl(e, parse_tl("a S b")));
  EXPECT_TRUE(eval_ltl(e, parse_tl("!a & (true | X a)")));
}

TEST(EquivBruteforce, Examples) {
  auto one = PredicateSet::make({"a"});
  auto ltl = [](const char* text) {
    Tl f = parse_tl(text);
    return [f](const Word& w) { return eval_ltl(w, f); };
  };
  EXPECT_TRUE(equiv_bruteforce(ltl("F a"), ltl("X (true U a)"), one, 4, false).equivalent);
  auto r = equiv_bruteforce(ltl("a"), ltl("X a"), one, 2, false);
  ASSERT_FALSE(r.equivalent);
  EXPECT_EQ(render_word(*r.counterexample), "{a}");
  EXPECT_TRUE(equiv_bruteforce(ltl("a U b"), ltl("a U b"), PredicateSet::make({"a", "b"}), 3,
                               true).equivalent);
}

testing::TlGrammar full_tl_grammar() {
  testing::TlGrammar g;
  g.unary = {TlKind::Not, TlKind::X, TlKind::Y, TlKind::F, TlKind::G, TlKind::P, TlKind::H};
  g.binary = {TlKind::And, TlKind::Or, TlKind::U, TlKind::R, TlKind::S,
              TlKind::Q, TlKind::XU, TlKind::YS};
  return g;
}

TEST(BatchEvaluation, PositionTablesMatchReference) {
  auto p = PredicateSet::make({"a", "b"});
  PositionSpace space(p, 4);
  testing::TlEnumerator en(full_tl_grammar(), 4);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Tl& f : en.of_size(n)) {
      BitTable t = space.evaluate(f);
      for (std::size_t w = 0; w < space.words().size(); ++w) {
        const Word& u = space.words()[w];
        for (std::size_t i = 0; i < u.size(); ++i) {
          ASSERT_EQ(t.test(space.offset(w) + i), eval_tl_at(u, i, f))
              << render(f) << " on " << render_word(u) << " at " << i;
        }
      }
    }
  }
}

TEST(BatchEvaluation, ModelTablesMatchReference) {
  auto p = PredicateSet::make({"a", "b"});
  ModelSpace space(p, {"x", "y"}, 1, 3);
  testing::FoGrammar g;
  g.negation = true;
  g.bins.push_back(BinKind::Between);
  g.bins.erase(g.bins.begin() + 1, g.bins.begin() + 5);  // keep Eq, NotSucc, Between
  g.bins.pop_back();
  testing::FoEnumerator en(g, 4);
  Fo btw = Fo::bin(BinaryPredicate::between(parse_guard("a & !b")), "x", "y");
  std::vector<Fo> extra{btw, Fo::exists("y", Fo::conj(btw, Fo::atom("b", "y")))};
  auto check = [&](const Fo& f) {
    BitTable t = space.evaluate(f);
    for (std::size_t w = 0; w < space.words().size(); ++w) {
      const Word& u = space.words()[w];
      for (std::size_t v = 0; v < space.block_size(w); ++v) {
        Valuation nu{{"x", space.position_of(w, v, 0)}, {"y", space.position_of(w, v, 1)}};
        ASSERT_EQ(t.test(space.offset(w) + v), eval_fo(u, nu, f)) << render(f);
      }
    }
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Fo& f : en.of_size(n)) check(f);
  }
  for (const Fo& f : extra) check(f);
  EXPECT_EQ(space.index_of(space.words()[17]), 17u);
}

TEST(Properties, ReleaseIsDualOfUntil) {
  auto p = PredicateSet::make({"a", "b"});
  PositionSpace space(p, 4);
  testing::TlGrammar g;
  g.unary = {TlKind::Not, TlKind::X, TlKind::Y};
  g.binary = {TlKind::And, TlKind::U, TlKind::S};
  testing::TlEnumerator en(g, 3);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const Tl& a : en.of_size(n)) {
      for (const Tl& b : en.of_size(1)) {
        Tl r = Tl::binary(TlKind::R, a, b);
        Tl dual = Tl::negate(Tl::binary(TlKind::U, Tl::negate(a), Tl::negate(b)));
        ASSERT_EQ(space.evaluate(r), space.evaluate(dual)) << render(r);
        Tl xu = Tl::binary(TlKind::XU, a, b);
        ASSERT_EQ(space.evaluate(xu), space.evaluate(desugar(xu))) << render(xu);
        // Q is the time mirror of R.
        Tl q = Tl::binary(TlKind::Q, a, b);
        Tl qdual = Tl::negate(Tl::binary(TlKind::S, Tl::negate(a), Tl::negate(b)));
        ASSERT_EQ(space.evaluate(q), space.evaluate(qdual)) << render(q);
      }
    }
  }
  // Reference evaluator agrees with the duality too.
  for (const Word& u : space.words()) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      EXPECT_EQ(eval_tl_at(u, i, parse_tl("a R b")), eval_tl_at(u, i, parse_tl("!(!a U !b)")));
    }
  }
}

TEST(Properties, PositiveFormulasAreMonotone) {
  auto p = PredicateSet::make({"a", "b"});
  ModelSpace space(p, {"x", "y"}, 1, 3);
  testing::FoEnumerator en(testing::FoGrammar{}, 4);
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Fo& f : en.of_size(n)) {
      BitTable t = space.evaluate(f);
      for (std::size_t w = 0; w < space.words().size(); ++w) {
        const Word& u = space.words()[w];
        for_each_word_above(u, [&](const Word& v) {
          std::size_t wv = space.index_of(v);
          std::uint64_t tu = t.extract(space.offset(w), space.block_size(w));
          std::uint64_t tv = t.extract(space.offset(wv), space.block_size(wv));
          ASSERT_EQ(tu & ~tv, 0u) << render(f);
        });
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 20000u);
  // TL⁺ through the position tables.
  PositionSpace ps(p, 3);
  testing::TlGrammar g = full_tl_grammar();
  g.unary.erase(g.unary.begin());
  testing::TlEnumerator ten(g, 4);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Tl& f : ten.of_size(n)) {
      BitTable t = ps.evaluate(f);
      for (std::size_t w = 0; w < ps.words().size(); ++w) {
        for_each_word_above(ps.words()[w], [&](const Word& v) {
          std::size_t len = v.size();
          std::size_t wv = w;
          while (ps.words()[wv] != v) ++wv;
          ASSERT_EQ(t.extract(ps.offset(w), len) & ~t.extract(ps.offset(wv), len), 0u)
              << render(f);
        });
      }
    }
  }
}

}  // namespace
}  // namespace poslog
