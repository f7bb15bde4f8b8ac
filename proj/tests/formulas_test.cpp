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
#include "poslog/formulas.hpp"
#include "support/enumerate.hpp"

namespace poslog {
namespace {

TEST(FoParser, ExampleFormula) {
  Fo f = parse_fo("exists x. forall y. (x=y | !a(y))");
  ASSERT_EQ(f.kind(), FoKind::Exists);
  EXPECT_EQ(f.var(), "x");
  const Fo& inner = f.body();
  ASSERT_EQ(inner.kind(), FoKind::Forall);
  ASSERT_EQ(inner.body().kind(), FoKind::Or);
  EXPECT_EQ(inner.body().rhs().kind(), FoKind::Not);
  EXPECT_FALSE(is_positive(f));
  EXPECT_EQ(f.size(), 6u);
}

TEST(FoParser, TrivialAtomKept) {
  Fo f = parse_fo("a(x) & x<x");
  ASSERT_EQ(f.kind(), FoKind::And);
  EXPECT_EQ(f.rhs().kind(), FoKind::Bin);
  EXPECT_EQ(f.rhs().var(), f.rhs().var2());
}

TEST(FoParser, PrecedenceAndScope) {
  Fo f = parse_fo("a(x) | b(x) & c(x)");
  ASSERT_EQ(f.kind(), FoKind::Or);
  EXPECT_EQ(f.rhs().kind(), FoKind::And);
  Fo g = parse_fo("exists x. a(x) & b(x)");
  ASSERT_EQ(g.kind(), FoKind::Exists);
  EXPECT_EQ(g.body().kind(), FoKind::And);
  Fo h = parse_fo("!S(x,y) & !(S(x,y))");
  EXPECT_EQ(h.lhs().kind(), FoKind::Bin);
  EXPECT_EQ(h.lhs().bin_pred().kind, BinKind::NotSucc);
  EXPECT_EQ(h.rhs().kind(), FoKind::Not);
  Fo b = parse_fo("btw[a & !b](x,y)");
  EXPECT_EQ(b.bin_pred().kind, BinKind::Between);
  EXPECT_FALSE(is_positive(b));
  EXPECT_TRUE(is_positive(parse_fo("btw[a | b](x,y)")));
}

TEST(FoParser, SignatureAndSyntaxErrors) {
  EXPECT_THROW(parse_fo("S(x,y)", Signature::less()), SyntaxError);
  EXPECT_THROW(parse_fo("x<y", Signature::succ()), SyntaxError);
  EXPECT_NO_THROW(parse_fo("x=y & x!=y", Signature()));
  EXPECT_THROW(parse_fo("btw[a](x,y)", Signature::b0()), SyntaxError);
  try {
    parse_fo("a(x) & & b(x)");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
  EXPECT_THROW(parse_fo("exists . a(x)"), SyntaxError);
  EXPECT_THROW(parse_fo("(a(x)"), SyntaxError);
}

TEST(FoAnalysis, PositivityAndVariables) {
  EXPECT_TRUE(is_positive(parse_fo("exists y. S(x,y) & a(y)")));
  EXPECT_TRUE(is_positive(Fo::bottom()));
  EXPECT_EQ(distinct_vars(parse_fo("a(x)")), 1u);
  EXPECT_EQ(distinct_vars(parse_fo("exists x. exists y. x<y & (exists x. y<x)")), 2u);
  Fo fo3 = parse_fo(
      "exists x. a(x) & (exists y. x<y & b(y) & (exists z. y<z & c(z) & "
      "(exists x. z<x & a(x))))");
  EXPECT_EQ(distinct_vars(fo3), 3u);
  EXPECT_EQ(free_variables(parse_fo("exists y. S(x,y) & a(y)")),
            (std::set<std::string>{"x"}));
}

TEST(FoAnalysis, QuantifierRank) {
  EXPECT_EQ(quantifier_rank(parse_fo("a(x)")), 0u);
  EXPECT_EQ(quantifier_rank(parse_fo("exists x. a(x)")), 1u);
  EXPECT_EQ(quantifier_rank(parse_fo("(exists x. a(x)) & (exists y. forall x. b(x))")), 2u);
  EXPECT_EQ(quantifier_rank(parse_fo("!exists x. a(x)")), 1u);
}

TEST(Classify, PrenexShapes) {
  Fo s2 = parse_fo("exists x0. exists x1. forall y. (x0<x1 & a(x0) & (y<=x0 | b(y)))");
  EXPECT_TRUE(classify(s2, FragmentId::Sigma2));
  EXPECT_TRUE(classify(s2, FragmentId::Sigma2plus));
  EXPECT_FALSE(classify(s2, FragmentId::Pi2));
  EXPECT_FALSE(classify(parse_fo("exists x. a(x) & forall y. b(y)"), FragmentId::Sigma2));
  Fo m = parse_fo("exists x. forall y. (!b(x) & (y<=x | !a(y)))");
  EXPECT_TRUE(classify(m, FragmentId::Sigma2minus));
  EXPECT_FALSE(classify(m, FragmentId::Sigma2plus));
  EXPECT_FALSE(classify(parse_fo("exists x. (b(x) & !a(x))"), FragmentId::Sigma2minus));
  EXPECT_FALSE(classify(parse_fo("exists x. !(!a(x))"), FragmentId::Sigma2minus));
  EXPECT_TRUE(classify(parse_fo("forall x. exists y. x<y | a(y)"), FragmentId::Pi2plus));
}

TEST(Classify, TemporalFragments) {
  Tl f = parse_tl("G a & X F b");
  EXPECT_TRUE(classify(f, FragmentId::UTLplus));
  EXPECT_FALSE(classify(f, FragmentId::UTLplus_PFHG));
  EXPECT_FALSE(classify(parse_tl("a U b"), FragmentId::UTL));
  EXPECT_TRUE(classify(parse_tl("a U b"), FragmentId::LTLplus));
  EXPECT_FALSE(classify(parse_tl("Y a"), FragmentId::LTLplus));
  EXPECT_FALSE(classify(parse_tl("!a"), FragmentId::LTLplus));
  EXPECT_TRUE(classify(parse_tl("!a"), FragmentId::LTL));
  EXPECT_TRUE(classify(parse_tl("a Q (b S c)"), FragmentId::TLplus));
  EXPECT_FALSE(classify(parse_tl("a"), FragmentId::FOplus));
  EXPECT_FALSE(classify(parse_fo("a(x)"), FragmentId::LTL));
  EXPECT_TRUE(classify(parse_fo("exists y. S(x,y)"), FragmentId::FO2plus, Signature::b0()));
  EXPECT_FALSE(classify(parse_fo("exists y. S(x,y)"), FragmentId::FO2plus, Signature::less()));
}

TEST(TlParser, OperatorsAndAssociativity) {
  Tl f = parse_tl("F a");
  ASSERT_EQ(f.kind(), TlKind::F);
  EXPECT_EQ(f.body().pred(), "a");
  Tl u = parse_tl("a U b U c");
  ASSERT_EQ(u.kind(), TlKind::U);
  EXPECT_EQ(u.rhs().kind(), TlKind::U);
  Tl m = parse_tl("a & b U c | d");
  ASSERT_EQ(m.kind(), TlKind::Or);
  EXPECT_EQ(m.lhs().rhs().kind(), TlKind::U);
  EXPECT_THROW(parse_tl("a U"), SyntaxError);
  EXPECT_THROW(parse_tl("X"), SyntaxError);
  EXPECT_THROW(parse_tl("a b"), SyntaxError);
}

TEST(TlTransforms, Desugar) {
  EXPECT_EQ(desugar(parse_tl("a XU b")), parse_tl("X (a U b)"));
  EXPECT_EQ(desugar(parse_tl("a YS b")), parse_tl("Y (a S b)"));
  EXPECT_EQ(desugar(parse_tl("F a")), parse_tl("F a"));
  Tl t = parse_tl("(a XU b) YS G c");
  EXPECT_EQ(desugar(desugar(t)), desugar(t));
}

TEST(TlTransforms, ConstantFolding) {
  EXPECT_EQ(simplify_constants(parse_tl("true & X false | a")), parse_tl("a"));
  EXPECT_EQ(simplify_constants(parse_tl("G true & b")), parse_tl("b"));
  EXPECT_EQ(simplify_constants(parse_tl("X true")), parse_tl("X true"));
  EXPECT_EQ(simplify_constants(parse_fo("(exists x. false) | a(y)")), parse_fo("a(y)"));
  EXPECT_EQ(simplify_constants(parse_fo("exists x. true")), parse_fo("exists x. true"));
}

TEST(FoTransforms, NegationNormalForm) {
  EXPECT_EQ(push_negations(parse_fo("!(x<y | !a(x))")), parse_fo("y<=x & a(x)"));
  EXPECT_EQ(push_negations(parse_fo("!exists x. !(S(x,y))")), parse_fo("forall x. S(x,y)"));
  EXPECT_EQ(push_negations(parse_fo("!(x=y & !S(x,y))")), parse_fo("x!=y | S(x,y)"));
  EXPECT_EQ(swap_variables(parse_fo("exists y. x<y"), "x", "y"), parse_fo("exists x. y<x"));
}

TEST(Printing, RoundTripOnEnumeratedFo) {
  testing::FoGrammar g;
  g.negation = true;
  g.bins.push_back(BinKind::Between);
  g.bins.pop_back();  // keep the enumeration small; between atoms are checked below
  testing::FoEnumerator en(g, 4);
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Fo& f : en.of_size(n)) {
      ASSERT_EQ(parse_fo(render(f)), f) << render(f);
      ++checked;
    }
  }
  EXPECT_GT(checked, 10000u);
  for (const char* text : {"btw[a & (b | !c)](x,y)", "!(S(x,y)) & !S(y,x)",
                           "(exists x. a(x)) & b(y)", "a(x) & (exists x. a(x) | b(x))",
                           "!(exists x. a(x)) | b(y)", "(a(x) | b(x)) & c(x)",
                           "a(x) | (b(x) | c(x))", "!!a(x)"}) {
    Fo f = parse_fo(text);
    EXPECT_EQ(parse_fo(render(f)), f) << text << " -> " << render(f);
  }
}

TEST(Printing, RoundTripOnEnumeratedTl) {
  testing::TlGrammar g;
  g.unary = {TlKind::Not, TlKind::X, TlKind::Y, TlKind::F, TlKind::G, TlKind::P, TlKind::H};
  g.binary = {TlKind::And, TlKind::Or, TlKind::U, TlKind::R, TlKind::S,
              TlKind::Q, TlKind::XU, TlKind::YS};
  testing::TlEnumerator en(g, 5);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Tl& f : en.of_size(n)) {
      ASSERT_EQ(parse_tl(render(f)), f) << render(f);
    }
  }
}

TEST(Classify, Fo2PlusImpliesFoPlus) {
  testing::FoGrammar g;
  g.negation = true;
  g.vars = {"x", "y", "z"};
  g.bins = {BinKind::Lt, BinKind::Succ};
  testing::FoEnumerator en(g, 5);
  for (std::size_t n = 1; n <= 6; ++n) {
    en.for_each(n, [](const Fo& f) {
      if (classify(f, FragmentId::FO2plus)) {
        ASSERT_TRUE(classify(f, FragmentId::FOplus));
        ASSERT_LE(distinct_vars(f), 2u);
      }
    });
  }
}

TEST(Fragments, Names) {
  EXPECT_EQ(parse_fragment("fo2+"), FragmentId::FO2plus);
  EXPECT_EQ(parse_fragment("UTLplus_PFHG"), FragmentId::UTLplus_PFHG);
  EXPECT_EQ(fragment_name(FragmentId::Sigma2minus), "Sigma2minus");
  EXPECT_THROW(parse_fragment("nope"), UsageError);
}

}  // namespace
}  // namespace poslog
