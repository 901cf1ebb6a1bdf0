#include <gtest/gtest.h>

#include <random>

#include "jhkit/cohen.hpp"
#include "jhkit/error.hpp"

using namespace jhkit;

namespace {

AlphabetPtr xy() { return Alphabet::parse("x,y"); }
Word W(const char* s) { return parse_word(xy(), s); }

}  // namespace

TEST(Cohen, Parsing) {
  auto cw = parse_cohen_word("(2,2,sigma=(1 2))^-1 ; (1,1)");
  ASSERT_EQ(cw.factors.size(), 2u);
  EXPECT_EQ(cw.factors[0].exponent, -1);
  EXPECT_EQ(cw.factors[0].generator.sigma, Permutation::parse_cycles("(1 2)", 2));
  EXPECT_EQ(parse_cohen_word(to_string(cw)), cw);
  auto d = parse_cohen_word("(1,2,delta=1 1)");
  EXPECT_EQ(d.factors[0].generator.delta, (std::vector<int>{1, 1}));
  EXPECT_THROW(parse_cohen_word("(1,2)"), std::invalid_argument);
  EXPECT_THROW(parse_cohen_word("(2,1,delta=1)"), std::invalid_argument);
  EXPECT_THROW(parse_cohen_word("(2,2"), std::invalid_argument);
  EXPECT_TRUE(parse_cohen_word("").factors.empty());
}

TEST(Cohen, Evaluation) {
  EXPECT_EQ(eval(parse_cohen_word("(1,1)"), W("x y^-1")), W("x y^-1"));
  EXPECT_EQ(eval(parse_cohen_word("(2,2,sigma=(1 2))"), W("x y")), W("y^-1 x^-1 y x"));
  EXPECT_EQ(eval(parse_cohen_word("(2,2)"), W("x y")), W("x^-1 y^-1 x y"));
  // the diagonal doubles the letter before bracketing
  EXPECT_EQ(eval(parse_cohen_word("(1,2,delta=1 1)"), W("x")), Word(xy()));
  EXPECT_EQ(eval(CohenWord{}, W("x")), Word(xy()));
}

TEST(Cohen, PointwiseProduct) {
  auto a = parse_cohen_word("(1,1)"), b = parse_cohen_word("(2,2)");
  for (const char* s : {"x y", "x^-1 y x", "y^2 x^-1"}) {
    auto w = W(s);
    EXPECT_EQ(eval(a * b, w), eval(a, w) * eval(b, w));
    EXPECT_TRUE(eval(b * b.inverse(), w).empty());
  }
}

TEST(Cohen, TowerLevels) {
  auto cw = parse_cohen_word("(1,1) ; (2,2,sigma=(1 2))");
  auto w = W("x y^-1 x");
  for (int p : {0, 2})
    for (int level = 1; level <= 4; ++level)
      EXPECT_EQ(eval_mod(cw, w, p, level), unit_embed(eval(cw, w), p, level));
  // weight-2 factors act trivially on level 2
  auto high = parse_cohen_word("(2,2)");
  EXPECT_EQ(eval_mod(high, w, 0, 2), unit_embed(Word(xy()), 0, 2));
}

TEST(Cohen, AssociatedGraded) {
  TensorAmbient amb{2, Alphabet::parse("a,b,c"), 3};
  EXPECT_EQ(induced_E0(parse_cohen_word("(1,1)"), amb), identity_endo(amb));
  EXPECT_EQ(induced_E0(CohenWord{}, amb), unit_endo(amb));
  for (const auto& s : Permutation::all(2)) {
    CohenWord cw{{{CohenGenerator::plain(2, s), 1}}};
    EXPECT_EQ(induced_E0(cw, amb), generator_endo(2, s, amb));
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 4; ++t) {
    auto u = random_cohen_word(rng, 3, 2), v = random_cohen_word(rng, 3, 2);
    EXPECT_EQ(induced_E0(u * v, amb), convolution(induced_E0(u, amb), induced_E0(v, amb)));
  }
}

TEST(Cohen, RandomGeneratorsAreValid) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    auto g = random_generator(rng, 4);
    EXPECT_NO_THROW(g.validate());
    EXPECT_LE(g.k, g.l);
  }
  EXPECT_THROW(CohenGenerator::make(2, 2, {1, 1}, Permutation::identity(2)), PreconditionError);
}
