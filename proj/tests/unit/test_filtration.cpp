#include <gtest/gtest.h>

#include "jhkit/error.hpp"
#include "jhkit/filtration.hpp"

using namespace jhkit;

namespace {

AlphabetPtr xy() { return Alphabet::parse("x,y"); }
Word W(const char* s) { return parse_word(xy(), s); }

}  // namespace

TEST(Filtration, Thresholds) {
  EXPECT_EQ((FiltrationSpec{0, 5, 2}).threshold(), 3);
  EXPECT_EQ((FiltrationSpec{0, 2, 3}).threshold(), 1);
  EXPECT_EQ((FiltrationSpec{0, 6, 3}).threshold(), 2);
  EXPECT_THROW((FiltrationSpec{4, 2, 1}).validate(), PreconditionError);
}

TEST(Filtration, Membership) {
  EXPECT_EQ(gamma_member(W("x^-1 y^-1 x y"), {0, 2, 1}, 3).verdict, Verdict::yes);
  EXPECT_EQ(gamma_member(W("x"), {0, 2, 1}, 3).verdict, Verdict::no);
  EXPECT_EQ(gamma_member(W("x^2"), {2, 2, 1}, 3).verdict, Verdict::yes);
  EXPECT_EQ(gamma_member(W("x^2"), {0, 2, 1}, 3).verdict, Verdict::no);
  EXPECT_THROW(gamma_member(W("x"), {0, 3, 1}, 2), PreconditionError);
  // a deep commutator truncated too early is only bounded below
  auto r = gamma_member(W("x^-1 y^-1 x y"), {0, 1, 1}, 1);
  EXPECT_EQ(r.verdict, Verdict::yes);
  EXPECT_FALSE(r.valuation.exact);
}

TEST(Filtration, SamplesAreCertified) {
  std::mt19937_64 rng(11);
  for (int p : {0, 2, 3})
    for (int m : {1, 2})
      for (int n = 1; n <= 4; ++n) {
        FiltrationSpec spec{p, n, m};
        for (const auto& w : sample_gamma(spec, xy(), rng, 5))
          EXPECT_EQ(gamma_member(w, spec, spec.threshold()).verdict, Verdict::yes);
      }
}

TEST(Filtration, JamesHopfInstances) {
  EXPECT_TRUE(verify_jh_filtration(W("y^-1 x^-1 y x x^-1 x"), {0, 2, 2}));
  auto c3 = commutator(commutator(W("x"), W("y")), W("x"));
  EXPECT_TRUE(verify_jh_filtration(c3, {0, 3, 2}));
  EXPECT_TRUE(verify_jh_filtration(commutator(W("x"), W("y")), {0, 2, 3}));
  auto sq = commutator(W("x"), W("y")).pow(2);
  EXPECT_TRUE(verify_jh_filtration(sq, {2, 4, 2}));
  EXPECT_THROW(verify_jh_filtration(W("x"), {0, 2, 2}), PreconditionError);
}

TEST(Filtration, WhiteheadInstances) {
  auto S2 = Alphabet::smash(xy(), 2);
  EXPECT_TRUE(verify_whitehead_filtration(parse_word(S2, "x/\\y"), {0, 2, 2}));
  auto v = commutator(parse_word(S2, "x/\\y"), parse_word(S2, "y/\\x"));
  EXPECT_TRUE(verify_whitehead_filtration(v, {0, 4, 2}));
  EXPECT_TRUE(verify_whitehead_filtration(Word(S2), {0, 6, 2}));
}

TEST(Pattern, DirectMatchesClosedForm) {
  std::vector<PatternInput> cases{{1, {1}, {{1}}}, {2, {-1}, {{1, 1}}}, {1, {1, -1}, {{1}, {2}}},
                                  {2, {-1, 1}, {{2, 1}}}, {2, {-1, -1}, {{1, 2}, {2, 2}}}};
  for (const auto& in : cases) EXPECT_EQ(polynomiality_pattern(in), polynomiality_closed_form(in));
  EXPECT_EQ(polynomiality_pattern({1, {1}, {{1}}}), 1);
  for (int a : {1, -1})
    for (int b : {1, -1}) {
      PatternInput in{2, {a, b, 1}, {{1, 2}}};
      EXPECT_EQ(pattern_letter_count(in), 2);
      EXPECT_EQ(polynomiality_pattern(in), 0);
    }
}

TEST(TruncatedUnits, Embedding) {
  EXPECT_EQ(to_string(unit_embed(W("x"), 2, 2)), "1 + x");
  EXPECT_EQ(to_string(unit_embed(W("x^-1 y^-1 x y"), 3, 2)), "1");
  EXPECT_TRUE(unit_equal(unit_embed(W("x^2"), 2, 2), unit_embed(Word(xy()), 2, 2)));
  auto u = unit_embed(W("x y^-1"), 0, 4), v = unit_embed(W("y x"), 0, 4);
  EXPECT_EQ(unit_multiply(u, v), unit_embed(W("x y^-1 y x"), 0, 4));
  EXPECT_EQ(unit_retruncate(u, 2), unit_embed(W("x y^-1"), 0, 2));
}
