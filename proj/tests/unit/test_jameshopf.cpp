#include <gtest/gtest.h>

#include "jhkit/error.hpp"
#include "jhkit/jameshopf.hpp"
#include "jhkit/series.hpp"

using namespace jhkit;

namespace {

const CoefficientRing Z = CoefficientRing::integers();
AlphabetPtr xy() { return Alphabet::parse("x,y"); }
Word W(const char* s) { return parse_word(xy(), s); }
Word S(int k, const char* s) { return parse_word(Alphabet::smash(xy(), k), s); }

}  // namespace

TEST(Admissible, NegativeSyllablesMayRepeat) {
  auto seqs = admissible_sequences(W("x x^-1"), 2, SequenceOrder::right_lex);
  // built from the unreduced syllables so that the cancelling pair is visible
  std::vector<Syllable> raw{{0, 1}, {0, -1}};
  std::vector<std::pair<std::vector<int>, int>> got;
  for_each_admissible(raw, 2, SequenceOrder::right_lex, [&](std::span<const int> idx, int sign) {
    got.push_back({{idx[0] + 1, idx[1] + 1}, sign});
  });
  std::vector<std::pair<std::vector<int>, int>> expected{{{1, 2}, -1}, {{2, 2}, 1}};
  EXPECT_EQ(got, expected);
  EXPECT_TRUE(seqs.empty());  // x x^-1 reduces to the empty word
}

TEST(Admissible, PositiveWordsGiveIncreasingSubsequences) {
  auto w = W("x y x y x");
  for (int k = 1; k <= 5; ++k) {
    auto seqs = admissible_sequences(w, k, SequenceOrder::right_lex);
    long long binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (5 - i) / (i + 1);
    EXPECT_EQ(static_cast<long long>(seqs.size()), binom);
    for (const auto& s : seqs) {
      EXPECT_EQ(s.sign, 1);
      for (std::size_t j = 1; j < s.indices.size(); ++j) EXPECT_LT(s.indices[j - 1], s.indices[j]);
    }
  }
  auto neg = admissible_sequences(W("x^-1"), 3, SequenceOrder::right_lex);
  ASSERT_EQ(neg.size(), 1u);
  EXPECT_EQ(neg[0].indices, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(neg[0].sign, -1);
}

TEST(JamesHopf, SmallCases) {
  for (const char* w : {"x", "x y^-1 x", "y^-2 x^3"}) EXPECT_EQ(to_string(james_hopf(W(w), 1)), w);
  std::vector<Syllable> cancel{{0, 1}, {0, -1}};
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(james_hopf(xy(), cancel, k, SequenceOrder::right_lex).empty());
  EXPECT_EQ(james_hopf(W("x^-1"), 2), S(2, "x/\\x"));
  auto X3 = Alphabet::parse("x,y,z");
  auto h = james_hopf(parse_word(X3, "x y z"), 2);
  EXPECT_EQ(h, parse_word(Alphabet::smash(X3, 2), "x/\\y x/\\z y/\\z"));
  EXPECT_TRUE(james_hopf(W("x"), 2).empty());
}

TEST(JamesHopf, CommutatorExample) {
  auto w = W("x^-1 y^-1 x y");
  // the displayed word is the first-coordinate lexicographic arrangement
  EXPECT_EQ(james_hopf(w, 2, SequenceOrder::left_lex),
            S(2, "x/\\x x/\\y x/\\x^-1 x/\\y^-1 y/\\y y/\\x^-1 y/\\y^-1 x/\\y"));
  EXPECT_EQ(james_hopf(w, 2, SequenceOrder::right_lex),
            S(2, "x/\\x x/\\y y/\\y x/\\x^-1 y/\\x^-1 x/\\y^-1 y/\\y^-1 x/\\y"));
  auto target = Alphabet::smash(xy(), 2);
  EXPECT_EQ(to_string(abelianized_hopf(w, 2), *target), "{x/\\y:+1, y/\\x:-1}");
  EXPECT_EQ(abelianized(james_hopf(w, 2, SequenceOrder::left_lex)), abelianized_hopf(w, 2));
}

TEST(JamesHopf, MagnusCommutativity) {
  for (const char* s : {"x^-1", "x y^-1 x^2 y", "y^-1 x^-1 y^-1 x y"}) {
    auto w = W(s);
    auto mu = magnus(w, 3, Z);
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(as_component(abelianized_hopf(w, k), xy(), k).coeffs, pi_k(mu, k).coeffs) << s;
  }
}

TEST(JamesHopf, StreamingMagnusMatchesWord) {
  auto w = W("x^-1 y^2 x y^-1 x^-2 y");
  for (int k = 1; k <= 3; ++k)
    for (auto order : {SequenceOrder::right_lex, SequenceOrder::left_lex})
      EXPECT_EQ(hopf_magnus(w, k, 3, Z, order), magnus(james_hopf(w, k, order), 3, Z));
}

TEST(JamesHopf, LinearExtension) {
  auto one = RingElement::one(Z, xy());
  auto x = RingElement::of(Z, W("x")), y = RingElement::of(Z, W("y"));
  EXPECT_TRUE(james_hopf_linear(x - one, 2).is_zero());
  EXPECT_EQ(james_hopf_linear((x - one) * (y - one), 1), (x - one) * (y - one));
  auto target = Alphabet::smash(xy(), 2);
  auto h = james_hopf_linear((x - one) * (y - one), 2);
  EXPECT_EQ(h, RingElement::of(Z, parse_word(target, "x/\\y")) - RingElement::one(Z, target));
}

TEST(JamesHopf, OrderParsing) {
  EXPECT_EQ(parse_sequence_order("left"), SequenceOrder::left_lex);
  EXPECT_EQ(parse_sequence_order("right"), SequenceOrder::right_lex);
  EXPECT_THROW(parse_sequence_order("up"), std::invalid_argument);
  EXPECT_THROW(james_hopf(W("x"), 0), std::invalid_argument);
}
