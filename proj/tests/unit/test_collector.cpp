#include <gtest/gtest.h>

#include "jhkit/collector.hpp"
#include "jhkit/series.hpp"
#include "jhkit/verify.hpp"

using namespace jhkit;

namespace {

AlphabetPtr xy() { return Alphabet::parse("x,y"); }
MixedSyllable A(Letter l, int e) { return {true, l, {}, e}; }
MixedSyllable B(Letter l, int e) { return {false, 0, CommSymbol{l, {}}, e}; }

Word as_word(const CollectResult& r, const AlphabetPtr& ab) {
  return to_free_word(r.collected, ab) * to_free_word(r.remainder, ab);
}

}  // namespace

TEST(Collector, EmbedSum) {
  auto X = xy();
  EXPECT_EQ(to_string(embed_sum(parse_word(X, "x"))), "a_x b_x");
  EXPECT_EQ(to_string(embed_sum(parse_word(X, "x^-1"))), "b_x^-1 a_x^-1");
  EXPECT_EQ(to_string(embed_sum(parse_word(X, "x y"))), "a_x b_x a_y b_y");
}

TEST(Collector, OnePass) {
  MixedWord w(xy());
  for (auto s : {A(0, 1), B(0, 1), A(1, 1), B(1, 1)}) w.push(s);
  auto r = collect_once(w, 2);
  EXPECT_EQ(to_string(r.collected), "x y");
  EXPECT_EQ(to_string(r.remainder), "b_x [b_x,a_y] b_y");

  MixedWord pure(xy());
  pure.push(A(0, 1));
  pure.push(A(1, -1));
  auto p = collect_once(pure, 3);
  EXPECT_EQ(to_string(p.collected), "x y^-1");
  EXPECT_TRUE(p.remainder.empty());
}

TEST(Collector, InverseLetterAgreesWithMagnusUpToCutoff) {
  auto ab = free_product_alphabet(xy());
  const auto Z = CoefficientRing::integers();
  MixedWord w(xy());
  w.push(B(0, 1));
  w.push(A(0, -1));
  for (int cutoff = 2; cutoff <= 5; ++cutoff) {
    auto r = collect_once(w, cutoff);
    EXPECT_EQ(to_string(r.collected), "x^-1");
    auto diff = magnus(to_free_word(w, ab), cutoff, Z) - magnus(as_word(r, ab), cutoff, Z);
    EXPECT_TRUE(diff.is_zero()) << "cutoff " << cutoff << ": " << to_string(r.remainder);
  }
  EXPECT_EQ(to_string(collect_once(w, 3).remainder), "b_x [b_x,a_x,a_x] [b_x,a_x]^-1");
}

TEST(Collector, TietzeExpansion) {
  MixedWord w(xy());
  MixedSyllable s{false, 0, CommSymbol{0, {{{0, 1}, {1, 1}}}}, 1};
  w.push(s);
  EXPECT_EQ(to_string(tietze_expand(w, 5)), "[b_x,a_y] [b_x,a_x] [b_x,a_x,a_y]");
  MixedWord basic(xy());
  basic.push({false, 0, CommSymbol{0, {{{1, 1}}}}, 1});
  EXPECT_EQ(tietze_expand(basic, 5), basic);
  MixedWord empty_slot(xy());
  empty_slot.push({false, 0, CommSymbol{0, {{}}}, 1});
  EXPECT_TRUE(tietze_expand(empty_slot, 5).empty());
}

TEST(Collector, HopfViaCollection) {
  auto X = xy();
  auto S2 = Alphabet::smash(X, 2);
  EXPECT_EQ(hopf_via_collection(parse_word(X, "x y"), 2), parse_word(S2, "x/\\y"));
  EXPECT_TRUE(hopf_via_collection(parse_word(X, "x"), 2).empty());
  auto c = hopf_via_collection(parse_word(X, "x^-1 y^-1 x y"), 2);
  EXPECT_EQ(to_string(abelianized(c), *S2), "{x/\\y:+1, y/\\x:-1}");
  for (const auto& w : all_reduced_words(X, 3))
    for (int k : {2, 3}) EXPECT_EQ(abelianized(hopf_via_collection(w, k)), abelianized_hopf(w, k)) << to_string(w);
}

TEST(Hall, BasisAndWitt) {
  auto X = xy();
  auto b = hall_basis(X, 3);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < b.size(); ++i) names.push_back(hall_to_string(b, i, *X));
  EXPECT_EQ(names, (std::vector<std::string>{"x", "y", "[x,y]", "[[x,y],x]", "[[x,y],y]"}));
  EXPECT_EQ(witt_dimension(2, 1), 2);
  EXPECT_EQ(witt_dimension(2, 3), 2);
  EXPECT_EQ(witt_dimension(2, 4), 3);
  auto b6 = hall_basis(X, 6);
  for (int n = 1; n <= 6; ++n) {
    long long count = 0;
    for (const auto& e : b6) count += e.weight == n;
    EXPECT_EQ(count, witt_dimension(2, n)) << n;
  }
  EXPECT_EQ(hall_to_word(b, 2, X), parse_word(X, "x^-1 y^-1 x y"));
}
