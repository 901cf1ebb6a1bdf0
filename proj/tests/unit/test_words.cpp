#include <gtest/gtest.h>

#include "jhkit/error.hpp"
#include "jhkit/words.hpp"

using namespace jhkit;

namespace {

AlphabetPtr xyz() { return Alphabet::parse("x,y,z"); }
Word W(const AlphabetPtr& a, const char* s) { return parse_word(a, s); }

}  // namespace

TEST(Words, ReduceCancelsAndDropsBasepoint) {
  auto X = xyz();
  std::vector<std::pair<std::string, int>> a{{"x", 1}, {"x", -1}};
  EXPECT_TRUE(reduce(X, a).empty());
  std::vector<std::pair<std::string, int>> b{{"x", 1}, {"*", 1}, {"y", 1}};
  EXPECT_EQ(to_string(reduce(X, b)), "x y");
  std::vector<std::pair<std::string, int>> c{{"x", 1}, {"y", 1}, {"y", -1}, {"x", 1}};
  EXPECT_EQ(to_string(reduce(X, c)), "x^2");
  std::vector<std::pair<std::string, int>> bad{{"q", 1}};
  EXPECT_THROW(reduce(X, bad), UnknownLetter);
}

TEST(Words, GroupOperations) {
  auto X = xyz();
  EXPECT_TRUE(multiply(W(X, "x"), W(X, "x^-1")).empty());
  EXPECT_EQ(inverse(W(X, "x y")), W(X, "y^-1 x^-1"));
  EXPECT_EQ(multiply(W(X, "x y"), W(X, "y^-1 z")), W(X, "x z"));
  EXPECT_EQ(W(X, "x y").pow(-2), W(X, "y^-1 x^-1 y^-1 x^-1"));
}

TEST(Words, Commutators) {
  auto X = xyz();
  EXPECT_TRUE(commutator(W(X, "x"), W(X, "x")).empty());
  EXPECT_EQ(commutator(W(X, "x"), W(X, "y")), W(X, "x^-1 y^-1 x y"));
  EXPECT_TRUE(commutator(W(X, "x y"), Word(X)).empty());
  // c a = a c [c,a]
  auto c = W(X, "x z^-1"), a = W(X, "y^2");
  EXPECT_EQ(c * a, a * c * commutator(c, a));
  std::vector<Word> three{W(X, "x"), W(X, "y"), W(X, "z")};
  EXPECT_EQ(left_normed_commutator(three), commutator(commutator(W(X, "x"), W(X, "y")), W(X, "z")));
}

TEST(Words, ParseAndPrint) {
  auto X = xyz();
  EXPECT_EQ(to_string(W(X, "x^3 y^-1 * 1")), "x^3 y^-1");
  EXPECT_EQ(to_string(Word(X)), "1");
  EXPECT_THROW(W(X, "x^"), ParseError);
  EXPECT_THROW(W(X, "w"), UnknownLetter);
  try {
    W(X, "x y^a");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
  }
}

TEST(Words, ShortLexOrdersByLengthFirst) {
  auto X = xyz();
  ShortLex less;
  EXPECT_TRUE(less(W(X, "z"), W(X, "x y")));
  EXPECT_TRUE(less(W(X, "x"), W(X, "x^-1")));
  EXPECT_FALSE(less(W(X, "x"), W(X, "x")));
}

TEST(Words, AlphabetMismatchIsReported) {
  auto X = xyz();
  auto Y = Alphabet::parse("x,y");
  EXPECT_THROW(W(X, "x") * W(Y, "x"), AlphabetMismatch);
}

TEST(Words, SmashAlphabetIndexing) {
  auto X = Alphabet::parse("x,y");
  auto S = Alphabet::smash(X, 2);
  EXPECT_EQ(S->size(), 4u);
  EXPECT_EQ(S->name(1), "x/\\y");
  EXPECT_EQ(S->find("y/\\x"), Letter{2});
  std::vector<Letter> c{1, 0};
  EXPECT_EQ(S->from_coords(c), Letter{2});
  EXPECT_TRUE(same_alphabet(Alphabet::smash(X, 1), X));
  auto S3 = Alphabet::smash(S, 3);
  EXPECT_EQ(S3->size(), 64u);
  // smash letters containing the basepoint collapse
  EXPECT_TRUE(parse_word(S, "x/\\*").empty());
}

TEST(Words, LetterMaps) {
  auto X = Alphabet::parse("x,y");
  auto Z = Alphabet::parse("z");
  EXPECT_EQ(apply_letter_map(LetterMap::identity(X), W(X, "x y^-1")), W(X, "x y^-1"));
  LetterMap kill_x(X, X, {std::nullopt, Letter{1}});
  EXPECT_EQ(apply_letter_map(kill_x, W(X, "x y")), W(X, "y"));
  LetterMap fold(X, Z, {Letter{0}, Letter{0}});
  EXPECT_TRUE(apply_letter_map(fold, W(X, "x y^-1")).empty());
}

TEST(Words, DiagonalAndPermutation) {
  auto X = Alphabet::parse("x,y");
  std::vector<int> d11{1, 1};
  auto diag = smash_map_diagonal(X, 1, 2, d11);
  EXPECT_EQ(apply_letter_map(diag, W(X, "x")), parse_word(Alphabet::smash(X, 2), "x/\\x"));
  std::vector<int> d112{1, 1, 2};
  auto S2 = Alphabet::smash(X, 2), S3 = Alphabet::smash(X, 3);
  EXPECT_EQ(apply_letter_map(smash_map_diagonal(X, 2, 3, d112), parse_word(S2, "x/\\y")), parse_word(S3, "x/\\x/\\y"));
  std::vector<int> id2{1, 2};
  EXPECT_EQ(apply_letter_map(smash_map_diagonal(X, 2, 2, id2), parse_word(S2, "x/\\y y/\\x")), parse_word(S2, "x/\\y y/\\x"));
  auto swap = smash_map_permute(X, 2, Permutation::parse_cycles("(1 2)", 2));
  EXPECT_EQ(apply_letter_map(swap, parse_word(S2, "x/\\y")), parse_word(S2, "y/\\x"));
  auto cyc = Permutation::parse_cycles("(1 2 3)", 3);
  auto there = smash_map_permute(X, 3, cyc), back = smash_map_permute(X, 3, cyc.inverse());
  auto w = parse_word(S3, "x/\\y/\\y x/\\x/\\y^-1");
  EXPECT_EQ(apply_letter_map(back.after(there), w), w);
  std::vector<int> not_monotone{2, 1};
  EXPECT_FALSE(is_monotone_surjection(not_monotone, 2));
}

TEST(Words, Whitehead) {
  auto X = Alphabet::parse("x,y");
  auto S2 = Alphabet::smash(X, 2);
  EXPECT_EQ(whitehead(parse_word(S2, "x/\\y"), 2), W(X, "x^-1 y^-1 x y"));
  EXPECT_EQ(whitehead(parse_word(S2, "x/\\y^-1"), 2), W(X, "y^-1 x^-1 y x"));
  EXPECT_EQ(whitehead(W(X, "x y^-1"), 1), W(X, "x y^-1"));
  EXPECT_THROW(whitehead(W(X, "x"), 2), PreconditionError);
}

TEST(Permutations, CyclesAndComposition) {
  auto s = Permutation::parse_cycles("(1 2 3)", 3);
  EXPECT_EQ(s.to_cycles(), "(1 2 3)");
  EXPECT_TRUE(s.compose(s.inverse()).is_identity());
  EXPECT_EQ(Permutation::all(3).size(), 6u);
  EXPECT_EQ(Permutation::identity(2).to_cycles(), "()");
}
