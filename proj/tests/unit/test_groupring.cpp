#include <gtest/gtest.h>

#include "jhkit/error.hpp"
#include "jhkit/groupring.hpp"
#include "jhkit/series.hpp"

using namespace jhkit;

namespace {

const CoefficientRing Z = CoefficientRing::integers();
AlphabetPtr xy() { return Alphabet::parse("x,y"); }
RingElement R(const char* s, CoefficientRing ring = Z) { return parse_ring_element(ring, xy(), s); }
Word W(const char* s) { return parse_word(xy(), s); }

}  // namespace

TEST(GroupRing, Arithmetic) {
  EXPECT_EQ(R("x - 1") * R("x^-1 - 1"), R("2 - x - x^-1"));
  EXPECT_EQ(R("3*x y + 2") * R("1"), R("3*x y + 2"));
  EXPECT_TRUE((R("x - 1") + R("1 - x")).is_zero());
  EXPECT_EQ(to_string(R("2 - x^-1 - x")), "2 - x - x^-1");
}

TEST(GroupRing, ModPReduction) {
  auto F2 = CoefficientRing::prime_field(2);
  EXPECT_TRUE((R("2*x") .change_ring(F2)).is_zero());
  EXPECT_EQ(R("x - 1", F2), R("x + 1", F2));
  EXPECT_THROW(CoefficientRing::prime_field(4), std::invalid_argument);
}

TEST(GroupRing, Augmentation) {
  EXPECT_EQ(augmentation(R("x - 1")), 0);
  EXPECT_EQ(augmentation(R("3*x y + 2")), 5);
  EXPECT_EQ(augmentation(R("x^-1 y^2")), 1);
}

TEST(Fox, FirstDerivatives) {
  EXPECT_EQ(fox_derivative(0, W("x"), Z), R("1"));
  EXPECT_TRUE(fox_derivative(0, W("y"), Z).is_zero());
  EXPECT_EQ(fox_derivative(0, W("x^-1"), Z), R("-x^-1"));
  EXPECT_EQ(fox_derivative(1, W("x y"), Z), R("x"));
  EXPECT_THROW(fox_derivative(7, W("x"), Z), UnknownLetter);
}

TEST(Fox, HigherAugmented) {
  std::vector<Letter> xy_idx{0, 1}, x_idx{0};
  for (auto alg : {FoxAlgorithm::recursive, FoxAlgorithm::closed_form}) {
    EXPECT_EQ(higher_fox_aug(xy_idx, W("x y"), Z, alg), 1);
    EXPECT_EQ(higher_fox_aug(x_idx, W("x^-1"), Z, alg), -1);
    EXPECT_EQ(higher_fox_aug(x_idx, W("y^3"), Z, alg), 0);
    EXPECT_EQ(higher_fox_aug({}, W("x y"), Z, alg), 1);
  }
}

TEST(Fox, MatchesMagnusOnCommutator) {
  auto w = W("x^-2 y x^2 y^-1");
  auto mu = magnus(w, 3, Z);
  for (int order = 0; order <= 3; ++order)
    for_each_multi_index(2, order, [&](std::span<const Letter> idx) {
      EXPECT_EQ(mu.coefficient(idx), higher_fox_aug(idx, w, Z, FoxAlgorithm::recursive));
      EXPECT_EQ(mu.coefficient(idx), higher_fox_aug(idx, w, Z, FoxAlgorithm::closed_form));
    });
}

TEST(Fox, AugmentationIdealMembership) {
  EXPECT_TRUE(aug_ideal_member(R("x - 1") * R("y - 1"), 2));
  EXPECT_FALSE(aug_ideal_member(R("x - 1"), 2));
  auto F2 = CoefficientRing::prime_field(2);
  auto a = R("x - 1", F2) * R("x - 1", F2) + R("x^2 - 1", F2);
  // (x-1)^2 = x^2 - 1 over Z/2, so a = 0
  EXPECT_TRUE(a.is_zero());
  auto b = R("x^2 - 1", F2);
  EXPECT_EQ(aug_ideal_member(b, 3), valuation(magnus_linear(b, 3)).degree >= 3);
  EXPECT_TRUE(aug_ideal_member(b, 2));
}
