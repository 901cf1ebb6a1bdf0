#include <gtest/gtest.h>

#include "jhkit/error.hpp"
#include "jhkit/series.hpp"

using namespace jhkit;

namespace {

const CoefficientRing Z = CoefficientRing::integers();
AlphabetPtr xy() { return Alphabet::parse("x,y"); }
Word W(const char* s) { return parse_word(xy(), s); }
TruncatedSeries S(const char* s, int bound) { return parse_series(Z, xy(), bound, s); }

}  // namespace

TEST(Series, GeometricIdentities) {
  EXPECT_EQ(S("1 + x", 2) * S("1 - x + x.x", 2), TruncatedSeries::one(Z, xy(), 2));
  EXPECT_EQ(to_string(series_invert(S("1 + x", 3))), "1 - x + x.x - x.x.x");
  EXPECT_THROW(series_invert(S("2 + x", 3)), PreconditionError);
}

TEST(Series, Magnus) {
  EXPECT_EQ(to_string(magnus(W("x"), 3, Z)), "1 + x");
  EXPECT_EQ(to_string(magnus(W("x^-1"), 2, Z)), "1 - x + x.x");
  EXPECT_EQ(to_string(magnus(W("x^-1 y^-1 x y"), 2, Z)), "1 + x.y - y.x");
  // homomorphism
  auto u = W("x y^-1 x"), v = W("y^2 x^-1");
  EXPECT_EQ(magnus(u * v, 4, Z), magnus(u, 4, Z) * magnus(v, 4, Z));
}

TEST(Series, Valuation) {
  auto one = TruncatedSeries::one(Z, xy(), 3);
  EXPECT_EQ(valuation(magnus(W("x^-1 y^-1 x y"), 3, Z) - one), (Valuation{2, true}));
  EXPECT_EQ(to_string(valuation(TruncatedSeries(Z, xy(), 4))), ">= 5");
  EXPECT_EQ(valuation(magnus(W("x"), 3, Z) - one).degree, 1);
}

TEST(Series, HomogeneousComponents) {
  auto mu = magnus(W("x^-1 y^-1 x y"), 3, Z);
  EXPECT_EQ(to_string(pi_k(mu, 2)), "x.y - y.x");
  EXPECT_EQ(to_string(pi_k(magnus(W("y x^2 y^-3"), 3, Z), 1)), "2 * x - 2 * y");
  EXPECT_EQ(pi_k(mu, 0).coeffs, std::vector<Coeff>{1});
  EXPECT_THROW(pi_k(mu, 4), PreconditionError);
}

TEST(Series, LieElements) {
  EXPECT_TRUE(is_lie_element(pi_k(S("x.y - y.x", 2), 2)));
  EXPECT_FALSE(is_lie_element(pi_k(S("x.y", 2), 2)));
  EXPECT_TRUE(is_lie_element(pi_k(magnus(W("x^-1 y^-1 x y x^-1 y^-1 x^-1 y x^2"), 3, Z), 3)));
}

TEST(Series, MonomialIndexRoundTrip) {
  std::vector<Letter> m{1, 0, 1};
  EXPECT_EQ(monomial_index(m, 2), 5u);
  EXPECT_EQ(monomial_letters(5, 3, 2), m);
}

TEST(Series, ModP) {
  auto F2 = CoefficientRing::prime_field(2);
  // μ(x²) - 1 = 2x + x² ≡ x² mod 2
  EXPECT_EQ(to_string(magnus(W("x^2"), 2, F2)), "1 + x.x");
}
