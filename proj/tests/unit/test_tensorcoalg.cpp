#include <gtest/gtest.h>

#include <random>

#include "jhkit/error.hpp"
#include "jhkit/tensorcoalg.hpp"

using namespace jhkit;

namespace {

TensorAmbient ambient(std::uint32_t p, const char* letters, int d) {
  TensorAmbient a{p, Alphabet::parse(letters), d};
  a.validate();
  return a;
}

GradedCoalgEndo random_coalg_map(const TensorAmbient& amb, std::mt19937_64& rng) {
  // products of generator endomorphisms are coalgebra maps
  auto f = unit_endo(amb);
  for (int t = 0; t < 3; ++t) {
    int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(amb.bound));
    auto perms = Permutation::all(k);
    auto g = generator_endo(k, perms[rng() % perms.size()], amb);
    f = convolution(f, convolution_power(g, static_cast<std::int64_t>(rng() % amb.p) + 1));
  }
  return f;
}

}  // namespace

TEST(Tensor, AmbientLimits) {
  EXPECT_EQ(ambient(2, "x,y", 3).dim(3), 8u);
  EXPECT_THROW(ambient(4, "x,y", 3), std::invalid_argument);
  EXPECT_THROW(ambient(2, "x,y", 17), std::invalid_argument);
}

TEST(Tensor, HopfAlgebraAxioms) {
  for (std::uint32_t p : {2u, 3u}) {
    auto amb = ambient(p, "x,y", 4);
    for (int n = 0; n <= 4; ++n) {
      EXPECT_TRUE(check_coassociativity(amb, n));
      EXPECT_TRUE(check_counit(amb, n));
    }
    auto id = identity_endo(amb), s = antipode_endo(amb), u = unit_endo(amb);
    EXPECT_EQ(convolution(id, s), u);
    EXPECT_EQ(convolution(s, id), u);
    EXPECT_EQ(convolution_inverse(id), s);
    EXPECT_TRUE(is_coalgebra_map(id));
    EXPECT_TRUE(is_coalgebra_map(s));
  }
}

TEST(Tensor, CoproductOfALetterPair) {
  auto amb = ambient(3, "x,y", 2);
  // ψ(xy) = 1⊗xy + x⊗y + y⊗x + xy⊗1
  auto b1 = coproduct_block(amb, 2, 1);
  std::size_t xy = 1, yx = 2;
  EXPECT_EQ(b1.at(xy, xy), 1u);  // x⊗y
  EXPECT_EQ(b1.at(yx, xy), 1u);  // y⊗x
  EXPECT_EQ(b1.at(0, xy), 0u);
  EXPECT_EQ(coproduct_block(amb, 2, 0), ModpMatrix::identity(3, 4));
  EXPECT_EQ(coproduct_block(amb, 2, 2), ModpMatrix::identity(3, 4));
}

TEST(Tensor, ConvolutionPowers) {
  auto amb = ambient(3, "x,y", 3);
  auto id = identity_endo(amb);
  EXPECT_EQ(convolution_power(id, 0), unit_endo(amb));
  EXPECT_EQ(convolution_power(id, -1), antipode_endo(amb));
  EXPECT_EQ(convolution_power(id, 2), convolution(id, id));
  // id^{*p} is zero on V
  auto three = convolution_power(id, 3);
  EXPECT_TRUE(three.blocks[1].is_zero());
}

TEST(Tensor, AlgebraicJamesHopf) {
  auto amb = ambient(2, "a,b,c", 4);
  for (int k = 1; k <= 3; ++k) {
    auto h = alg_james_hopf(k, amb);
    EXPECT_TRUE(check_universal_property(h, k)) << k;
    auto direct = alg_james_hopf_direct(k, amb);
    for (int n = k; n <= amb.bound; n += k) {
      const auto* a = h.block_from(n);
      const auto* b = direct.block_from(n);
      ASSERT_TRUE(a && b);
      EXPECT_EQ(a->matrix, b->matrix) << k << " " << n;
    }
  }
}

TEST(Tensor, GeneratorsAreCoalgebraMaps) {
  auto amb = ambient(3, "a,b,c", 3);
  for (int k = 1; k <= 3; ++k)
    for (const auto& s : Permutation::all(k)) EXPECT_TRUE(is_coalgebra_map(generator_endo(k, s, amb)));
  EXPECT_EQ(generator_endo(1, Permutation::identity(1), amb), identity_endo(amb));
}

TEST(Tensor, FactorRoundTrip) {
  auto amb = ambient(2, "a,b,c,d", 4);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    auto f = random_coalg_map(amb, rng);
    auto factors = factor_endo(f);
    EXPECT_EQ(reconstruct(factors, amb), f) << to_string(factors);
  }
  auto factors = factor_endo(identity_endo(amb));
  ASSERT_EQ(factors.size(), 4u);
  EXPECT_EQ(factors[0].k, 1);
  ASSERT_EQ(factors[0].terms.size(), 1u);
  EXPECT_EQ(factors[0].terms[0].second, 1u);
  for (std::size_t k = 1; k < factors.size(); ++k) EXPECT_TRUE(factors[k].terms.empty());
  auto small = ambient(2, "a,b", 3);
  EXPECT_THROW(factor_endo(identity_endo(small)), PreconditionError);
}

TEST(Tensor, Primitives) {
  auto amb = ambient(2, "x,y", 4);
  for (int n = 1; n <= 4; ++n)
    EXPECT_EQ(static_cast<long long>(primitives(amb, n).cols()), restricted_witt_dimension(2, 2, n)) << n;
  EXPECT_EQ(restricted_witt_dimension(2, 2, 2), 3);
}

TEST(Tensor, IdempotentPower) {
  auto amb = ambient(2, "x,y,z", 3);
  auto id = identity_endo(amb);
  auto r = idempotent_power(id);
  EXPECT_EQ(r.power, 1);
  EXPECT_EQ(r.idempotent, id);
  auto s = idempotent_power(antipode_endo(amb));
  EXPECT_EQ(compose(s.idempotent, s.idempotent), s.idempotent);
  ASSERT_EQ(s.table.size(), 4u);
  for (const auto& row : s.table) EXPECT_EQ(row.rank + row.nullity, row.dim);
}

TEST(Tensor, JsonRoundTrip) {
  auto amb = ambient(3, "x,y", 2);
  auto f = generator_endo(2, Permutation::parse_cycles("(1 2)", 2), amb);
  EXPECT_EQ(endo_from_json(endo_to_json(f)), f);
  EXPECT_THROW(endo_from_json("{\"p\":3}"), std::invalid_argument);
  EXPECT_THROW(endo_from_json("not json"), std::invalid_argument);
}
