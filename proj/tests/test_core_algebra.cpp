#include <gtest/gtest.h>

#include "support.hpp"

using namespace dsl;
using namespace dsl::testing;

namespace {

const GroupSpec kTrivial = GroupSpec::cyclic(1);
const GroupSpec kZ2 = GroupSpec::cyclic(2);
constexpr XLetter x1 = x_letter(0);
constexpr XLetter xp = x_letter(0);
constexpr XLetter xm1 = x_letter(1);

}  // namespace

TEST(GroupSpec, ParseAndArithmetic) {
  const GroupSpec G = GroupSpec::parse("product:2x3");
  EXPECT_EQ(G.order(), 6);
  EXPECT_EQ(G.name(), "product:2x3");
  for (int a = 0; a < G.order(); ++a) {
    EXPECT_EQ(G.mul(a, G.inv(a)), G.identity());
    EXPECT_EQ(G.index(G.element(a)), a);
  }
  EXPECT_THROW(GroupSpec::parse("cyclic:0"), ParseError);
  EXPECT_THROW(GroupSpec::parse("dihedral:3"), ParseError);
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(xm({kX0}) * xm({x1}), xm({kX0, x1}));
  const XPoly f = xm({kX0, x1}, rat(2, 3)) + xm({x1});
  EXPECT_EQ(poly_mul(f, one()), f);
  EXPECT_EQ(poly_mul(bracket(x0_poly(), x1_poly()), x1_poly()), xm({kX0, x1, x1}) - xm({x1, kX0, x1}));
}

TEST(PolyMul, AssociativityAndUnitOnRandomTriples) {
  RandomLie rng(kZ2, 11);
  for (int i = 0; i < 30; ++i) {
    const XPoly a = rng.polynomial(3, 4), b = rng.polynomial(3, 4), c = rng.polynomial(3, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(one() * a, a);
    EXPECT_EQ(a * one(), a);
  }
}

TEST(PolyRepresentation, ZeroCoefficientsAreDropped) {
  XPoly f = xm({kX0});
  f.add(XWord{kX0}, -1);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.size(), 0u);
  EXPECT_EQ(f.coeff(XWord{x1}), 0);
}

TEST(GammaAct, Examples) {
  for (int s = 0; s < kZ2.order(); ++s) {
    EXPECT_EQ(gamma_act(kZ2, s, x0_poly()), x0_poly());
    for (int g = 0; g < kZ2.order(); ++g) EXPECT_EQ(gamma_act(kZ2, s, xg_poly(g)), xg_poly(kZ2.mul(s, g)));
  }
  EXPECT_EQ(gamma_act(kZ2, 1, xm({kX0, xp, xm1})), xm({kX0, xm1, xp}));
}

TEST(GammaAct, AutomorphismLaws) {
  const GroupSpec G = GroupSpec::cyclic(3);
  RandomLie rng(G, 5);
  for (int i = 0; i < 20; ++i) {
    const XPoly f = rng.polynomial(3, 3), g = rng.polynomial(3, 3);
    for (int s = 0; s < G.order(); ++s) {
      EXPECT_EQ(gamma_act(G, s, f * g), gamma_act(G, s, f) * gamma_act(G, s, g));
      EXPECT_EQ(gamma_act(G, G.inv(s), gamma_act(G, s, f)), f);
      for (int t = 0; t < G.order(); ++t)
        EXPECT_EQ(gamma_act(G, s, gamma_act(G, t, f)), gamma_act(G, G.mul(s, t), f));
    }
  }
}

TEST(GammaAct, RejectsLettersOutsideTheGroup) {
  EXPECT_THROW(gamma_act(kTrivial, 0, xg_poly(1)), PreconditionError);
}

TEST(DeltaShuffle, Examples) {
  XTensor2 d0;
  d0.add(XWord{kX0}, XWord{}, 1);
  d0.add(XWord{}, XWord{kX0}, 1);
  EXPECT_EQ(delta_shuffle(x0_poly()), d0);
  EXPECT_EQ(delta_shuffle(one()), XTensor2::pure(one(), one()));
  XTensor2 d01;
  d01.add(XWord{kX0, x1}, XWord{}, 1);
  d01.add(XWord{kX0}, XWord{x1}, 1);
  d01.add(XWord{x1}, XWord{kX0}, 1);
  d01.add(XWord{}, XWord{kX0, x1}, 1);
  EXPECT_EQ(delta_shuffle(xm({kX0, x1})), d01);
}

TEST(DeltaShuffle, DualToTheShuffleProduct) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& w : all_x_words(n, 2)) {
      const XTensor2 d = delta_shuffle(XPoly::monomial(w));
      for (int a = 0; a <= n; ++a)
        for (const auto& u : all_x_words(a, 2))
          for (const auto& v : all_x_words(n - a, 2)) EXPECT_EQ(d.coeff(u, v), shuffle_oracle(u, v).coeff(w));
    }
}

TEST(DeltaShuffle, AlgebraMorphism) {
  RandomLie rng(kZ2, 3);
  for (int i = 0; i < 20; ++i) {
    const XPoly f = rng.polynomial(3, 3), g = rng.polynomial(3, 3);
    EXPECT_EQ(delta_shuffle(f * g), delta_shuffle(f) * delta_shuffle(g));
  }
}

TEST(DeltaShuffle, Coassociative) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& w : all_x_words(n, 2)) {
      std::map<std::tuple<XWord, XWord, XWord>, Rational> left, right;
      for (const auto& [k, c] : delta_shuffle(XPoly::monomial(w))) {
        for (const auto& [k2, c2] : delta_shuffle(XPoly::monomial(k.first)))
          left[{k2.first, k2.second, k.second}] += c * c2;
        for (const auto& [k2, c2] : delta_shuffle(XPoly::monomial(k.second)))
          right[{k.first, k2.first, k2.second}] += c * c2;
      }
      EXPECT_EQ(left, right);
    }
}

TEST(IsLieElement, Examples) {
  EXPECT_TRUE(is_lie_element(bracket(x0_poly(), x1_poly())));
  EXPECT_FALSE(is_lie_element(xm({kX0, x1})));
  EXPECT_TRUE(is_lie_element(x0_poly() + xg_poly(1)));
  EXPECT_THROW(is_lie_element(one() + x0_poly()), PreconditionError);
}

TEST(LyndonBasis, Examples) {
  const auto b2 = lyndon_basis(kTrivial, 2);
  ASSERT_EQ(b2.size(), 1u);
  EXPECT_EQ(b2[0], bracket(x0_poly(), x1_poly()));

  const auto z2 = lyndon_basis(kZ2, 2);
  ASSERT_EQ(z2.size(), 3u);
  std::vector<XPoly> expected{bracket(x0_poly(), xg_poly(0)), bracket(x0_poly(), xg_poly(1)),
                              bracket(xg_poly(0), xg_poly(1))};
  EXPECT_EQ(z2, expected);

  const auto b1 = lyndon_basis(kTrivial, 1);
  ASSERT_EQ(b1.size(), 2u);
  EXPECT_EQ(b1[0], x0_poly());
  EXPECT_EQ(b1[1], x1_poly());
  EXPECT_THROW(lyndon_basis(kTrivial, 0), PreconditionError);
}

TEST(LyndonBasis, WittCountsAndLieMembership) {
  for (int order = 1; order <= 3; ++order) {
    const GroupSpec G = GroupSpec::cyclic(order);
    for (int n = 1; n <= 8; ++n) {
      const LieBasis b = lie_basis(G, n);
      EXPECT_EQ(static_cast<long>(b.words.size()), witt_dimension(n, order + 1));
      EXPECT_EQ(static_cast<long>(b.words.size()), lyndon_count_oracle(n, order + 1));
      if (n <= 7 || order <= 2) {
        for (const auto& e : b.elements) EXPECT_TRUE(is_lie_element(e));
      }
    }
  }
}

TEST(LyndonBasis, LinearlyIndependentWithExactCoordinates) {
  for (int n = 1; n <= 6; ++n) {
    const LieBasis b = lie_basis(kZ2, n);
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      const auto coords = lie_coordinates(b, b.elements[i]);
      for (std::size_t j = 0; j < coords.size(); ++j) EXPECT_EQ(coords[j], i == j ? 1 : 0);
    }
  }
}

TEST(PhiPush, Examples) {
  const GroupMorphism id = GroupMorphism::identity(kZ2);
  const XPoly f = xm({kX0, xp, xm1}) + xm({xm1}, rat(1, 2));
  EXPECT_EQ(phi_push(id, f), f);
  const GroupMorphism to_trivial(kZ2, kTrivial, {0});
  EXPECT_EQ(to_trivial.kernel_size(), 2);
  EXPECT_EQ(phi_push(to_trivial, x0_poly()), Rational(2) * x0_poly());
  EXPECT_EQ(phi_push(to_trivial, xg_poly(1)), x1_poly());
}

TEST(PhiPull, Examples) {
  const GroupMorphism id = GroupMorphism::identity(kZ2);
  const XPoly f = xm({kX0, xp, xm1});
  EXPECT_EQ(phi_pull(id, f), f);
  const GroupMorphism to_trivial(kZ2, kTrivial, {0});
  EXPECT_EQ(phi_pull(to_trivial, x1_poly()), xg_poly(0) + xg_poly(1));
  EXPECT_EQ(phi_pull(to_trivial, one()), one());
  const GroupMorphism into_z2(kTrivial, kZ2, {0});
  EXPECT_EQ(phi_pull(into_z2, xg_poly(1)), XPoly{});
}

TEST(PhiMorphisms, RejectsInvalidGeneratorImages) {
  EXPECT_THROW(GroupMorphism(GroupSpec::cyclic(3), kZ2, {1}), PreconditionError);
}

TEST(PhiMorphisms, AlgebraMorphisms) {
  const GroupSpec z4 = GroupSpec::cyclic(4);
  const GroupMorphism squash(z4, kZ2, {1});
  RandomLie rng4(z4, 9), rng2(kZ2, 10);
  for (int i = 0; i < 20; ++i) {
    const XPoly f = rng4.polynomial(3, 3), g = rng4.polynomial(3, 3);
    EXPECT_EQ(phi_push(squash, f * g), phi_push(squash, f) * phi_push(squash, g));
    const XPoly a = rng2.polynomial(3, 3), b = rng2.polynomial(3, 3);
    EXPECT_EQ(phi_pull(squash, a * b), phi_pull(squash, a) * phi_pull(squash, b));
  }
}

TEST(ExpLog, Examples) {
  EXPECT_EQ(exp_concat(XPoly{}, 5), one());
  EXPECT_EQ(log_concat(exp_concat(x0_poly(), 6), 6), x0_poly());
  EXPECT_EQ(exp_concat(x1_poly(), 2), one() + x1_poly() + xm({x1, x1}, rat(1, 2)));
  EXPECT_THROW(exp_concat(one(), 3), PreconditionError);
  EXPECT_THROW(log_concat(x0_poly(), 3), PreconditionError);
}

TEST(ExpLog, MutuallyInverse) {
  RandomLie rng(kZ2, 21);
  for (int i = 0; i < 10; ++i) {
    const XPoly f = rng.element(3);
    EXPECT_EQ(log_concat(exp_concat(f, 5), 5), f.truncated(5));
  }
}
