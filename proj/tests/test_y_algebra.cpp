#include <gtest/gtest.h>

#include <tuple>

#include "support.hpp"

using namespace dsl;
using namespace dsl::testing;

namespace {

const GroupSpec kTrivial = GroupSpec::cyclic(1);
const GroupSpec kZ2 = GroupSpec::cyclic(2);
constexpr XLetter x1 = x_letter(0);
constexpr XLetter xp = x_letter(0);
constexpr XLetter xn = x_letter(1);
constexpr YLetter ya = y_letter(1, 0);
constexpr YLetter yb = y_letter(2, 0);
constexpr YLetter y1p = y_letter(1, 0);
constexpr YLetter y1n = y_letter(1, 1);
constexpr YLetter y2n = y_letter(2, 1);

using Triple = std::map<std::tuple<YWord, YWord, YWord>, Rational>;

Triple left_coassoc(HarmonicCoproduct& d, const YWord& w) {
  Triple out;
  for (const auto& [k, c] : d.word(w)) {
    const YTensor2 inner = d.word(k.first);
    for (const auto& [k2, c2] : inner) out[{k2.first, k2.second, k.second}] += c * c2;
  }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

Triple right_coassoc(HarmonicCoproduct& d, const YWord& w) {
  Triple out;
  for (const auto& [k, c] : d.word(w)) {
    const YTensor2 inner = d.word(k.second);
    for (const auto& [k2, c2] : inner) out[{k.first, k2.first, k2.second}] += c * c2;
  }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

TEST(EmbedY, Examples) {
  EXPECT_EQ(embed_y(ym({yb})), xm({kX0, x1}));
  EXPECT_EQ(embed_y(YPoly::constant(1)), one());
  EXPECT_EQ(embed_y(ym({y_letter(1, 1), y_letter(2, 2)})), xm({x_letter(1), kX0, x_letter(2)}));
  EXPECT_EQ(embed_y(ym({y_letter(3, 1)})).max_degree(), 3);
}

TEST(PiY, Examples) {
  EXPECT_EQ(pi_y(xm({kX0, x1})), ym({yb}));
  EXPECT_EQ(pi_y(xm({x1, kX0})), YPoly{});
  EXPECT_EQ(pi_y(one()), YPoly::constant(1));
}

TEST(PiY, LeftInverseOfEmbedding) {
  for (int d = 0; d <= 8; ++d)
    for (const auto& u : all_y_words(1, d)) EXPECT_EQ(pi_y(embed_y(YPoly::monomial(u))), YPoly::monomial(u));
  for (int d = 0; d <= 5; ++d)
    for (const auto& u : all_y_words(2, d)) EXPECT_EQ(pi_y(embed_y(YPoly::monomial(u))), YPoly::monomial(u));
}

TEST(Corr, Examples) {
  EXPECT_EQ(corr(x1_poly()), ym({ya}));
  EXPECT_EQ(corr(xm({kX0, x1})), ym({ya, ya}, rat(-1, 2)));
  EXPECT_EQ(corr(one()), YPoly{});
  EXPECT_EQ(corr(xm({kX0, kX0, x1})), ym({ya, ya, ya}, rat(1, 3)));
  EXPECT_EQ(corr(xm({x1, kX0}) + xm({kX0, xn})), YPoly{});
}

TEST(Twists, Examples) {
  const GroupSpec G = GroupSpec::cyclic(5);
  const int s = 2, t = 4;
  EXPECT_EQ(q_twist(G, ym({y_letter(1, s), y_letter(1, t)})), ym({y_letter(1, s), y_letter(1, G.div(t, s))}));
  EXPECT_EQ(p_twist(G, ym({y_letter(3, s), y_letter(2, t)})), ym({y_letter(3, s), y_letter(2, G.mul(s, t))}));
  for (int d = 0; d <= 5; ++d)
    for (const auto& u : all_y_words(1, d)) {
      EXPECT_EQ(q_twist(kTrivial, YPoly::monomial(u)), YPoly::monomial(u));
      EXPECT_EQ(p_twist(kTrivial, YPoly::monomial(u)), YPoly::monomial(u));
    }
  EXPECT_EQ(p_twist(G, YPoly::constant(1)), YPoly::constant(1));
  EXPECT_EQ(q_twist(G, ym({y_letter(2, 3)})), ym({y_letter(2, 3)}));
}

TEST(Twists, MutuallyInverse) {
  const GroupSpec G = GroupSpec::cyclic(4);
  RandomLie rng(G, 17);
  for (int i = 0; i < 50; ++i) {
    const YPoly u = rng.y_polynomial(6, 4);
    EXPECT_EQ(q_twist(G, p_twist(G, u)), u);
    EXPECT_EQ(p_twist(G, q_twist(G, u)), u);
  }
}

TEST(PTilde, Examples) {
  EXPECT_EQ(p_tilde(kZ2, xm({kX0, kX0, kX0})), xm({kX0, kX0, kX0}));
  EXPECT_EQ(p_tilde(kZ2, xm({xn, xn})), xm({xn, xp}));
  for (int n = 0; n <= 5; ++n)
    for (const auto& w : all_x_words(n, 2)) EXPECT_EQ(p_tilde(kTrivial, XPoly::monomial(w)), XPoly::monomial(w));
}

TEST(PTilde, CompatibleWithEmbeddingDerivationAndX0) {
  const GroupSpec G = GroupSpec::cyclic(3);
  RandomLie rng(G, 23);
  for (int i = 0; i < 40; ++i) {
    const YPoly u = rng.y_polynomial(5, 4);
    EXPECT_EQ(p_tilde(G, embed_y(u)), embed_y(p_twist(G, u)));
    const XPoly f = rng.polynomial(5, 4);
    EXPECT_EQ(p_tilde(G, partial0(f)), partial0(p_tilde(G, f)));
    EXPECT_EQ(p_tilde(G, f * x0_poly()), p_tilde(G, f) * x0_poly());
    EXPECT_EQ(sec_tilde(embed_y(p_twist(G, u))), p_tilde(G, sec(u)));
  }
}

TEST(Partial0, Examples) {
  EXPECT_EQ(partial0(x0_poly()), one());
  EXPECT_EQ(partial0(xm({kX0, x1})), x1_poly());
  EXPECT_EQ(partial0(x1_poly()), XPoly{});
  EXPECT_EQ(partial0(xm({kX0, x1, kX0})), xm({x1, kX0}) + xm({kX0, x1}));
}

TEST(SecTilde, Examples) {
  EXPECT_EQ(sec_tilde(x1_poly()), x1_poly());
  EXPECT_EQ(sec_tilde(x0_poly()), XPoly{});
  EXPECT_EQ(sec_tilde(xm({kX0, x1})), bracket(x0_poly(), x1_poly()));
}

TEST(Sec, Examples) {
  EXPECT_EQ(sec(ym({yb})), bracket(x0_poly(), x1_poly()));
  EXPECT_EQ(sec(ym({y1n})), xg_poly(1));
  EXPECT_EQ(sec(YPoly::constant(1)), one());
}

TEST(Sec, InverseOfPiYOnKernelOfPartial0) {
  const GroupSpec G = GroupSpec::cyclic(2);
  RandomLie rng(G, 29);
  for (int i = 0; i < 40; ++i) {
    const YPoly u = rng.y_polynomial(6, 4);
    const XPoly s = sec(u);
    EXPECT_TRUE(partial0(s).is_zero());
    EXPECT_EQ(pi_y(s), u);
    EXPECT_EQ(sec(pi_y(s)), s);
  }
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : lyndon_basis(G, n)) {
      EXPECT_TRUE(partial0(a).is_zero());
      EXPECT_EQ(sec(pi_y(a)), a);
      for (const auto& b : lyndon_basis(G, 2)) EXPECT_EQ(sec(pi_y(a * b)), a * b);
    }
}

TEST(StarAdditive, Examples) {
  EXPECT_EQ(star_additive(kTrivial, bracket(x0_poly(), x1_poly())), ym({yb}) + ym({ya, ya}, rat(-1, 2)));
  EXPECT_EQ(star_additive(kZ2, bracket(xg_poly(0), xg_poly(1))), ym({y1p, y1n}) - ym({y1n, y1n}));
  EXPECT_EQ(star_additive(kTrivial, x1_poly()), ym({ya}, 2));
}

TEST(HarmonicCoproduct, Examples) {
  for (int s = 0; s < kZ2.order(); ++s) {
    const YPoly y = ym({y_letter(1, s)});
    EXPECT_EQ(harmonic_coproduct(kZ2, y), primitive_tensor(y));
  }
  EXPECT_EQ(harmonic_coproduct(kTrivial, ym({yb})), primitive_tensor(ym({yb})) + yt(ym({ya}), ym({ya})));
  EXPECT_EQ(harmonic_coproduct(kZ2, ym({y2n})),
            primitive_tensor(ym({y2n})) + yt(ym({y1p}), ym({y1n})) + yt(ym({y1n}), ym({y1p})));
}

TEST(HarmonicCoproduct, PrimitivityExamples) {
  EXPECT_TRUE(is_delta_star_primitive(kZ2, ym({y1n})));
  EXPECT_TRUE(is_delta_star_primitive(kTrivial, ym({yb}) + ym({ya, ya}, rat(-1, 2))));
  EXPECT_FALSE(is_delta_star_primitive(kTrivial, ym({ya, yb}) + ym({ya, ya, ya}, rat(-1, 2))));
  const YTensor2 d = harmonic_coproduct(kTrivial, ym({ya, yb}) + ym({ya, ya, ya}, rat(-1, 2)));
  EXPECT_NE(d.coeff(YWord{ya}, YWord{yb}), 0);
  EXPECT_THROW(is_delta_star_primitive(kTrivial, YPoly::constant(1)), PreconditionError);
}

TEST(HarmonicCoproduct, DualToQuasiShuffle) {
  for (int order : {1, 3}) {
    const GroupSpec G = GroupSpec::cyclic(order);
    HarmonicCoproduct delta(G);
    const int top = order == 1 ? 5 : 3;
    for (int n = 0; n <= top; ++n)
      for (const auto& w : all_y_words(order, n)) {
        const YTensor2 d = delta.word(w);
        for (int a = 0; a <= n; ++a)
          for (const auto& u : all_y_words(order, a))
            for (const auto& v : all_y_words(order, n - a))
              EXPECT_EQ(d.coeff(u, v), quasi_shuffle_oracle(G, u, v).coeff(w));
      }
  }
}

TEST(HarmonicCoproduct, CoassociativeAndMultiplicative) {
  HarmonicCoproduct delta(kZ2);
  for (int n = 0; n <= 4; ++n)
    for (const auto& w : all_y_words(2, n)) EXPECT_EQ(left_coassoc(delta, w), right_coassoc(delta, w));
  RandomLie rng(kZ2, 31);
  for (int i = 0; i < 20; ++i) {
    const YPoly u = rng.y_polynomial(3, 3), v = rng.y_polynomial(3, 3);
    EXPECT_EQ(delta(u * v), delta(u) * delta(v));
  }
}

TEST(StarMultiplicative, Examples) {
  EXPECT_EQ(star_multiplicative(kTrivial, TruncSeries(one(), 5)).poly(), YPoly::constant(1));
  const TruncSeries e(exp_concat(Rational(3) * x0_poly(), 5), 5);
  EXPECT_EQ(star_multiplicative(kZ2, e).poly(), YPoly::constant(1));
  const TruncSeries g(one() + xm({kX0, x1}), 4);
  const YPoly expected = (exp_concat(ym({ya, ya}, rat(-1, 2)), 4) * (YPoly::constant(1) + ym({yb}))).truncated(4);
  EXPECT_EQ(star_multiplicative(kTrivial, g).poly(), expected);
  EXPECT_EQ(star_multiplicative(kTrivial, g).trunc(), 4);
  EXPECT_THROW(star_multiplicative(kTrivial, TruncSeries(x0_poly(), 3)), PreconditionError);
}
