#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dsl/ihara.hpp"
#include "dsl/solver.hpp"
#include "dsl/truncated.hpp"

namespace dsl {

inline TruncSeries series(const XPoly& f, int trunc) { return TruncSeries(f, trunc); }

inline void require_unit_constant(const TruncSeries& g, const char* what) {
  if (g.constant_term() != 1) throw PreconditionError(std::string(what) + " requires constant term 1");
}

inline void require_zero_constant(const TruncSeries& g, const char* what) {
  if (sgn(g.constant_term()) != 0) throw PreconditionError(std::string(what) + " requires zero constant term");
}

// Inverse for the concatenation product of a series with constant term 1.
inline TruncSeries concat_inverse(const TruncSeries& g) {
  require_unit_constant(g, "inverse");
  const int D = g.trunc();
  const XPoly h = XPoly::constant(1) - g.poly();
  XPoly result = XPoly::constant(1);
  XPoly power = XPoly::constant(1);
  for (int k = 1; k <= D; ++k) {
    power = mul_trunc(power, h, D);
    if (power.is_zero()) break;
    result += power;
  }
  return TruncSeries(result, D);
}

inline TruncSeries exp_series(const XPoly& f, int trunc) { return TruncSeries(exp_concat(f, trunc), trunc); }

namespace detail {

// Applies the algebra endomorphism given by letter images (each of positive
// minimal degree) to f, grouping words by their first letter.
inline XPoly substitute(const XPoly& f, const std::map<XLetter, XPoly>& images, int budget) {
  XPoly result;
  std::map<XLetter, XPoly> tails;
  for (const auto& [w, c] : f) {
    if (w.degree() > budget) continue;
    if (w.empty()) {
      result.add(w, c);
    } else {
      tails[w[0]].add(w.slice(1, w.size()), c);
    }
  }
  for (const auto& [letter, tail] : tails) {
    const XPoly inner = substitute(tail, images, budget - 1);
    result += mul_trunc(images.at(letter), inner, budget);
  }
  return result;
}

}  // namespace detail

inline TruncSeries aut_G(const GroupSpec& G, const TruncSeries& g, const TruncSeries& f) {
  require_unit_constant(g, "aut_G");
  g.require_same_trunc(f);
  check_letters(G, g.poly());
  check_letters(G, f.poly());
  const int D = g.trunc();
  std::map<XLetter, XPoly> images;
  images[kX0] = x0_poly();
  for (int s = 0; s < G.order(); ++s) {
    const TruncSeries ts(gamma_act(G, s, g.poly()), D);
    const TruncSeries conj = concat_inverse(ts) * TruncSeries(xg_poly(s), D) * ts;
    images[x_letter(s)] = conj.poly();
  }
  return TruncSeries(detail::substitute(f.poly(), images, D), D);
}

inline TruncSeries star_product(const GroupSpec& G, const TruncSeries& g, const TruncSeries& h) {
  return g * aut_G(G, g, h);
}

inline TruncSeries star_inverse(const GroupSpec& G, const TruncSeries& g) {
  require_unit_constant(g, "star_inverse");
  const int D = g.trunc();
  TruncSeries h = TruncSeries::one(D);
  for (int iter = 0; iter <= D + 1; ++iter) {
    const XPoly err = star_product(G, g, h).poly() - XPoly::constant(1);
    if (err.is_zero()) return h;
    h = h - TruncSeries(err.homogeneous_part(err.min_degree()), D);
  }
  throw Error("star_inverse did not converge");
}

inline TruncSeries exp_star(const GroupSpec& G, const TruncSeries& psi) {
  require_zero_constant(psi, "exp_star");
  const int D = psi.trunc();
  XPoly term = XPoly::constant(1);
  XPoly result = term;
  for (int k = 1; k <= D; ++k) {
    term = rat(1, k) * s_psi(G, psi.poly(), term, D);
    if (term.is_zero()) break;
    result += term;
  }
  return TruncSeries(result, D);
}

inline TruncSeries log_star(const GroupSpec& G, const TruncSeries& g) {
  require_unit_constant(g, "log_star");
  const int D = g.trunc();
  TruncSeries psi(XPoly{}, D);
  for (int iter = 0; iter <= D + 1; ++iter) {
    const XPoly err = exp_star(G, psi).poly() - g.poly();
    if (err.is_zero()) return psi;
    psi = psi - TruncSeries(err.homogeneous_part(err.min_degree()), D);
  }
  throw Error("log_star did not converge");
}

inline TruncSeries cbh_star(const GroupSpec& G, const TruncSeries& a, const TruncSeries& b) {
  require_zero_constant(a, "cbh_star");
  require_zero_constant(b, "cbh_star");
  return log_star(G, star_product(G, exp_star(G, a), exp_star(G, b)));
}

inline bool is_group_like(const TruncSeries& g) {
  const int D = g.trunc();
  return delta_shuffle(g.poly()).truncated(D) == XTensor2::pure(g.poly(), g.poly(), D);
}

inline TruncSeries theta_group(const TruncSeries& g) {
  require_unit_constant(g, "theta_group");
  if (!is_group_like(g)) throw PreconditionError("theta_group requires a group-like series");
  const int D = g.trunc();
  XPoly front;
  XWord x1s;
  for (int n = 1; n <= D; ++n) {
    x1s.push_back(x_letter(0));
    const Rational c = char_f0(n, g.poly());
    if (sgn(c) != 0) front.add(x1s, rat(n % 2 ? 1 : -1, n) * c);
  }
  const Rational alpha = char_g0(1, g.poly());
  return exp_series(front, D) * g * exp_series(-alpha * x0_poly(), D);
}

inline TruncSeries S_g(const GroupSpec& G, const TruncSeries& g, const TruncSeries& h) { return star_product(G, g, h); }

inline YTruncSeries S_g_Y(const GroupSpec& G, const TruncSeries& g, const YTruncSeries& k) {
  require_unit_constant(g, "S_g_Y");
  if (g.trunc() != k.trunc()) throw PreconditionError("truncation orders differ");
  const int D = g.trunc();
  const TruncSeries lifted(embed_y(p_twist(G, k.poly())), D);
  return YTruncSeries(q_twist(G, pi_y(star_product(G, g, lifted).poly())), D);
}

struct MembershipReport {
  bool member = true;
  std::vector<std::string> failures;

  void require(bool ok, std::string what) {
    if (!ok) {
      member = false;
      failures.push_back(std::move(what));
    }
  }
};

inline MembershipReport dmr0_membership(const GroupSpec& G, const TruncSeries& g) {
  MembershipReport rep;
  const XPoly& p = g.poly();
  rep.require(p.constant_term() == 1, "(G|1) = 1");
  rep.require(sgn(p.coeff(XWord{kX0})) == 0, "(G|x0) = 0");
  rep.require(sgn(p.coeff(XWord{x_letter(0)})) == 0, "(G|x1) = 0");
  rep.require(sgn(p.coeff(XWord{kX0, x_letter(0)})) == 0, "(G|x0 x1) = 0");
  for (int s = 0; s < G.order(); ++s) {
    if (p.coeff(XWord{x_letter(s)}) != p.coeff(XWord{x_letter(G.inv(s))})) {
      rep.require(false, "(G|x_s - x_{s^-1}) = 0 for s = (" + G.residue_string(s) + ")");
    }
  }
  rep.require(is_group_like(g), "shuffle group-likeness");
  if (p.constant_term() == 1) {
    const YTruncSeries star = star_multiplicative(G, g);
    const int D = g.trunc();
    HarmonicCoproduct delta(G);
    const bool ok = delta(star.poly()).truncated(D) == YTensor2::pure(star.poly(), star.poly(), D);
    rep.require(ok, "harmonic group-likeness of G_star");
  }
  return rep;
}

struct DmrFactorization {
  Rational beta;
  TruncSeries g;
  Rational alpha;
  MembershipReport membership;
};

inline DmrFactorization tilde_dmr0_factor(const GroupSpec& G, const TruncSeries& series_in) {
  require_unit_constant(series_in, "tilde_dmr0_factor");
  const int D = series_in.trunc();
  DmrFactorization f;
  f.alpha = series_in.coeff(XWord{kX0});
  f.beta = series_in.coeff(XWord{x_letter(0)});
  f.g = exp_series(-f.beta * x1_poly(), D) * series_in * exp_series(-f.alpha * x0_poly(), D);
  f.membership = dmr0_membership(G, f.g);
  return f;
}

struct StabilizerReport {
  bool passed = true;
  int trunc = 0;
  int source_bound = 0;
  std::size_t sources_checked = 0;
  std::optional<YWord> first_failure;
  YTensor2 expected;
  YTensor2 got;
};

// Evaluates Δ*∘S and (S⊗S)∘Δ* with S = S^Y_{Θ(g)} on one source word, modulo
// total degree above the truncation order.
class GroupStabilizer {
 public:
  GroupStabilizer(const GroupSpec& G, const TruncSeries& g) : G_(G), delta_(G) {
    require_unit_constant(g, "stabilizer_check");
    if (!is_group_like(g)) throw PreconditionError("stabilizer_check requires a group-like series");
    theta_ = theta_group(g);
    D_ = g.trunc();
  }

  const YPoly& image(const YWord& w) {
    auto it = images_.find(w);
    if (it != images_.end()) return it->second;
    YPoly v = S_g_Y(G_, theta_, YTruncSeries(YPoly::monomial(w), D_)).poly();
    return images_.emplace(w, std::move(v)).first->second;
  }

  YTensor2 lhs(const YWord& u) { return delta_(image(u)).truncated(D_); }

  YTensor2 rhs(const YWord& u) {
    YTensor2 r;
    for (const auto& [k, c] : delta_.word(u)) {
      if (k.first.degree() + k.second.degree() > D_) continue;
      const YPoly& a = image(k.first);
      const YPoly& b = image(k.second);
      for (const auto& [wa, ca] : a) {
        if (wa.degree() > D_) break;
        for (const auto& [wb, cb] : b) {
          if (wa.degree() + wb.degree() > D_) break;
          r.add(wa, wb, c * ca * cb);
        }
      }
    }
    return r;
  }

  YTensor2 defect(const YWord& u) { return lhs(u) - rhs(u); }
  int trunc() const { return D_; }

 private:
  GroupSpec G_;
  HarmonicCoproduct delta_;
  TruncSeries theta_;
  int D_ = 0;
  std::map<YWord, YPoly> images_;
};

inline StabilizerReport stabilizer_check(const GroupSpec& G, const TruncSeries& g, int M) {
  if (M < 0) throw PreconditionError("source bound must be non-negative");
  GroupStabilizer stab(G, g);
  StabilizerReport rep;
  rep.trunc = g.trunc();
  rep.source_bound = M;
  for (int m = 0; m <= M; ++m) {
    for (const auto& u : y_words(G, m)) {
      ++rep.sources_checked;
      YTensor2 expected = stab.rhs(u);
      YTensor2 got = stab.lhs(u);
      if (!(expected == got)) {
        rep.passed = false;
        rep.first_failure = u;
        rep.expected = std::move(expected);
        rep.got = std::move(got);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace dsl
