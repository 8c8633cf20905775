#pragma once

#include <string>
#include <vector>

#include "dsl/y_algebra.hpp"

namespace dsl {

// Derivation with x0 -> 0 and x_s -> [x_s, t_s(psi)], applied to f.  Output words
// of degree above max_deg are dropped.
inline XPoly d_psi(const GroupSpec& G, const XPoly& psi, const XPoly& f, int max_deg = kNoTruncation) {
  check_letters(G, psi);
  check_letters(G, f);
  std::vector<XPoly> image(G.order());
  std::vector<bool> ready(G.order(), false);
  XPoly r;
  for (const auto& [w, c] : f) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (is_x0(w[i])) continue;
      const int s = letter_group(w[i]);
      if (!ready[s]) {
        image[s] = bracket(xg_poly(s), gamma_act(G, s, psi));
        ready[s] = true;
      }
      const XWord prefix = w.slice(0, i);
      const XWord suffix = w.slice(i + 1, w.size());
      for (const auto& [v, cv] : image[s]) {
        if (max_deg != kNoTruncation && static_cast<int>(w.size()) - 1 + v.degree() > max_deg) continue;
        XWord out = prefix * v;
        out.append(suffix);
        r.add_product(out, c, cv);
      }
    }
  }
  return r;
}

inline XPoly s_psi(const GroupSpec& G, const XPoly& psi, const XPoly& f, int max_deg = kNoTruncation) {
  return mul_trunc(psi, f, max_deg) + d_psi(G, psi, f, max_deg);
}

inline XPoly ihara_bracket(const GroupSpec& G, const XPoly& a, const XPoly& b) {
  if (sgn(a.constant_term()) != 0 || sgn(b.constant_term()) != 0) {
    throw PreconditionError("Ihara bracket requires zero constant terms");
  }
  return s_psi(G, a, b) - s_psi(G, b, a);
}

inline YPoly s_psi_y(const GroupSpec& G, const XPoly& phi, const YPoly& u) {
  if (sgn(phi.constant_term()) != 0) throw PreconditionError("s^Y requires zero constant term");
  return q_twist(G, pi_y(s_psi(G, phi, embed_y(p_twist(G, u)))));
}

inline Rational char_f0(int n, const XPoly& psi) {
  if (n < 1) throw PreconditionError("character index must be positive");
  XWord w = x0_power(n - 1);
  w.push_back(x_letter(0));
  return psi.coeff(w);
}

inline Rational char_g0(int n, const XPoly& psi) {
  if (n < 1) throw PreconditionError("character index must be positive");
  return n == 1 ? psi.coeff(XWord{kX0}) : Rational(0);
}

// Appends a warning when psi is not a Lie element; the formula is evaluated regardless.
inline XPoly theta(const XPoly& psi, std::vector<std::string>* warnings = nullptr) {
  if (warnings) {
    if (sgn(psi.constant_term()) != 0 || !is_lie_element(psi)) {
      warnings->push_back("theta: input is not a Lie element; morphism properties do not apply");
    }
  }
  XPoly r = psi;
  const int top = psi.max_degree();
  XWord x1s;
  for (int n = 1; n <= top; ++n) {
    x1s.push_back(x_letter(0));
    const Rational c = char_f0(n, psi);
    if (sgn(c) != 0) r.add(x1s, rat(n % 2 ? 1 : -1, n) * c);
  }
  r.add(XWord{kX0}, -char_g0(1, psi));
  return r;
}

}  // namespace dsl
