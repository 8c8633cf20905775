#pragma once

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "dsl/dsl.hpp"

namespace dsl::testing {

inline XPoly xm(std::initializer_list<XLetter> letters, const Rational& c = 1) {
  return XPoly::monomial(XWord(letters), c);
}

inline YPoly ym(std::initializer_list<YLetter> letters, const Rational& c = 1) {
  return YPoly::monomial(YWord(letters), c);
}

inline XPoly one() { return XPoly::constant(1); }

inline YTensor2 yt(const YPoly& a, const YPoly& b) { return YTensor2::pure(a, b); }

// Every word of length n over the letters 0..k-1 (X side: 0 is x0).
inline std::vector<XWord> all_x_words(int n, int k) {
  std::vector<XWord> out{XWord{}};
  for (int i = 0; i < n; ++i) {
    std::vector<XWord> next;
    for (const auto& w : out)
      for (int l = 0; l < k; ++l) {
        XWord v = w;
        v.push_back(static_cast<XLetter>(l));
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

// Y-words of weight exactly d, by compositions of d.
inline std::vector<YWord> all_y_words(int order, int d) {
  if (d == 0) return {YWord{}};
  std::vector<YWord> out;
  for (int first = 1; first <= d; ++first)
    for (int s = 0; s < order; ++s)
      for (const auto& tail : all_y_words(order, d - first)) {
        YWord w{y_letter(first, s)};
        w.append(tail);
        out.push_back(w);
      }
  return out;
}

// Shuffle product of two X-words by the two-sided recursion on last letters.
inline XPoly shuffle_oracle(const XWord& u, const XWord& v) {
  if (u.empty()) return XPoly::monomial(v);
  if (v.empty()) return XPoly::monomial(u);
  const XWord ua = u.slice(0, u.size() - 1);
  const XWord vb = v.slice(0, v.size() - 1);
  XPoly out;
  for (const auto& [w, c] : shuffle_oracle(ua, v)) out.add(w * XWord{u[u.size() - 1]}, c);
  for (const auto& [w, c] : shuffle_oracle(u, vb)) out.add(w * XWord{v[v.size() - 1]}, c);
  return out;
}

// Quasi-shuffle: u a * v b = (u * v b) a + (u a * v) b + (u * v) [a+b].
inline YPoly quasi_shuffle_oracle(const GroupSpec& G, const YWord& u, const YWord& v) {
  if (u.empty()) return YPoly::monomial(v);
  if (v.empty()) return YPoly::monomial(u);
  const YLetter a = u[u.size() - 1];
  const YLetter b = v[v.size() - 1];
  const YWord ua = u.slice(0, u.size() - 1);
  const YWord vb = v.slice(0, v.size() - 1);
  const YLetter ab = y_letter(y_weight(a) + y_weight(b), G.mul(y_group(a), y_group(b)));
  YPoly out;
  for (const auto& [w, c] : quasi_shuffle_oracle(G, ua, v)) out.add(w * YWord{a}, c);
  for (const auto& [w, c] : quasi_shuffle_oracle(G, u, vb)) out.add(w * YWord{b}, c);
  for (const auto& [w, c] : quasi_shuffle_oracle(G, ua, vb)) out.add(w * YWord{ab}, c);
  return out;
}

// Lyndon count by brute force: aperiodic words that are strictly minimal
// among their rotations.
inline long lyndon_count_oracle(int n, int k) {
  long count = 0;
  for (const auto& w : all_x_words(n, k)) {
    bool minimal = true;
    for (int r = 1; r < n && minimal; ++r) {
      const XWord rot = w.slice(r, n) * w.slice(0, r);
      if (!(w < rot)) minimal = false;
    }
    if (minimal) ++count;
  }
  return count;
}

// The twisted derivation d_psi through the Leibniz rule on the first letter.
inline XPoly d_psi_oracle(const GroupSpec& G, const XPoly& psi, const XPoly& f) {
  XPoly out;
  for (const auto& [w, c] : f) {
    if (w.empty()) continue;
    const XPoly head = XPoly::monomial(XWord{w[0]});
    const XPoly tail = XPoly::monomial(w.slice(1, w.size()));
    XPoly dhead;
    if (!is_x0(w[0])) dhead = head * gamma_act(G, letter_group(w[0]), psi) - gamma_act(G, letter_group(w[0]), psi) * head;
    out += c * (dhead * tail + head * d_psi_oracle(G, psi, tail));
  }
  return out;
}

inline XPoly ihara_oracle(const GroupSpec& G, const XPoly& a, const XPoly& b) {
  return a * b + d_psi_oracle(G, a, b) - b * a - d_psi_oracle(G, b, a);
}

// Rank of a dense rational matrix by plain Gaussian elimination.
inline std::size_t rank_oracle(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// dim dmr0[n] for trivial or order-2 groups by stuffle duality: psi* is
// primitive iff it pairs to zero with every product u * v of nonempty words.
inline std::size_t dmr0_dimension_oracle(const GroupSpec& G, int n) {
  if (n == 1) {
    std::size_t pairs = 0;
    for (int g = 0; g < G.order(); ++g)
      if (g != G.identity() && G.inv(g) >= g) ++pairs;
    return pairs;
  }
  const std::vector<XPoly> basis = lyndon_basis(G, n);
  std::vector<YPoly> stars;
  for (const auto& b : basis) stars.push_back(star_additive(G, b));
  std::vector<std::vector<Rational>> rows;
  auto push_functional = [&](const YPoly& dual) {
    std::vector<Rational> row;
    for (const auto& s : stars) {
      Rational v = 0;
      for (const auto& [w, c] : dual) v += c * s.coeff(w);
      row.push_back(v);
    }
    rows.push_back(row);
  };
  for (int a = 1; a < n; ++a)
    for (const auto& u : all_y_words(G.order(), a))
      for (const auto& v : all_y_words(G.order(), n - a)) push_functional(quasi_shuffle_oracle(G, u, v));
  if (n == 2 && G.order() <= 2) push_functional(ym({y_letter(2, G.identity())}));
  return basis.size() - rank_oracle(rows);
}

}  // namespace dsl::testing
