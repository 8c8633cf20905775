#pragma once

#include <map>
#include <vector>

#include "dsl/group.hpp"
#include "dsl/poly.hpp"

namespace dsl {

inline XPoly x0_poly() { return XPoly::monomial(XWord{kX0}); }
inline XPoly xg_poly(int g) { return XPoly::monomial(XWord{x_letter(g)}); }
inline XPoly x1_poly() { return xg_poly(0); }

inline XWord x0_power(int n) {
  XWord w;
  for (int i = 0; i < n; ++i) w.push_back(kX0);
  return w;
}

inline XPoly poly_mul(const XPoly& f, const XPoly& g) { return f * g; }

inline XPoly bracket(const XPoly& a, const XPoly& b) { return commutator(a, b); }

inline void check_letters(const GroupSpec& G, const XPoly& f) {
  for (const auto& [w, c] : f)
    for (XLetter l : w)
      if (!is_x0(l) && letter_group(l) >= G.order()) throw PreconditionError("letter outside the alphabet of " + G.name());
}

inline XWord gamma_act_word(const GroupSpec& G, int sigma, const XWord& w) {
  XWord r;
  for (XLetter l : w) r.push_back(is_x0(l) ? kX0 : x_letter(G.mul(sigma, letter_group(l))));
  return r;
}

inline XPoly gamma_act(const GroupSpec& G, int sigma, const XPoly& f) {
  check_letters(G, f);
  if (sigma < 0 || sigma >= G.order()) throw PreconditionError("group element outside " + G.name());
  XPoly r;
  for (const auto& [w, c] : f) r.add(gamma_act_word(G, sigma, w), c);
  return r;
}

inline XPoly gamma_act(const GroupSpec& G, const GroupElement& sigma, const XPoly& f) {
  return gamma_act(G, G.index(sigma), f);
}

// Sum over the 2^n ways of splitting a word into two complementary subsequences.
template <class W, class Fn>
void for_each_shuffle_split(const W& w, Fn&& fn) {
  const std::size_t n = w.size();
  if (n > 30) throw ResourceLimitError("word too long for the shuffle coproduct");
  const unsigned long total = 1ul << n;
  for (unsigned long mask = 0; mask < total; ++mask) {
    W left, right;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ul << i)) {
        left.push_back(w[i]);
      } else {
        right.push_back(w[i]);
      }
    }
    fn(left, right);
  }
}

inline XTensor2 delta_shuffle(const XPoly& f) {
  XTensor2 t;
  for (const auto& [w, c] : f) for_each_shuffle_split(w, [&](const XWord& a, const XWord& b) { t.add(a, b, c); });
  return t;
}

inline bool is_lie_element(const XPoly& f) {
  if (sgn(f.constant_term()) != 0) throw PreconditionError("Lie test requires zero constant term");
  XTensor2 reduced;
  for (const auto& [w, c] : f) {
    for_each_shuffle_split(w, [&](const XWord& a, const XWord& b) {
      if (!a.empty() && !b.empty()) reduced.add(a, b, c);
    });
  }
  return reduced.is_zero();
}

inline int moebius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

inline long witt_dimension(int n, int alphabet_size) {
  long total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    long p = 1;
    for (int i = 0; i < n / d; ++i) p *= alphabet_size;
    total += moebius(d) * p;
  }
  return total / n;
}

// Lyndon words of length n over letters 0..k-1 in increasing lexicographic order (Duval).
inline std::vector<XWord> lyndon_words(int n, int k) {
  std::vector<XWord> out;
  if (n <= 0 || k <= 0) return out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == n) {
      XWord word;
      for (int l : w) word.push_back(static_cast<XLetter>(l));
      out.push_back(word);
    }
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
  }
  return out;
}

inline bool is_lyndon(const XWord& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t i = 1; i < n; ++i) {
    XWord rot = w.slice(i, n) * w.slice(0, i);
    if (!std::lexicographical_compare(w.begin(), w.end(), rot.begin(), rot.end())) return false;
  }
  return true;
}

// Standard bracketing: w = uv with v the longest proper Lyndon suffix.
class LyndonBracketer {
 public:
  const XPoly& operator()(const XWord& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    XPoly value;
    if (w.size() == 1) {
      value = XPoly::monomial(w);
    } else {
      std::size_t split = w.size() - 1;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (is_lyndon(w.slice(i, w.size()))) {
          split = i;
          break;
        }
      }
      XPoly left = (*this)(w.slice(0, split));
      XPoly right = (*this)(w.slice(split, w.size()));
      value = bracket(left, right);
    }
    return memo_.emplace(w, std::move(value)).first->second;
  }

 private:
  std::map<XWord, XPoly> memo_;
};

inline XPoly lyndon_bracket(const XWord& w) {
  LyndonBracketer b;
  return b(w);
}

struct LieBasis {
  std::vector<XWord> words;
  std::vector<XPoly> elements;
};

inline LieBasis lie_basis(const GroupSpec& G, int n) {
  if (n <= 0) throw PreconditionError("degree must be positive");
  LieBasis basis;
  basis.words = lyndon_words(n, G.order() + 1);
  LyndonBracketer br;
  for (const auto& w : basis.words) basis.elements.push_back(br(w));
  return basis;
}

inline std::vector<XPoly> lyndon_basis(const GroupSpec& G, int n) { return lie_basis(G, n).elements; }

// Coordinates of a homogeneous Lie element in the Lyndon basis.  The bracketing
// of a Lyndon word w is w plus lexicographically larger words, which makes the
// system triangular.
inline std::vector<Rational> lie_coordinates(const LieBasis& basis, const XPoly& f) {
  std::vector<Rational> coords(basis.words.size());
  XPoly rest = f;
  for (std::size_t i = 0; i < basis.words.size(); ++i) {
    Rational c = rest.coeff(basis.words[i]);
    if (sgn(c) == 0) continue;
    coords[i] = c;
    rest -= c * basis.elements[i];
  }
  if (!rest.is_zero()) throw PreconditionError("element is not in the span of the Lie basis");
  return coords;
}

inline XPoly lie_combination(const LieBasis& basis, const std::vector<Rational>& coords) {
  XPoly r;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (sgn(coords[i]) != 0) r += coords[i] * basis.elements[i];
  return r;
}

// Algebra morphism determined by letter images, applied to every word.
template <class Image>
XPoly substitute_letters(const XPoly& f, Image&& image, int max_deg = kNoTruncation) {
  XPoly r;
  for (const auto& [w, c] : f) {
    XPoly acc = XPoly::constant(c);
    for (XLetter l : w) {
      acc = mul_trunc(acc, image(l), max_deg);
      if (acc.is_zero()) break;
    }
    r += acc;
  }
  return r;
}

inline XPoly phi_push(const GroupMorphism& phi, const XPoly& f) {
  check_letters(phi.source(), f);
  const Rational d(phi.kernel_size());
  return substitute_letters(f, [&](XLetter l) {
    return is_x0(l) ? d * x0_poly() : xg_poly(phi(letter_group(l)));
  });
}

inline XPoly phi_pull(const GroupMorphism& phi, const XPoly& f) {
  check_letters(phi.target(), f);
  std::vector<XPoly> fiber(phi.target().order());
  for (int g = 0; g < phi.source().order(); ++g) fiber[phi(g)] += xg_poly(g);
  return substitute_letters(f, [&](XLetter l) { return is_x0(l) ? x0_poly() : fiber[letter_group(l)]; });
}

template <class W>
Poly<W> exp_concat(const Poly<W>& f, int max_deg) {
  if (sgn(f.constant_term()) != 0) throw PreconditionError("exp requires zero constant term");
  Poly<W> result = Poly<W>::constant(1);
  Poly<W> power = Poly<W>::constant(1);
  for (int k = 1; k <= max_deg; ++k) {
    power = mul_trunc(power, f, max_deg);
    if (power.is_zero()) break;
    result += Rational(1) / factorial(k) * power;
  }
  return result;
}

template <class W>
Poly<W> log_concat(const Poly<W>& g, int max_deg) {
  if (g.constant_term() != 1) throw PreconditionError("log requires constant term 1");
  Poly<W> h = g - Poly<W>::constant(1);
  Poly<W> result;
  Poly<W> power = Poly<W>::constant(1);
  for (int k = 1; k <= max_deg; ++k) {
    power = mul_trunc(power, h, max_deg);
    if (power.is_zero()) break;
    result += rat(k % 2 ? 1 : -1, k) * power;
  }
  return result;
}

}  // namespace dsl
