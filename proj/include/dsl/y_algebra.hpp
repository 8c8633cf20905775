#pragma once

#include <unordered_map>
#include <vector>

#include "dsl/core_algebra.hpp"
#include "dsl/truncated.hpp"

namespace dsl {

inline YPoly y_poly(int n, int sigma) { return YPoly::monomial(YWord{y_letter(n, sigma)}); }

inline XWord embed_y_word(const YWord& u) {
  XWord w;
  for (YLetter l : u) {
    for (int i = 1; i < y_weight(l); ++i) w.push_back(kX0);
    w.push_back(x_letter(y_group(l)));
  }
  return w;
}

inline XPoly embed_y(const YPoly& u) {
  XPoly r;
  for (const auto& [w, c] : u) r.add(embed_y_word(w), c);
  return r;
}

// Reads a word ending in a group letter as a Y-word; returns false for words ending in x0.
inline bool read_y_word(const XWord& w, YWord& out) {
  out = YWord{};
  if (w.empty()) return true;
  if (is_x0(w.back())) return false;
  int run = 0;
  for (XLetter l : w) {
    if (is_x0(l)) {
      ++run;
    } else {
      out.push_back(y_letter(run + 1, letter_group(l)));
      run = 0;
    }
  }
  return true;
}

inline YPoly pi_y(const XPoly& f) {
  YPoly r;
  YWord u;
  for (const auto& [w, c] : f)
    if (read_y_word(w, u)) r.add(u, c);
  return r;
}

inline YPoly y11_power(int n) {
  YWord w;
  for (int i = 0; i < n; ++i) w.push_back(y_letter(1, 0));
  return YPoly::monomial(w);
}

inline YPoly corr(const XPoly& f) {
  YPoly r;
  for (const auto& [w, c] : f) {
    const int n = static_cast<int>(w.size());
    if (n == 0 || w.back() != x_letter(0)) continue;
    bool line = true;
    for (int i = 0; i + 1 < n; ++i) line = line && is_x0(w[i]);
    if (!line) continue;
    YWord u;
    for (int i = 0; i < n; ++i) u.push_back(y_letter(1, 0));
    r.add(u, c * rat(n % 2 ? 1 : -1, n));
  }
  return r;
}

inline YWord q_twist_word(const GroupSpec& G, const YWord& u) {
  YWord r;
  int prev = G.identity();
  for (YLetter l : u) {
    r.push_back(y_letter(y_weight(l), G.div(y_group(l), prev)));
    prev = y_group(l);
  }
  return r;
}

inline YWord p_twist_word(const GroupSpec& G, const YWord& u) {
  YWord r;
  int prefix = G.identity();
  for (YLetter l : u) {
    prefix = G.mul(prefix, y_group(l));
    r.push_back(y_letter(y_weight(l), prefix));
  }
  return r;
}

inline YPoly q_twist(const GroupSpec& G, const YPoly& u) {
  YPoly r;
  for (const auto& [w, c] : u) r.add(q_twist_word(G, w), c);
  return r;
}

inline YPoly p_twist(const GroupSpec& G, const YPoly& u) {
  YPoly r;
  for (const auto& [w, c] : u) r.add(p_twist_word(G, w), c);
  return r;
}

inline XWord p_tilde_word(const GroupSpec& G, const XWord& w) {
  XWord r;
  int prefix = G.identity();
  for (XLetter l : w) {
    if (is_x0(l)) {
      r.push_back(kX0);
    } else {
      prefix = G.mul(prefix, letter_group(l));
      r.push_back(x_letter(prefix));
    }
  }
  return r;
}

inline XPoly p_tilde(const GroupSpec& G, const XPoly& f) {
  XPoly r;
  for (const auto& [w, c] : f) r.add(p_tilde_word(G, w), c);
  return r;
}

inline XPoly partial0(const XPoly& f) {
  XPoly r;
  for (const auto& [w, c] : f) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!is_x0(w[i])) continue;
      XWord v = w.slice(0, i);
      v.append(w.slice(i + 1, w.size()));
      r.add(v, c);
    }
  }
  return r;
}

inline XPoly sec_tilde(const XPoly& f) {
  XPoly result;
  XPoly derivative = f;
  XWord x0s;
  for (int i = 0; !derivative.is_zero(); ++i) {
    const Rational scale = rat(i % 2 ? -1 : 1) / factorial(i);
    for (const auto& [w, c] : derivative) result.add(w * x0s, scale * c);
    derivative = partial0(derivative);
    x0s.push_back(kX0);
  }
  return result;
}

inline XPoly sec(const YPoly& u) { return sec_tilde(embed_y(u)); }

inline YPoly star_additive(const GroupSpec& G, const XPoly& psi) { return q_twist(G, pi_y(psi)) + corr(psi); }

// The harmonic coproduct, with generator images and word images cached.
class HarmonicCoproduct {
 public:
  explicit HarmonicCoproduct(GroupSpec G) : G_(std::move(G)) {}

  const YTensor2& generator(YLetter l) {
    auto it = generators_.find(l);
    if (it != generators_.end()) return it->second;
    const int n = y_weight(l);
    const int s = y_group(l);
    YTensor2 t;
    t.add(YWord{l}, YWord{}, 1);
    t.add(YWord{}, YWord{l}, 1);
    for (int a = 1; a < n; ++a)
      for (int g = 0; g < G_.order(); ++g) t.add(YWord{y_letter(a, g)}, YWord{y_letter(n - a, G_.div(s, g))}, 1);
    return generators_.emplace(l, std::move(t)).first->second;
  }

  const YTensor2& word(const YWord& w) {
    auto it = words_.find(w);
    if (it != words_.end()) return it->second;
    YTensor2 t;
    if (w.empty()) {
      t.add(YWord{}, YWord{}, 1);
    } else {
      YWord head = w.slice(0, w.size() - 1);
      t = word(head) * generator(w.back());
    }
    return words_.emplace(w, std::move(t)).first->second;
  }

  YTensor2 operator()(const YPoly& u) {
    YTensor2 r;
    for (const auto& [w, c] : u)
      for (const auto& [k, d] : word(w)) r.add_product(k.first, k.second, c, d);
    return r;
  }

  // Drops the terms u⊗1 and 1⊗u.
  YTensor2 reduced(const YPoly& u) {
    YTensor2 r;
    for (const auto& [w, c] : u)
      for (const auto& [k, d] : word(w))
        if (!k.first.empty() && !k.second.empty()) r.add_product(k.first, k.second, c, d);
    return r;
  }

  void clear_words() { words_.clear(); }
  const GroupSpec& group() const { return G_; }

 private:
  GroupSpec G_;
  std::unordered_map<YLetter, YTensor2> generators_;
  std::unordered_map<YWord, YTensor2, WordHash<YWord>> words_;
};

inline YTensor2 harmonic_coproduct(const GroupSpec& G, const YPoly& u) {
  HarmonicCoproduct delta(G);
  return delta(u);
}

inline bool is_delta_star_primitive(const GroupSpec& G, const YPoly& u) {
  if (sgn(u.constant_term()) != 0) throw PreconditionError("primitivity test requires zero constant term");
  HarmonicCoproduct delta(G);
  return delta.reduced(u).is_zero();
}

inline YTruncSeries star_multiplicative(const GroupSpec& G, const TruncSeries& series) {
  if (series.constant_term() != 1) throw PreconditionError("series must have constant term 1");
  const int D = series.trunc();
  const YPoly projected = pi_y(series.poly());
  YPoly exponent;
  for (int n = 2; n <= D; ++n) {
    const Rational c = projected.coeff(YWord{y_letter(n, 0)});
    if (sgn(c) != 0) exponent += (rat(n % 2 ? 1 : -1, n) * c) * y11_power(n);
  }
  return YTruncSeries(mul_trunc(exp_concat(exponent, D), q_twist(G, projected), D), D);
}

}  // namespace dsl
