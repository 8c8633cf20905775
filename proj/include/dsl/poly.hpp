#pragma once

#include <map>
#include <utility>

#include "dsl/rational.hpp"
#include "dsl/word.hpp"

namespace dsl {

inline constexpr int kNoTruncation = -1;

// Sparse linear combination of words with exact rational coefficients.  Zero
// coefficients are never stored, so equality is structural.
template <class W>
class Poly {
 public:
  using word_type = W;
  using map_type = std::map<W, Rational>;

  Poly() = default;

  static Poly constant(const Rational& c) { return monomial(W{}, c); }

  static Poly monomial(const W& w, const Rational& c = 1) {
    Poly p;
    p.add(w, c);
    return p;
  }

  void add(const W& w, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add_product(const W& w, const Rational& a, const Rational& b) {
    if (sgn(a) == 0 || sgn(b) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w);
    if (inserted) {
      it->second = a * b;
    } else {
      it->second += a * b;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rational coeff(const W& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coeff(W{}); }

  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
  int min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  bool is_homogeneous() const { return is_zero() || min_degree() == max_degree(); }

  Poly homogeneous_part(int d) const {
    Poly r;
    for (const auto& [w, c] : terms_)
      if (w.degree() == d) r.terms_.emplace_hint(r.terms_.end(), w, c);
    return r;
  }

  Poly truncated(int max_deg) const {
    if (max_deg == kNoTruncation) return *this;
    Poly r;
    for (const auto& [w, c] : terms_) {
      if (w.degree() > max_deg) break;
      r.terms_.emplace_hint(r.terms_.end(), w, c);
    }
    return r;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& [w, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) { return mul_trunc(a, b, kNoTruncation); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  // Concatenation product keeping only words of degree <= max_deg.
  friend Poly mul_trunc(const Poly& a, const Poly& b, int max_deg) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    const int bmin = b.min_degree();
    for (const auto& [u, cu] : a.terms_) {
      if (max_deg != kNoTruncation && u.degree() + bmin > max_deg) break;
      for (const auto& [v, cv] : b.terms_) {
        if (max_deg != kNoTruncation && u.degree() + v.degree() > max_deg) break;
        r.add_product(u * v, cu, cv);
      }
    }
    return r;
  }

 private:
  map_type terms_;
};

// Element of the tensor square, keyed by pairs of words.
template <class W>
class Tensor2 {
 public:
  using key_type = std::pair<W, W>;
  using map_type = std::map<key_type, Rational>;

  Tensor2() = default;

  // a⊗b, dropping terms of total degree above max_deg.
  static Tensor2 pure(const Poly<W>& a, const Poly<W>& b, int max_deg = kNoTruncation) {
    Tensor2 t;
    for (const auto& [u, cu] : a) {
      if (max_deg != kNoTruncation && u.degree() > max_deg) break;
      for (const auto& [v, cv] : b) {
        if (max_deg != kNoTruncation && u.degree() + v.degree() > max_deg) break;
        t.add_product(u, v, cu, cv);
      }
    }
    return t;
  }

  void add(const W& a, const W& b, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key_type(a, b), c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add_product(const W& a, const W& b, const Rational& x, const Rational& y) {
    if (sgn(x) == 0 || sgn(y) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key_type(a, b));
    if (inserted) {
      it->second = x * y;
    } else {
      it->second += x * y;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Rational coeff(const W& a, const W& b) const {
    auto it = terms_.find(key_type(a, b));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Drops every term whose total degree exceeds max_deg.
  Tensor2 truncated(int max_deg) const {
    if (max_deg == kNoTruncation) return *this;
    Tensor2 r;
    for (const auto& [k, c] : terms_)
      if (k.first.degree() + k.second.degree() <= max_deg) r.terms_.emplace_hint(r.terms_.end(), k, c);
    return r;
  }

  Tensor2& operator+=(const Tensor2& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  Tensor2& operator-=(const Tensor2& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
  }
  Tensor2& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Rational& s, Tensor2 a) { return a *= s; }
  friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.terms_ == b.terms_; }

  // Componentwise product (a⊗b)(c⊗d) = ac⊗bd, optionally truncated in total degree.
  friend Tensor2 mul_trunc(const Tensor2& x, const Tensor2& y, int max_deg) {
    Tensor2 r;
    for (const auto& [k1, c1] : x.terms_) {
      const int d1 = k1.first.degree() + k1.second.degree();
      for (const auto& [k2, c2] : y.terms_) {
        if (max_deg != kNoTruncation && d1 + k2.first.degree() + k2.second.degree() > max_deg) continue;
        r.add_product(k1.first * k2.first, k1.second * k2.second, c1, c2);
      }
    }
    return r;
  }
  friend Tensor2 operator*(const Tensor2& x, const Tensor2& y) { return mul_trunc(x, y, kNoTruncation); }

 private:
  map_type terms_;
};

using XPoly = Poly<XWord>;
using YPoly = Poly<YWord>;
using XTensor2 = Tensor2<XWord>;
using YTensor2 = Tensor2<YWord>;

template <class W>
Tensor2<W> primitive_tensor(const Poly<W>& f) {
  Tensor2<W> t;
  for (const auto& [w, c] : f) {
    t.add(w, W{}, c);
    t.add(W{}, w, c);
  }
  return t;
}

template <class W>
Poly<W> commutator(const Poly<W>& a, const Poly<W>& b) {
  return a * b - b * a;
}

}  // namespace dsl
