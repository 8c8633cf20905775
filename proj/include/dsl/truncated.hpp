#pragma once

#include "dsl/poly.hpp"

namespace dsl {

// Element of a completed free algebra represented modulo degree > trunc.
template <class W>
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(Poly<W> poly, int trunc) : trunc_(trunc) {
    if (trunc < 0) throw PreconditionError("truncation order must be non-negative");
    poly_ = poly.truncated(trunc);
  }

  static TruncatedSeries one(int trunc) { return TruncatedSeries(Poly<W>::constant(1), trunc); }

  const Poly<W>& poly() const { return poly_; }
  int trunc() const { return trunc_; }
  Rational coeff(const W& w) const { return poly_.coeff(w); }
  Rational constant_term() const { return poly_.constant_term(); }

  void require_same_trunc(const TruncatedSeries& o) const {
    if (trunc_ != o.trunc_) throw PreconditionError("truncation orders differ");
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_trunc(b);
    return TruncatedSeries(a.poly_ + b.poly_, a.trunc_);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_trunc(b);
    return TruncatedSeries(a.poly_ - b.poly_, a.trunc_);
  }
  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
    return TruncatedSeries(s * a.poly_, a.trunc_);
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_trunc(b);
    return TruncatedSeries(mul_trunc(a.poly_, b.poly_, a.trunc_), a.trunc_);
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.trunc_ == b.trunc_ && a.poly_ == b.poly_;
  }

 private:
  Poly<W> poly_;
  int trunc_ = 0;
};

using TruncSeries = TruncatedSeries<XWord>;
using YTruncSeries = TruncatedSeries<YWord>;

}  // namespace dsl
