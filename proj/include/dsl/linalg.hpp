#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsl/rational.hpp"

namespace dsl {

using Vector = std::vector<Rational>;
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

namespace detail {

using IntRow = std::vector<mpz_class>;

inline void make_primitive(IntRow& row, std::size_t from = 0) {
  mpz_class g = 0;
  for (std::size_t j = from; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (std::size_t j = from; j < row.size(); ++j)
      if (row[j] != 0) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
}

inline IntRow integer_row(const Vector& v) {
  mpz_class l = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow row(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    row[j] = v[j].get_num() * (l / v[j].get_den());
  }
  make_primitive(row);
  return row;
}

struct Echelon {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;
};

// Fraction-free Gauss-Jordan elimination.  The pivot in each column is taken
// from the remaining row with the smallest index; rows are kept primitive.
inline Echelon reduced_echelon(const std::vector<Vector>& input, std::size_t ncols) {
  std::vector<IntRow> m;
  m.reserve(input.size());
  for (const auto& v : input) {
    IntRow row = integer_row(v);
    bool nonzero = false;
    for (const auto& x : row) nonzero = nonzero || x != 0;
    if (nonzero) m.push_back(std::move(row));
  }
  Echelon e;
  std::size_t r = 0;
  mpz_class g, a, b, t;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    if (piv != r) std::swap(m[piv], m[r]);
    if (m[r][c] < 0)
      for (std::size_t j = c; j < ncols; ++j) m[r][j] = -m[r][j];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpz_gcd(g.get_mpz_t(), m[r][c].get_mpz_t(), m[i][c].get_mpz_t());
      mpz_divexact(a.get_mpz_t(), m[r][c].get_mpz_t(), g.get_mpz_t());
      mpz_divexact(b.get_mpz_t(), m[i][c].get_mpz_t(), g.get_mpz_t());
      const std::size_t from = i < r ? 0 : c;
      for (std::size_t j = from; j < ncols; ++j) {
        if (m[r][j] == 0) {
          if (m[i][j] != 0) m[i][j] *= a;
          continue;
        }
        t = b * m[r][j];
        m[i][j] *= a;
        m[i][j] -= t;
      }
      make_primitive(m[i], from);
    }
    e.pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = 0; i < r; ++i) {
    Vector row(ncols);
    const mpz_class& p = m[i][e.pivots[i]];
    for (std::size_t j = 0; j < ncols; ++j) {
      if (m[i][j] == 0) continue;
      row[j] = Rational(m[i][j], p);
      row[j].canonicalize();
    }
    e.rows.push_back(std::move(row));
  }
  return e;
}

}  // namespace detail

// Finite-dimensional subspace of Q^n stored in reduced row-echelon form, so
// that equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient_dim) throw PreconditionError("vector length does not match ambient dimension");
    Subspace s(ambient_dim);
    auto e = detail::reduced_echelon(vectors, ambient_dim);
    s.rows_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace full(std::size_t ambient_dim) {
    std::vector<Vector> unit;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      Vector v(ambient_dim);
      v[i] = 1;
      unit.push_back(std::move(v));
    }
    return span(ambient_dim, unit);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  const std::vector<std::string>& labels() const { return labels_; }
  Subspace& with_labels(std::vector<std::string> labels) {
    labels_ = std::move(labels);
    return *this;
  }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_) throw PreconditionError("vector length does not match ambient dimension");
    Vector rest = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational c = rest[pivots_[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (rows_[i][j] != 0) rest[j] -= c * rows_[i][j];
    }
    for (const auto& x : rest)
      if (x != 0) return false;
    return true;
  }

  bool contains(const Subspace& o) const {
    for (const auto& v : o.rows_)
      if (!contains(v)) return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    std::vector<Vector> all = rows_;
    all.insert(all.end(), o.rows_.begin(), o.rows_.end());
    Subspace s = span(ambient_, all);
    s.labels_ = labels_;
    return s;
  }

  // Basis of the annihilator {a : a·v = 0 for all v in this subspace}.
  std::vector<Vector> annihilator() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < ambient_; ++f) {
      if (is_pivot[f]) continue;
      Vector v(ambient_);
      v[f] = 1;
      for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = -rows_[i][f];
      out.push_back(std::move(v));
    }
    return out;
  }

  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::string> labels_;
};

// Accumulates linear constraints on ncols unknowns and returns their exact
// solution space.  Rows are screened modulo a large prime to select a maximal
// independent subset; the exact kernel of that subset is then checked against
// every stored constraint, and any violated constraint is added back before
// recomputing, so the result never depends on the screening.
class KernelSolver {
 public:
  explicit KernelSolver(std::size_t ncols) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  bool full_rank() const { return echelon_.size() == ncols_; }
  std::size_t screened_rank() const { return echelon_.size(); }

  void add_row(SparseRow row) {
    if (full_rank()) return;
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    if (row.empty()) return;
    for (const auto& [j, v] : row)
      if (j >= ncols_) throw PreconditionError("constraint column out of range");
    bool independent = true;
    std::vector<std::uint64_t> dense(ncols_, 0);
    for (const auto& [j, v] : row) {
      auto m = modp(v);
      if (!m) {
        independent = true;
        dense.clear();
        break;
      }
      dense[j] = add(dense[j], *m);
    }
    if (!dense.empty()) independent = reduce_modp(dense);
    rows_.push_back(std::move(row));
    selected_.push_back(independent);
  }

  void add_dense_row(const Vector& v) {
    SparseRow row;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) row.emplace_back(j, v[j]);
    add_row(std::move(row));
  }

  Subspace kernel() {
    if (full_rank()) return Subspace(ncols_);
    while (true) {
      std::vector<Vector> chosen;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!selected_[i]) continue;
        Vector v(ncols_);
        for (const auto& [j, x] : rows_[i]) v[j] += x;
        chosen.push_back(std::move(v));
      }
      Subspace rowspace = Subspace::span(ncols_, chosen);
      std::vector<Vector> kern = rowspace.annihilator();
      bool violated = false;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (selected_[i]) continue;
        for (const auto& k : kern) {
          Rational dot;
          for (const auto& [j, x] : rows_[i]) dot += x * k[j];
          if (dot != 0) {
            selected_[i] = true;
            violated = true;
            break;
          }
        }
      }
      if (!violated) return Subspace::span(ncols_, kern);
    }
  }

 private:
  static constexpr std::uint64_t kPrime = (1ull << 61) - 1;

  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
  }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    return add(lo, hi);
  }
  static std::uint64_t power(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  static std::uint64_t reduce(const mpz_class& z) {
    mpz_class m;
    mpz_fdiv_r(m.get_mpz_t(), z.get_mpz_t(), prime_mpz().get_mpz_t());
    return m.get_ui();
  }
  static const mpz_class& prime_mpz() {
    static const mpz_class p(std::to_string(kPrime));
    return p;
  }
  static std::optional<std::uint64_t> modp(const Rational& x) {
    std::uint64_t d = reduce(x.get_den());
    if (d == 0) return std::nullopt;
    return mul(reduce(x.get_num()), power(d, kPrime - 2));
  }

  bool reduce_modp(std::vector<std::uint64_t>& v) {
    for (std::size_t e = 0; e < echelon_.size(); ++e) {
      const std::uint64_t c = v[pivot_[e]];
      if (c == 0) continue;
      const std::uint64_t neg = kPrime - c;
      const auto& row = echelon_[e];
      for (std::size_t j = 0; j < ncols_; ++j)
        if (row[j]) v[j] = add(v[j], mul(neg, row[j]));
    }
    std::size_t p = 0;
    while (p < ncols_ && v[p] == 0) ++p;
    if (p == ncols_) return false;
    const std::uint64_t inv = power(v[p], kPrime - 2);
    for (auto& x : v) x = mul(x, inv);
    for (auto& row : echelon_) {
      const std::uint64_t c = row[p];
      if (c == 0) continue;
      const std::uint64_t neg = kPrime - c;
      for (std::size_t j = 0; j < ncols_; ++j)
        if (v[j]) row[j] = add(row[j], mul(neg, v[j]));
    }
    echelon_.push_back(std::move(v));
    pivot_.push_back(p);
    return true;
  }

  std::size_t ncols_;
  std::vector<SparseRow> rows_;
  std::vector<bool> selected_;
  std::vector<std::vector<std::uint64_t>> echelon_;
  std::vector<std::size_t> pivot_;
};

inline Subspace Subspace::intersect(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw PreconditionError("ambient dimensions differ");
  const auto ann = o.annihilator();
  KernelSolver solver(rows_.size());
  for (const auto& a : ann) {
    Vector row(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j)
        if (rows_[i][j] != 0 && a[j] != 0) row[i] += rows_[i][j] * a[j];
    solver.add_dense_row(row);
  }
  const Subspace coeffs = solver.kernel();
  std::vector<Vector> vectors;
  for (const auto& c : coeffs.basis()) {
    Vector v(ambient_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (c[i] != 0)
        for (std::size_t j = 0; j < ambient_; ++j) v[j] += c[i] * rows_[i][j];
    vectors.push_back(std::move(v));
  }
  Subspace s = span(ambient_, vectors);
  s.labels_ = labels_;
  return s;
}

// Kernel of the linear map whose columns are the given sparse images.
inline Subspace kernel_of_columns(const std::vector<std::vector<std::pair<std::size_t, Rational>>>& columns,
                                  std::size_t nrows) {
  std::vector<SparseRow> rows(nrows);
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) rows[r].emplace_back(c, v);
  KernelSolver solver(columns.size());
  for (auto& row : rows) solver.add_row(std::move(row));
  return solver.kernel();
}

}  // namespace dsl
