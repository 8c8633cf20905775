#pragma once

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "dsl/ihara.hpp"
#include "dsl/linalg.hpp"

namespace dsl {

struct SolverOptions {
  // Largest source degree tried when certifying; 0 means n + 3.
  int source_bound_cap = 0;
  // Refuse systems whose Y-word basis in the needed degree is larger than this.
  std::size_t basis_cap = 2'000'000;
  // Also impose the defect condition on the unit word 1 (source degree 0).
  bool include_unit_source = true;
};

struct DegreeReport {
  GroupSpec gamma;
  int degree = 0;
  std::size_t dim_lib = 0;
  std::size_t dim_dmr = 0;
  std::size_t dim_dmr0 = 0;
  std::size_t dim_stab_upper = 0;
  int source_bound_used = 0;
  bool certified = false;
};

inline std::size_t y_word_count(const GroupSpec& G, int d) {
  if (d == 0) return 1;
  long double v = G.order();
  for (int i = 1; i < d; ++i) v *= G.order() + 1;
  if (v > static_cast<long double>(std::numeric_limits<std::size_t>::max() / 2)) {
    return std::numeric_limits<std::size_t>::max() / 2;
  }
  return static_cast<std::size_t>(v);
}

inline void check_basis_cap(const GroupSpec& G, int d, std::size_t cap) {
  const std::size_t count = y_word_count(G, d);
  if (count > cap) {
    throw ResourceLimitError("Y-word basis in degree " + std::to_string(d) + " has " + std::to_string(count) +
                             " words, above the cap of " + std::to_string(cap));
  }
}

// All Y-words of degree d in canonical order.
inline std::vector<YWord> y_words(const GroupSpec& G, int d) {
  std::vector<YWord> out;
  std::function<void(YWord&, int)> rec = [&](YWord& prefix, int left) {
    if (left == 0) {
      out.push_back(prefix);
      return;
    }
    for (int n = 1; n <= left; ++n)
      for (int s = 0; s < G.order(); ++s) {
        YWord next = prefix;
        next.push_back(y_letter(n, s));
        rec(next, left - n);
      }
  };
  YWord empty;
  rec(empty, d);
  std::sort(out.begin(), out.end());
  return out;
}

// Builds constraint rows indexed by arbitrary ordered keys.
template <class Key>
class RowAssembler {
 public:
  void add(const Key& key, std::size_t column, const Rational& value) {
    if (sgn(value) != 0) rows_[key].emplace_back(column, value);
  }
  void feed(KernelSolver& solver) {
    for (auto& [k, row] : rows_) solver.add_row(std::move(row));
    rows_.clear();
  }

 private:
  std::map<Key, SparseRow> rows_;
};

// Defect Δ*∘s − (s⊗1 + 1⊗s)∘Δ* of s = s^Y_φ on a single source word.
class DefectEvaluator {
 public:
  explicit DefectEvaluator(GroupSpec G) : G_(std::move(G)), delta_(G_) {}

  HarmonicCoproduct& coproduct() { return delta_; }

  YTensor2 operator()(const XPoly& phi, const YWord& source) {
    YTensor2 out = delta_(s_psi_y(G_, phi, YPoly::monomial(source)));
    std::map<YWord, YPoly> images;
    auto image = [&](const YWord& w) -> const YPoly& {
      auto it = images.find(w);
      if (it == images.end()) it = images.emplace(w, s_psi_y(G_, phi, YPoly::monomial(w))).first;
      return it->second;
    };
    for (const auto& [k, c] : delta_.word(source)) {
      for (const auto& [w, d] : image(k.first)) out.add_product(w, k.second, -c, d);
      for (const auto& [w, d] : image(k.second)) out.add_product(k.first, w, -c, d);
    }
    return out;
  }

 private:
  GroupSpec G_;
  HarmonicCoproduct delta_;
};

// Per-degree data shared by the dmr, dmr0 and stabilizer computations.
class DegreeSystem {
 public:
  DegreeSystem(GroupSpec G, int n, SolverOptions opts = {})
      : G_(std::move(G)), n_(n), opts_(opts), defect_(G_) {
    if (n < 1) throw PreconditionError("degree must be positive");
    check_basis_cap(G_, n_, opts_.basis_cap);
    basis_ = lie_basis(G_, n_);
    for (const auto& b : basis_.elements) {
      stars_.push_back(star_additive(G_, b));
      thetas_.push_back(theta(b));
    }
  }

  const GroupSpec& group() const { return G_; }
  int degree() const { return n_; }
  const LieBasis& basis() const { return basis_; }
  std::size_t dim_lib() const { return basis_.elements.size(); }
  HarmonicCoproduct& coproduct() { return defect_.coproduct(); }

  // Lie elements with vanishing x0, x1 coefficients whose star image is primitive.
  const Subspace& dmr() {
    if (!dmr_) {
      KernelSolver solver(dim_lib());
      add_dmr_rows(solver);
      dmr_ = std::make_unique<Subspace>(solver.kernel());
    }
    return *dmr_;
  }

  const Subspace& dmr0() {
    if (!dmr0_) {
      if (n_ == 1) {
        std::vector<Vector> vs;
        for (int g = 1; g < G_.order(); ++g) {
          Vector v(dim_lib());
          v[static_cast<std::size_t>(g) + 1] += 1;
          v[static_cast<std::size_t>(G_.inv(g)) + 1] += 1;
          vs.push_back(std::move(v));
        }
        dmr0_ = std::make_unique<Subspace>(Subspace::span(dim_lib(), vs));
      } else {
        KernelSolver solver(dim_lib());
        add_dmr_rows(solver);
        add_parity_rows(solver);
        dmr0_ = std::make_unique<Subspace>(solver.kernel());
      }
    }
    return *dmr0_;
  }

  // dmr0 plus Q x0 + Q x1 in degree 1.
  Subspace lower_bound() {
    Subspace L = dmr0();
    if (n_ == 1) {
      Vector a(dim_lib()), b(dim_lib());
      a[0] = 1;
      b[1] = 1;
      L = L.sum(Subspace::span(dim_lib(), {a, b}));
    }
    return L;
  }

  // Adds the defect conditions for every source word of degree m.
  void add_stab_rows(KernelSolver& solver, int m) {
    check_basis_cap(G_, n_ + m, opts_.basis_cap);
    const auto sources = y_words(G_, m);
    RowAssembler<std::tuple<std::size_t, YWord, YWord>> rows;
    for (std::size_t i = 0; i < dim_lib(); ++i) {
      for (std::size_t u = 0; u < sources.size(); ++u) {
        for (const auto& [k, c] : defect_(thetas_[i], sources[u])) rows.add({u, k.first, k.second}, i, c);
      }
    }
    rows.feed(solver);
  }

 private:
  void add_dmr_rows(KernelSolver& solver) {
    SparseRow cx0, cx1;
    for (std::size_t i = 0; i < dim_lib(); ++i) {
      cx0.emplace_back(i, basis_.elements[i].coeff(XWord{kX0}));
      cx1.emplace_back(i, basis_.elements[i].coeff(XWord{x_letter(0)}));
    }
    solver.add_row(cx0);
    solver.add_row(cx1);
    RowAssembler<std::pair<YWord, YWord>> rows;
    for (std::size_t i = 0; i < dim_lib(); ++i)
      for (const auto& [k, c] : coproduct().reduced(stars_[i])) rows.add(k, i, c);
    rows.feed(solver);
  }

  void add_parity_rows(KernelSolver& solver) {
    auto parity = [&](int n, int s) {
      SparseRow row;
      const int sign = n % 2 ? -1 : 1;
      for (std::size_t i = 0; i < dim_lib(); ++i) {
        Rational v = stars_[i].coeff(YWord{y_letter(n, s)}) + sign * stars_[i].coeff(YWord{y_letter(n, G_.inv(s))});
        row.emplace_back(i, v);
      }
      solver.add_row(row);
    };
    if (G_.order() >= 3) {
      for (int s = 0; s < G_.order(); ++s) parity(1, s);
    } else {
      parity(2, 0);
    }
  }

  GroupSpec G_;
  int n_;
  SolverOptions opts_;
  DefectEvaluator defect_;
  LieBasis basis_;
  std::vector<YPoly> stars_;
  std::vector<XPoly> thetas_;
  std::unique_ptr<Subspace> dmr_;
  std::unique_ptr<Subspace> dmr0_;
};

inline Subspace dmr_space(int n, const GroupSpec& G, SolverOptions opts = {}) {
  DegreeSystem sys(G, n, opts);
  return sys.dmr();
}

inline Subspace dmr0_space(int n, const GroupSpec& G, SolverOptions opts = {}) {
  DegreeSystem sys(G, n, opts);
  return sys.dmr0();
}

// The defect Δ*∘s − (s⊗1 + 1⊗s)∘Δ* of s = s^Y_{θ(ψ)} on every Y-word of degree m.
struct StabDefect {
  std::vector<YWord> sources;
  std::vector<YTensor2> values;

  bool is_zero() const {
    for (const auto& v : values)
      if (!v.is_zero()) return false;
    return true;
  }
};

inline StabDefect stab_defect(const GroupSpec& G, const XPoly& psi, int m) {
  if (!psi.is_homogeneous()) throw PreconditionError("stab_defect requires a homogeneous element");
  if (m < 0) throw PreconditionError("source degree must be non-negative");
  check_letters(G, psi);
  StabDefect out;
  out.sources = y_words(G, m);
  if (psi.is_zero()) {
    out.values.assign(out.sources.size(), YTensor2{});
    return out;
  }
  DefectEvaluator defect(G);
  const XPoly th = theta(psi);
  for (const auto& u : out.sources) out.values.push_back(defect(th, u));
  return out;
}

inline int effective_cap(int n, const SolverOptions& opts) {
  return opts.source_bound_cap > 0 ? opts.source_bound_cap : n + 3;
}

inline Subspace stab_space_upper(int n, const GroupSpec& G, int M, SolverOptions opts = {}) {
  if (M < 1) throw PreconditionError("source bound must be positive");
  DegreeSystem sys(G, n, opts);
  KernelSolver solver(sys.dim_lib());
  for (int m = opts.include_unit_source ? 0 : 1; m <= M && !solver.full_rank(); ++m) sys.add_stab_rows(solver, m);
  return solver.kernel();
}

inline DegreeReport verify_main_theorem(int n, const GroupSpec& G, SolverOptions opts = {}) {
  DegreeSystem sys(G, n, opts);
  DegreeReport rep;
  rep.gamma = G;
  rep.degree = n;
  rep.dim_lib = sys.dim_lib();
  rep.dim_dmr = sys.dmr().dim();
  rep.dim_dmr0 = sys.dmr0().dim();
  const Subspace L = sys.lower_bound();
  const int cap = effective_cap(n, opts);
  KernelSolver solver(sys.dim_lib());
  if (opts.include_unit_source) sys.add_stab_rows(solver, 0);
  for (int M = 1; M <= cap; ++M) {
    if (!solver.full_rank()) sys.add_stab_rows(solver, M);
    const Subspace K = solver.kernel();
    rep.dim_stab_upper = K.dim();
    rep.source_bound_used = M;
    if (K.dim() == L.dim() && K.contains(L)) {
      rep.certified = true;
      break;
    }
    if (K.dim() < L.dim()) break;
  }
  return rep;
}

inline std::vector<DegreeReport> dimension_table(const GroupSpec& G, int n_max, SolverOptions opts = {}) {
  if (n_max < 1) throw PreconditionError("maximal degree must be positive");
  std::vector<DegreeReport> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(verify_main_theorem(n, G, opts));
  return out;
}

// Subalgebra cut out by the distribution conditions p^d_*(x) = i_d^*(x) + l_d(x) x0
// for every divisor d of |Γ| (cyclic Γ only).
inline Subspace dist_subspace(int n, const GroupSpec& G) {
  if (!G.is_cyclic()) throw PreconditionError("distribution conditions are implemented for cyclic groups only");
  if (n < 1) throw PreconditionError("degree must be positive");
  const int N = G.order();
  const LieBasis basis = lie_basis(G, n);
  KernelSolver solver(basis.elements.size());
  for (int d = 1; d <= N; ++d) {
    if (N % d) continue;
    const GroupSpec image = GroupSpec::cyclic(N / d);
    const GroupMorphism include(image, G, {d % N});
    const GroupMorphism project(G, image, {1 % (N / d)});
    RowAssembler<XWord> rows;
    for (std::size_t i = 0; i < basis.elements.size(); ++i) {
      const XPoly& x = basis.elements[i];
      XPoly value = phi_push(project, x) - phi_pull(include, x);
      if (n == 1) {
        Rational ell;
        for (int s = 0; s < N; ++s)
          if ((static_cast<long>(s) * (N / d)) % N == 0) ell += x.coeff(XWord{x_letter(s)});
        value.add(XWord{kX0}, -ell);
      }
      for (const auto& [w, c] : value) rows.add(w, i, c);
    }
    rows.feed(solver);
  }
  return solver.kernel();
}

}  // namespace dsl
