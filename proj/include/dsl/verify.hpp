#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dsl/io.hpp"

namespace dsl {

struct CheckReport {
  std::string check;
  bool passed = true;
  Json first_failure;
};

inline Json to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["passed"] = r.passed;
  j["first_failure"] = r.passed ? Json() : r.first_failure;
  return j;
}

struct SuiteOptions {
  GroupSpec gamma;
  int trunc = 8;
  int lie_degree = 6;
  std::uint64_t seed = 1;
  int cases = 100;
  int group_cases = 50;
  SolverOptions solver;
};

// Seeded source of random Lie elements with small integer Lyndon coordinates.
class RandomLie {
 public:
  RandomLie(GroupSpec G, std::uint64_t seed) : G_(std::move(G)), rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational small_rational() {
    int num = 0;
    while (num == 0) num = uniform(-3, 3);
    return rat(num, uniform(1, 3));
  }

  const LieBasis& basis(int n) {
    auto it = bases_.find(n);
    if (it == bases_.end()) it = bases_.emplace(n, lie_basis(G_, n)).first;
    return it->second;
  }

  XPoly homogeneous(int n) {
    const LieBasis& b = basis(n);
    XPoly out;
    while (out.is_zero()) {
      const int picks = std::min<int>(3, static_cast<int>(b.elements.size()));
      for (int k = 0; k < picks; ++k) {
        const int i = uniform(0, static_cast<int>(b.elements.size()) - 1);
        out += Rational(uniform(-2, 2)) * b.elements[i];
      }
    }
    return out;
  }

  XPoly element(int max_deg) {
    XPoly out;
    while (out.is_zero()) {
      for (int n = 1; n <= max_deg; ++n)
        if (uniform(0, 1)) out += homogeneous(n);
    }
    return out;
  }

  XPoly polynomial(int max_deg, int terms) {
    XPoly out;
    for (int t = 0; t < terms; ++t) {
      const int len = uniform(0, max_deg);
      XWord w;
      for (int i = 0; i < len; ++i) {
        const int l = uniform(0, G_.order());
        w.push_back(l == 0 ? kX0 : x_letter(l - 1));
      }
      out.add(w, Rational(uniform(-3, 3)));
    }
    return out;
  }

  YPoly y_polynomial(int max_deg, int terms) {
    YPoly out;
    for (int t = 0; t < terms; ++t) {
      int left = uniform(0, max_deg);
      YWord w;
      while (left > 0) {
        const int n = uniform(1, left);
        w.push_back(y_letter(n, uniform(0, G_.order() - 1)));
        left -= n;
      }
      out.add(w, Rational(uniform(-3, 3)));
    }
    return out;
  }

  TruncSeries group_like(int D, int max_deg = 3) { return exp_series(element(std::min(max_deg, D)), D); }

 private:
  GroupSpec G_;
  std::mt19937_64 rng_;
  std::map<int, LieBasis> bases_;
};

using Witness = std::optional<Json>;

template <class T>
Witness mismatch(const GroupSpec& G, const T& expected, const T& got, Json input = Json()) {
  if (expected == got) return std::nullopt;
  Json j;
  if (!input.is_null()) j["input"] = std::move(input);
  j["expected"] = to_json(G, expected);
  j["got"] = to_json(G, got);
  return j;
}

inline Witness failure(std::string what) {
  Json j;
  j["reason"] = std::move(what);
  return j;
}

class SuiteRun {
 public:
  void check(std::string name, const std::function<Witness()>& fn) {
    CheckReport r;
    r.check = std::move(name);
    try {
      if (Witness w = fn()) {
        r.passed = false;
        r.first_failure = std::move(*w);
      }
    } catch (const ResourceLimitError&) {
      throw;
    } catch (const Error& e) {
      r.passed = false;
      r.first_failure["error"] = e.what();
    }
    reports_.push_back(std::move(r));
  }

  // Runs fn on count cases and stops at the first witness.
  void cases(std::string name, int count, const std::function<Witness(int)>& fn) {
    check(std::move(name), [&]() -> Witness {
      for (int i = 0; i < count; ++i)
        if (Witness w = fn(i)) {
          (*w)["case"] = i;
          return w;
        }
      return std::nullopt;
    });
  }

  const std::vector<CheckReport>& reports() const { return reports_; }
  std::vector<CheckReport> take() { return std::move(reports_); }

 private:
  std::vector<CheckReport> reports_;
};

namespace detail {

inline YPoly ymono(std::initializer_list<YLetter> letters, const Rational& c = 1) {
  YWord w;
  for (YLetter l : letters) w.push_back(l);
  YPoly p;
  p.add(w, c);
  return p;
}

inline YTensor2 ysym(YLetter a, YLetter b) {
  YTensor2 t;
  t.add(YWord{a}, YWord{b}, 1);
  t.add(YWord{b}, YWord{a}, 1);
  return t;
}

}  // namespace detail

inline std::size_t inversion_orbits(const GroupSpec& G) {
  std::size_t count = 0;
  for (int g = 1; g < G.order(); ++g)
    if (G.inv(g) >= g) ++count;
  return count;
}

inline std::vector<CheckReport> suite_paper_deg1(const SuiteOptions& o) {
  using namespace detail;
  const GroupSpec& G = o.gamma;
  SuiteRun run;
  const DegreeReport rep = verify_main_theorem(1, G, o.solver);
  run.check("deg1.certified", [&]() -> Witness {
    if (!rep.certified) return Json(to_json(rep));
    return std::nullopt;
  });
  run.check("deg1.dmr0_dimension", [&]() -> Witness {
    if (rep.dim_dmr0 != inversion_orbits(G)) return Json(to_json(rep));
    return std::nullopt;
  });
  run.check("deg1.stab_dimension", [&]() -> Witness {
    if (rep.dim_stab_upper != rep.dim_dmr0 + 2) return Json(to_json(rep));
    return std::nullopt;
  });
  run.check("deg1.theta_letters", [&]() -> Witness {
    if (auto w = mismatch(G, XPoly{}, theta(x0_poly()), "x0")) return w;
    if (auto w = mismatch(G, Rational(2) * x1_poly(), theta(x1_poly()), "x1")) return w;
    for (int g = 1; g < G.order(); ++g)
      if (auto w = mismatch(G, xg_poly(g), theta(xg_poly(g)), render_letter(G, x_letter(g)))) return w;
    return std::nullopt;
  });
  run.check("deg1.defect_identity", [&]() -> Witness {
    DefectEvaluator defect(G);
    for (int g = 0; g < G.order(); ++g)
      for (int a = 0; a < G.order(); ++a) {
        const YTensor2 expected = ysym(y_letter(1, g), y_letter(1, G.div(a, g))) -
                                  ysym(y_letter(1, G.inv(g)), y_letter(1, G.mul(a, g)));
        const YTensor2 got = defect(xg_poly(g), YWord{y_letter(1, a)});
        Json input;
        input["g"] = G.residue_string(g);
        input["alpha"] = G.residue_string(a);
        if (auto w = mismatch(G, expected, got, input)) return w;
      }
    return std::nullopt;
  });
  return run.take();
}

inline std::vector<CheckReport> suite_paper_deg2(const SuiteOptions& o) {
  using namespace detail;
  const GroupSpec& G = o.gamma;
  SuiteRun run;
  const XPoly x0 = x0_poly();
  const LieBasis basis = lie_basis(G, 2);
  if (G.order() == 1) {
    const XPoly psi = bracket(x0, x1_poly());
    const YLetter y1 = y_letter(1, 0), y2 = y_letter(2, 0);
    run.check("deg2.star", [&] {
      return mismatch(G, ymono({y2}) + ymono({y1, y1}, rat(-1, 2)), star_additive(G, psi));
    });
    run.check("deg2.theta", [&] { return mismatch(G, psi - rat(1, 2) * x1_poly() * x1_poly(), theta(psi)); });
    run.check("deg2.sY_y1", [&] {
      return mismatch(G, ymono({y1, y2}) + ymono({y1, y1, y1}, rat(-1, 2)),
                      s_psi_y(G, theta(psi), ymono({y1})));
    });
    run.check("deg2.dmr", [&]() -> Witness {
      const Subspace expected = Subspace::span(basis.elements.size(), {lie_coordinates(basis, psi)});
      if (!(dmr_space(2, G, o.solver) == expected)) return failure("dmr[2] differs from span{[x0,x1]}");
      return std::nullopt;
    });
  } else if (G.order() == 2) {
    const XPoly xp = x1_poly(), xm = xg_poly(1);
    const XPoly psi1 = bracket(x0, xp), psi2 = bracket(x0, xm), psi3 = bracket(xp, xm);
    const YLetter p1 = y_letter(1, 0), m1 = y_letter(1, 1), p2 = y_letter(2, 0), m2 = y_letter(2, 1);
    const YPoly s1 = ymono({p2}) + ymono({p1, p1}, rat(-1, 2));
    const YPoly s2 = ymono({m2});
    const YPoly s3 = ymono({p1, m1}) - ymono({m1, m1});
    run.check("deg2.star_psi1", [&] { return mismatch(G, s1, star_additive(G, psi1)); });
    run.check("deg2.star_psi2", [&] { return mismatch(G, s2, star_additive(G, psi2)); });
    run.check("deg2.star_psi3", [&] { return mismatch(G, s3, star_additive(G, psi3)); });
    run.check("deg2.delta_star", [&]() -> Witness {
      YTensor2 pm = ysym(p1, m1);
      YTensor2 mm;
      mm.add(YWord{m1}, YWord{m1}, 1);
      if (auto w = mismatch(G, primitive_tensor(s1) + mm, harmonic_coproduct(G, s1), "psi1")) return w;
      if (auto w = mismatch(G, primitive_tensor(s2) + pm, harmonic_coproduct(G, s2), "psi2")) return w;
      return mismatch(G, primitive_tensor(s3) + pm - Rational(2) * mm, harmonic_coproduct(G, s3), "psi3");
    });
    const XPoly psi = Rational(2) * psi1 - psi2 + psi3;
    run.check("deg2.dmr", [&]() -> Witness {
      const Subspace expected = Subspace::span(basis.elements.size(), {lie_coordinates(basis, psi)});
      if (!(dmr_space(2, G, o.solver) == expected)) return failure("dmr[2] differs from span{2psi1 - psi2 + psi3}");
      return std::nullopt;
    });
    run.check("deg2.theta", [&] { return mismatch(G, psi - xp * xp, theta(psi)); });
    run.check("deg2.sY_y1plus", [&] {
      const YPoly expected = ymono({p1, p2}, 2) - ymono({p1, m2}) - ymono({p1, p1, p1}) + ymono({p1, p1, m1}) -
                             ymono({p1, m1, m1});
      return mismatch(G, expected, s_psi_y(G, theta(psi), ymono({p1})));
    });
    run.check("deg2.stab_upper_M1", [&]() -> Witness {
      const Subspace K = stab_space_upper(2, G, 1, o.solver);
      if (K.dim() != 0) return failure("stabilizer bound at M=1 has dimension " + std::to_string(K.dim()));
      return std::nullopt;
    });
  }
  const DegreeReport rep = verify_main_theorem(2, G, o.solver);
  run.check("deg2.certified", [&]() -> Witness {
    if (!rep.certified) return Json(to_json(rep));
    return std::nullopt;
  });
  if (G.order() <= 2) {
    run.check("deg2.stab_zero", [&]() -> Witness {
      if (rep.dim_stab_upper != 0 || rep.dim_dmr0 != 0) return Json(to_json(rep));
      return std::nullopt;
    });
  }
  return run.take();
}

inline std::vector<CheckReport> suite_lie_laws(const SuiteOptions& o) {
  const GroupSpec& G = o.gamma;
  SuiteRun run;
  RandomLie rnd(G, o.seed);
  auto input = [&](std::initializer_list<XPoly> xs) {
    Json j = Json::array();
    for (const auto& x : xs) j.push_back(to_json(G, x));
    return j;
  };
  run.cases("ihara.antisymmetry", o.cases, [&](int) {
    const XPoly a = rnd.element(3), b = rnd.element(3);
    return mismatch(G, XPoly{}, ihara_bracket(G, a, b) + ihara_bracket(G, b, a), input({a, b}));
  });
  run.cases("ihara.jacobi", o.cases, [&](int) {
    const int da = rnd.uniform(1, 5), db = rnd.uniform(1, 6 - da), dc = rnd.uniform(1, 7 - da - db);
    const XPoly a = rnd.homogeneous(da), b = rnd.homogeneous(db), c = rnd.homogeneous(dc);
    const XPoly j = ihara_bracket(G, a, ihara_bracket(G, b, c)) + ihara_bracket(G, b, ihara_bracket(G, c, a)) +
                    ihara_bracket(G, c, ihara_bracket(G, a, b));
    return mismatch(G, XPoly{}, j, input({a, b, c}));
  });
  run.cases("ihara.lie_closure", o.cases, [&](int) -> Witness {
    const XPoly a = rnd.element(3), b = rnd.element(3);
    if (!is_lie_element(ihara_bracket(G, a, b))) return failure("bracket is not a Lie element");
    return std::nullopt;
  });
  run.cases("theta.morphism", o.cases, [&](int) {
    const XPoly a = rnd.element(3), b = rnd.element(3);
    return mismatch(G, ihara_bracket(G, theta(a), theta(b)), theta(ihara_bracket(G, a, b)), input({a, b}));
  });
  run.check("sec.ptilde_theta", [&]() -> Witness {
    for (int n = 1; n <= o.lie_degree; ++n)
      for (const auto& psi : rnd.basis(n).elements)
        if (auto w = mismatch(G, theta(psi), p_tilde(G, sec(star_additive(G, psi))), input({psi}))) return w;
    return std::nullopt;
  });
  run.cases("sY.intertwiner", o.cases, [&](int) {
    const XPoly phi = rnd.element(3);
    const XPoly f = rnd.polynomial(4, 4);
    return mismatch(G, q_twist(G, pi_y(s_psi(G, phi, f))), s_psi_y(G, phi, q_twist(G, pi_y(f))), input({phi, f}));
  });
  run.cases("ihara.centrality", o.cases, [&](int) -> Witness {
    const XPoly psi = rnd.element(3);
    if (auto w = mismatch(G, XPoly{}, ihara_bracket(G, x0_poly(), psi), input({x0_poly(), psi}))) return w;
    XPoly power = x1_poly();
    for (int n = 1; n <= 3; ++n, power = power * x1_poly())
      if (auto w = mismatch(G, XPoly{}, ihara_bracket(G, power, psi), input({power, psi}))) return w;
    return std::nullopt;
  });
  return run.take();
}

inline std::vector<CheckReport> suite_group_laws(const SuiteOptions& o) {
  const GroupSpec& G = o.gamma;
  const int D = o.trunc;
  SuiteRun run;
  RandomLie rnd(G, o.seed);
  const TruncSeries one = TruncSeries::one(D);
  auto input = [&](std::initializer_list<TruncSeries> xs) {
    Json j = Json::array();
    for (const auto& x : xs) j.push_back(to_json(G, x));
    return j;
  };
  auto one_var = [&](const XPoly& letter) {
    XPoly f = XPoly::constant(1), power = XPoly::constant(1);
    for (int k = 1; k <= 3; ++k) {
      power = power * letter;
      f += rnd.small_rational() * power;
    }
    return TruncSeries(f, D);
  };
  run.cases("star.associativity", o.group_cases, [&](int) {
    const TruncSeries a = rnd.group_like(D), b = rnd.group_like(D), c = rnd.group_like(D);
    return mismatch(G, star_product(G, a, star_product(G, b, c)), star_product(G, star_product(G, a, b), c),
                    input({a, b, c}));
  });
  run.cases("star.unit", o.group_cases, [&](int) -> Witness {
    const TruncSeries a = rnd.group_like(D);
    if (auto w = mismatch(G, a, star_product(G, one, a), input({a}))) return w;
    return mismatch(G, a, star_product(G, a, one), input({a}));
  });
  run.cases("star.inverse", o.group_cases, [&](int) -> Witness {
    const TruncSeries a = rnd.group_like(D);
    const TruncSeries inv = star_inverse(G, a);
    if (auto w = mismatch(G, one, star_product(G, a, inv), input({a}))) return w;
    return mismatch(G, one, star_product(G, inv, a), input({a}));
  });
  run.cases("aut.morphism", o.group_cases, [&](int) {
    const TruncSeries a = rnd.group_like(D), b = rnd.group_like(D);
    const TruncSeries f(rnd.polynomial(D, 5), D);
    return mismatch(G, aut_G(G, a, aut_G(G, b, f)), aut_G(G, star_product(G, a, b), f), input({a, b, f}));
  });
  run.cases("star.x0_x1_identities", o.group_cases, [&](int) -> Witness {
    const Rational alpha = rnd.small_rational(), beta = rnd.small_rational();
    const TruncSeries ea = exp_series(alpha * x0_poly(), D), eb = exp_series(beta * x1_poly(), D);
    const TruncSeries g = rnd.group_like(D);
    if (auto w = mismatch(G, ea, exp_star(G, TruncSeries(alpha * x0_poly(), D)))) return w;
    if (auto w = mismatch(G, eb, exp_star(G, TruncSeries(beta * x1_poly(), D)))) return w;
    if (auto w = mismatch(G, g * ea, star_product(G, ea, g), input({ea, g}))) return w;
    return mismatch(G, eb * g, star_product(G, g, eb), input({g, eb}));
  });
  run.cases("exp_star.one_parameter", o.group_cases, [&](int) {
    const XPoly psi = rnd.element(3);
    const Rational a = rnd.small_rational(), b = rnd.small_rational();
    const TruncSeries lhs = exp_star(G, TruncSeries((a + b) * psi, D));
    const TruncSeries rhs = star_product(G, exp_star(G, TruncSeries(a * psi, D)), exp_star(G, TruncSeries(b * psi, D)));
    return mismatch(G, lhs, rhs, to_json(G, psi));
  });
  run.cases("log_star.inverse", o.group_cases, [&](int) {
    const TruncSeries psi(rnd.element(3), D);
    return mismatch(G, psi, log_star(G, exp_star(G, psi)), input({psi}));
  });
  run.cases("star.sandwich", o.group_cases, [&](int) {
    const TruncSeries a = rnd.group_like(D), b = rnd.group_like(D);
    const TruncSeries fa = one_var(x1_poly()), ga = one_var(x0_poly());
    const TruncSeries fb = one_var(x1_poly()), gb = one_var(x0_poly());
    const TruncSeries lhs = star_product(G, fa * a * ga, fb * b * gb);
    const TruncSeries rhs = fb * fa * star_product(G, a, b) * ga * gb;
    return mismatch(G, rhs, lhs, input({a, b, fa, ga, fb, gb}));
  });
  run.cases("theta_group.morphism", o.group_cases, [&](int) {
    const TruncSeries a = rnd.group_like(D), b = rnd.group_like(D);
    return mismatch(G, star_product(G, theta_group(a), theta_group(b)), theta_group(star_product(G, a, b)),
                    input({a, b}));
  });
  run.cases("character.additivity", o.group_cases, [&](int) -> Witness {
    const TruncSeries a = rnd.group_like(D), b = rnd.group_like(D);
    const TruncSeries ab = star_product(G, a, b);
    for (int n = 1; n <= D; ++n) {
      XWord w = x0_power(n - 1);
      w.push_back(x_letter(0));
      if (ab.coeff(w) != a.coeff(w) + b.coeff(w)) return failure("character x0^" + std::to_string(n - 1) + " x1");
    }
    if (ab.coeff(XWord{kX0}) != a.coeff(XWord{kX0}) + b.coeff(XWord{kX0})) return failure("character x0");
    return std::nullopt;
  });
  run.cases("S_Y.action", std::max(1, o.group_cases / 5), [&](int) {
    const TruncSeries a = rnd.group_like(D), b = rnd.group_like(D);
    const YTruncSeries k(rnd.y_polynomial(D, 4), D);
    return mismatch(G, S_g_Y(G, a, S_g_Y(G, b, k)), S_g_Y(G, star_product(G, a, b), k), input({a, b}));
  });
  return run.take();
}

inline std::vector<CheckReport> suite_theta(const SuiteOptions& o) {
  const GroupSpec& G = o.gamma;
  const int D = o.trunc;
  SuiteRun run;
  RandomLie rnd(G, o.seed);
  run.check("theta.letters", [&]() -> Witness {
    if (auto w = mismatch(G, XPoly{}, theta(x0_poly()))) return w;
    if (auto w = mismatch(G, Rational(2) * x1_poly(), theta(x1_poly()))) return w;
    for (int g = 1; g < G.order(); ++g)
      if (auto w = mismatch(G, xg_poly(g), theta(xg_poly(g)))) return w;
    return std::nullopt;
  });
  run.cases("theta.morphism", o.cases, [&](int) {
    const XPoly a = rnd.element(3), b = rnd.element(3);
    return mismatch(G, ihara_bracket(G, theta(a), theta(b)), theta(ihara_bracket(G, a, b)));
  });
  run.cases("theta_group.differential", o.group_cases, [&](int) {
    const int k = rnd.uniform(1, std::min(3, D));
    const XPoly psi = rnd.homogeneous(k);
    const TruncSeries big = theta_group(exp_star(G, TruncSeries(psi, D)));
    return mismatch(G, theta(psi), big.poly().homogeneous_part(k), to_json(G, psi));
  });
  run.cases("theta_group.exp_x0", o.group_cases, [&](int) {
    const Rational alpha = rnd.small_rational();
    return mismatch(G, TruncSeries::one(D), theta_group(exp_series(alpha * x0_poly(), D)));
  });
  run.cases("theta_group.fixed_points", o.group_cases, [&](int) {
    XPoly psi;
    while (psi.is_zero()) {
      const int n = rnd.uniform(2, std::max(2, std::min(4, D)));
      const LieBasis& b = rnd.basis(n);
      for (std::size_t i = 0; i < b.words.size(); ++i) {
        int letters = 0;
        for (XLetter l : b.words[i]) letters += is_x0(l) ? 0 : 1;
        if (letters >= 2 && rnd.uniform(0, 2) == 0) psi += Rational(rnd.uniform(-2, 2)) * b.elements[i];
      }
    }
    const TruncSeries g = exp_series(psi, D);
    return mismatch(G, g, theta_group(g), to_json(G, psi));
  });
  return run.take();
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paper-deg1", "paper-deg2", "lie-laws", "group-laws", "theta"};
  return names;
}

inline std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "paper-deg1") return suite_paper_deg1(o);
  if (name == "paper-deg2") return suite_paper_deg2(o);
  if (name == "lie-laws") return suite_lie_laws(o);
  if (name == "group-laws") return suite_group_laws(o);
  if (name == "theta") return suite_theta(o);
  if (name == "all") {
    std::vector<CheckReport> all;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, o);
      for (auto& r : part) {
        r.check = n + "/" + r.check;
        all.push_back(std::move(r));
      }
    }
    return all;
  }
  throw ParseError("unknown suite '" + name + "'");
}

}  // namespace dsl
