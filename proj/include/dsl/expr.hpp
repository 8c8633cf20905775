#pragma once

#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dsl/io.hpp"

namespace dsl {

using Value = std::variant<Rational, XPoly, YPoly, XTensor2, YTensor2, TruncSeries, YTruncSeries, bool>;

struct EvalContext {
  GroupSpec gamma;
  int trunc = 8;
  std::vector<std::string> warnings;
};

inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(' || c == ')') {
      out.emplace_back(1, c);
      ++i;
    } else if ((c == 'x' || c == 'y') && i + 1 < text.size() && text[i + 1] == '(') {
      const std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) throw ParseError("unterminated letter literal");
      out.emplace_back(text.substr(i, close - i + 1));
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '(' && text[j] != ')') ++j;
      out.emplace_back(text.substr(i, j - i));
      i = j;
    }
  }
  return out;
}

namespace detail {

inline const char* kind_name(const Value& v) {
  static const char* names[] = {"scalar", "X polynomial", "Y polynomial", "X tensor", "Y tensor",
                                "X series",  "Y series",     "boolean"};
  return names[v.index()];
}

[[noreturn]] inline void type_error(const std::string& op, const Value& v) {
  throw ParseError(op + ": unexpected argument of type " + kind_name(v));
}

inline Rational as_scalar(const std::string& op, const Value& v) {
  if (auto r = std::get_if<Rational>(&v)) return *r;
  type_error(op, v);
}

inline int as_positive_int(const std::string& op, const Value& v) {
  const Rational r = as_scalar(op, v);
  if (r.get_den() != 1 || r < 1 || r > 1000) throw ParseError(op + ": expected a positive integer");
  return static_cast<int>(r.get_num().get_si());
}

inline XPoly as_x(const std::string& op, const Value& v) {
  if (auto r = std::get_if<Rational>(&v)) return XPoly::constant(*r);
  if (auto p = std::get_if<XPoly>(&v)) return *p;
  type_error(op, v);
}

inline YPoly as_y(const std::string& op, const Value& v) {
  if (auto r = std::get_if<Rational>(&v)) return YPoly::constant(*r);
  if (auto p = std::get_if<YPoly>(&v)) return *p;
  type_error(op, v);
}

inline TruncSeries as_series(const std::string& op, const Value& v, int D) {
  if (auto s = std::get_if<TruncSeries>(&v)) return *s;
  return TruncSeries(as_x(op, v), D);
}

inline YTruncSeries as_y_series(const std::string& op, const Value& v, int D) {
  if (auto s = std::get_if<YTruncSeries>(&v)) return *s;
  return YTruncSeries(as_y(op, v), D);
}

inline Value linear(const std::string& op, const Value& a, const Value& b, const Rational& sign, int D) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
    return std::get<Rational>(a) + sign * std::get<Rational>(b);
  }
  if (std::holds_alternative<TruncSeries>(a) || std::holds_alternative<TruncSeries>(b)) {
    return as_series(op, a, D) + sign * as_series(op, b, D);
  }
  if (std::holds_alternative<YTruncSeries>(a) || std::holds_alternative<YTruncSeries>(b)) {
    return as_y_series(op, a, D) + sign * as_y_series(op, b, D);
  }
  if (std::holds_alternative<XPoly>(a) || std::holds_alternative<XPoly>(b)) return as_x(op, a) + sign * as_x(op, b);
  if (std::holds_alternative<YPoly>(a) || std::holds_alternative<YPoly>(b)) return as_y(op, a) + sign * as_y(op, b);
  if (a.index() == b.index()) {
    if (auto t = std::get_if<XTensor2>(&a)) return *t + sign * std::get<XTensor2>(b);
    if (auto t = std::get_if<YTensor2>(&a)) return *t + sign * std::get<YTensor2>(b);
  }
  type_error(op, b);
}

inline Value scale(const std::string& op, const Rational& c, const Value& v) {
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          type_error(op, v);
        } else if constexpr (std::is_same_v<T, Rational>) {
          return Rational(c * x);
        } else {
          return c * x;
        }
      },
      v);
}

inline Value multiply(const std::string& op, const Value& a, const Value& b, int D) {
  if (auto r = std::get_if<Rational>(&a)) return scale(op, *r, b);
  if (auto r = std::get_if<Rational>(&b)) return scale(op, *r, a);
  if (std::holds_alternative<TruncSeries>(a) || std::holds_alternative<TruncSeries>(b)) {
    return as_series(op, a, D) * as_series(op, b, D);
  }
  if (std::holds_alternative<YTruncSeries>(a) || std::holds_alternative<YTruncSeries>(b)) {
    return as_y_series(op, a, D) * as_y_series(op, b, D);
  }
  if (std::holds_alternative<XPoly>(a)) return as_x(op, a) * as_x(op, b);
  if (std::holds_alternative<YPoly>(a)) return as_y(op, a) * as_y(op, b);
  type_error(op, a);
}

inline XPoly lie_input(const std::string& op, const Value& v) {
  if (auto s = std::get_if<TruncSeries>(&v)) return s->poly();
  return as_x(op, v);
}

}  // namespace detail

// Evaluates a prefix expression such as "star_additive (bracket x0 x1)".
class ExprEvaluator {
 public:
  explicit ExprEvaluator(EvalContext& ctx) : ctx_(ctx) { register_ops(); }

  Value evaluate(std::string_view text) {
    tokens_ = tokenize(text);
    pos_ = 0;
    if (tokens_.empty()) throw ParseError("empty expression");
    Value v = parse();
    if (pos_ != tokens_.size()) throw ParseError("unexpected token '" + tokens_[pos_] + "'");
    return v;
  }

  std::vector<std::string> operations() const {
    std::vector<std::string> out;
    for (const auto& [name, op] : ops_) out.push_back(name);
    return out;
  }

 private:
  using Args = std::vector<Value>;
  struct Op {
    int arity;
    std::function<Value(const Args&)> fn;
  };

  const std::string& next() {
    if (pos_ >= tokens_.size()) throw ParseError("unexpected end of expression");
    return tokens_[pos_++];
  }

  Value parse() {
    const std::string tok = next();
    if (tok == "(") {
      Value v = parse();
      if (next() != ")") throw ParseError("expected ')'");
      return v;
    }
    if (tok == ")") throw ParseError("unexpected ')'");
    if (std::isdigit(static_cast<unsigned char>(tok[0])) ||
        (tok[0] == '-' && tok.size() > 1 && std::isdigit(static_cast<unsigned char>(tok[1])))) {
      return parse_rational(tok);
    }
    if (tok == "x0" || tok == "x1" || tok.rfind("x(", 0) == 0) {
      return XPoly::monomial(XWord{parse_x_letter(ctx_.gamma, tok)});
    }
    if (tok.rfind("y(", 0) == 0) return YPoly::monomial(YWord{parse_y_letter(ctx_.gamma, tok)});
    auto it = ops_.find(tok);
    if (it == ops_.end()) throw ParseError("unknown operation '" + tok + "'");
    Args args;
    for (int i = 0; i < it->second.arity; ++i) args.push_back(parse());
    return it->second.fn(args);
  }

  void add(const std::string& name, int arity, std::function<Value(const Args&)> fn) {
    ops_[name] = Op{arity, std::move(fn)};
  }

  void register_ops() {
    using namespace detail;
    const GroupSpec& G = ctx_.gamma;
    const int D = ctx_.trunc;
    add("add", 2, [=](const Args& a) { return linear("add", a[0], a[1], 1, D); });
    add("sub", 2, [=](const Args& a) { return linear("sub", a[0], a[1], -1, D); });
    add("mul", 2, [=](const Args& a) { return multiply("mul", a[0], a[1], D); });
    add("scale", 2, [](const Args& a) { return scale("scale", as_scalar("scale", a[0]), a[1]); });
    add("neg", 1, [](const Args& a) { return scale("neg", -1, a[0]); });
    add("bracket", 2, [](const Args& a) { return Value(bracket(as_x("bracket", a[0]), as_x("bracket", a[1]))); });
    add("ihara", 2, [G](const Args& a) { return Value(ihara_bracket(G, as_x("ihara", a[0]), as_x("ihara", a[1]))); });
    add("theta", 1, [this](const Args& a) { return Value(theta(as_x("theta", a[0]), &ctx_.warnings)); });
    add("star_additive", 1, [G](const Args& a) { return Value(star_additive(G, as_x("star_additive", a[0]))); });
    add("delta_star", 1, [G](const Args& a) { return Value(harmonic_coproduct(G, as_y("delta_star", a[0]))); });
    add("delta", 1, [](const Args& a) { return Value(delta_shuffle(as_x("delta", a[0]))); });
    add("sec", 1, [](const Args& a) { return Value(sec(as_y("sec", a[0]))); });
    add("sec_tilde", 1, [](const Args& a) { return Value(sec_tilde(as_x("sec_tilde", a[0]))); });
    add("ptilde", 1, [G](const Args& a) { return Value(p_tilde(G, as_x("ptilde", a[0]))); });
    add("p", 1, [G](const Args& a) { return Value(p_twist(G, as_y("p", a[0]))); });
    add("q", 1, [G](const Args& a) { return Value(q_twist(G, as_y("q", a[0]))); });
    add("piY", 1, [](const Args& a) { return Value(pi_y(as_x("piY", a[0]))); });
    add("embed", 1, [](const Args& a) { return Value(embed_y(as_y("embed", a[0]))); });
    add("corr", 1, [](const Args& a) { return Value(corr(as_x("corr", a[0]))); });
    add("partial0", 1, [](const Args& a) { return Value(partial0(as_x("partial0", a[0]))); });
    add("d_psi", 2, [G](const Args& a) { return Value(d_psi(G, as_x("d_psi", a[0]), as_x("d_psi", a[1]))); });
    add("s_psi", 2, [G](const Args& a) { return Value(s_psi(G, as_x("s_psi", a[0]), as_x("s_psi", a[1]))); });
    add("sY", 2, [G](const Args& a) { return Value(s_psi_y(G, as_x("sY", a[0]), as_y("sY", a[1]))); });
    add("f0", 2, [](const Args& a) { return Value(char_f0(as_positive_int("f0", a[0]), lie_input("f0", a[1]))); });
    add("g0", 2, [](const Args& a) { return Value(char_g0(as_positive_int("g0", a[0]), lie_input("g0", a[1]))); });
    add("is_lie", 1, [](const Args& a) {
      const XPoly f = as_x("is_lie", a[0]);
      return Value(sgn(f.constant_term()) == 0 && is_lie_element(f));
    });
    add("is_primitive", 1, [G](const Args& a) { return Value(is_delta_star_primitive(G, as_y("is_primitive", a[0]))); });
    add("exp", 1, [D](const Args& a) {
      const TruncSeries s = as_series("exp", a[0], D);
      require_zero_constant(s, "exp");
      return Value(exp_series(s.poly(), s.trunc()));
    });
    add("log", 1, [D](const Args& a) {
      const TruncSeries s = as_series("log", a[0], D);
      require_unit_constant(s, "log");
      return Value(TruncSeries(log_concat(s.poly(), s.trunc()), s.trunc()));
    });
    add("exp_star", 1, [G, D](const Args& a) { return Value(exp_star(G, as_series("exp_star", a[0], D))); });
    add("log_star", 1, [G, D](const Args& a) { return Value(log_star(G, as_series("log_star", a[0], D))); });
    add("theta_group", 1, [D](const Args& a) { return Value(theta_group(as_series("theta_group", a[0], D))); });
    add("star", 2, [G, D](const Args& a) {
      return Value(star_product(G, as_series("star", a[0], D), as_series("star", a[1], D)));
    });
    add("star_inverse", 1, [G, D](const Args& a) { return Value(star_inverse(G, as_series("star_inverse", a[0], D))); });
    add("aut", 2, [G, D](const Args& a) { return Value(aut_G(G, as_series("aut", a[0], D), as_series("aut", a[1], D))); });
    add("cbh", 2, [G, D](const Args& a) {
      return Value(cbh_star(G, as_series("cbh", a[0], D), as_series("cbh", a[1], D)));
    });
    add("SY", 2, [G, D](const Args& a) {
      return Value(S_g_Y(G, as_series("SY", a[0], D), as_y_series("SY", a[1], D)));
    });
  }

  EvalContext& ctx_;
  std::map<std::string, Op> ops_;
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

inline Value evaluate(EvalContext& ctx, std::string_view text) {
  ExprEvaluator ev(ctx);
  return ev.evaluate(text);
}

inline std::string value_to_text(const GroupSpec& G, const Value& v) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Rational>) {
          return to_string(x);
        } else if constexpr (std::is_same_v<T, TruncSeries> || std::is_same_v<T, YTruncSeries>) {
          return to_text(G, x.poly());
        } else {
          return to_text(G, x);
        }
      },
      v);
}

inline Json value_to_json(const GroupSpec& G, const Value& v) {
  return std::visit(
      [&](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x;
        } else if constexpr (std::is_same_v<T, Rational>) {
          return to_string(x);
        } else {
          return to_json(G, x);
        }
      },
      v);
}

}  // namespace dsl
