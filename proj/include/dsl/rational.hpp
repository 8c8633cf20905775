#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (exit code 1 in the CLI).
struct PreconditionError : Error {
  using Error::Error;
};

// A computation would exceed a configured size limit (exit code 3 in the CLI).
struct ResourceLimitError : Error {
  using Error::Error;
};

// Malformed textual input (exit code 2 in the CLI).
struct ParseError : Error {
  using Error::Error;
};

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  int slashes = 0;
  bool digits = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      ++slashes;
      if (!digits) throw ParseError("malformed rational literal '" + s + "'");
      digits = false;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digits = true;
    } else {
      throw ParseError("malformed rational literal '" + s + "'");
    }
  }
  if (!digits || slashes > 1) throw ParseError("malformed rational literal '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational literal '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

}  // namespace dsl
