// Exact integer and rational scalars, backed by GMP.
#pragma once

#include <gmpxx.h>

#include <string>

namespace arrcover {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Integer& x) { return sgn(x); }
inline int sign_of(const Rational& x) { return sgn(x); }

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace arrcover
