// The quadratic field Q(sqrt 5): numbers a + b*sqrt(5) with rational a, b.
// All arrangement geometry is done exactly in this field; the only
// irrationality the built-in catalog needs is sqrt(5).
#pragma once

#include <cassert>
#include <stdexcept>
#include <string>

#include "arrcover/rational.hpp"

namespace arrcover {

struct FieldElement {
  Rational a;  // rational part
  Rational b;  // coefficient of sqrt(5)

  FieldElement() : a(0), b(0) {}
  FieldElement(long v) : a(v), b(0) {}          // NOLINT: implicit by design
  FieldElement(Rational ra) : a(std::move(ra)), b(0) {}
  FieldElement(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  static FieldElement sqrt5() { return FieldElement(Rational(0), Rational(1)); }

  bool is_zero() const { return a == 0 && b == 0; }

  FieldElement operator-() const { return FieldElement(-a, -b); }
  FieldElement operator+(const FieldElement& o) const { return FieldElement(a + o.a, b + o.b); }
  FieldElement operator-(const FieldElement& o) const { return FieldElement(a - o.a, b - o.b); }
  FieldElement operator*(const FieldElement& o) const {
    return FieldElement(a * o.a + 5 * b * o.b, a * o.b + b * o.a);
  }

  // 1/(a + b sqrt5) = (a - b sqrt5) / (a^2 - 5 b^2); the norm vanishes only at 0
  // since sqrt(5) is irrational.
  FieldElement inverse() const {
    Rational norm = a * a - 5 * b * b;
    if (norm == 0) {
      if (!is_zero()) throw std::logic_error("field norm vanished on a nonzero element");
      throw std::domain_error("division by zero field element");
    }
    return FieldElement(a / norm, -b / norm);
  }
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

  FieldElement& operator+=(const FieldElement& o) { a += o.a; b += o.b; return *this; }
  FieldElement& operator-=(const FieldElement& o) { a -= o.a; b -= o.b; return *this; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  // Exact sign of the real number a + b*sqrt(5), by case analysis on the signs
  // of a, b and the integer comparison a^2 vs 5 b^2.
  int sign() const {
    int sa = sign_of(a), sb = sign_of(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    int c = cmp(a * a, 5 * b * b);  // sign of a^2 - 5 b^2
    assert(c != 0 && "a^2 = 5 b^2 is impossible for rational a, b != 0");
    return sa > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
  }

  bool operator==(const FieldElement& o) const { return a == o.a && b == o.b; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool operator<(const FieldElement& o) const { return (*this - o).sign() < 0; }
  bool operator>(const FieldElement& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const FieldElement& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const FieldElement& o) const { return (*this - o).sign() >= 0; }

  std::string str() const {
    if (b == 0) return to_string(a);
    std::string s = "(" + to_string(a);
    s += sign_of(b) < 0 ? "-" : "+";
    Rational ab = abs(b);
    s += to_string(ab) + "*s5)";
    return s;
  }
};

inline FieldElement operator*(long k, const FieldElement& x) { return FieldElement(k) * x; }

}  // namespace arrcover
