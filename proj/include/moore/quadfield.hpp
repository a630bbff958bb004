#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>

namespace moore {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational: den > 0, gcd(|num|, den) = 1. Throws on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Exact element a + b*sqrt(v) of the quadratic field Q(sqrt(v)), with
// rational a, b and a fixed nonnegative integer radicand v.
//
// If v is a perfect square s^2, construction folds b*s into a, so b != 0
// implies sqrt(v) is irrational. Elements may be combined arithmetically
// only when their radicands match. All comparisons are exact; no floating
// point anywhere.
class QuadElem {
 public:
  QuadElem() : a_(0), b_(0), v_(0) {}
  QuadElem(Rational a, Rational b, Integer v);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& v() const { return v_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  QuadElem conjugate() const { return QuadElem(a_, -b_, v_); }

  // Exact e-th power by binary exponentiation; pow(0) is 1 + 0*sqrt(v).
  QuadElem pow(unsigned long e) const;

  // Exact sign of the real value a + b*sqrt(v), decided by rational case
  // analysis (comparing a^2 against b^2*v when a and b disagree in sign).
  int sign() const;

  // The integer n when the element is exactly n; nullopt otherwise.
  std::optional<Integer> as_integer() const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  QuadElem operator-() const { return QuadElem(-a_, -b_, v_); }

 private:
  Rational a_, b_;
  Integer v_;
};

QuadElem operator+(QuadElem x, const QuadElem& y);
QuadElem operator-(QuadElem x, const QuadElem& y);
QuadElem operator*(QuadElem x, const QuadElem& y);
QuadElem operator/(QuadElem x, const QuadElem& y);

// Equal when both are the same element of the same field; two purely
// rational elements compare equal across radicands. No square-free
// reduction is attempted (sqrt(8) and 2*sqrt(2) are distinct elements).
bool operator==(const QuadElem& x, const QuadElem& y);
inline bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

}  // namespace moore
