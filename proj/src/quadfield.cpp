#include "moore/quadfield.hpp"

#include <cassert>
#include <ostream>

namespace moore {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

QuadElem::QuadElem(Rational a, Rational b, Integer v)
    : a_(std::move(a)), b_(std::move(b)), v_(std::move(v)) {
  if (sgn(v_) < 0) throw std::invalid_argument("negative radicand");
  if (b_ != 0 && mpz_perfect_square_p(v_.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), v_.get_mpz_t());
    a_ += b_ * s;
    b_ = 0;
  }
}

namespace {

void require_same_field(const QuadElem& x, const QuadElem& y) {
  if (x.v() != y.v()) throw std::domain_error("radicand mismatch");
}

}  // namespace

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  require_same_field(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  require_same_field(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  require_same_field(*this, o);
  // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + b1 b2 v) + (a1 b2 + a2 b1) s
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(v_);
  Rational b = a_ * o.b_ + o.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  require_same_field(*this, o);
  if (o.is_zero()) throw std::domain_error("division by zero element");
  // 1/(a + b s) = (a - b s)/(a^2 - b^2 v); the norm cannot vanish for a
  // nonzero element: b != 0 implies v non-square, so a^2 = b^2 v would
  // make v a rational square.
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(v_);
  assert(norm != 0);
  *this *= o.conjugate();
  a_ /= norm;
  b_ /= norm;
  return *this;
}

QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }

QuadElem QuadElem::pow(unsigned long e) const {
  QuadElem acc(Rational(1), Rational(0), v_);
  QuadElem base = *this;
  while (e != 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

int QuadElem::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;  // b != 0 forces v >= 2 and sqrt(v) > 0
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b| sqrt(v), i.e. a^2 vs b^2 v.
  int c = cmp(a_ * a_, b_ * b_ * Rational(v_));
  if (c == 0) return 0;  // unreachable for non-square v; kept total
  return c > 0 ? sa : sb;
}

std::optional<Integer> QuadElem::as_integer() const {
  if (b_ != 0) return std::nullopt;
  if (a_.get_den() != 1) return std::nullopt;
  return a_.get_num();
}

bool operator==(const QuadElem& x, const QuadElem& y) {
  if (x.b() == 0 && y.b() == 0) return x.a() == y.a();
  return x.v() == y.v() && x.a() == y.a() && x.b() == y.b();
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) {
  os << x.a();
  if (x.b() != 0) os << " + " << x.b() << "*sqrt(" << x.v() << ")";
  return os;
}

}  // namespace moore
