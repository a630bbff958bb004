#include "moore/bounds.hpp"

#include <string>

namespace moore {

void validate(const MixedParams& p) {
  if (p.z < 0) throw std::invalid_argument("z must be nonnegative");
  if (p.r < 0) throw std::invalid_argument("r must be nonnegative");
  if (p.k < 1) throw std::invalid_argument("k must be at least 1");
}

const char* degenerate_name(DegenerateKind kind) {
  switch (kind) {
    case DegenerateKind::none: return "none";
    case DegenerateKind::repeated_root: return "repeated_root";
    case DegenerateKind::unit_root: return "unit_root";
  }
  return "?";
}

namespace {

QuadElem constant(const Integer& c, const Integer& v) {
  return QuadElem(Rational(c), Rational(0), v);
}

}  // namespace

CharacteristicData characteristic_data(int z, int r) {
  if (z < 0 || r < 0) throw std::invalid_argument("degrees must be nonnegative");
  Integer s = Integer(z) + r;
  Integer v = s * s + 2 * (Integer(z) - r) + 1;
  Integer v_alt = (s - 1) * (s - 1) + 4 * Integer(z);
  if (v != v_alt)
    throw std::logic_error("radicand identities disagree");  // cannot happen

  CharacteristicData cd;
  cd.v = v;
  Rational half_trace = make_rational(s - 1, 2);
  Rational half = make_rational(1, 2);
  cd.u1 = QuadElem(half_trace, -half, v);
  cd.u2 = QuadElem(half_trace, half, v);

  if (v == 0) {
    cd.degenerate = DegenerateKind::repeated_root;
    return cd;  // A, B undefined
  }

  QuadElem sqrt_v(Rational(0), Rational(1), v);
  QuadElem two_sqrt_v(Rational(0), Rational(2), v);
  QuadElem shift = constant(s + 1, v);
  cd.A = (sqrt_v - shift) / two_sqrt_v;
  cd.B = (sqrt_v + shift) / two_sqrt_v;

  // u = 1 solves u^2 + (1-z-r)u - z = 0 iff 2 - 2z - r = 0.
  if (2 - 2 * Integer(z) - r == 0) cd.degenerate = DegenerateKind::unit_root;
  return cd;
}

std::vector<Integer> level_sequence(const MixedParams& p) {
  validate(p);
  std::vector<Integer> levels(static_cast<size_t>(p.k) + 1);
  levels[0] = 1;
  levels[1] = Integer(p.z) + p.r;
  Integer lead = Integer(p.z) + p.r - 1;
  for (int j = 2; j <= p.k; ++j)
    levels[j] = lead * levels[j - 1] + p.z * levels[j - 2];
  return levels;
}

Integer moore_bound(const MixedParams& p) {
  Integer total = 0;
  for (const Integer& l : level_sequence(p)) total += l;
  return total;
}

Integer moore_bound_closed(const MixedParams& p) {
  validate(p);
  CharacteristicData cd = characteristic_data(p.z, p.r);
  if (cd.degenerate != DegenerateKind::none) throw ClosedFormUndefined(cd.degenerate);

  QuadElem one = constant(1, cd.v);
  auto geometric = [&](const QuadElem& u) {
    return (u.pow(static_cast<unsigned long>(p.k) + 1) - one) / (u - one);
  };
  QuadElem total = *cd.A * geometric(cd.u1) + *cd.B * geometric(cd.u2);
  std::optional<Integer> n = total.as_integer();
  if (!n) throw std::logic_error("closed form did not reduce to an integer");
  return *n;
}

Integer old_bound(const MixedParams& p) {
  validate(p);
  Integer total = 1;
  Integer pow_zr = 1;   // (z+r)^{j-1}, starting from the 0^0 = 1 convention
  Integer pow_zr1 = 1;  // (z+r-1)^{j-1}
  for (int j = 1; j <= p.k; ++j) {
    total += p.z * pow_zr + p.r * pow_zr1;
    pow_zr *= Integer(p.z) + p.r;
    pow_zr1 *= Integer(p.z) + p.r - 1;
  }
  return total;
}

Integer undirected_moore(int d, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (d == 0) throw std::domain_error("degree zero has no undirected-bound form");
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  if (d == 1) return 2;
  if (d == 2) return 2 * Integer(k) + 1;
  Integer pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(d - 1),
                static_cast<unsigned long>(k));
  return 1 + d * (pw - 1) / (d - 2);
}

Integer directed_moore(int d, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (d == 0) throw std::domain_error("degree zero has no directed-bound form");
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  if (d == 1) return Integer(k) + 1;
  Integer pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(d),
                static_cast<unsigned long>(k) + 1);
  return (pw - 1) / (d - 1);
}

std::optional<Integer> classical_value(const MixedParams& p) {
  validate(p);
  if (p.z > 0 && p.r > 0) return std::nullopt;
  if (p.z == 0 && p.r == 0) return Integer(1);  // isolated vertex
  if (p.z == 0) return undirected_moore(p.r, p.k);
  return directed_moore(p.z, p.k);
}

bool reduction_check(const MixedParams& p) {
  validate(p);
  std::optional<Integer> classical = classical_value(p);
  if (!classical) throw std::invalid_argument("not a reduction case");
  return moore_bound(p) == *classical;
}

NearestIntegerResult nearest_integer_estimate(const MixedParams& p) {
  validate(p);
  if (p.r < 1)
    throw std::invalid_argument("nearest-integer estimate requires r >= 1");
  CharacteristicData cd = characteristic_data(p.z, p.r);
  if (cd.degenerate != DegenerateKind::none)
    throw std::domain_error("estimate undefined");

  QuadElem one = constant(1, cd.v);
  QuadElem estimate =
      *cd.B * (cd.u2.pow(static_cast<unsigned long>(p.k) + 1) - one) /
          (cd.u2 - one) -
      *cd.A / (cd.u1 - one);
  QuadElem residual = estimate - constant(moore_bound(p), cd.v);
  QuadElem half(make_rational(1, 2), Rational(0), cd.v);
  bool rounds = (residual + half).sign() > 0 && (residual - half).sign() < 0;
  return {rounds, residual.sign()};
}

BoundReport bound_report(const MixedParams& p) {
  validate(p);
  BoundReport rep;
  rep.params = p;
  rep.levels = level_sequence(p);
  rep.corrected = 0;
  for (const Integer& l : rep.levels) rep.corrected += l;
  rep.old = old_bound(p);
  CharacteristicData cd = characteristic_data(p.z, p.r);
  rep.degenerate = cd.degenerate;
  rep.closed_form_used = cd.degenerate == DegenerateKind::none;
  if (rep.closed_form_used && moore_bound_closed(p) != rep.corrected)
    throw std::logic_error("closed form disagrees with recurrence sum for z=" +
                           std::to_string(p.z) + " r=" + std::to_string(p.r) +
                           " k=" + std::to_string(p.k));
  rep.classical = classical_value(p);
  return rep;
}

}  // namespace moore
