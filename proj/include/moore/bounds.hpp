#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "moore/quadfield.hpp"

namespace moore {

// Parameters of the mixed degree-diameter problem: maximum directed
// out-degree z, maximum undirected degree r, diameter k.
struct MixedParams {
  int z = 0;
  int r = 0;
  int k = 1;
};

// Throws std::invalid_argument unless z >= 0, r >= 0 and k >= 1.
void validate(const MixedParams& p);

enum class DegenerateKind { none, repeated_root, unit_root };
const char* degenerate_name(DegenerateKind kind);

// Exact data of the characteristic equation u^2 + (1-z-r)u - z = 0 of the
// level recurrence, carried in Q(sqrt(v)) with v = (z+r)^2 + 2(z-r) + 1.
//
// degenerate is repeated_root when v = 0 (only (z,r) = (0,1)), and
// unit_root when u = 1 solves the equation (only (1,0) and (0,2)); the
// closed-form bound is undefined in both situations. A and B are the
// initial-condition coefficients; they are left unset when v = 0.
struct CharacteristicData {
  Integer v;
  QuadElem u1, u2;
  std::optional<QuadElem> A, B;
  DegenerateKind degenerate = DegenerateKind::none;
};

CharacteristicData characteristic_data(int z, int r);

// Raised when the closed form is requested for a degenerate (z, r).
struct ClosedFormUndefined : std::domain_error {
  explicit ClosedFormUndefined(DegenerateKind k)
      : std::domain_error("closed form undefined; use recurrence"), kind(k) {}
  DegenerateKind kind;
};

// Maximal distance-partition counts L_0..L_k from a root vertex:
// L_0 = 1, L_1 = z + r, L_j = (z+r-1) L_{j-1} + z L_{j-2}.
std::vector<Integer> level_sequence(const MixedParams& p);

// The corrected bound as the sum of the level sequence. This is the
// authoritative computation path; it has no degenerate cases.
Integer moore_bound(const MixedParams& p);

// The corrected bound via the closed form
//   A (u1^{k+1} - 1)/(u1 - 1) + B (u2^{k+1} - 1)/(u2 - 1),
// evaluated entirely in Q(sqrt(v)). Guaranteed equal to moore_bound;
// throws ClosedFormUndefined for degenerate (z, r).
Integer moore_bound_closed(const MixedParams& p);

// The superseded bound 1 + sum_{j=1..k} [z(z+r)^{j-1} + r(z+r-1)^{j-1}],
// with 0^0 = 1 at the j = 1 term.
Integer old_bound(const MixedParams& p);

// Classical undirected bound: 1 + d((d-1)^k - 1)/(d-2) for d > 2,
// 2k+1 for d = 2, and 2 for d = 1. Degree 0 is an error.
Integer undirected_moore(int d, int k);

// Classical directed bound: (d^{k+1} - 1)/(d - 1) for d > 1, k+1 for
// d = 1. Degree 0 is an error.
Integer directed_moore(int d, int k);

// The classical bound the parameters reduce to: undirected_moore(r, k)
// when z = 0, directed_moore(z, k) when r = 0, 1 when both degrees are
// zero; nullopt when z > 0 and r > 0.
std::optional<Integer> classical_value(const MixedParams& p);

// True iff the mixed bound coincides with the classical reduction.
// Requires z = 0 or r = 0.
bool reduction_check(const MixedParams& p);

struct NearestIntegerResult {
  bool rounds_to_bound;  // |estimate - bound| < 1/2, decided exactly
  int residual_sign;     // exact sign of estimate - bound
};

// Evaluates the asymptotic estimate B (u2^{k+1} - 1)/(u2 - 1) - A/(u1 - 1)
// exactly in Q(sqrt(v)) and compares it against the bound. Requires
// r >= 1 and non-degenerate (z, r).
NearestIntegerResult nearest_integer_estimate(const MixedParams& p);

struct BoundReport {
  MixedParams params;
  Integer corrected;
  Integer old;
  std::vector<Integer> levels;
  bool closed_form_used = false;
  DegenerateKind degenerate = DegenerateKind::none;
  std::optional<Integer> classical;
};

// Computes everything for one (z, r, k). When the closed form is defined
// it is evaluated and checked against the recurrence sum; a mismatch is
// an arithmetic bug and throws std::logic_error.
BoundReport bound_report(const MixedParams& p);

}  // namespace moore
