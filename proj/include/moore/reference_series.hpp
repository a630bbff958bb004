#pragma once

#include <array>

namespace moore {

// Known reference values of the two bound formulas for the comparison
// series (z,r) = (1,1) and (2,1), diameters 1..20. Embedded as golden
// data so a regression in either computation path is caught against
// fixed numbers rather than a recomputation of itself.
struct ReferenceSeries {
  int z, r;
  std::array<long long, 20> corrected;
  std::array<long long, 20> old;
};

const std::array<ReferenceSeries, 2>& reference_series();

}  // namespace moore
