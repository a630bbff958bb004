#include "moore/reference_series.hpp"

namespace moore {

const std::array<ReferenceSeries, 2>& reference_series() {
  static const std::array<ReferenceSeries, 2> series = {{
      {1,
       1,
       {3,    6,    11,   19,   32,    53,    87,    142,   231,   375,
        608,  985,  1595, 2582, 4179,  6763,  10944, 17709, 28655, 46366},
       {3,    6,    11,   20,   37,    70,    135,   264,   521,   1034,
        2059, 4108, 8205, 16398, 32783, 65552, 131089, 262162, 524307,
        1048596}},
      {2,
       1,
       {4,      12,      34,      94,      258,      706,      1930,
        5274,   14410,   39370,   107562,  293866,   802858,   2193450,
        5992618, 16372138, 44729514, 122203306, 333865642, 912137898},
       {4,      12,      34,      96,      274,      792,      2314,
        6816,   20194,   60072,   179194,  535536,   1602514,  4799352,
        14381674, 43112256, 129271234, 387682632, 1162785754, 3487832976}},
  }};
  return series;
}

}  // namespace moore
