#include "moore/check.hpp"

namespace moore {

CheckReport check_moore(const MixedGraph& g) {
  CheckReport rep;
  rep.degrees = degree_profile(g);
  rep.order = g.order();
  rep.diameter = diameter(g);
  if (!rep.diameter) return rep;  // bound undefined; non-attainment in-band

  if (*rep.diameter == 0) {
    rep.bound = 1;  // single vertex; the level recurrence starts at k = 1
  } else {
    rep.bound = moore_bound(
        {rep.degrees.max_out, rep.degrees.max_undirected, *rep.diameter});
  }
  rep.slack = *rep.bound - rep.order;
  rep.attains_bound = *rep.slack == 0;
  return rep;
}

}  // namespace moore
