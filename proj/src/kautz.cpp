#include "moore/kautz.hpp"

#include <stdexcept>

namespace moore {

MixedGraph kautz_mixed(int z) {
  if (z < 1) throw std::invalid_argument("kautz_mixed requires z >= 1");
  int m = z + 2;  // alphabet size
  // Lexicographic id of the ordered pair (a, b), a != b.
  auto id = [m](int a, int b) { return a * (m - 1) + (b > a ? b - 1 : b); };

  MixedGraph g((z + 1) * (z + 2));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (b == a) continue;
      for (int c = 0; c < m; ++c) {
        if (c == b) continue;
        if (c == a) {
          // (a,b) -> (b,a) and its reverse form a digon; store it as one
          // undirected edge, once per unordered pair.
          if (id(a, b) < id(b, a)) g.add_edge(id(a, b), id(b, a));
        } else {
          g.add_arc(id(a, b), id(b, c));
        }
      }
    }
  }
  return g;
}

}  // namespace moore
