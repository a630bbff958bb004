#pragma once

#include "moore/mixed_graph.hpp"

namespace moore {

// The diameter-2 mixed Kautz graph: vertices are the ordered pairs (a, b)
// of distinct letters over an alphabet of size z + 2, numbered
// lexicographically; (a, b) is adjacent to (b, c) for every c != b. The
// digon {(a,b), (b,a)} is stored as one undirected edge, every other
// adjacency as an arc. Order (z+1)(z+2), out-degree z, undirected
// degree 1; attains the mixed bound at diameter 2. Requires z >= 1.
MixedGraph kautz_mixed(int z);

}  // namespace moore
