#pragma once

#include <vector>

#include "moore/bounds.hpp"
#include "moore/mixed_graph.hpp"

namespace moore {

enum class ReachedBy : unsigned char { root, directed, undirected };

// The maximal spanning tree of a hypothetical extremal graph, rooted at
// vertex 0 and labelled in BFS order: within each parent, arc-children
// get labels before undirected children, parents in ascending label
// order. A vertex reached by an arc has z arc-children and r undirected
// children; one reached by an undirected edge has z arc-children and
// r - 1 undirected children (its parent edge uses the remaining slot).
struct MooreTree {
  MixedGraph graph;
  int root = 0;
  std::vector<int> level_of;
  std::vector<ReachedBy> reached_by;
};

// Builds the tree explicitly. Vertex count equals moore_bound(p) and
// per-level counts equal level_sequence(p). Trees above an internal size
// cap throw std::length_error rather than exhausting memory.
MooreTree moore_tree(const MixedParams& p);

}  // namespace moore
