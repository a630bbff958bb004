#include "moore/moore_tree.hpp"

#include <cassert>
#include <string>

namespace moore {

namespace {
// Explicit construction keeps the whole tree in memory; beyond this the
// parameters call for the formula, not the tree.
constexpr long kMaxTreeVertices = 1'000'000;
}  // namespace

MooreTree moore_tree(const MixedParams& p) {
  validate(p);
  Integer total = moore_bound(p);
  if (!total.fits_slong_p() || total.get_si() > kMaxTreeVertices)
    throw std::length_error("tree with " + total.get_str() +
                            " vertices is too large to materialize");
  int n = static_cast<int>(total.get_si());

  MooreTree tree{MixedGraph(n), 0,
                 std::vector<int>(static_cast<size_t>(n), 0),
                 std::vector<ReachedBy>(static_cast<size_t>(n), ReachedBy::root)};
  int next = 1;
  std::vector<int> frontier{0};
  for (int level = 1; level <= p.k && !frontier.empty(); ++level) {
    std::vector<int> grown;
    for (int parent : frontier) {
      for (int i = 0; i < p.z; ++i) {
        int child = next++;
        tree.graph.add_arc(parent, child);
        tree.level_of[child] = level;
        tree.reached_by[child] = ReachedBy::directed;
        grown.push_back(child);
      }
      // An undirected parent edge occupies one of the r slots.
      int undirected_children =
          tree.reached_by[parent] == ReachedBy::undirected ? p.r - 1 : p.r;
      for (int i = 0; i < undirected_children; ++i) {
        int child = next++;
        tree.graph.add_edge(parent, child);
        tree.level_of[child] = level;
        tree.reached_by[child] = ReachedBy::undirected;
        grown.push_back(child);
      }
    }
    frontier = std::move(grown);
  }
  assert(next == n);
  return tree;
}

}  // namespace moore
