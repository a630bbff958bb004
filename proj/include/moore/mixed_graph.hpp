#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace moore {

// A finite mixed graph: undirected edges plus directed arcs on vertices
// 0..n-1. No self-loops, no duplicates, and no vertex pair may carry both
// an undirected edge and an arc (in either direction). A digon (two
// opposite arcs) is legal and distinct from an undirected edge; see
// digons_to_undirected for the normalization.
class MixedGraph {
 public:
  using Pair = std::pair<int, int>;

  explicit MixedGraph(int n);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  void add_edge(int u, int v);  // undirected, throws on invariant violation
  void add_arc(int u, int v);   // directed u -> v

  bool has_edge(int u, int v) const;  // unordered lookup
  bool has_arc(int u, int v) const;

  // Sorted: edges as (min, max) pairs, arcs as (tail, head).
  const std::set<Pair>& edges() const { return edges_; }
  const std::set<Pair>& arcs() const { return arcs_; }

  // Traversal adjacency: undirected neighbours plus arc heads.
  const std::vector<int>& out_neighbors(int u) const;

 private:
  void check_vertex(int u) const;

  int n_;
  std::set<Pair> edges_;
  std::set<Pair> arcs_;
  std::vector<std::vector<int>> out_;
};

struct DegreeProfile {
  std::vector<int> undirected;  // per-vertex undirected degree
  std::vector<int> out;         // per-vertex out-degree (arcs only)
  std::vector<int> in;          // per-vertex in-degree, reported only
  int max_undirected = 0;       // the graph's r
  int max_out = 0;              // the graph's z
  int max_in = 0;
};

DegreeProfile degree_profile(const MixedGraph& g);

// Shortest-path lengths from source, traversing undirected edges both
// ways and arcs head-ward only; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const MixedGraph& g, int source);

// Max distance over all ordered pairs; nullopt when some pair is
// unreachable (infinite diameter).
std::optional<int> diameter(const MixedGraph& g);

// Count of vertices at each finite distance from source, indexed by
// distance 0..ecc(source).
std::vector<long long> distance_profile(const MixedGraph& g, int source);

// Replaces every pair of opposite arcs by one undirected edge. Idempotent
// and traversability-preserving.
MixedGraph digons_to_undirected(const MixedGraph& g);

}  // namespace moore
