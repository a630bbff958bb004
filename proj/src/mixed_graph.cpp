#include "moore/mixed_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace moore {

MixedGraph::MixedGraph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  out_.resize(static_cast<size_t>(n));
}

void MixedGraph::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    throw std::invalid_argument("vertex id " + std::to_string(u) +
                                " out of range [0, " + std::to_string(n_) + ")");
}

void MixedGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop");
  Pair e{std::min(u, v), std::max(u, v)};
  if (edges_.count(e)) throw std::invalid_argument("duplicate undirected edge");
  if (arcs_.count({u, v}) || arcs_.count({v, u}))
    throw std::invalid_argument("undirected edge conflicts with existing arc");
  edges_.insert(e);
  out_[u].push_back(v);
  out_[v].push_back(u);
}

void MixedGraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop");
  if (arcs_.count({u, v})) throw std::invalid_argument("duplicate arc");
  if (edges_.count({std::min(u, v), std::max(u, v)}))
    throw std::invalid_argument("arc conflicts with existing undirected edge");
  arcs_.insert({u, v});
  out_[u].push_back(v);
}

bool MixedGraph::has_edge(int u, int v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) != 0;
}

bool MixedGraph::has_arc(int u, int v) const { return arcs_.count({u, v}) != 0; }

const std::vector<int>& MixedGraph::out_neighbors(int u) const {
  check_vertex(u);
  return out_[u];
}

DegreeProfile degree_profile(const MixedGraph& g) {
  DegreeProfile p;
  size_t n = static_cast<size_t>(g.order());
  p.undirected.assign(n, 0);
  p.out.assign(n, 0);
  p.in.assign(n, 0);
  for (const auto& [u, v] : g.edges()) {
    ++p.undirected[u];
    ++p.undirected[v];
  }
  for (const auto& [u, v] : g.arcs()) {
    ++p.out[u];
    ++p.in[v];
  }
  p.max_undirected = *std::max_element(p.undirected.begin(), p.undirected.end());
  p.max_out = *std::max_element(p.out.begin(), p.out.end());
  p.max_in = *std::max_element(p.in.begin(), p.in.end());
  return p;
}

std::vector<int> bfs_distances(const MixedGraph& g, int source) {
  if (source < 0 || source >= g.order())
    throw std::invalid_argument("source out of range");
  std::vector<int> dist(static_cast<size_t>(g.order()), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.out_neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::optional<int> diameter(const MixedGraph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (int d : bfs_distances(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<long long> distance_profile(const MixedGraph& g, int source) {
  std::vector<int> dist = bfs_distances(g, source);
  int ecc = 0;
  for (int d : dist) ecc = std::max(ecc, d);
  std::vector<long long> profile(static_cast<size_t>(ecc) + 1, 0);
  for (int d : dist)
    if (d >= 0) ++profile[d];
  return profile;
}

MixedGraph digons_to_undirected(const MixedGraph& g) {
  MixedGraph out(g.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : g.arcs()) {
    if (g.has_arc(v, u)) {
      if (u < v) out.add_edge(u, v);  // each digon converted once
    } else {
      out.add_arc(u, v);
    }
  }
  return out;
}

}  // namespace moore
