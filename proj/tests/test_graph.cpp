#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>
#include <vector>

#include "moore/bounds.hpp"
#include "moore/graph_io.hpp"
#include "moore/kautz.hpp"
#include "moore/mixed_graph.hpp"
#include "moore/moore_tree.hpp"

using moore::MixedGraph;

namespace {

MixedGraph triangle() {
  MixedGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  return g;
}

MixedGraph directed_cycle(int n) {
  MixedGraph g(n);
  for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

MixedGraph random_mixed_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 40);
  int n = size(rng);
  MixedGraph g(n);
  if (n == 1) return g;
  std::uniform_int_distribution<int> vertex(0, n - 1), kind(0, 2);
  int attempts = 3 * n;
  for (int i = 0; i < attempts; ++i) {
    int u = vertex(rng), v = vertex(rng);
    if (u == v) continue;
    if (g.has_edge(u, v)) continue;
    switch (kind(rng)) {
      case 0:
        if (!g.has_arc(u, v) && !g.has_arc(v, u)) g.add_edge(u, v);
        break;
      case 1:
        if (!g.has_arc(u, v)) g.add_arc(u, v);
        break;
      default:  // aim for a digon
        if (!g.has_arc(u, v)) g.add_arc(u, v);
        if (!g.has_arc(v, u)) g.add_arc(v, u);
        break;
    }
  }
  return g;
}

}  // namespace

TEST_CASE("graph invariants are enforced") {
  CHECK_THROWS_AS(MixedGraph(0), std::invalid_argument);

  MixedGraph g(4);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_arc(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(g.add_arc(-1, 2), std::invalid_argument);

  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(g.add_arc(0, 1), std::invalid_argument);    // conflict
  CHECK_THROWS_AS(g.add_arc(1, 0), std::invalid_argument);

  g.add_arc(2, 3);
  CHECK_THROWS_AS(g.add_arc(2, 3), std::invalid_argument);    // duplicate
  CHECK_THROWS_AS(g.add_edge(3, 2), std::invalid_argument);   // conflict
  g.add_arc(3, 2);  // digon is fine
  CHECK(g.edge_count() == 1);
  CHECK(g.arc_count() == 2);
}

TEST_CASE("degree profile") {
  moore::DegreeProfile p = moore::degree_profile(triangle());
  CHECK(p.max_undirected == 2);
  CHECK(p.max_out == 0);

  p = moore::degree_profile(directed_cycle(3));
  CHECK(p.max_undirected == 0);
  CHECK(p.max_out == 1);
  CHECK(p.max_in == 1);

  moore::MooreTree tree = moore::moore_tree({3, 3, 2});
  p = moore::degree_profile(tree.graph);
  CHECK(p.max_out == 3);
  CHECK(p.max_undirected == 3);
}

TEST_CASE("bfs distances") {
  MixedGraph path(3);
  path.add_arc(0, 1);
  path.add_arc(1, 2);
  CHECK(moore::bfs_distances(path, 0) == std::vector<int>{0, 1, 2});
  CHECK(moore::bfs_distances(path, 2) == std::vector<int>{-1, -1, 0});

  MixedGraph kautz = moore::kautz_mixed(1);
  for (int s = 0; s < kautz.order(); ++s) {
    int ecc = 0;
    for (int d : moore::bfs_distances(kautz, s)) {
      CHECK(d >= 0);
      ecc = std::max(ecc, d);
    }
    CHECK(ecc == 2);
  }
}

TEST_CASE("diameter") {
  MixedGraph single(1);
  CHECK(moore::diameter(single) == 0);

  MixedGraph pair(2);
  pair.add_edge(0, 1);
  CHECK(moore::diameter(pair) == 1);

  moore::MooreTree tree = moore::moore_tree({1, 1, 3});
  CHECK(!moore::diameter(tree.graph).has_value());  // arcs cannot be retraced
}

TEST_CASE("distance profile") {
  moore::MooreTree tree = moore::moore_tree({3, 3, 2});
  CHECK(moore::distance_profile(tree.graph, 0) ==
        std::vector<long long>{1, 6, 33});

  MixedGraph kautz = moore::kautz_mixed(2);
  for (int s = 0; s < kautz.order(); ++s)
    CHECK(moore::distance_profile(kautz, s) == std::vector<long long>{1, 3, 8});

  CHECK(moore::distance_profile(directed_cycle(4), 2) ==
        std::vector<long long>{1, 1, 1, 1});
}

TEST_CASE("distance profile is dominated by the level sequence") {
  std::mt19937 rng(7);
  std::vector<MixedGraph> graphs;
  for (int i = 0; i < 25; ++i) graphs.push_back(random_mixed_graph(rng));
  graphs.push_back(moore::kautz_mixed(3));
  graphs.push_back(triangle());
  for (const MixedGraph& g : graphs) {
    moore::DegreeProfile deg = moore::degree_profile(g);
    for (int s = 0; s < g.order(); ++s) {
      std::vector<long long> prof = moore::distance_profile(g, s);
      int ecc = static_cast<int>(prof.size()) - 1;
      std::vector<moore::Integer> levels =
          moore::level_sequence({deg.max_out, deg.max_undirected, std::max(ecc, 1)});
      for (size_t j = 0; j < prof.size(); ++j)
        CHECK(moore::Integer(static_cast<long>(prof[j])) <= levels[j]);
    }
  }
}

TEST_CASE("digon normalization") {
  MixedGraph g(2);
  g.add_arc(0, 1);
  g.add_arc(1, 0);
  MixedGraph norm = moore::digons_to_undirected(g);
  CHECK(norm.edge_count() == 1);
  CHECK(norm.arc_count() == 0);
  CHECK(norm.has_edge(0, 1));

  MixedGraph plain(3);
  plain.add_arc(0, 1);
  plain.add_edge(1, 2);
  MixedGraph same = moore::digons_to_undirected(plain);
  CHECK(same.edges() == plain.edges());
  CHECK(same.arcs() == plain.arcs());
}

TEST_CASE("the all-arcs Kautz digraph normalizes to the mixed Kautz graph") {
  for (int z = 1; z <= 4; ++z) {
    int m = z + 2;
    auto id = [m](int a, int b) { return a * (m - 1) + (b > a ? b - 1 : b); };
    MixedGraph digraph((z + 1) * (z + 2));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (a == b) continue;
        for (int c = 0; c < m; ++c)
          if (c != b) digraph.add_arc(id(a, b), id(b, c));
      }
    MixedGraph norm = moore::digons_to_undirected(digraph);
    MixedGraph want = moore::kautz_mixed(z);
    CHECK(norm.edges() == want.edges());
    CHECK(norm.arcs() == want.arcs());
  }
}

TEST_CASE("digon normalization is idempotent and preserves distances") {
  std::mt19937 rng(99);
  for (int i = 0; i < 30; ++i) {
    MixedGraph g = random_mixed_graph(rng);
    MixedGraph once = moore::digons_to_undirected(g);
    MixedGraph twice = moore::digons_to_undirected(once);
    CHECK(once.edges() == twice.edges());
    CHECK(once.arcs() == twice.arcs());
    for (int s = 0; s < g.order(); ++s)
      CHECK(moore::bfs_distances(g, s) == moore::bfs_distances(once, s));
  }
}

TEST_CASE("reading the mixed format") {
  MixedGraph g = moore::read_mixed_string(
      "# a comment\n"
      "\n"
      "mixed 4\n"
      "e 0 1\n"
      "a 1 2\n"
      "a 2 1\n"
      "a 3 0\n");
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 1);
  CHECK(g.arc_count() == 3);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      moore::read_mixed_string(text);
    } catch (const moore::ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("") == 0);                                  // missing header
  CHECK(line_of("# only comments\n") == 1);
  CHECK(line_of("graph 3\n") == 1);
  CHECK(line_of("mixed 0\n") == 1);
  CHECK(line_of("mixed x\n") == 1);
  CHECK(line_of("mixed 3\ne 0 0\n") == 2);                  // self-loop
  CHECK(line_of("mixed 3\ne 0 1\n# c\ne 1 0\n") == 4);      // duplicate
  CHECK(line_of("mixed 3\ne 0 1\na 0 1\n") == 3);           // conflict
  CHECK(line_of("mixed 3\na 1 2\na 1 2\n") == 3);           // duplicate arc
  CHECK(line_of("mixed 3\ne 0 3\n") == 2);                  // out of range
  CHECK(line_of("mixed 3\nx 0 1\n") == 2);                  // bad directive
  CHECK(line_of("mixed 3\ne 0 1 2\n") == 2);                // trailing token
  CHECK(line_of("mixed 3\ne 0\n") == 2);                    // missing field
  CHECK(line_of("mixed 3\ne 0 1.5\n") == 2);                // not an integer
}

TEST_CASE("write -> read -> write is byte-identical") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 50; ++i) {
    MixedGraph g = random_mixed_graph(rng);
    std::string first = moore::to_mixed_string(g);
    MixedGraph back = moore::read_mixed_string(first);
    CHECK(moore::to_mixed_string(back) == first);
  }
}

TEST_CASE("missing file is reported") {
  CHECK_THROWS_AS(moore::read_mixed_file("/nonexistent/graph.mixed"),
                  std::runtime_error);
}

TEST_CASE("dot export") {
  MixedGraph g(3);
  g.add_arc(0, 1);
  g.add_edge(0, 2);
  std::string dot = moore::to_dot_string(g);
  CHECK(dot.find("0 -> 1;") != std::string::npos);
  CHECK(dot.find("0 -> 2 [dir=none];") != std::string::npos);
}
