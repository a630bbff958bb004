#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "moore/mixed_graph.hpp"

namespace moore {

// Line-oriented UTF-8 graph format:
//   # comment lines and blank lines are ignored
//   mixed <n>        header, n >= 1
//   e <u> <v>        undirected edge, 0-based ids, u != v
//   a <u> <v>        arc u -> v
// Duplicate or conflicting lines are a parse error with a line number.
struct ParseError : std::runtime_error {
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
  int line;
};

MixedGraph read_mixed(std::istream& in);
MixedGraph read_mixed_string(const std::string& text);
MixedGraph read_mixed_file(const std::string& path);  // throws std::runtime_error on open failure

// Canonical form: header, then edge lines sorted as (min, max), then arc
// lines sorted. write -> read -> write is byte-identical.
void write_mixed(std::ostream& os, const MixedGraph& g);
std::string to_mixed_string(const MixedGraph& g);

// DOT export: arcs as arrows, undirected edges with dir=none, vertex
// labels are the numeric ids.
void write_dot(std::ostream& os, const MixedGraph& g);
std::string to_dot_string(const MixedGraph& g);

}  // namespace moore
