#pragma once

#include <optional>

#include "moore/bounds.hpp"
#include "moore/mixed_graph.hpp"

namespace moore {

// Verdict of measuring a graph against the bound for its own maximum
// degrees and diameter. When the diameter is infinite the bound is
// undefined and the graph trivially does not attain it; that case is
// reported in-band (diameter/bound/slack unset), never as an error.
struct CheckReport {
  DegreeProfile degrees;
  int order = 0;
  std::optional<int> diameter;   // nullopt = some pair unreachable
  std::optional<Integer> bound;  // set when diameter is finite
  std::optional<Integer> slack;  // bound - order
  bool attains_bound = false;
};

CheckReport check_moore(const MixedGraph& g);

}  // namespace moore
