#pragma once

#include "ladder/graph.hpp"

namespace fix {

using ladder::Graph;
using ladder::NodeId;

// Caterpillar: path p1..p7 (ids 1..7) with leaves q2=8, q4=9, q6=10.
inline constexpr NodeId q2 = 8, q4 = 9, q6 = 10;
inline Graph cat() {
  Graph g = ladder::make_path(7);
  g.add_edge(2, q2);
  g.add_edge(4, q4);
  g.add_edge(6, q6);
  return g;
}

// C6 on c1..c6 (ids 1..6).
inline Graph c6() { return ladder::make_cycle(6); }

// C6 with whisker w (w1=7, w2=8) at c1 and x (x1=9, x2=10, x3=11) at c2.
inline constexpr NodeId w1 = 7, w2 = 8, x1 = 9, x2 = 10, x3 = 11;
inline Graph c6w() {
  Graph g = c6();
  g.add_edge(1, w1);
  g.add_edge(w1, w2);
  g.add_edge(2, x1);
  g.add_edge(x1, x2);
  g.add_edge(x2, x3);
  return g;
}

}  // namespace fix
