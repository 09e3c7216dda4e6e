#ifndef CT_TEST_FIXTURES_HPP
#define CT_TEST_FIXTURES_HPP

#include "ct/graph.hpp"

// Fixed small graphs used across the unit and acceptance suites. Each one is
// validated against all of its documented invariant values in the tests, so a
// transcription error here fails loudly.

namespace ct::fixtures {

// Order-10 tree with rad_1..rad_4 = 4,3,2,1: a spider with legs 4, 3 and 2
// hanging off hub 0. Leg A is 1-2-3-4, leg B is 5-6-7, leg C is 8-9.
inline Graph fig2_tree() {
  Graph g(10);
  const int edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5},
                          {5, 6}, {6, 7}, {0, 8}, {8, 9}};
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Order-11 unicyclic graph: an 8-cycle 0..7 with the pendant path 3-8-9-10.
// The two-cop placement of interest is {7, 8}.
inline Graph fig3_unicyclic() {
  Graph g(11);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  g.add_edge(3, 8);
  g.add_edge(8, 9);
  g.add_edge(9, 10);
  return g;
}

// Order-6 tree burned by the sequence (1, 3): vertex 1 is adjacent to
// everything except 3, which hangs off 2.
inline Graph fig4_tree() {
  Graph g(6);
  const int edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}};
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Petersen graph: outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace ct::fixtures

#endif
