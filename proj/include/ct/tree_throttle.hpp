#ifndef CT_TREE_THROTTLE_HPP
#define CT_TREE_THROTTLE_HPP

#include "ct/graph.hpp"

namespace ct {

// Builds a PSD forcing set S for a tree of order n with |S| <= floor(sqrt(n))
// and propagation time at most floor(sqrt(n)): repeatedly walks sqrt(n) steps
// in from an eccentric vertex, cuts there, and keeps the center's component.
// Ties (center choice, eccentric vertex) resolve to the lowest index.
VertexSet tree_sqrt_forcing_set(const Graph& tree);

// Same construction with a set X of vertices already blue: distances skip
// X-vertices (each contributes 0, charged on arrival) and the step length
// uses n' = n - |X|. Returns a set containing X with at most
// |X| + floor(sqrt(n')) vertices and propagation time <= floor(sqrt(n')).
VertexSet tree_sqrt_forcing_set_preblue(const Graph& tree, VertexSet known_blue);

struct TreeThrottleResult {
  Steps value;
  int k = 0;
  VertexSet witness;  // an optimal k-center
};

// Cop throttling of a tree as min_k (k + rad_k), without playing the game.
TreeThrottleResult tree_cop_throttle(const Graph& tree);

struct UnicyclicStrategy {
  VertexSet set;
  Steps propagation;   // simulated PSD propagation time of `set` on g
  int cycle_length = 0;
};

// Composite PSD strategy for a unicyclic graph: optimal throttling set on the
// cycle, plus the pre-blue sqrt construction on the tree obtained by
// contracting the cycle to a single vertex.
UnicyclicStrategy unicyclic_psd_strategy(const Graph& g);

}  // namespace ct

#endif
