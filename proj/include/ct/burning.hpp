#ifndef CT_BURNING_HPP
#define CT_BURNING_HPP

#include <vector>

#include "ct/graph.hpp"

namespace ct {

struct BurnSimulation {
  bool valid = true;       // false when an ignition target was already burned
  bool success = false;    // all vertices burned after the simulated steps
  std::string problem;
  std::vector<VertexSet> trajectory;  // burned set after each step
};

// Plays a burning sequence: step 1 ignites seq[0]; every later step first
// spreads fire to all neighbors of burned vertices, then ignites the next
// listed vertex, which must still be unburned. Steps beyond the sequence
// keep spreading. Runs for max(total_steps, |seq|) steps.
BurnSimulation burn_simulate(const Graph& g, const std::vector<int>& seq, int total_steps = 0);

struct BurningResult {
  int number = 0;
  std::vector<int> witness;  // ignition sequence, possibly shorter than number
};

// Exact burning number by iterative deepening over the step count, with
// memoized burned sets. The sequence may end early once spreading alone
// finishes the job.
BurningResult burning_number(const Graph& g);

}  // namespace ct

#endif
