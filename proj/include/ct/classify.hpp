#ifndef CT_CLASSIFY_HPP
#define CT_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ct/pursuit.hpp"

namespace ct {

// Decides whether the cop-throttling number is 1, 2, 3 or 4 from structural
// characterizations alone (domination, the z-vertex cover criterion, the
// two-cops-two-rounds scan, a bounded one-cop query). Values of 5 and up are
// reported as the sentinel 5.
struct ClassifyResult {
  int value = 5;                    // 1..4, or 5 meaning "at least 5"
  std::string trigger;              // first condition that fired
  std::vector<std::string> fired;   // every condition that fired for `value`
};

ClassifyResult classify_low_throttle(const Graph& g, const SolveOptions& opts = {});

// Lowest vertex z with eccentricity at most 2 such that every vertex w
// outside N[z] has some u in N[z] with N[w] contained in N[u]. The
// containment is not strict unless `proper` is set.
std::optional<int> low_throttle_center(const Graph& g, bool proper = false);

}  // namespace ct

#endif
