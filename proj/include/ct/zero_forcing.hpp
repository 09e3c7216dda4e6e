#ifndef CT_ZERO_FORCING_HPP
#define CT_ZERO_FORCING_HPP

#include <vector>

#include "ct/graph.hpp"

namespace ct {

enum class ForcingRule { standard, psd };

inline const char* rule_name(ForcingRule r) {
  return r == ForcingRule::standard ? "standard" : "psd";
}

struct Force {
  int from;
  int to;
  int component;  // index into that step's white components; -1 for standard
};

// Time-stamped forcing chronology: steps[t] holds the forces performed
// simultaneously at step t+1, all judged against the blue set before the step.
struct ForcingRecord {
  ForcingRule rule = ForcingRule::psd;
  VertexSet initial;
  std::vector<std::vector<Force>> steps;
};

struct ForcingStep {
  VertexSet forced;
  std::vector<Force> forces;
};

// All forces valid simultaneously from the given blue set. Under the PSD rule
// a blue vertex may force once into each white component; under the standard
// rule it forces only when it has a unique white neighbor overall. When two
// blue vertices can force the same target, the lowest forcer is recorded.
ForcingStep forcing_step(const Graph& g, VertexSet blue, ForcingRule rule);

struct PropagationResult {
  Steps time;
  ForcingRecord record;  // partial history up to the stall when time is infinite
};

PropagationResult propagation_time(const Graph& g, VertexSet s, ForcingRule rule);

struct ForcingNumberResult {
  int number;
  VertexSet witness;
};

// Z or Z+: exact, by subset search of increasing size.
ForcingNumberResult forcing_number(const Graph& g, ForcingRule rule);

struct ForcingThrottleResult {
  Steps value;
  VertexSet witness;
  Steps propagation;
};

// th or th+: exact minimum of |S| + pt(G;S), searched by size then
// lexicographic order so the reported witness is deterministic.
ForcingThrottleResult forcing_throttle(const Graph& g, ForcingRule rule);

// Replays a record and throws std::invalid_argument if any force is illegal
// for its step, a target repeats, or the chronology leaves white vertices.
void validate_forcing_record(const Graph& g, const ForcingRecord& record);

}  // namespace ct

#endif
