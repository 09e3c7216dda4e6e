#include "ct/burning.hpp"

#include <unordered_map>

namespace ct {

BurnSimulation burn_simulate(const Graph& g, const std::vector<int>& seq, int total_steps) {
  BurnSimulation sim;
  VertexSet distinct;
  for (int v : seq) {
    g.check_vertex(v);
    if (distinct.contains(v)) {
      sim.valid = false;
      sim.problem = "ignition list repeats vertex " + std::to_string(v);
      return sim;
    }
    distinct.add(v);
  }
  if (seq.empty()) {
    sim.success = g.n() == 0;
    return sim;
  }
  int steps = std::max<int>(total_steps, static_cast<int>(seq.size()));
  VertexSet burned;
  for (int t = 1; t <= steps; ++t) {
    if (t >= 2) burned = g.closed_neighborhood(burned);
    if (t <= static_cast<int>(seq.size())) {
      int v = seq[t - 1];
      if (burned.contains(v)) {
        sim.valid = false;
        sim.problem = "vertex " + std::to_string(v) + " already burned at step " +
                      std::to_string(t);
        return sim;
      }
      burned.add(v);
    }
    sim.trajectory.push_back(burned);
  }
  sim.success = burned == g.vertices();
  return sim;
}

namespace {

struct BurnSearch {
  const Graph& g;
  int max_steps;
  std::unordered_map<std::uint64_t, int> seen;  // burned set -> earliest step tried
  std::vector<int> sequence;

  bool dfs(VertexSet burned, int step) {
    if (burned == g.vertices()) return true;
    if (step > max_steps) return false;
    VertexSet spread = step >= 2 ? g.closed_neighborhood(burned) : burned;
    if (spread == g.vertices()) return true;
    auto [it, fresh] = seen.try_emplace(spread.bits, step);
    if (!fresh) {
      if (it->second <= step) return false;
      it->second = step;
    }
    for (int v : g.vertices() - spread) {
      VertexSet next = spread;
      next.add(v);
      sequence.push_back(v);
      if (dfs(next, step + 1)) return true;
      sequence.pop_back();
    }
    return false;
  }
};

}  // namespace

BurningResult burning_number(const Graph& g) {
  if (g.n() == 0) return {0, {}};
  // m = n always succeeds, so the deepening loop terminates
  for (int m = 1; m <= g.n(); ++m) {
    BurnSearch search{g, m, {}, {}};
    if (search.dfs(VertexSet::empty(), 1)) return {m, search.sequence};
  }
  return {g.n(), {}};
}

}  // namespace ct
