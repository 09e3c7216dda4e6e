#include "ct/zero_forcing.hpp"

#include <algorithm>
#include <atomic>

namespace ct {

ForcingStep forcing_step(const Graph& g, VertexSet blue, ForcingRule rule) {
  ForcingStep out;
  int n = g.n();
  // forcer[w] = lowest blue vertex that can force w this step
  std::vector<int> forcer(n, -1);
  std::vector<int> comp_of(n, -1);

  if (rule == ForcingRule::standard) {
    for (int v : blue) {
      VertexSet white = g.neighbors(v) - blue;
      if (white.count() == 1) {
        int w = white.lowest();
        if (forcer[w] < 0) forcer[w] = v;
      }
    }
  } else {
    auto comps = components_avoiding(g, blue);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      for (int w : comps[ci]) comp_of[w] = static_cast<int>(ci);
      for (int v : blue) {
        VertexSet white = g.neighbors(v) & comps[ci];
        if (white.count() == 1) {
          int w = white.lowest();
          if (forcer[w] < 0) forcer[w] = v;
        }
      }
    }
  }

  for (int w = 0; w < n; ++w)
    if (forcer[w] >= 0) {
      out.forced.add(w);
      out.forces.push_back({forcer[w], w, rule == ForcingRule::psd ? comp_of[w] : -1});
    }
  return out;
}

PropagationResult propagation_time(const Graph& g, VertexSet s, ForcingRule rule) {
  PropagationResult res;
  res.record.rule = rule;
  res.record.initial = s;
  VertexSet blue = s;
  int t = 0;
  while (blue != g.vertices()) {
    ForcingStep step = forcing_step(g, blue, rule);
    if (step.forced.is_empty()) {
      res.time = Steps::inf();
      return res;
    }
    res.record.steps.push_back(step.forces);
    blue |= step.forced;
    ++t;
  }
  res.time = Steps::of(t);
  return res;
}

namespace {

// Visits size-k subsets in lexicographic order; fn returns false to stop.
template <typename Fn>
void for_each_subset(int n, int k, Fn fn) {
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  if (k > n) return;
  while (true) {
    VertexSet s;
    for (int v : comb) s.add(v);
    if (!fn(s)) return;
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) return;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
}

}  // namespace

ForcingNumberResult forcing_number(const Graph& g, ForcingRule rule) {
  int n = g.n();
  if (n == 0) return {0, VertexSet::empty()};
  for (int size = 1; size <= n; ++size) {
    ForcingNumberResult found{-1, VertexSet::empty()};
    for_each_subset(n, size, [&](VertexSet s) {
      if (propagation_time(g, s, rule).time.is_finite()) {
        found = {size, s};
        return false;
      }
      return true;
    });
    if (found.number > 0) return found;
  }
  return {n, g.vertices()};  // unreachable: V always forces
}

ForcingThrottleResult forcing_throttle(const Graph& g, ForcingRule rule) {
  int n = g.n();
  if (n == 0) return {Steps::of(0), VertexSet::empty(), Steps::of(0)};
  DistanceTable dt(g);
  // S = V achieves n + 0 and bounds the search.
  ForcingThrottleResult best{Steps::of(n), g.vertices(), Steps::of(0)};
  for (int size = 1; size < n && Steps::of(size + 1) < best.value; ++size) {
    for_each_subset(n, size, [&](VertexSet s) {
      // pt >= max distance to S and pt >= 1 for S != V
      Steps lb = max_steps(dt.max_dist_to_set(s), Steps::of(1));
      if (Steps::of(size) + lb >= best.value) return true;
      Steps pt = propagation_time(g, s, rule).time;
      if (Steps::of(size) + pt < best.value) best = {Steps::of(size) + pt, s, pt};
      return true;
    });
  }
  return best;
}

void validate_forcing_record(const Graph& g, const ForcingRecord& record) {
  VertexSet blue = record.initial;
  for (std::size_t t = 0; t < record.steps.size(); ++t) {
    auto comps = components_avoiding(g, blue);
    VertexSet targets;
    for (const Force& f : record.steps[t]) {
      g.check_vertex(f.from);
      g.check_vertex(f.to);
      if (!blue.contains(f.from))
        throw std::invalid_argument("force from white vertex " + std::to_string(f.from));
      if (blue.contains(f.to) || targets.contains(f.to))
        throw std::invalid_argument("vertex " + std::to_string(f.to) + " forced twice");
      if (record.rule == ForcingRule::standard) {
        VertexSet white = g.neighbors(f.from) - blue;
        if (white != VertexSet::single(f.to))
          throw std::invalid_argument("standard force rule violated at vertex " +
                                      std::to_string(f.from));
      } else {
        if (f.component < 0 || f.component >= static_cast<int>(comps.size()))
          throw std::invalid_argument("force names a nonexistent component");
        const VertexSet& comp = comps[f.component];
        if (!comp.contains(f.to))
          throw std::invalid_argument("forced vertex not in the named component");
        if ((g.neighbors(f.from) & comp) != VertexSet::single(f.to))
          throw std::invalid_argument("psd force rule violated at vertex " +
                                      std::to_string(f.from));
      }
      targets.add(f.to);
    }
    if (targets.is_empty()) throw std::invalid_argument("empty forcing step");
    blue |= targets;
  }
  if (blue != g.vertices())
    throw std::invalid_argument("forcing record does not color the whole graph");
}

}  // namespace ct
