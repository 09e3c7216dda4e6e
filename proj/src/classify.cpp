#include "ct/classify.hpp"

namespace ct {

std::optional<int> low_throttle_center(const Graph& g, bool proper) {
  int n = g.n();
  DistanceTable dt(g);
  for (int z = 0; z < n; ++z) {
    if (dt.eccentricity(z) > Steps::of(2)) continue;
    VertexSet ball = g.closed_neighborhood(z);
    bool ok = true;
    for (int w : g.vertices() - ball) {
      VertexSet nw = g.closed_neighborhood(w);
      bool covered = false;
      for (int u : ball) {
        VertexSet nu = g.closed_neighborhood(u);
        if (nw.subset_of(nu) && (!proper || nw != nu)) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        ok = false;
        break;
      }
    }
    if (ok) return z;
  }
  return std::nullopt;
}

ClassifyResult classify_low_throttle(const Graph& g, const SolveOptions& opts) {
  int n = g.n();
  ClassifyResult res;
  auto fire = [&res](int value, const std::string& name) {
    if (res.value == 5) {
      res.value = value;
      res.trigger = name;
    }
    res.fired.push_back(name);
  };

  if (n == 1) {
    fire(1, "single-vertex");
    return res;
  }
  if (n < 1) throw std::invalid_argument("classification needs at least one vertex");

  int gamma = domination_number(g).gamma;
  bool edgeless = g.is_edgeless();

  if (gamma == 1) fire(2, "dominating-vertex");
  if (n == 2 && edgeless) fire(2, "two-isolated-vertices");
  if (res.value < 5) return res;

  if (n >= 3) {
    if (gamma == 2) fire(3, "dominating-pair");
    if (n == 3 && edgeless) fire(3, "three-isolated-vertices");
    if (gamma > 2 && low_throttle_center(g).has_value()) fire(3, "radius-2-cover-vertex");
  }
  if (res.value < 5) return res;

  // cheapest predicate first
  if (gamma == 3) fire(4, "dominating-triple");
  if (n == 4 && edgeless) fire(4, "four-isolated-vertices");
  if (algorithm2_two_in_two(g).has_value()) fire(4, "two-cops-two-rounds");
  {
    Pursuit solver(g, opts);
    if (solver.can_catch_within(1, 3)) fire(4, "one-cop-three-rounds");
  }
  return res;
}

}  // namespace ct
