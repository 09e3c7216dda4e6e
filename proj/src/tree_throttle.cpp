#include "ct/tree_throttle.hpp"

#include <algorithm>

#include "ct/zero_forcing.hpp"

namespace ct {

namespace {

void require_tree(const Graph& g) {
  if (!g.is_tree()) throw std::invalid_argument("input graph is not a tree");
}

// Distances from src inside `alive`, where a vertex in `skip` costs 0 on
// arrival and every other vertex costs 1. Unique tree paths make a plain
// BFS accumulation exact. Unreachable vertices get -1.
std::vector<int> skip_weighted_dist(const Graph& g, int src, VertexSet alive, VertexSet skip) {
  std::vector<int> dist(g.n(), -1);
  std::vector<int> order{src};
  dist[src] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    for (int w : g.neighbors(u) & alive)
      if (dist[w] < 0) {
        dist[w] = dist[u] + (skip.contains(w) ? 0 : 1);
        order.push_back(w);
      }
  }
  return dist;
}

struct CenterInfo {
  int center = -1;
  int radius = 0;
};

CenterInfo skip_weighted_center(const Graph& g, VertexSet alive, VertexSet skip) {
  CenterInfo best;
  for (int c : alive) {
    auto d = skip_weighted_dist(g, c, alive, skip);
    int ecc = 0;
    for (int v : alive) ecc = std::max(ecc, d[v]);
    if (best.center < 0 || ecc < best.radius) best = {c, ecc};
  }
  return best;
}

}  // namespace

VertexSet tree_sqrt_forcing_set_preblue(const Graph& tree, VertexSet known_blue) {
  require_tree(tree);
  int n = tree.n();
  if (!known_blue.subset_of(tree.vertices()))
    throw std::invalid_argument("pre-blue set has vertices outside the tree");
  int t = isqrt(n - known_blue.count());

  VertexSet s = known_blue;
  VertexSet alive = tree.vertices();
  CenterInfo c = skip_weighted_center(tree, alive, known_blue);
  while (c.radius > t) {
    auto d = skip_weighted_dist(tree, c.center, alive, known_blue);
    int v = -1;
    for (int cand : alive)
      if (d[cand] == c.radius) {
        v = cand;
        break;
      }
    // unique path from v back to the center
    std::vector<int> parent(tree.n(), -1);
    {
      std::vector<int> order{c.center};
      parent[c.center] = c.center;
      for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : tree.neighbors(order[i]) & alive)
          if (parent[w] < 0) {
            parent[w] = order[i];
            order.push_back(w);
          }
    }
    // cut at the first vertex whose accumulated cost from v reaches t;
    // the accumulation only moves at non-skipped vertices, so the cut
    // vertex is never in known_blue and never the center itself
    int u = v, cum = 0;
    while (cum < t) {
      u = parent[u];
      cum += known_blue.contains(u) ? 0 : 1;
    }
    s.add(u);
    alive = tree.component_of(c.center, alive - VertexSet::single(u));
    c = skip_weighted_center(tree, alive, known_blue);
  }
  s.add(c.center);
  return s;
}

VertexSet tree_sqrt_forcing_set(const Graph& tree) {
  return tree_sqrt_forcing_set_preblue(tree, VertexSet::empty());
}

TreeThrottleResult tree_cop_throttle(const Graph& tree) {
  require_tree(tree);
  int n = tree.n();
  TreeThrottleResult best{Steps::inf(), 0, VertexSet::empty()};
  for (int k = 1; k <= n; ++k) {
    if (best.value.is_finite() && k >= best.value.value()) break;
    KCenterResult kc = k_center(tree, k);
    if (Steps::of(k) + kc.radius < best.value)
      best = {Steps::of(k) + kc.radius, k, kc.witness};
  }
  return best;
}

UnicyclicStrategy unicyclic_psd_strategy(const Graph& g) {
  int n = g.n();
  if (n < 3 || !g.is_connected() || g.edge_count() != n)
    throw std::invalid_argument("input graph is not unicyclic");

  // the cycle is what survives leaf stripping
  VertexSet on_cycle = g.vertices();
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int v : on_cycle)
      if ((g.neighbors(v) & on_cycle).count() <= 1) {
        on_cycle.remove(v);
        stripped = true;
      }
  }
  std::vector<int> cyc;
  {
    int start = on_cycle.lowest();
    int prev = -1, cur = start;
    do {
      cyc.push_back(cur);
      int next = -1;
      for (int w : g.neighbors(cur) & on_cycle)
        if (w != prev) {
          next = w;
          break;
        }
      prev = cur;
      cur = next;
    } while (cur != start);
  }
  int k = static_cast<int>(cyc.size());

  // optimal PSD throttling set on the cycle alone
  Graph cycle_graph(k);
  for (int i = 0; i < k; ++i) cycle_graph.add_edge(i, (i + 1) % k);
  auto cyc_th = forcing_throttle(cycle_graph, ForcingRule::psd);
  VertexSet s;
  for (int i : cyc_th.witness) s.add(cyc[i]);

  // contract the cycle to vertex 0 of a tree on the remaining vertices
  std::vector<int> to_tree(n, -1), to_graph{-1};
  int next_id = 1;
  for (int v = 0; v < n; ++v)
    if (!on_cycle.contains(v)) {
      to_tree[v] = next_id++;
      to_graph.push_back(v);
    }
  Graph tree(next_id);
  for (auto [u, v] : g.edges()) {
    bool cu = on_cycle.contains(u), cv = on_cycle.contains(v);
    if (cu && cv) continue;
    int a = cu ? 0 : to_tree[u];
    int b = cv ? 0 : to_tree[v];
    tree.add_edge(a, b);
  }

  VertexSet tree_set = tree_sqrt_forcing_set_preblue(tree, VertexSet::single(0));
  for (int v : tree_set)
    if (v != 0) s.add(to_graph[v]);

  UnicyclicStrategy out;
  out.set = s;
  out.cycle_length = k;
  out.propagation = propagation_time(g, s, ForcingRule::psd).time;
  return out;
}

}  // namespace ct
