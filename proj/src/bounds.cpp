#include "ct/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "ct/burning.hpp"
#include "ct/families.hpp"

#include "json.hpp"

namespace ct {

namespace {

using Clock = std::chrono::steady_clock;

class RowBuilder {
 public:
  explicit RowBuilder(std::vector<CheckRow>& rows) : rows_(rows) {}

  void add(const std::string& claim, const std::string& reference, const std::string& instance,
           const std::string& lhs, const std::string& rhs, bool pass,
           const std::string& note = "") {
    auto now = Clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    rows_.push_back({claim, reference, instance, lhs, rhs, pass ? "pass" : "fail", note, ms});
  }

  void skip(const std::string& claim, const std::string& reference, const std::string& instance,
            const std::string& note) {
    last_ = Clock::now();
    rows_.push_back({claim, reference, instance, "", "", "skip", note, 0.0});
  }

 private:
  std::vector<CheckRow>& rows_;
  Clock::time_point last_ = Clock::now();
};

std::string steps_str(Steps s) { return s.str(); }

}  // namespace

bool all_pass(const std::vector<CheckRow>& rows) {
  for (const auto& r : rows)
    if (r.verdict == "fail") return false;
  return true;
}

std::string render_table(const std::vector<CheckRow>& rows) {
  std::size_t wc = 5, wi = 8, wl = 3, wr = 3;
  for (const auto& r : rows) {
    wc = std::max(wc, r.claim.size());
    wi = std::max(wi, r.instance.size());
    wl = std::max(wl, r.lhs.size());
    wr = std::max(wr, r.rhs.size());
  }
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - std::min(w, s.size()), ' ');
  };
  out << pad("claim", wc) << "  " << pad("instance", wi) << "  " << pad("lhs", wl) << "  "
      << pad("rhs", wr) << "  verdict\n";
  for (const auto& r : rows) {
    out << pad(r.claim, wc) << "  " << pad(r.instance, wi) << "  " << pad(r.lhs, wl) << "  "
        << pad(r.rhs, wr) << "  " << r.verdict;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
  }
  return out.str();
}

std::string render_json(const std::vector<CheckRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row{{"claim", r.claim},       {"paper_ref", r.reference},
                       {"instance", r.instance}, {"lhs", r.lhs},
                       {"rhs", r.rhs},           {"verdict", r.verdict},
                       {"runtime_ms", r.runtime_ms}};
    if (!r.note.empty()) row["note"] = r.note;
    arr.push_back(row);
  }
  return arr.dump(2);
}

// ---------------------------------------------------------------------------
// corpus helpers

Graph random_connected_graph(int n, std::uint64_t seed) {
  Graph g = random_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0xabcdef1234567890ULL);
  double p = std::uniform_real_distribution<double>(0.1, 0.45)(rng);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && coin(rng)) g.add_edge(u, v);
  return g;
}

Graph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5151515151515151ULL);
  double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<Graph> all_graphs_up_to_iso(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("isomorphism sweep supports 1 <= n <= 7");
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> idx;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) idx.emplace_back(u, v);
  std::vector<int> perm(n);
  std::vector<Graph> out;
  std::vector<bool> seen(std::size_t{1} << pairs, false);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
    if (seen[mask]) continue;
    // mark the whole isomorphism class and keep the current representative
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      std::uint32_t image = 0;
      for (int b = 0; b < pairs; ++b) {
        if (!((mask >> b) & 1)) continue;
        int u = perm[idx[b].first], v = perm[idx[b].second];
        if (u > v) std::swap(u, v);
        for (int b2 = 0; b2 < pairs; ++b2)
          if (idx[b2].first == u && idx[b2].second == v) {
            image |= std::uint32_t{1} << b2;
            break;
          }
      }
      seen[image] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Graph g(n);
    for (int b = 0; b < pairs; ++b)
      if ((mask >> b) & 1) g.add_edge(idx[b].first, idx[b].second);
    out.push_back(g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// girth projection

int girth_projection(const Graph& g, const std::vector<int>& cycle, int v) {
  int len = static_cast<int>(cycle.size());
  if (len < 3) throw std::invalid_argument("cycle must have at least 3 vertices");
  VertexSet cyc_set;
  for (int i = 0; i < len; ++i) {
    g.check_vertex(cycle[i]);
    if (cyc_set.contains(cycle[i])) throw std::invalid_argument("cycle repeats a vertex");
    cyc_set.add(cycle[i]);
    if (!g.adjacent(cycle[i], cycle[(i + 1) % len]))
      throw std::invalid_argument("cycle list is not a closed walk");
  }
  if (girth(g) != Steps::of(len))
    throw std::invalid_argument("cycle is not a shortest cycle of the graph");
  g.check_vertex(v);
  if (cyc_set.contains(v)) return v;

  DistanceTable dt(g);
  Steps to_cycle = Steps::inf();
  for (int u : cycle) to_cycle = min_steps(to_cycle, dt.dist(v, u));

  int x = -1;
  if (!(to_cycle < Steps::of(len / 2))) {
    x = *std::min_element(cycle.begin(), cycle.end());
  } else {
    int y = -1;
    for (int u : cycle)
      if (dt.dist(v, u) == to_cycle && (y < 0 || u < y)) y = u;
    for (int u : cycle)
      if (dt.dist(u, y) == to_cycle && (x < 0 || u < x)) x = u;
  }
  if (x < 0) throw std::logic_error("no projection candidate found on the cycle");
  for (int u : cycle)
    if (dt.dist(x, u) > dt.dist(v, u))
      throw std::logic_error("projection property failed at cycle vertex " + std::to_string(u));
  return x;
}

// ---------------------------------------------------------------------------
// inequality suite

namespace {

// capt(G;S) <= pt+(G;S), certified by the exact game when small enough and by
// the shadow strategy otherwise (the strategy's round count upper-bounds the
// optimal capture time and must not exceed the propagation time).
void check_capture_vs_propagation(RowBuilder& rows, const Graph& g, const std::string& name,
                                  VertexSet s, const PropagationResult& prop,
                                  const HarnessOptions& opts) {
  std::string inst = name + " S=" + s.str();
  int k = s.count();
  std::uint64_t states = binomial(g.n() + k - 1, k);
  states = states > opts.exact_capture_cap ? states : states * g.n();
  Steps pt = prop.time;
  if (states <= opts.exact_capture_cap) {
    Pursuit solver(g, opts.solve);
    Steps capt = solver.capture_time_of_set(make_cop_config(s.to_vector()));
    rows.add("capture-le-psd-propagation", "psd forcing set is a capture set", inst,
             steps_str(capt), steps_str(pt), capt <= pt, "exact game");
  } else {
    Steps shadow = psd_shadow_capture(g, s, prop.record);
    rows.add("capture-le-psd-propagation", "psd forcing set is a capture set", inst,
             steps_str(shadow), steps_str(pt), shadow <= pt, "shadow strategy bound");
  }
}

}  // namespace

std::vector<CheckRow> verify_inequality_suite(const Graph& g, const std::string& name,
                                              const HarnessOptions& opts) {
  std::vector<CheckRow> out;
  RowBuilder rows(out);
  int n = g.n();
  if (n < 1) {
    rows.skip("inequality-suite", "", name, "empty graph");
    return out;
  }

  Pursuit solver(g, opts.solve);
  CopThrottleResult thc;
  try {
    thc = solver.cop_throttle();
  } catch (const BudgetError& e) {
    rows.skip("inequality-suite", "", name, e.what());
    return out;
  }
  auto dom = domination_number(g);
  auto thp = forcing_throttle(g, ForcingRule::psd);
  int c = solver.cop_number();
  auto zp = forcing_number(g, ForcingRule::psd);

  rows.add("throttling-le-domination-plus-one", "placing a dominating set captures in one round",
           name, steps_str(thc.value), std::to_string(dom.gamma + 1),
           thc.value <= Steps::of(dom.gamma + 1));
  rows.add("cop-throttling-le-psd-throttling", "psd throttling bounds cop throttling", name,
           steps_str(thc.value), steps_str(thp.value), thc.value <= thp.value);
  rows.add("cop-number-le-psd-forcing-number", "psd forcing sets are capture sets", name,
           std::to_string(c), std::to_string(zp.number), c <= zp.number);

  // sampled PSD forcing sets
  {
    std::mt19937_64 rng(opts.seed ^ std::hash<std::string>{}(name));
    int found = 0, attempts = 0;
    while (found < opts.psd_sets_per_graph && attempts < 80 * opts.psd_sets_per_graph) {
      ++attempts;
      int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      VertexSet s;
      while (s.count() < size) s.add(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
      auto prop = propagation_time(g, s, ForcingRule::psd);
      if (prop.time.is_inf()) continue;
      ++found;
      check_capture_vs_propagation(rows, g, name, s, prop, opts);
    }
    if (found < opts.psd_sets_per_graph) {
      auto prop = propagation_time(g, thp.witness, ForcingRule::psd);
      check_capture_vs_propagation(rows, g, name, thp.witness, prop, opts);
    }
  }

  // capture time dominates the k-center radius
  for (int k = 1; k <= std::min(3, n); ++k) {
    Steps radk = k_radius(g, k);
    Steps captk = solver.k_capture_time(k).rounds;
    rows.add("k-capture-ge-k-radius", "cops cannot beat the k-center radius",
             name + " k=" + std::to_string(k), steps_str(captk), steps_str(radk), captk >= radk);
    if (g.is_tree())
      rows.add("tree-k-capture-eq-k-radius", "tree capture time equals the k-center radius",
               name + " k=" + std::to_string(k), steps_str(captk), steps_str(radk),
               captk == radk);
  }

  Steps gsteps = girth(g);
  if (gsteps.is_finite()) {
    int bound = path_throttling_formula(gsteps.value());
    rows.add("throttling-ge-girth-bound", "a robber on a shortest cycle forces cycle throttling",
             name, steps_str(thc.value), std::to_string(bound),
             thc.value >= Steps::of(bound));
  }
  if (!(gsteps < Steps::of(5))) {
    rows.add("throttling-ge-min-degree", "girth five forces cop number at least min degree",
             name, steps_str(thc.value), std::to_string(g.min_degree()),
             thc.value >= Steps::of(g.min_degree()));
  }

  if (g.is_tree()) {
    rows.add("tree-throttling-equality", "tree cop throttling equals psd throttling", name,
             steps_str(thc.value), steps_str(thp.value), thc.value == thp.value);
    auto burn = burning_number(g);
    rows.add("tree-throttling-le-burning", "staggered forcing from a burning sequence", name,
             steps_str(thp.value), std::to_string(2 * burn.number - 1),
             thp.value <= Steps::of(2 * burn.number - 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// formula suite

std::vector<CheckRow> verify_formula_suite(const HarnessOptions& opts) {
  std::vector<CheckRow> out;
  RowBuilder rows(out);

  for (int n = 1; n <= 12; ++n) {
    Pursuit solver(path(n), opts.solve);
    int expect = path_throttling_formula(n);
    Steps got = solver.cop_throttle().value;
    rows.add("path-throttling-formula", "path throttling closed form", "P_" + std::to_string(n),
             steps_str(got), std::to_string(expect), got == Steps::of(expect));
  }

  for (int n = 4; n <= 11; ++n) {
    Graph g = cycle(n);
    Pursuit solver(g, opts.solve);
    int expect = path_throttling_formula(n);
    Steps game = solver.cop_throttle().value;
    Steps forcing = forcing_throttle(g, ForcingRule::psd).value;
    rows.add("cycle-throttling-formula", "cycle throttling closed form", "C_" + std::to_string(n),
             steps_str(game), std::to_string(expect), game == Steps::of(expect));
    rows.add("cycle-psd-throttling-formula", "cycle psd throttling closed form",
             "C_" + std::to_string(n), steps_str(forcing), std::to_string(expect),
             forcing == Steps::of(expect));
  }

  for (int h = 1; h <= 4; ++h) {
    Graph t = full_binary_tree(h);
    auto tr = tree_cop_throttle(t);
    rows.add("binary-tree-throttling", "full binary tree throttling is height plus one",
             "T_B(" + std::to_string(h) + ")", steps_str(tr.value), std::to_string(h + 1),
             tr.value == Steps::of(h + 1));
    if (h <= 3) {
      Pursuit solver(t, opts.solve);
      rows.add("binary-tree-game-crosscheck", "game solver agrees with the k-radius shortcut",
               "T_B(" + std::to_string(h) + ")", steps_str(solver.cop_throttle().value),
               steps_str(tr.value), solver.cop_throttle().value == tr.value);
    }
  }

  for (int m = 3; m <= 8; ++m) {
    Graph g = stellated_wheel(m);
    std::string inst = "SW_" + std::to_string(2 * m + 1);
    Pursuit solver(g, opts.solve);
    rows.add("stellated-wheel-throttling", "stellated wheel throttles at three", inst,
             steps_str(solver.cop_throttle().value), "3",
             solver.cop_throttle().value == Steps::of(3));
    rows.add("stellated-wheel-domination", "every other cycle vertex dominates", inst,
             std::to_string(domination_number(g).gamma), std::to_string((m + 1) / 2),
             domination_number(g).gamma == (m + 1) / 2);
    Steps center_capture = solver.capture_time_of_set({0});
    rows.add("stellated-wheel-center-capture", "center cop captures in two rounds", inst,
             steps_str(center_capture), "2", center_capture == Steps::of(2));
  }

  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) {
      Pursuit solver(grid(a, b), opts.solve);
      int expect = (a + b) / 2 - 1;
      Steps capt2 = solver.k_capture_time(2).rounds;
      rows.add("grid-two-cop-capture", "grid capture time closed form",
               "P_" + std::to_string(a) + "xP_" + std::to_string(b), steps_str(capt2),
               std::to_string(expect), capt2 == Steps::of(expect));
    }

  for (int m = 3; m <= 4; ++m) {
    Pursuit solver(hypercube(m), opts.solve);
    rows.add("hypercube-cop-number", "hypercube cop number closed form",
             "Q_" + std::to_string(m), std::to_string(solver.cop_number()),
             std::to_string((m + 1) / 2), solver.cop_number() == (m + 1) / 2);
  }

  {
    Graph ig = projective_incidence(2);
    std::string inst = "IG(2)";
    bool regular = true;
    for (int v = 0; v < ig.n(); ++v) regular = regular && ig.degree(v) == 3;
    rows.add("projective-incidence-shape", "incidence graph order, regularity and girth", inst,
             std::to_string(ig.n()) + ",3reg,girth" + girth(ig).str(), "14,3reg,girth6",
             ig.n() == 14 && regular && girth(ig) == Steps::of(6));
    Pursuit solver(ig, opts.solve);
    rows.add("projective-incidence-cop-number", "incidence graph needs order plus one cops", inst,
             std::to_string(solver.cop_number()), "3", solver.cop_number() == 3);
    Steps capt3 = solver.k_capture_time(3).rounds;
    rows.add("projective-incidence-capture", "three cops capture within three rounds", inst,
             steps_str(capt3), "<=3", capt3 <= Steps::of(3));
  }

  for (int n = 7; n <= 10; ++n) {
    Graph h = max_capture_Hn(n);
    std::string inst = "H_" + std::to_string(n);
    rows.add("max-capture-cop-win", "maximum-capture family stays cop-win", inst,
             is_cop_win(h).cop_win ? "true" : "false", "true", is_cop_win(h).cop_win);
    Pursuit solver(h, opts.solve);
    Steps capt1 = solver.k_capture_time(1).rounds;
    rows.add("max-capture-time", "one-cop capture time is order minus four", inst,
             steps_str(capt1), std::to_string(n - 4), capt1 == Steps::of(n - 4));
    if (n == 7)
      rows.add("max-capture-throttling", "the seven-vertex gadget throttles at three", inst,
               steps_str(solver.cop_throttle().value), "3",
               solver.cop_throttle().value == Steps::of(3));
  }

  {
    int n = 20;
    Graph gn = meyniel_extremal(n, 2);
    Pursuit solver(gn, opts.solve);
    Steps whole = solver.cop_throttle().value;
    Pursuit pk(path(n - projective_incidence(2).n() + 1), opts.solve);
    Pursuit pig(projective_incidence(2), opts.solve);
    Steps bound = pk.cop_throttle().value + pig.cop_throttle().value;
    rows.add("meyniel-extremal-composite", "clique sum bounds the composite throttling",
             "G_" + std::to_string(n), steps_str(whole), steps_str(bound), whole <= bound);
  }
  return out;
}

// ---------------------------------------------------------------------------
// clique sums

std::vector<CheckRow> verify_clique_sum_suite(int instances, const HarnessOptions& opts) {
  std::vector<CheckRow> out;
  RowBuilder rows(out);
  std::mt19937_64 rng(opts.seed ^ 0xc11c5ce5ULL);

  auto throttling = [&](const Graph& g) {
    Pursuit solver(g, opts.solve);
    return solver.cop_throttle().value;
  };

  int made = 0;
  std::uint64_t attempt = 0;
  while (made < instances) {
    std::uint64_t seed = rng();
    ++attempt;
    int n1 = 3 + static_cast<int>(seed % 4);
    int n2 = 3 + static_cast<int>((seed >> 8) % 4);
    Graph g1 = random_connected_graph(n1, seed ^ 1);
    Graph g2 = random_connected_graph(n2, seed ^ 2);
    int m = 1 + static_cast<int>((seed >> 16) % 3);
    auto find_clique = [&](const Graph& g) -> std::vector<int> {
      std::vector<int> comb(m);
      for (int i = 0; i < m; ++i) comb[i] = i;
      while (true) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
          for (int j = i + 1; j < m && ok; ++j) ok = g.adjacent(comb[i], comb[j]);
        if (ok) return comb;
        int i = m - 1;
        while (i >= 0 && comb[i] == g.n() - m + i) --i;
        if (i < 0) return {};
        ++comb[i];
        for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
      }
    };
    auto c1 = find_clique(g1);
    auto c2 = find_clique(g2);
    if (c1.empty() || c2.empty() || g1.n() <= m || g2.n() <= m) continue;
    Graph sum = clique_sum(g1, c1, g2, c2);
    ++made;
    Steps t1 = throttling(g1), t2 = throttling(g2), ts = throttling(sum);
    std::string inst = "sum#" + std::to_string(made) + " m=" + std::to_string(m);
    rows.add("clique-sum-lower", "the robber can commit to either summand", inst,
             steps_str(max_steps(t1, t2)), steps_str(ts), max_steps(t1, t2) <= ts);
    rows.add("clique-sum-upper", "independent cop teams cover both summands", inst, steps_str(ts),
             steps_str(t1 + t2), ts <= t1 + t2);
  }

  // tightness gadgets at clique order three
  {
    int m = 3;
    // upper gadget: a three-edge path hung on the clique, glued on the clique
    Graph g1 = complete(m);
    {
      Graph with_path(m + 3);
      for (auto [u, v] : g1.edges()) with_path.add_edge(u, v);
      with_path.add_edge(0, m);
      with_path.add_edge(m, m + 1);
      with_path.add_edge(m + 1, m + 2);
      g1 = with_path;
    }
    std::vector<int> cl{0, 1, 2};
    Graph g = clique_sum(g1, cl, g1, cl);
    rows.add("clique-sum-upper-tight", "two path gadgets exhaust the upper bound", "m=3 gadget",
             steps_str(throttling(g)), "4", throttling(g) == Steps::of(4));
  }
  {
    int m = 3;
    Graph g1(m + 1);  // clique plus one pendant leaf at vertex 0
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v) g1.add_edge(u, v);
    g1.add_edge(0, m);
    std::vector<int> cl{0, 1, 2};
    Graph g = clique_sum(g1, cl, g1, cl);  // pendant vertices meet at vertex 0
    rows.add("clique-sum-lower-tight", "identified apex dominates the sum", "m=3 gadget",
             steps_str(throttling(g)), "2", throttling(g) == Steps::of(2));
  }
  return out;
}

// ---------------------------------------------------------------------------
// tree suite

std::vector<CheckRow> verify_tree_suite(int trees, int subtree_pairs, const HarnessOptions& opts) {
  std::vector<CheckRow> out;
  RowBuilder rows(out);
  std::mt19937_64 rng(opts.seed ^ 0x7ee5ULL);

  for (int i = 0; i < trees; ++i) {
    int n = 3 + static_cast<int>(rng() % 16);
    Graph t = random_tree(n, rng());
    DistanceTable dt(t);
    std::string inst = "tree#" + std::to_string(i) + " n=" + std::to_string(n);
    auto shortcut = tree_cop_throttle(t);
    Pursuit solver(t, opts.solve);
    Steps game = solver.cop_throttle().value;
    Steps forcing = forcing_throttle(t, ForcingRule::psd).value;
    rows.add("tree-throttle-triple-agreement",
             "k-radius shortcut, game and psd forcing agree on trees", inst, steps_str(game),
             steps_str(shortcut.value) + "," + steps_str(forcing),
             game == shortcut.value && game == forcing);

    auto burn = burning_number(t);
    rows.add("tree-throttling-le-burning", "staggered forcing from a burning sequence", inst,
             steps_str(forcing), std::to_string(2 * burn.number - 1),
             forcing <= Steps::of(2 * burn.number - 1));

    // some optimal placement avoids every leaf; on a tree the capture time
    // of a placement is its eccentricity, so subsets are cheap to score
    {
      std::vector<int> internal_list;
      for (int v = 0; v < n; ++v)
        if (t.degree(v) >= 2) internal_list.push_back(v);
      bool found = false;
      int th = shortcut.value.value();
      for (int k = 1; k < th && !found; ++k) {
        if (k > static_cast<int>(internal_list.size())) break;
        std::vector<int> comb(k);
        for (int j = 0; j < k; ++j) comb[j] = j;
        while (!found) {
          VertexSet s;
          for (int j : comb) s.add(internal_list[j]);
          Steps ecc = dt.max_dist_to_set(s);
          if (ecc.is_finite() && k + ecc.value() == th) found = true;
          int j = k - 1;
          while (j >= 0 && comb[j] == static_cast<int>(internal_list.size()) - k + j) --j;
          if (j < 0) break;
          ++comb[j];
          for (int l = j + 1; l < k; ++l) comb[l] = comb[l - 1] + 1;
        }
      }
      rows.add("tree-leaf-free-witness", "an optimal placement avoiding leaves exists", inst,
               found ? "found" : "missing", "found", found);
    }

    {
      int r = dt.radius().value();
      int lo = path_throttling_formula(2 * r + 1);
      bool ok = Steps::of(lo) <= shortcut.value && shortcut.value <= Steps::of(r + 1);
      rows.add("tree-radius-sandwich", "radius squeezes tree throttling", inst,
               steps_str(shortcut.value),
               "[" + std::to_string(lo) + "," + std::to_string(r + 1) + "]", ok);
    }
  }

  for (int i = 0; i < subtree_pairs; ++i) {
    int n = 4 + static_cast<int>(rng() % 15);
    Graph t = random_tree(n, rng());
    // grow a random connected subtree
    int size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    VertexSet keep = VertexSet::single(static_cast<int>(rng() % n));
    while (keep.count() < size) {
      VertexSet frontier = (t.closed_neighborhood(keep)) - keep;
      auto fl = frontier.to_vector();
      keep.add(fl[rng() % fl.size()]);
    }
    std::vector<int> relabel(n, -1);
    int idx = 0;
    for (int v : keep) relabel[v] = idx++;
    Graph sub(keep.count());
    for (auto [u, v] : t.edges())
      if (keep.contains(u) && keep.contains(v)) sub.add_edge(relabel[u], relabel[v]);
    Steps big = tree_cop_throttle(t).value;
    Steps small = tree_cop_throttle(sub).value;
    rows.add("subtree-monotonicity", "throttling never grows when passing to a subtree",
             "pair#" + std::to_string(i), steps_str(small), steps_str(big), small <= big);
  }
  return out;
}

// ---------------------------------------------------------------------------
// sqrt constructions

std::vector<CheckRow> verify_sqrt_construction_suite(int trees, int unicyclic,
                                                     const HarnessOptions& opts) {
  std::vector<CheckRow> out;
  RowBuilder rows(out);
  std::mt19937_64 rng(opts.seed ^ 0x5a5a5aULL);

  for (int i = 0; i < trees; ++i) {
    int n = 1 + static_cast<int>(rng() % 60);
    Graph t = random_tree(n, rng());
    VertexSet s = tree_sqrt_forcing_set(t);
    Steps pt = propagation_time(t, s, ForcingRule::psd).time;
    int cap = isqrt(n);
    bool ok = s.count() <= cap && pt.is_finite() && pt <= Steps::of(cap);
    rows.add("tree-sqrt-forcing-set", "sqrt-size set forces a tree in sqrt time",
             "tree#" + std::to_string(i) + " n=" + std::to_string(n),
             std::to_string(s.count()) + "," + steps_str(pt), "<=" + std::to_string(cap), ok);
  }

  for (int i = 0; i < unicyclic; ++i) {
    int n = 3 + static_cast<int>(rng() % 58);
    Graph g = random_unicyclic(n, rng());
    UnicyclicStrategy strat = unicyclic_psd_strategy(g);
    double bound = std::sqrt(6.0) * std::sqrt(static_cast<double>(n)) + 0.5;
    bool ok = strat.propagation.is_finite() &&
              strat.set.count() + strat.propagation.value() <= bound + 1e-9;
    rows.add("unicyclic-sqrt-strategy", "composite cycle-then-tree forcing stays within sqrt(6n)",
             "uni#" + std::to_string(i) + " n=" + std::to_string(n),
             std::to_string(strat.set.count() + (strat.propagation.is_finite()
                                                     ? strat.propagation.value()
                                                     : -1)),
             "<=" + std::to_string(bound), ok);
  }
  return out;
}

// ---------------------------------------------------------------------------
// default corpus

std::vector<CheckRow> verify_default_corpus(int random_graphs, const HarnessOptions& opts) {
  std::vector<CheckRow> out;
  auto run = [&](const Graph& g, const std::string& name) {
    auto rows = verify_inequality_suite(g, name, opts);
    out.insert(out.end(), rows.begin(), rows.end());
  };

  for (int n = 1; n <= 12; ++n) run(path(n), "P_" + std::to_string(n));
  for (int n = 3; n <= 11; ++n) run(cycle(n), "C_" + std::to_string(n));
  for (int n = 1; n <= 6; ++n) run(complete(n), "K_" + std::to_string(n));
  for (int n = 1; n <= 4; ++n) run(empty_graph(n), std::to_string(n) + "K_1");
  for (int m = 3; m <= 6; ++m) run(wheel(m), "W_" + std::to_string(m + 1));
  for (int m = 3; m <= 8; ++m) run(stellated_wheel(m), "SW_" + std::to_string(2 * m + 1));
  for (int h = 1; h <= 3; ++h) run(full_binary_tree(h), "T_B(" + std::to_string(h) + ")");
  run(grid(3, 3), "P_3xP_3");
  run(hypercube(3), "Q_3");
  run(projective_incidence(2), "IG(2)");
  for (int n = 7; n <= 10; ++n) run(max_capture_Hn(n), "H_" + std::to_string(n));

  std::mt19937_64 rng(opts.seed ^ 0xc0fBADULL);
  for (int i = 0; i < random_graphs; ++i) {
    int n = 2 + static_cast<int>(rng() % 9);
    run(random_connected_graph(n, rng()), "rand#" + std::to_string(i));
  }
  return out;
}

}  // namespace ct
