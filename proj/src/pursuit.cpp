#include "ct/pursuit.hpp"

#include <algorithm>
#include <atomic>

namespace ct {

namespace {

constexpr std::uint16_t kUnset = 0xFFFF;

Steps from_val(std::uint16_t v) { return v == kUnset ? Steps::inf() : Steps::of(v); }

}  // namespace

CopConfig make_cop_config(std::vector<int> positions) {
  if (positions.empty()) throw std::invalid_argument("cop configuration must be nonempty");
  std::sort(positions.begin(), positions.end());
  return positions;
}

GameTable::GameTable(const Graph& g, int k, const SolveOptions& opts) : g_(g), n_(g.n()), k_(k) {
  if (n_ < 1) throw std::invalid_argument("pursuit needs at least one vertex");
  if (k_ < 1) throw std::invalid_argument("at least one cop required");
  m_ = binomial(n_ + k_ - 1, k_);
  std::uint64_t states = m_ > opts.state_budget ? m_ : m_ * static_cast<std::uint64_t>(n_);
  if (states > opts.state_budget) throw BudgetError(states, opts.state_budget);
  build();
}

// Lex rank of a sorted multiset via its strictly-increasing image
// (v_0, v_1+1, ..., v_{k-1}+k-1) over n+k-1 symbols. rank_table_[i*(N+1)+y]
// holds sum_{z<y} C(N-1-z, k-1-i) so each rank costs O(k).
std::uint64_t GameTable::rank(const CopConfig& cops) const {
  std::uint64_t r = 0;
  int prev = 0;
  int N = n_ + k_ - 1;
  for (int i = 0; i < k_; ++i) {
    int c = cops[i] + i;
    r += rank_table_[static_cast<std::size_t>(i) * (N + 1) + c] -
         rank_table_[static_cast<std::size_t>(i) * (N + 1) + prev];
    prev = c + 1;
  }
  return r;
}

CopConfig GameTable::config_at(std::uint64_t index) const {
  CopConfig c(k_);
  for (int i = 0; i < k_; ++i) c[i] = configs_[index * k_ + i];
  return c;
}

void GameTable::build() {
  int N = n_ + k_ - 1;
  rank_table_.assign(static_cast<std::size_t>(k_) * (N + 1), 0);
  for (int i = 0; i < k_; ++i) {
    std::uint64_t acc = 0;
    for (int y = 0; y <= N; ++y) {
      rank_table_[static_cast<std::size_t>(i) * (N + 1) + y] = acc;
      if (y < N) acc += binomial(N - 1 - y, k_ - 1 - i);
    }
  }

  configs_.resize(m_ * k_);
  cfg_mask_.resize(m_);
  {
    std::vector<int> tuple(k_, 0);
    std::uint64_t idx = 0;
    while (true) {
      std::uint64_t mask = 0;
      for (int i = 0; i < k_; ++i) {
        configs_[idx * k_ + i] = static_cast<std::uint8_t>(tuple[i]);
        mask |= std::uint64_t{1} << tuple[i];
      }
      cfg_mask_[idx] = mask;
      ++idx;
      int i = k_ - 1;
      while (i >= 0 && tuple[i] == n_ - 1) --i;
      if (i < 0) break;
      ++tuple[i];
      for (int j = i + 1; j < k_; ++j) tuple[j] = tuple[i];
    }
  }

  // successor configs: every cop moves within its closed neighborhood
  std::vector<std::vector<int>> closed_list(n_);
  for (int v = 0; v < n_; ++v) closed_list[v] = g_.closed_neighborhood(v).to_vector();

  succ_off_.assign(m_ + 1, 0);
  std::vector<std::vector<std::uint32_t>> succ_rows(m_);
  parallel_chunks(m_, [&](std::size_t lo, std::size_t hi) {
    std::vector<int> pick(k_);
    CopConfig sorted(k_);
    for (std::size_t ci = lo; ci < hi; ++ci) {
      auto& row = succ_rows[ci];
      std::fill(pick.begin(), pick.end(), 0);
      while (true) {
        for (int i = 0; i < k_; ++i) sorted[i] = closed_list[configs_[ci * k_ + i]][pick[i]];
        std::sort(sorted.begin(), sorted.end());
        row.push_back(static_cast<std::uint32_t>(rank(sorted)));
        int i = k_ - 1;
        while (i >= 0 &&
               pick[i] + 1 == static_cast<int>(closed_list[configs_[ci * k_ + i]].size()))
          --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k_; ++j) pick[j] = 0;
      }
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
  });
  for (std::uint64_t ci = 0; ci < m_; ++ci) succ_off_[ci + 1] = succ_off_[ci] + succ_rows[ci].size();
  succ_ids_.resize(succ_off_[m_]);
  for (std::uint64_t ci = 0; ci < m_; ++ci)
    std::copy(succ_rows[ci].begin(), succ_rows[ci].end(), succ_ids_.begin() + succ_off_[ci]);
  succ_rows.clear();
  succ_rows.shrink_to_fit();

  // round-indexed retrograde iteration
  val_.assign(m_ * n_, kUnset);
  std::vector<std::uint64_t> win(m_), next_win(m_), gain(m_);
  for (std::uint64_t ci = 0; ci < m_; ++ci) {
    win[ci] = cfg_mask_[ci];
    for (int r : VertexSet{cfg_mask_[ci]}) val_[ci * n_ + r] = 0;
  }
  std::vector<std::uint64_t> closed(n_);
  for (int v = 0; v < n_; ++v) closed[v] = g_.closed_neighborhood(v).bits;

  for (int t = 1;; ++t) {
    if (t >= kUnset) throw std::runtime_error("capture time exceeds representable range");
    // gain(D): robber positions that lose to a cop move landing on D
    parallel_chunks(m_, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t d = lo; d < hi; ++d) {
        std::uint64_t mask = cfg_mask_[d];
        std::uint64_t safe = win[d];  // escape squares must stay out of this
        std::uint64_t got = mask;
        for (int r = 0; r < n_; ++r)
          if ((closed[r] & ~mask & ~safe) == 0) got |= std::uint64_t{1} << r;
        gain[d] = got;
      }
    });
    std::atomic<bool> changed{false};
    parallel_chunks(m_, [&](std::size_t lo, std::size_t hi) {
      bool local = false;
      for (std::size_t ci = lo; ci < hi; ++ci) {
        std::uint64_t acc = win[ci];
        for (std::uint64_t s = succ_off_[ci]; s < succ_off_[ci + 1]; ++s) acc |= gain[succ_ids_[s]];
        std::uint64_t fresh = acc & ~win[ci];
        if (fresh) {
          local = true;
          for (int r : VertexSet{fresh}) val_[ci * n_ + r] = static_cast<std::uint16_t>(t);
        }
        next_win[ci] = acc;
      }
      if (local) changed.store(true, std::memory_order_relaxed);
    });
    win.swap(next_win);
    if (!changed.load()) break;
  }
}

Steps GameTable::value(const CopConfig& cops, int robber) const {
  if (static_cast<int>(cops.size()) != k_)
    throw std::invalid_argument("configuration size does not match table");
  g_.check_vertex(robber);
  for (std::size_t i = 0; i < cops.size(); ++i) {
    g_.check_vertex(cops[i]);
    if (i > 0 && cops[i] < cops[i - 1])
      throw std::invalid_argument("cop configuration must be sorted");
  }
  return from_val(val_[rank(cops) * n_ + robber]);
}

Steps GameTable::value_at(std::uint64_t index, int robber) const {
  return from_val(val_[index * n_ + robber]);
}

Steps GameTable::capture_time_at(std::uint64_t index) const {
  Steps worst = Steps::of(0);
  for (int r = 0; r < n_; ++r) {
    std::uint16_t v = val_[index * n_ + r];
    if (v == kUnset) return Steps::inf();
    worst = max_steps(worst, Steps::of(v));
  }
  return worst;
}

Steps GameTable::capture_time_from(const CopConfig& cops) const {
  CopConfig c = cops;
  std::sort(c.begin(), c.end());
  if (static_cast<int>(c.size()) != k_)
    throw std::invalid_argument("configuration size does not match table");
  for (int v : c) g_.check_vertex(v);
  return capture_time_at(rank(c));
}

GameTable::Placement GameTable::best_placement(bool sets_only) const {
  struct Local {
    Steps rounds = Steps::inf();
    std::uint64_t index = ~std::uint64_t{0};
  };
  int workers = std::max(1, global_threads());
  std::vector<Local> locals(workers);
  std::atomic<std::size_t> next_worker{0};
  parallel_chunks(m_, [&](std::size_t lo, std::size_t hi) {
    Local best;
    for (std::size_t ci = lo; ci < hi; ++ci) {
      if (sets_only && VertexSet{cfg_mask_[ci]}.count() != k_) continue;
      Steps ct = capture_time_at(ci);
      if (ct < best.rounds) best = {ct, ci};
    }
    locals[next_worker.fetch_add(1)] = best;
  });
  Local overall;
  for (const Local& l : locals)
    if (l.rounds < overall.rounds || (l.rounds == overall.rounds && l.index < overall.index))
      overall = l;
  if (overall.index == ~std::uint64_t{0}) return {Steps::inf(), {}};
  return {overall.rounds, config_at(overall.index)};
}

// ---------------------------------------------------------------------------

Pursuit::Pursuit(Graph g, SolveOptions opts) : g_(std::move(g)), opts_(opts) {}

const GameTable& Pursuit::table(int k) {
  auto it = tables_.find(k);
  if (it == tables_.end())
    it = tables_.emplace(k, std::make_unique<GameTable>(g_, k, opts_)).first;
  return *it->second;
}

Steps Pursuit::capture_time_of_set(const CopConfig& s) {
  CopConfig c = make_cop_config(s);
  return table(static_cast<int>(c.size())).capture_time_from(c);
}

GameTable::Placement Pursuit::k_capture_time(int k) {
  return table(k).best_placement(opts_.sets_only);
}

int Pursuit::cop_number() {
  for (int k = 1; k <= g_.n(); ++k)
    if (k_capture_time(k).rounds.is_finite()) return k;
  return g_.n();  // k = n always captures at placement
}

bool Pursuit::can_catch_within(int k, int p) {
  if (k < 1 || p < 0) throw std::invalid_argument("need k >= 1 and p >= 0");
  return k_capture_time(k).rounds <= Steps::of(p);
}

CopThrottleResult Pursuit::cop_throttle() {
  int n = g_.n();
  if (n < 1) throw std::invalid_argument("throttling needs at least one vertex");
  auto dom = domination_number(g_);
  int gamma = dom.gamma;

  CopThrottleResult res;
  // gamma cops capture in one round (zero when they cover everything), so
  // k + capt_k never improves past this candidate for k >= gamma.
  res.value = Steps::of(gamma + (gamma < n ? 1 : 0));
  res.k = gamma;
  res.witness = make_cop_config(dom.witness.to_vector());

  for (int k = 1; k < gamma && Steps::of(k + 1) < res.value; ++k) {
    PerKEntry entry;
    entry.k = k;
    int slack = res.value.value() - k - 1;  // beat the incumbent by >= 1
    KCenterResult kc = k_center(g_, k, Steps::of(slack));
    entry.k_radius_bound = kc.radius;
    if (Steps::of(k) + kc.radius >= res.value) {
      res.per_k.push_back(entry);
      continue;  // capt_k >= rad_k, so k + capt_k cannot win
    }
    auto placed = k_capture_time(k);
    entry.computed = true;
    entry.capture = placed.rounds;
    entry.witness = placed.witness;
    res.per_k.push_back(entry);
    if (Steps::of(k) + placed.rounds < res.value) {
      res.value = Steps::of(k) + placed.rounds;
      res.k = k;
      res.witness = placed.witness;
    }
  }
  {
    PerKEntry entry;
    entry.k = gamma;
    entry.computed = true;
    entry.capture = Steps::of(gamma < n ? 1 : 0);
    entry.witness = make_cop_config(dom.witness.to_vector());
    entry.k_radius_bound = entry.capture;
    res.per_k.push_back(entry);
  }
  return res;
}

GameTrace Pursuit::replay(const CopConfig& cops) {
  CopConfig c = make_cop_config(cops);
  const GameTable& tab = table(static_cast<int>(c.size()));
  GameTrace trace;
  trace.initial_cops = c;
  trace.rounds = tab.capture_time_from(c);
  if (trace.rounds.is_inf()) return trace;

  // worst robber start
  int robber = -1;
  Steps worst = Steps::of(-0);
  for (int r = 0; r < g_.n(); ++r) {
    Steps v = tab.value(c, r);
    if (robber < 0 || worst < v) {
      robber = r;
      worst = v;
    }
  }
  trace.initial_robber = robber;

  std::uint64_t ci = tab.rank(c);
  while (true) {
    Steps now = tab.value_at(ci, robber);
    if (now == Steps::of(0)) break;
    int t = now.value();
    // cop move certified by the fixpoint equation
    std::uint64_t chosen = ci;
    bool capture = false;
    CopConfig cur = tab.config_at(ci);
    std::vector<std::uint64_t> options;
    {
      // regenerate successors of ci in rank order
      std::vector<std::vector<int>> lists;
      for (int v : cur) lists.push_back(g_.closed_neighborhood(v).to_vector());
      std::vector<std::size_t> pick(cur.size(), 0);
      while (true) {
        CopConfig s(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) s[i] = lists[i][pick[i]];
        std::sort(s.begin(), s.end());
        options.push_back(tab.rank(s));
        std::size_t i = cur.size();
        while (i > 0 && pick[i - 1] + 1 == lists[i - 1].size()) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < cur.size(); ++j) pick[j] = 0;
      }
      std::sort(options.begin(), options.end());
      options.erase(std::unique(options.begin(), options.end()), options.end());
    }
    for (std::uint64_t d : options) {
      VertexSet mask = tab.config_mask(d);
      if (mask.contains(robber)) {
        chosen = d;
        capture = true;
        break;
      }
      bool ok = true;
      for (int r2 : g_.closed_neighborhood(robber) - mask)
        if (tab.value_at(d, r2) >= Steps::of(t)) {
          ok = false;
          break;
        }
      if (ok) {
        chosen = d;
        break;
      }
    }
    CopConfig moved = tab.config_at(chosen);
    if (capture) {
      trace.play.push_back({moved, robber, true});
      break;
    }
    // robber reply maximizing the remaining value
    VertexSet mask = tab.config_mask(chosen);
    int best_r = -1;
    Steps best_v = Steps::of(0);
    for (int r2 : g_.closed_neighborhood(robber) - mask) {
      Steps v = tab.value_at(chosen, r2);
      if (best_r < 0 || best_v < v) {
        best_r = r2;
        best_v = v;
      }
    }
    if (best_r < 0) {
      trace.play.push_back({moved, robber, true});  // every move lands on a cop
      break;
    }
    robber = best_r;
    ci = chosen;
    trace.play.push_back({moved, robber, false});
  }
  return trace;
}

// ---------------------------------------------------------------------------

std::optional<std::pair<int, int>> algorithm2_two_in_two(const Graph& g) {
  int n = g.n();
  std::vector<VertexSet> closed(n);
  for (int v = 0; v < n; ++v) closed[v] = g.closed_neighborhood(v);
  for (int c1 = 0; c1 < n; ++c1)
    for (int c2 = c1; c2 < n; ++c2) {
      VertexSet guarded = closed[c1] | closed[c2];
      int total = n - guarded.count();
      int sum = 0;
      for (int r = 0; r < n; ++r) {
        if (guarded.contains(r)) continue;
        bool flag = false;
        for (int m1 : closed[c1]) {
          for (int m2 : closed[c2])
            if (closed[r].subset_of(closed[m1] | closed[m2])) {
              flag = true;
              break;
            }
          if (flag) break;
        }
        if (flag) ++sum;
      }
      if (sum == total) return std::make_pair(c1, c2);
    }
  return std::nullopt;
}

Steps psd_shadow_capture(const Graph& g, VertexSet s, const ForcingRecord& record) {
  if (record.rule != ForcingRule::psd)
    throw std::invalid_argument("shadow strategy needs a psd record");
  if (record.initial != s)
    throw std::invalid_argument("record does not start from the given set");
  validate_forcing_record(g, record);

  Steps worst = Steps::of(0);
  for (const VertexSet& comp : components_avoiding(g, s)) {
    VertexSet occupied = s;
    VertexSet alive = comp;
    Steps caught = Steps::inf();
    for (std::size_t t = 0; t < record.steps.size() && !alive.is_empty(); ++t) {
      for (const Force& f : record.steps[t]) {
        if (!comp.contains(f.to)) continue;  // cops ignore other components
        if (!occupied.contains(f.from))
          throw std::invalid_argument("shadow strategy found no cop at vertex " +
                                      std::to_string(f.from));
        occupied.remove(f.from);
        occupied.add(f.to);
      }
      alive = alive - occupied;
      if (alive.is_empty()) {
        caught = Steps::of(static_cast<int>(t) + 1);
        break;
      }
      alive = g.closed_neighborhood(alive) - occupied;
      if (alive.is_empty()) caught = Steps::of(static_cast<int>(t) + 1);
    }
    if (comp.is_empty()) caught = Steps::of(0);
    worst = max_steps(worst, caught);
  }
  return worst;
}

}  // namespace ct
