#include "ct/graph.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>
#include <vector>

namespace ct {

namespace {

int threads_setting = 1;

}  // namespace

int global_threads() { return threads_setting; }
void set_global_threads(int t) { threads_setting = std::max(1, t); }

void parallel_chunks(std::size_t total, const std::function<void(std::size_t, std::size_t)>& fn) {
  int workers = std::min<std::size_t>(threads_setting, total);
  if (workers <= 1 || total == 0) {
    fn(0, total);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  return component_of(0, vertices()) == vertices();
}

VertexSet Graph::component_of(int start, VertexSet within) const {
  if (!within.contains(start)) return VertexSet::empty();
  VertexSet comp = VertexSet::single(start);
  VertexSet frontier = comp;
  while (!frontier.is_empty()) {
    VertexSet next;
    for (int v : frontier) next |= adj_[v];
    next &= within;
    next = next - comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

DistanceTable::DistanceTable(const Graph& g) : n_(g.n()) {
  d_.assign(static_cast<std::size_t>(n_) * n_, Steps::inf());
  for (int s = 0; s < n_; ++s) {
    auto row = d_.begin() + static_cast<std::size_t>(s) * n_;
    row[s] = Steps::of(0);
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    int depth = 0;
    while (!frontier.is_empty()) {
      ++depth;
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = next - seen;
      for (int v : next) row[v] = Steps::of(depth);
      seen |= next;
      frontier = next;
    }
  }
}

Steps DistanceTable::eccentricity(int v) const {
  Steps e = Steps::of(0);
  for (int u = 0; u < n_; ++u) e = max_steps(e, dist(v, u));
  return e;
}

Steps DistanceTable::radius() const {
  Steps r = Steps::inf();
  for (int v = 0; v < n_; ++v) r = min_steps(r, eccentricity(v));
  return r;
}

Steps DistanceTable::diameter() const {
  Steps d = Steps::of(0);
  for (int v = 0; v < n_; ++v) d = max_steps(d, eccentricity(v));
  return d;
}

std::vector<int> DistanceTable::centers() const {
  Steps r = radius();
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (eccentricity(v) == r) out.push_back(v);
  return out;
}

Steps DistanceTable::dist_to_set(int v, VertexSet s) const {
  Steps best = Steps::inf();
  for (int u : s) best = min_steps(best, dist(v, u));
  return best;
}

Steps DistanceTable::max_dist_to_set(VertexSet s) const {
  Steps worst = Steps::of(0);
  for (int v = 0; v < n_; ++v) worst = max_steps(worst, dist_to_set(v, s));
  return worst;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr char kG6Base = 63;

void g6_check_byte(char c, std::size_t offset) {
  if (c < 63 || c > 126) {
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "0x" + std::to_string(static_cast<unsigned char>(c));
    throw ParseError("invalid graph6 byte '" + shown + "'", offset);
  }
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw ParseError("empty graph6 input", 0);

  std::size_t pos = 0;
  long long n;
  if (s[0] == '~') {
    if (s.size() < 4) throw ParseError("truncated graph6 order field", s.size());
    if (s[1] == '~') throw ParseError("graph6 order beyond supported range", 1);
    for (std::size_t i = 1; i <= 3; ++i) g6_check_byte(s[i], i);
    n = (static_cast<long long>(s[1] - kG6Base) << 12) |
        (static_cast<long long>(s[2] - kG6Base) << 6) | (s[3] - kG6Base);
    pos = 4;
  } else {
    g6_check_byte(s[0], 0);
    n = s[0] - kG6Base;
    pos = 1;
  }
  if (n > kMaxVertices)
    throw ParseError("graph on " + std::to_string(n) + " vertices exceeds bitset width", 0);

  Graph g(static_cast<int>(n));
  long long nbits = n * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) < nbytes)
    throw ParseError("graph6 body shorter than " + std::to_string(nbytes) + " bytes", s.size());
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) > nbytes)
    throw ParseError("trailing garbage after graph6 body", pos + nbytes);

  long long bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      g6_check_byte(s[at], at);
      int value = s[at] - kG6Base;
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(row, col);
    }
  }
  // padding bits must be zero
  if (nbits % 6 != 0 && nbytes > 0) {
    char last = s[pos + nbytes - 1];
    int pad = static_cast<int>(6 - nbits % 6);
    if ((last - kG6Base) & ((1 << pad) - 1))
      throw ParseError("nonzero padding bits in final graph6 byte", pos + nbytes - 1);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  std::string out;
  int n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Base));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Base));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Base));
    out.push_back(static_cast<char>((n & 63) + kG6Base));
  }
  int acc = 0, nb = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + kG6Base));
        acc = 0;
        nb = 0;
      }
    }
  }
  if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + kG6Base));
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  int max_v = -1;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t eol = text.find('\n', line_start);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(line_start, eol - line_start);
    std::size_t offset = line_start;
    line_start = eol + 1;
    if (eol == text.size() && line.empty() && offset > text.size()) break;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    long a, b;
    char extra;
    int fields = std::sscanf(line.c_str(), " %ld %ld %c", &a, &b, &extra);
    if (fields <= 0) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw ParseError("unreadable edge-list line", offset);
      if (eol == text.size()) break;
      continue;
    }
    if (fields != 2) throw ParseError("edge-list line is not a 'u v' pair", offset);
    if (a < 0 || b < 0) throw ParseError("negative vertex index", offset);
    if (a >= kMaxVertices || b >= kMaxVertices)
      throw ParseError("vertex index beyond bitset width", offset);
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    max_v = std::max(max_v, static_cast<int>(std::max(a, b)));
    if (eol == text.size()) break;
  }
  Graph g(max_v + 1);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// girth and shortest cycle

Steps girth(const Graph& g) {
  std::vector<int> c = shortest_cycle(g);
  return c.empty() ? Steps::inf() : Steps::of(static_cast<int>(c.size()));
}

std::vector<int> shortest_cycle(const Graph& g) {
  int n = g.n();
  int best = n + 1;
  std::vector<int> best_cycle;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::vector<int> queue{root};
    dist[root] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      if (2 * dist[u] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u] && parent[w] != u) {
          // non-tree edge closing a cycle through the root's BFS tree
          int len = dist[u] + dist[w] + 1;
          if (len < best) {
            std::vector<int> pu, pw;  // u..root and w..root along tree parents
            for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
            for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
            // drop the common tail so both end at the divergence vertex
            while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
              pu.pop_back();
              pw.pop_back();
            }
            std::vector<int> cyc(pu.rbegin(), pu.rend());  // meet .. u
            for (std::size_t i = 0; i + 1 < pw.size(); ++i) cyc.push_back(pw[i]);  // w .. pre-meet
            // reject re-intersecting walks; girth-realizing ones are simple
            VertexSet seen;
            bool simple = true;
            for (int x : cyc) {
              if (seen.contains(x)) simple = false;
              seen.add(x);
            }
            if (simple && static_cast<int>(cyc.size()) >= 3 &&
                static_cast<int>(cyc.size()) < best) {
              best = static_cast<int>(cyc.size());
              best_cycle = cyc;
            }
          }
        }
      }
    }
  }
  return best_cycle;
}

// ---------------------------------------------------------------------------
// domination

namespace {

void dominate_rec(const Graph& g, VertexSet chosen, VertexSet covered, int& best,
                  VertexSet& best_set) {
  if (covered == g.vertices()) {
    if (chosen.count() < best) {
      best = chosen.count();
      best_set = chosen;
    }
    return;
  }
  if (chosen.count() + 1 >= best) return;
  int pivot = (g.vertices() - covered).lowest();
  for (int cand : g.closed_neighborhood(pivot)) {
    VertexSet next = chosen;
    next.add(cand);
    dominate_rec(g, next, covered | g.closed_neighborhood(cand), best, best_set);
  }
}

}  // namespace

DominationResult domination_number(const Graph& g) {
  if (g.n() == 0) return {0, VertexSet::empty()};
  int best = g.n() + 1;
  VertexSet best_set;
  dominate_rec(g, VertexSet::empty(), VertexSet::empty(), best, best_set);
  return {best, best_set};
}

// ---------------------------------------------------------------------------
// k-radius / k-center

KCenterResult k_center(const Graph& g, int k, Steps stop_at) {
  if (k < 1 || k > g.n())
    throw std::invalid_argument("k must be in [1, n], got " + std::to_string(k));
  DistanceTable dt(g);
  int n = g.n();
  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  Steps best = Steps::inf();
  VertexSet best_set;
  while (true) {
    VertexSet s;
    for (int v : comb) s.add(v);
    Steps worst = Steps::of(0);
    for (int v = 0; v < n && worst < best; ++v) worst = max_steps(worst, dt.dist_to_set(v, s));
    if (worst < best) {
      best = worst;
      best_set = s;
      if (best <= stop_at && stop_at.is_finite()) break;
      if (best == Steps::of(0)) break;
    }
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return {best, best_set};
}

Steps k_radius(const Graph& g, int k) { return k_center(g, k).radius; }

// ---------------------------------------------------------------------------
// cop-win test by corner elimination

CopWinResult is_cop_win(const Graph& g) {
  CopWinResult res;
  int n = g.n();
  if (n == 0) {
    res.cop_win = true;
    return res;
  }
  VertexSet alive = g.vertices();
  while (alive.count() > 1) {
    int corner = -1;
    for (int u : alive) {
      VertexSet nu = (g.closed_neighborhood(u)) & alive;
      for (int v : alive) {
        if (v == u) continue;
        if (nu.subset_of(g.closed_neighborhood(v) & alive)) {
          corner = u;
          break;
        }
      }
      if (corner >= 0) break;
    }
    if (corner < 0) {
      res.cop_win = false;
      return res;
    }
    res.order.push_back(corner);
    alive.remove(corner);
  }
  res.order.push_back(alive.lowest());
  res.cop_win = true;
  return res;
}

std::vector<VertexSet> components_avoiding(const Graph& g, VertexSet blue) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - blue;
  while (!rest.is_empty()) {
    VertexSet comp = g.component_of(rest.lowest(), rest);
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

}  // namespace ct
