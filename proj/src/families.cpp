#include "ct/families.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ct {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) {
  require(n >= 0, "empty graph needs n >= 0");
  return Graph(n);
}

Graph wheel(int m) {
  require(m >= 3, "wheel needs m >= 3 cycle vertices");
  Graph g(m + 1);
  for (int i = 1; i <= m; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % m + 1);
  }
  return g;
}

Graph stellated_wheel(int m) {
  require(m >= 3, "stellated wheel needs m >= 3");
  Graph g(2 * m + 1);
  for (int i = 1; i <= m; ++i) {
    g.add_edge(0, i);
    g.add_edge(i, i % m + 1);
    g.add_edge(m + i, i);
    g.add_edge(m + i, i % m + 1);
  }
  return g;
}

Graph full_binary_tree(int h) {
  require(h >= 1, "full binary tree needs height >= 1");
  int n = (1 << (h + 1)) - 1;
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, (i - 1) / 2);
  return g;
}

Graph grid(int a, int b) {
  require(a >= 1 && b >= 1, "grid needs a, b >= 1");
  Graph g(a * b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      if (j + 1 < b) g.add_edge(i * b + j, i * b + j + 1);
      if (i + 1 < a) g.add_edge(i * b + j, (i + 1) * b + j);
    }
  return g;
}

Graph hypercube(int m) {
  require(m >= 1 && m <= 6, "hypercube needs 1 <= m <= 6");
  int n = 1 << m;
  Graph g(n);
  for (int x = 0; x < n; ++x)
    for (int d = 0; d < m; ++d)
      if (!(x & (1 << d))) g.add_edge(x, x | (1 << d));
  return g;
}

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Normalized nonzero triples over GF(q): first nonzero coordinate is 1.
std::vector<std::array<int, 3>> normalized_triples(int q) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) out.push_back({1, a, b});
  for (int a = 0; a < q; ++a) out.push_back({0, 1, a});
  out.push_back({0, 0, 1});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Graph projective_incidence(int q) {
  require(is_prime(q), "projective plane order must be prime, got " + std::to_string(q));
  auto triples = normalized_triples(q);
  int count = static_cast<int>(triples.size());  // q^2 + q + 1
  Graph g(2 * count);
  for (int p = 0; p < count; ++p)
    for (int l = 0; l < count; ++l) {
      long dot = 0;
      for (int c = 0; c < 3; ++c) dot += static_cast<long>(triples[p][c]) * triples[l][c];
      if (dot % q == 0) g.add_edge(p, count + l);
    }
  return g;
}

// Adjacency frozen from an exhaustive sweep of all 7-vertex graphs: exactly
// one isomorphism class is cop-win with one-cop capture time 3, has a
// dominating pair, and keeps capture time n-4 under pendant-path growth.
// Labeled so that {0, 6} dominates and the path attaches at 6.
Graph h7_fixture() {
  Graph g(7);
  const int edges[][2] = {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4},
                          {1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {4, 5}};
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int h7_path_attachment() { return 6; }

Graph max_capture_Hn(int n) {
  require(n >= 7, "max-capture family starts at n = 7");
  Graph g = h7_fixture();
  if (n == 7) return g;
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  out.add_edge(h7_path_attachment(), 7);
  for (int v = 7; v + 1 < n; ++v) out.add_edge(v, v + 1);
  return out;
}

Graph meyniel_extremal(int n, int q) {
  Graph ig = projective_incidence(q);
  require(n >= ig.n(), "order must be at least the incidence graph order " +
                           std::to_string(ig.n()));
  if (n == ig.n()) return ig;
  return vertex_sum(ig, 0, path(n - ig.n() + 1), 0);
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = pick(rng);
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  // smallest-leaf decoding
  std::vector<bool> used(n, false);
  for (int x : pruefer) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    g.add_edge(leaf, x);
    used[leaf] = true;
    --degree[leaf];
    --degree[x];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1 && !used[v]) (a < 0 ? a : b) = v;
  g.add_edge(a, b);
  return g;
}

Graph random_unicyclic(int n, std::uint64_t seed) {
  require(n >= 3, "unicyclic graph needs n >= 3");
  Graph t = random_tree(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::pair<int, int>> non_edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!t.adjacent(u, v)) non_edges.emplace_back(u, v);
  auto [u, v] = non_edges[std::uniform_int_distribution<std::size_t>(0, non_edges.size() - 1)(rng)];
  t.add_edge(u, v);
  return t;
}

Graph clique_sum(const Graph& g1, const std::vector<int>& clique1, const Graph& g2,
                 const std::vector<int>& clique2) {
  std::size_t m = clique1.size();
  require(m >= 1, "clique sum needs a nonempty shared clique");
  require(clique2.size() == m, "shared cliques must have equal size");
  require(g1.n() > static_cast<int>(m) && g2.n() > static_cast<int>(m),
          "each summand must be larger than the shared clique");
  auto check_clique = [&](const Graph& g, const std::vector<int>& c) {
    VertexSet seen;
    for (int v : c) {
      g.check_vertex(v);
      require(!seen.contains(v), "repeated vertex in clique specification");
      seen.add(v);
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        require(g.adjacent(c[i], c[j]), "identified vertices do not induce a clique");
  };
  check_clique(g1, clique1);
  check_clique(g2, clique2);

  int n = g1.n() + g2.n() - static_cast<int>(m);
  Graph out(n);
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  std::vector<int> map2(g2.n(), -1);
  for (std::size_t i = 0; i < m; ++i) map2[clique2[i]] = clique1[i];
  int next = g1.n();
  for (int v = 0; v < g2.n(); ++v)
    if (map2[v] < 0) map2[v] = next++;
  for (auto [u, v] : g2.edges())
    if (!(map2[u] < g1.n() && map2[v] < g1.n() && out.adjacent(map2[u], map2[v])))
      out.add_edge(map2[u], map2[v]);
  return out;
}

Graph vertex_sum(const Graph& g1, int v1, const Graph& g2, int v2) {
  return clique_sum(g1, {v1}, g2, {v2});
}

std::string FamilySpec::str() const {
  std::string s = name;
  for (const auto& [k, v] : params) s += " " + k + "=" + std::to_string(v);
  return s;
}

FamilySpec parse_family_spec(const std::vector<std::string>& tokens) {
  std::vector<std::string> words;
  for (const auto& t : tokens) {
    std::istringstream iss(t);
    std::string w;
    while (iss >> w) words.push_back(w);
  }
  if (words.empty()) throw std::invalid_argument("empty family specification");
  FamilySpec spec;
  spec.name = words[0];
  for (std::size_t i = 1; i < words.size(); ++i) {
    auto eq = words[i].find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("family parameter must look like key=value: " + words[i]);
    spec.params[words[i].substr(0, eq)] = std::stol(words[i].substr(eq + 1));
  }
  return spec;
}

Graph make_family(const FamilySpec& spec) {
  auto get = [&](const std::string& key) -> long {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
      throw std::invalid_argument("family " + spec.name + " needs parameter " + key);
    return it->second;
  };
  auto get_or = [&](const std::string& key, long dflt) -> long {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? dflt : it->second;
  };
  const std::string& f = spec.name;
  if (f == "path") return path(static_cast<int>(get("n")));
  if (f == "cycle") return cycle(static_cast<int>(get("n")));
  if (f == "complete") return complete(static_cast<int>(get("n")));
  if (f == "empty") return empty_graph(static_cast<int>(get("n")));
  if (f == "wheel") return wheel(static_cast<int>(get("m")));
  if (f == "stellated_wheel") return stellated_wheel(static_cast<int>(get("m")));
  if (f == "full_binary_tree") return full_binary_tree(static_cast<int>(get("h")));
  if (f == "max_capture_Hn") return max_capture_Hn(static_cast<int>(get("n")));
  if (f == "grid") return grid(static_cast<int>(get("a")), static_cast<int>(get("b")));
  if (f == "hypercube") return hypercube(static_cast<int>(get("m")));
  if (f == "projective_incidence") return projective_incidence(static_cast<int>(get("q")));
  if (f == "meyniel_extremal")
    return meyniel_extremal(static_cast<int>(get("n")), static_cast<int>(get_or("q", 2)));
  if (f == "random_tree")
    return random_tree(static_cast<int>(get("n")), static_cast<std::uint64_t>(get_or("seed", 0)));
  if (f == "random_unicyclic")
    return random_unicyclic(static_cast<int>(get("n")),
                            static_cast<std::uint64_t>(get_or("seed", 0)));
  throw std::invalid_argument("unknown family: " + f);
}

}  // namespace ct
