#ifndef CT_GRAPH_HPP
#define CT_GRAPH_HPP

#include <optional>
#include <string>
#include <vector>

#include "ct/util.hpp"
#include "ct/vertex_set.hpp"

namespace ct {

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Symmetric and irreflexive by construction. Intended to be immutable once
// built; generators and parsers call add_edge during construction only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("vertex count must be in [0, 64], got " + std::to_string(n));
  }

  int n() const { return n_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
    adj_[u].add(v);
    adj_[v].add(u);
  }

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const { return adj_[v] | VertexSet::single(v); }
  VertexSet closed_neighborhood(VertexSet s) const {
    VertexSet out = s;
    for (int v : s) out |= adj_[v];
    return out;
  }

  int degree(int v) const { return adj_[v].count(); }
  int min_degree() const {
    int d = n_ == 0 ? 0 : kMaxVertices + 1;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
  }

  int edge_count() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m += degree(v);
    return m / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  VertexSet vertices() const { return VertexSet::all(n_); }

  bool is_connected() const;
  bool is_tree() const { return n_ > 0 && is_connected() && edge_count() == n_ - 1; }
  bool is_edgeless() const { return edge_count() == 0; }

  // Component of the induced subgraph on `within` that contains `start`.
  VertexSet component_of(int start, VertexSet within) const;

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(n_) + ")");
  }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// All-pairs BFS hop distances; entries across components are infinite.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(const Graph& g);

  int n() const { return n_; }
  Steps dist(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  Steps eccentricity(int v) const;
  Steps radius() const;
  Steps diameter() const;
  std::vector<int> centers() const;  // vertices of minimum eccentricity
  Steps dist_to_set(int v, VertexSet s) const;
  Steps max_dist_to_set(VertexSet s) const;  // max over all vertices

 private:
  int n_ = 0;
  std::vector<Steps> d_;
};

// graph6 wire format, headerless printable ASCII. Long (3-byte) order form
// accepted for n in [63, 64]; anything above the bitset width is rejected.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

// Edge-list text: one "u v" pair per line, 0-indexed; '#' starts a comment.
// Order is max vertex index + 1, overridable with a first line "n <count>".
Graph parse_edge_list(const std::string& text);

// Length of a shortest cycle; infinite for forests.
Steps girth(const Graph& g);

// A shortest cycle as a closed vertex walk (front not repeated at back);
// empty when the graph is acyclic.
std::vector<int> shortest_cycle(const Graph& g);

struct DominationResult {
  int gamma = 0;
  VertexSet witness;
};

// Exact minimum dominating set via branch and bound on uncovered vertices.
DominationResult domination_number(const Graph& g);

// min over size-k subsets S of max_v dist(v, S); infinite when no size-k
// subset reaches every component.
Steps k_radius(const Graph& g, int k);

struct KCenterResult {
  Steps radius;
  VertexSet witness;
};

// Same search but keeps the first (size-then-lex) optimal subset.
// `stop_at` prunes subsets that cannot beat it (result capped at stop_at).
KCenterResult k_center(const Graph& g, int k, Steps stop_at = Steps::inf());

struct CopWinResult {
  bool cop_win = false;
  // Deletion order of corners, ending with the final surviving vertex when
  // cop-win; the partial order up to the stuck point otherwise.
  std::vector<int> order;
};

// Corner elimination: u is a corner if some other vertex v has
// N[u] <= N[v] in the surviving graph. Lowest-index corner is removed first.
CopWinResult is_cop_win(const Graph& g);

// Connected components of the subgraph induced on V minus blue, ordered by
// their lowest vertex.
std::vector<VertexSet> components_avoiding(const Graph& g, VertexSet blue);

}  // namespace ct

#endif
