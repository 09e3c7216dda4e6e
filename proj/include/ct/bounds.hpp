#ifndef CT_BOUNDS_HPP
#define CT_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ct/pursuit.hpp"
#include "ct/tree_throttle.hpp"

namespace ct {

// One replayed claim: an inequality, formula or constructive guarantee
// evaluated on a concrete instance with exact values on both sides.
struct CheckRow {
  std::string claim;      // machine id, e.g. "cycle-throttling-formula"
  std::string reference;  // which result is being replayed, by name
  std::string instance;
  std::string lhs;
  std::string rhs;
  std::string verdict;    // "pass", "fail" or "skip"
  std::string note;
  double runtime_ms = 0;
};

bool all_pass(const std::vector<CheckRow>& rows);
std::string render_table(const std::vector<CheckRow>& rows);
std::string render_json(const std::vector<CheckRow>& rows);

struct HarnessOptions {
  SolveOptions solve;
  std::uint64_t seed = 0;
  int psd_sets_per_graph = 5;
  // above this many game states the capture/propagation comparison is
  // certified through the shadow strategy instead of the exact game
  std::uint64_t exact_capture_cap = 400'000;
};

// Every applicable inequality between the game, forcing, domination, girth,
// degree and burning parameters of one graph.
std::vector<CheckRow> verify_inequality_suite(const Graph& g, const std::string& name,
                                              const HarnessOptions& opts = {});

// Closed-form family results: paths, cycles, binary trees, stellated wheels,
// grids, hypercubes, the projective incidence graph, the maximum-capture
// family and the composite extremal family.
std::vector<CheckRow> verify_formula_suite(const HarnessOptions& opts = {});

// Sandwich bounds for clique sums on seeded random instances plus the two
// tightness gadgets.
std::vector<CheckRow> verify_clique_sum_suite(int instances, const HarnessOptions& opts = {});

// Tree-specific guarantees over seeded random trees: equality of game and
// forcing throttling, the burning bound, leaf-free optimal witnesses,
// subtree monotonicity and the radius sandwich.
std::vector<CheckRow> verify_tree_suite(int trees, int subtree_pairs,
                                        const HarnessOptions& opts = {});

// Constructive sqrt bounds: the tree forcing-set builder on random trees and
// the composite unicyclic strategy.
std::vector<CheckRow> verify_sqrt_construction_suite(int trees, int unicyclic,
                                                     const HarnessOptions& opts = {});

// Full default corpus: all families at desk scale plus seeded random
// connected graphs, run through the inequality suite.
std::vector<CheckRow> verify_default_corpus(int random_graphs, const HarnessOptions& opts = {});

// Constructive projection of the shortest-cycle domination rule: some cycle
// vertex x is at most as far from every cycle vertex as v is. The cycle must
// be a shortest cycle. Throws if the constructed vertex fails the property.
int girth_projection(const Graph& g, const std::vector<int>& cycle, int v);

// Seeded corpus helpers (random spanning tree plus extra edges, so the
// connected variant never rejects).
Graph random_connected_graph(int n, std::uint64_t seed);
Graph random_graph(int n, std::uint64_t seed);  // may be disconnected

// All graphs on n vertices up to isomorphism, by canonical adjacency mask.
std::vector<Graph> all_graphs_up_to_iso(int n);

}  // namespace ct

#endif
