#ifndef CT_FAMILIES_HPP
#define CT_FAMILIES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ct/graph.hpp"

namespace ct {

// Deterministic generators for the named graph families plus clique/vertex
// sum constructors and seeded random trees/unicyclic graphs.
//
// Vertex numbering conventions:
//   path(n):            0 - 1 - ... - n-1
//   cycle(n):           0 - 1 - ... - n-1 - 0
//   wheel(m):           center 0, cycle vertices 1..m
//   stellated_wheel(m): center 0, cycle 1..m, stellation vertex m+i adjacent
//                       to cycle vertices i and (i mod m)+1, for i = 1..m
//   full_binary_tree(h): heap order, children of i are 2i+1 and 2i+2
//   grid(a, b):         row-major, (i, j) -> i*b + j, a rows of b columns
//   hypercube(m):       vertices are bit patterns, edges at Hamming distance 1
//   projective_incidence(q): points 0..q^2+q, lines q^2+q+1..2(q^2+q)+1,
//                       both enumerated in lex order of normalized GF(q)^3
//                       triples; point p is adjacent to line l iff p.l = 0
//   max_capture_Hn(n):  gadget vertices 0..6 (see h7_fixture), path vertices
//                       7..n-1 appended to the designated attachment vertex
//   meyniel_extremal(n, q): incidence graph first, path appended at vertex 0

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty_graph(int n);
Graph wheel(int m);              // order m+1, m >= 3
Graph stellated_wheel(int m);    // order 2m+1, m >= 3
Graph full_binary_tree(int h);   // order 2^(h+1)-1, h >= 1
Graph grid(int a, int b);        // Cartesian product of two paths
Graph hypercube(int m);          // order 2^m
Graph projective_incidence(int q);  // q prime; order 2(q^2+q+1)

// The 7-vertex cop-win gadget with one-cop capture time 3, stored as an
// explicit fixture, plus the vertex where longer variants attach their path.
Graph h7_fixture();
int h7_path_attachment();

// Cop-win graphs of order n >= 7 with one-cop capture time n-4: the gadget
// with a pendant path of n-7 vertices at the attachment vertex.
Graph max_capture_Hn(int n);

// Incidence graph of order q plus a pendant path bringing the order up to n.
Graph meyniel_extremal(int n, int q = 2);

Graph random_tree(int n, std::uint64_t seed);        // Pruefer construction
Graph random_unicyclic(int n, std::uint64_t seed);   // random tree + one edge

// Glue g1 and g2 along equal-size induced cliques; clique1[i] is identified
// with clique2[i]. g1 keeps its labels, remaining g2 vertices follow.
Graph clique_sum(const Graph& g1, const std::vector<int>& clique1, const Graph& g2,
                 const std::vector<int>& clique2);
Graph vertex_sum(const Graph& g1, int v1, const Graph& g2, int v2);

struct FamilySpec {
  std::string name;
  std::map<std::string, long> params;
  std::string str() const;
};

// Accepts tokens like {"stellated_wheel", "m=10"} or a single spaced string.
FamilySpec parse_family_spec(const std::vector<std::string>& tokens);
Graph make_family(const FamilySpec& spec);

}  // namespace ct

#endif
