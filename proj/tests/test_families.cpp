#include "doctest.h"

#include "ct/families.hpp"

using namespace ct;

namespace {

void check_simple(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    CHECK_FALSE(g.neighbors(v).contains(v));
    for (int w : g.neighbors(v)) CHECK(g.neighbors(w).contains(v));
  }
}

}  // namespace

TEST_CASE("stellated wheel shape") {
  Graph sw = stellated_wheel(10);
  check_simple(sw);
  CHECK(sw.n() == 21);
  CHECK(sw.degree(0) == 10);
  for (int i = 1; i <= 10; ++i) CHECK(sw.degree(i) == 5);
  for (int i = 11; i <= 20; ++i) CHECK(sw.degree(i) == 2);

  CHECK(stellated_wheel(3).n() == 7);
  CHECK(stellated_wheel(3).degree(0) == 3);
  int deg2 = 0;
  for (int v = 0; v < 9; ++v)
    if (stellated_wheel(4).degree(v) == 2) ++deg2;
  CHECK(deg2 == 4);
  CHECK_THROWS_AS(stellated_wheel(2), std::invalid_argument);
}

TEST_CASE("full binary tree shape") {
  CHECK(full_binary_tree(1).n() == 3);
  Graph t2 = full_binary_tree(2);
  CHECK(t2.n() == 7);
  int leaves = 0;
  for (int v = 0; v < 7; ++v)
    if (t2.degree(v) == 1) ++leaves;
  CHECK(leaves == 4);
  Graph t3 = full_binary_tree(3);
  CHECK(t3.n() == 15);
  CHECK(t3.degree(0) == 2);
  CHECK(DistanceTable(t3).eccentricity(0) == Steps::of(3));
  CHECK(t3.is_tree());
  CHECK_THROWS_AS(full_binary_tree(0), std::invalid_argument);
}

TEST_CASE("grid and hypercube shapes") {
  Graph g = grid(3, 4);
  check_simple(g);
  CHECK(g.n() == 12);
  CHECK(g.edge_count() == 3 * 3 + 2 * 4);
  Graph q4 = hypercube(4);
  CHECK(q4.n() == 16);
  for (int v = 0; v < 16; ++v) CHECK(q4.degree(v) == 4);
}

TEST_CASE("projective incidence graphs") {
  Graph heawood = projective_incidence(2);
  check_simple(heawood);
  CHECK(heawood.n() == 14);
  for (int v = 0; v < 14; ++v) CHECK(heawood.degree(v) == 3);
  CHECK(girth(heawood) == Steps::of(6));
  // bipartite: points only touch lines
  for (int p = 0; p < 7; ++p)
    for (int p2 = p + 1; p2 < 7; ++p2) CHECK_FALSE(heawood.adjacent(p, p2));

  Graph ig3 = projective_incidence(3);
  CHECK(ig3.n() == 26);
  for (int v = 0; v < 26; ++v) CHECK(ig3.degree(v) == 4);
  CHECK_THROWS_AS(projective_incidence(4), std::invalid_argument);
  CHECK_THROWS_AS(projective_incidence(1), std::invalid_argument);
}

TEST_CASE("random trees and unicyclic graphs are reproducible") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph t = random_tree(20, seed);
    CHECK(t.is_tree());
    Graph again = random_tree(20, seed);
    CHECK(encode_graph6(t) == encode_graph6(again));

    Graph u = random_unicyclic(15, seed);
    CHECK(u.is_connected());
    CHECK(u.edge_count() == 15);
    CHECK(shortest_cycle(u).size() >= 3);
  }
  CHECK(random_tree(1, 0).n() == 1);
  CHECK(random_tree(2, 0).edge_count() == 1);
}

TEST_CASE("vertex and clique sums") {
  Graph p7 = vertex_sum(path(4), 3, path(4), 0);
  CHECK(p7.n() == 7);
  CHECK(p7.is_tree());
  DistanceTable dt(p7);
  CHECK(dt.diameter() == Steps::of(6));  // still a path

  Graph gn = meyniel_extremal(20, 2);
  CHECK(gn.n() == 20);

  CHECK_THROWS_AS(clique_sum(path(4), {0, 2}, path(4), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(clique_sum(path(4), {0}, path(4), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(clique_sum(complete(3), {0, 1, 2}, complete(4), {0, 1, 2}),
                  std::invalid_argument);
}

TEST_CASE("family specs parse and build") {
  Graph g = make_family(parse_family_spec({"stellated_wheel", "m=10"}));
  CHECK(g.n() == 21);
  CHECK(make_family(parse_family_spec({"path n=10"})).n() == 10);
  CHECK(make_family(parse_family_spec({"grid", "a=3", "b=4"})).n() == 12);
  CHECK(make_family(parse_family_spec({"random_tree", "n=9", "seed=4"})).is_tree());
  CHECK_THROWS_AS(make_family(parse_family_spec({"mystery", "n=4"})), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec({"path", "n10"}), std::invalid_argument);
}

TEST_CASE("max capture family shape") {
  Graph h7 = max_capture_Hn(7);
  check_simple(h7);
  CHECK(h7.n() == 7);
  Graph h10 = max_capture_Hn(10);
  CHECK(h10.n() == 10);
  CHECK(h10.degree(9) == 1);  // pendant path end
  CHECK_THROWS_AS(max_capture_Hn(6), std::invalid_argument);
}
