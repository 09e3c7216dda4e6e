#include "doctest.h"

#include <random>

#include "ct/families.hpp"
#include "ct/graph.hpp"
#include "fixtures.hpp"

using namespace ct;

TEST_CASE("graph6 decodes the documented examples") {
  Graph star = parse_graph6("D?{");
  CHECK(star.n() == 5);
  CHECK(star.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(star.adjacent(v, 4));
  CHECK_FALSE(star.adjacent(0, 1));

  Graph k2 = parse_graph6("A_");
  CHECK(k2.n() == 2);
  CHECK(k2.adjacent(0, 1));

  Graph k1 = parse_graph6("@");
  CHECK(k1.n() == 1);
  CHECK(k1.edge_count() == 0);
}

TEST_CASE("graph6 rejects malformed input with an offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("A_trailing"), ParseError);
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);         // body too short
  CHECK_THROWS_AS(parse_graph6("A\x07"), ParseError);      // non-printable
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);         // nonzero padding
  try {
    parse_graph6("D?");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }
}

TEST_CASE("graph6 round-trips") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    int n = 1 + static_cast<int>(rng() % 14);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    Graph back = parse_graph6(encode_graph6(g));
    REQUIRE(back.n() == n);
    for (int u = 0; u < n; ++u) CHECK(back.neighbors(u) == g.neighbors(u));
    CHECK(encode_graph6(back) == encode_graph6(g));
  }
  // long order form
  Graph big(64);
  big.add_edge(0, 63);
  Graph back = parse_graph6(encode_graph6(big));
  CHECK(back.n() == 64);
  CHECK(back.adjacent(0, 63));
}

TEST_CASE("edge list input") {
  Graph g = parse_edge_list("0 1\n1 2\n# comment\n2 3\n");
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 3);
  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
}

TEST_CASE("distances") {
  DistanceTable p5(path(5));
  CHECK(p5.dist(0, 4) == Steps::of(4));
  CHECK(p5.eccentricity(2) == Steps::of(2));
  CHECK(p5.radius() == Steps::of(2));

  DistanceTable c6(cycle(6));
  CHECK(c6.dist(0, 3) == Steps::of(3));
  CHECK(c6.radius() == Steps::of(3));

  DistanceTable two(empty_graph(2));
  CHECK(two.dist(0, 1).is_inf());
  CHECK(two.radius().is_inf());
}

TEST_CASE("girth") {
  CHECK(girth(cycle(5)) == Steps::of(5));
  CHECK(girth(random_tree(17, 3)).is_inf());
  CHECK(girth(projective_incidence(2)) == Steps::of(6));  // Heawood graph
  CHECK(girth(fixtures::petersen()) == Steps::of(5));
  CHECK(girth(complete(4)) == Steps::of(3));

  auto cyc = shortest_cycle(grid(3, 3));
  REQUIRE(cyc.size() == 4);
  Graph g = grid(3, 3);
  for (std::size_t i = 0; i < cyc.size(); ++i)
    CHECK(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
}

TEST_CASE("domination number") {
  for (int n = 1; n <= 6; ++n) CHECK(domination_number(complete(n)).gamma == 1);
  CHECK(domination_number(stellated_wheel(10)).gamma == 5);
  CHECK(domination_number(path(7)).gamma == 3);

  // witness is dominating, and gamma-1 vertices never dominate (independent
  // subset scan)
  std::mt19937_64 rng(11);
  for (int it = 0; it < 40; ++it) {
    int n = 1 + static_cast<int>(rng() % 11);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    auto res = domination_number(g);
    CHECK(g.closed_neighborhood(res.witness) == g.vertices());
    CHECK(res.witness.count() == res.gamma);
    bool smaller_works = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet s{mask};
      if (s.count() != res.gamma - 1) continue;
      if (g.closed_neighborhood(s) == g.vertices()) smaller_works = true;
    }
    CHECK_FALSE(smaller_works);
  }
}

TEST_CASE("k-radius") {
  Graph fig2 = fixtures::fig2_tree();
  CHECK(k_radius(fig2, 1) == Steps::of(4));
  CHECK(k_radius(fig2, 2) == Steps::of(3));
  CHECK(k_radius(fig2, 3) == Steps::of(2));
  CHECK(k_radius(fig2, 4) == Steps::of(1));

  CHECK(k_radius(path(9), 1) == Steps::of(4));
  CHECK(k_radius(cycle(8), 2) == Steps::of(2));
  CHECK_THROWS_AS(k_radius(path(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(k_radius(path(3), 4), std::invalid_argument);

  // rad_1 equals the radius, rad_k is non-increasing, rad_n = 0
  std::mt19937_64 rng(5);
  for (int it = 0; it < 25; ++it) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    DistanceTable dt(g);
    CHECK(k_radius(g, 1) == dt.radius());
    Steps prev = Steps::inf();
    for (int k = 1; k <= n; ++k) {
      Steps rk = k_radius(g, k);
      CHECK(rk <= prev);
      prev = rk;
    }
    CHECK(k_radius(g, n) == Steps::of(0));
  }
}

TEST_CASE("cop-win recognition") {
  for (int seed = 0; seed < 10; ++seed) {
    auto res = is_cop_win(random_tree(9, seed));
    CHECK(res.cop_win);
    CHECK(res.order.size() == 9);
  }
  CHECK_FALSE(is_cop_win(cycle(4)).cop_win);
  CHECK_FALSE(is_cop_win(fixtures::petersen()).cop_win);
  CHECK(is_cop_win(max_capture_Hn(7)).cop_win);
  CHECK(is_cop_win(complete(5)).cop_win);
  CHECK_FALSE(is_cop_win(empty_graph(2)).cop_win);

  // the returned order satisfies the corner condition at each step
  Graph g = stellated_wheel(4);
  auto res = is_cop_win(g);
  REQUIRE(res.cop_win);
  VertexSet alive = g.vertices();
  for (std::size_t i = 0; i + 1 < res.order.size(); ++i) {
    int u = res.order[i];
    bool corner = false;
    for (int v : alive)
      if (v != u && (g.closed_neighborhood(u) & alive)
                        .subset_of(g.closed_neighborhood(v) & alive))
        corner = true;
    CHECK(corner);
    alive.remove(u);
  }
}

TEST_CASE("components avoiding a blue set") {
  Graph p5 = path(5);
  auto comps = components_avoiding(p5, VertexSet::of({2}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet::of({0, 1}));
  CHECK(comps[1] == VertexSet::of({3, 4}));

  CHECK(components_avoiding(cycle(6), VertexSet::empty()).size() == 1);
  auto halves = components_avoiding(cycle(6), VertexSet::of({0, 3}));
  REQUIRE(halves.size() == 2);
  CHECK(halves[0] == VertexSet::of({1, 2}));
  CHECK(halves[1] == VertexSet::of({4, 5}));
}
