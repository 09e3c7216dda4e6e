#include "doctest.h"

#include <random>

#include "ct/bounds.hpp"
#include "ct/families.hpp"
#include "ct/pursuit.hpp"
#include "ct/tree_throttle.hpp"
#include "fixtures.hpp"

using namespace ct;

TEST_CASE("capture time from a fixed placement") {
  Pursuit p5(path(5));
  CHECK(p5.capture_time_of_set({2}) == Steps::of(2));

  Pursuit c4(cycle(4));
  CHECK(c4.capture_time_of_set({0, 1}) == Steps::of(1));
  CHECK(c4.capture_time_of_set({0}).is_inf());
  CHECK(c4.capture_time_of_set({0, 0}).is_inf());  // stacked cops gain nothing

  // placement on every vertex captures at placement
  Pursuit p3(path(3));
  CHECK(p3.capture_time_of_set({0, 1, 2}) == Steps::of(0));
}

TEST_CASE("game values") {
  Graph g = path(4);
  GameTable tab(g, 1);
  CHECK(tab.value({1}, 1) == Steps::of(0));
  CHECK(tab.value({0}, 3) == Steps::of(3));
  CHECK(tab.value({1}, 3) == Steps::of(2));

  // rank and config enumeration agree
  for (int k = 1; k <= 3; ++k) {
    GameTable t(cycle(5), k);
    for (std::uint64_t i = 0; i < t.config_count(); ++i)
      CHECK(t.rank(t.config_at(i)) == i);
  }
}

TEST_CASE("value is zero exactly at co-location and cops never hurt") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 10; ++it) {
    Graph g = random_connected_graph(6, rng());
    GameTable one(g, 1), two(g, 2);
    for (int c = 0; c < 6; ++c)
      for (int r = 0; r < 6; ++r) {
        CHECK((one.value({c}, r) == Steps::of(0)) == (c == r));
        for (int c2 = 0; c2 < 6; ++c2) {
          CopConfig both = make_cop_config({c, c2});
          CHECK(two.value(both, r) <= one.value({c}, r));
        }
      }
  }
}

TEST_CASE("k-capture times") {
  Pursuit grid33(grid(3, 3));
  CHECK(grid33.k_capture_time(2).rounds == Steps::of(2));

  Graph star = parse_graph6("D?{");
  Pursuit s(star);
  CHECK(s.k_capture_time(1).rounds == Steps::of(1));  // dominating hub

  Pursuit h7(max_capture_Hn(7));
  CHECK(h7.k_capture_time(1).rounds == Steps::of(3));

  // monotone in the cop count
  std::mt19937_64 rng(3);
  for (int it = 0; it < 8; ++it) {
    Graph g = random_connected_graph(2 + static_cast<int>(rng() % 7), rng());
    Pursuit solver(g);
    Steps prev = solver.k_capture_time(1).rounds;
    for (int k = 2; k <= 3; ++k) {
      Steps cur = solver.k_capture_time(k).rounds;
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("cop numbers") {
  CHECK(Pursuit(random_tree(11, 4)).cop_number() == 1);
  CHECK(Pursuit(projective_incidence(2)).cop_number() == 3);
  CHECK(Pursuit(hypercube(3)).cop_number() == 2);
  CHECK(Pursuit(cycle(4)).cop_number() == 2);
  CHECK(Pursuit(empty_graph(3)).cop_number() == 3);  // robber picks a free component
  CHECK(Pursuit(fixtures::petersen()).cop_number() == 3);

  // dismantlability matches one-cop capture on small connected graphs
  std::mt19937_64 rng(9);
  for (int it = 0; it < 40; ++it) {
    Graph g = random_connected_graph(2 + static_cast<int>(rng() % 7), rng());
    CHECK(is_cop_win(g).cop_win == (Pursuit(g).cop_number() == 1));
  }
}

TEST_CASE("cop throttling") {
  CHECK(Pursuit(path(10)).cop_throttle().value == Steps::of(4));
  CHECK(Pursuit(stellated_wheel(10)).cop_throttle().value == Steps::of(3));
  CHECK(Pursuit(fixtures::fig2_tree()).cop_throttle().value == Steps::of(5));
  CHECK(Pursuit(complete(5)).cop_throttle().value == Steps::of(2));
  CHECK(Pursuit(path(1)).cop_throttle().value == Steps::of(1));
  CHECK(Pursuit(empty_graph(2)).cop_throttle().value == Steps::of(2));
  CHECK(Pursuit(fixtures::petersen()).cop_throttle().value == Steps::of(4));

  // witness consistency: the reported placement achieves the value
  std::mt19937_64 rng(31);
  for (int it = 0; it < 12; ++it) {
    Graph g = random_connected_graph(2 + static_cast<int>(rng() % 8), rng());
    Pursuit solver(g);
    auto res = solver.cop_throttle();
    Steps achieved = solver.capture_time_of_set(res.witness);
    CHECK(Steps::of(static_cast<int>(res.witness.size())) + achieved == res.value);
    CHECK(res.value <= Steps::of(domination_number(g).gamma + 1));
    for (const auto& entry : res.per_k)
      if (entry.computed)
        CHECK(res.value <= Steps::of(entry.k) + entry.capture);
  }
}

TEST_CASE("bounded capture queries") {
  Pursuit p7(path(7));
  CHECK(p7.can_catch_within(1, 3));
  Pursuit p9(path(9));
  CHECK_FALSE(p9.can_catch_within(1, 3));
  Pursuit h7(max_capture_Hn(7));
  CHECK_FALSE(h7.can_catch_within(1, 2));
  CHECK(h7.can_catch_within(1, 3));
}

TEST_CASE("two cops in two rounds scan") {
  auto c7 = algorithm2_two_in_two(cycle(7));
  REQUIRE(c7.has_value());
  CHECK_FALSE(algorithm2_two_in_two(cycle(11)).has_value());
  CHECK(algorithm2_two_in_two(complete(4)).has_value());
  CHECK(algorithm2_two_in_two(parse_graph6("@")).has_value());  // stacked pair on K_1

  // agrees with the exact bounded query on small graphs
  std::mt19937_64 rng(17);
  for (int it = 0; it < 30; ++it) {
    Graph g = random_graph(2 + static_cast<int>(rng() % 6), rng());
    CHECK(algorithm2_two_in_two(g).has_value() == Pursuit(g).can_catch_within(2, 2));
  }
}

TEST_CASE("multiset placements never beat plain sets") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 15; ++it) {
    Graph g = random_connected_graph(2 + static_cast<int>(rng() % 6), rng());
    for (int k = 1; k <= 3; ++k) {
      SolveOptions full, sets;
      sets.sets_only = true;
      Pursuit a(g, full), b(g, sets);
      if (k > g.n()) continue;
      CHECK(a.k_capture_time(k).rounds == b.k_capture_time(k).rounds);
    }
  }
}

TEST_CASE("state budget is enforced") {
  SolveOptions tiny;
  tiny.state_budget = 50;
  Pursuit solver(grid(3, 3), tiny);
  CHECK_THROWS_AS(solver.k_capture_time(3), BudgetError);
  try {
    solver.k_capture_time(3);
  } catch (const BudgetError& e) {
    CHECK(e.needed() > e.limit());
  }
}

TEST_CASE("shadow strategy from a forcing record") {
  // path: the worked placement {3, 6} forces in 3 steps and captures in <= 3
  Graph p9 = path(9);
  VertexSet s = VertexSet::of({3, 6});
  auto prop = propagation_time(p9, s, ForcingRule::psd);
  REQUIRE(prop.time == Steps::of(3));
  Steps shadow = psd_shadow_capture(p9, s, prop.record);
  CHECK(shadow <= prop.time);
  CHECK(shadow == Pursuit(p9).capture_time_of_set({3, 6}));  // trees: both equal ecc

  // a tree forced from its center is captured within the radius
  Graph t = random_tree(14, 2);
  DistanceTable dt(t);
  int center = dt.centers().front();
  auto cprop = propagation_time(t, VertexSet::single(center), ForcingRule::psd);
  CHECK(psd_shadow_capture(t, VertexSet::single(center), cprop.record) <= dt.radius());

  // both cycle halves are swept in one step
  Graph c6 = cycle(6);
  auto c6prop = propagation_time(c6, VertexSet::of({0, 3}), ForcingRule::psd);
  Steps c6shadow = psd_shadow_capture(c6, VertexSet::of({0, 3}), c6prop.record);
  CHECK(c6shadow <= Steps::of(2));
  CHECK(c6shadow <= c6prop.time);

  // random graphs: the strategy never exceeds the propagation time
  std::mt19937_64 rng(55);
  int checked = 0;
  while (checked < 25) {
    Graph g = random_connected_graph(3 + static_cast<int>(rng() % 7), rng());
    VertexSet set;
    int size = 1 + static_cast<int>(rng() % 3);
    while (set.count() < size)
      set.add(static_cast<int>(rng() % static_cast<std::uint64_t>(g.n())));
    auto pr = propagation_time(g, set, ForcingRule::psd);
    if (pr.time.is_inf()) continue;
    ++checked;
    Steps rounds = psd_shadow_capture(g, set, pr.record);
    CHECK(rounds <= pr.time);
    CHECK(Pursuit(g).capture_time_of_set(make_cop_config(set.to_vector())) <= rounds);
  }

  // invalid records are rejected
  ForcingRecord bogus = prop.record;
  bogus.steps[0][0].from = 0;
  CHECK_THROWS_AS(psd_shadow_capture(p9, s, bogus), std::invalid_argument);
}

TEST_CASE("optimal play replay") {
  Graph g = fixtures::fig3_unicyclic();
  Pursuit solver(g);
  auto trace = solver.replay({7, 8});
  REQUIRE(trace.rounds == Steps::of(2));
  REQUIRE_FALSE(trace.play.empty());
  CHECK(trace.play.back().captured);
  CHECK(static_cast<int>(trace.play.size()) == trace.rounds.value());

  auto evasion = Pursuit(cycle(4)).replay({0});
  CHECK(evasion.rounds.is_inf());
  CHECK(evasion.play.empty());
}
