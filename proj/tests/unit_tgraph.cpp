#include "doctest.h"

#include "graphgen.hpp"
#include "matchkit/classes.hpp"
#include "matchkit/gadgets.hpp"
#include "matchkit/oracle.hpp"
#include "matchkit/transition_graph.hpp"

using namespace matchkit;

TEST_CASE("transition graph construction") {
  auto c4 = build_transition_graph(cycle_graph(4));
  CHECK(c4.size() == 2);
  CHECK(c4.num_edges() == 1);

  auto c6 = build_transition_graph(cycle_graph(6));
  CHECK(c6.size() == 2);
  CHECK(c6.num_edges() == 0);

  auto g2 = build_transition_graph(slow_gk(2));
  CHECK(g2.size() == 17);  // 2*3^2 - 1

  // Adjacency equals switch_neighbors at every node.
  Graph host = mobius_ladder(8);
  auto tg = build_transition_graph(host);
  for (int i = 0; i < tg.size(); ++i) {
    auto nb = switch_neighbors(host, tg.nodes[i]);
    CHECK(nb.size() == tg.adjacency[i].size());
    for (int j : tg.adjacency[i]) CHECK(nb.count(tg.nodes[j]) == 1);
  }
}

TEST_CASE("ergodicity") {
  CHECK(is_ergodic(cycle_graph(5)));               // no matchings, vacuous
  CHECK(is_ergodic(cycle_graph(4)));
  CHECK_FALSE(is_ergodic(cycle_graph(6)));
  CHECK_FALSE(is_ergodic(fixture("fig7_cograph")));
  CHECK(is_ergodic(spiders_web(2)));
}

TEST_CASE("hereditary ergodicity by brute force") {
  CHECK(is_hereditarily_ergodic_bruteforce(cycle_graph(4)));
  CHECK_FALSE(is_hereditarily_ergodic_bruteforce(spiders_web(2)));
  Graph ml = mobius_ladder(8);
  CHECK(is_hereditarily_ergodic_bruteforce(ml) == is_switchable(ml).member);
  CHECK(is_hereditarily_ergodic_bruteforce(ml));
}

TEST_CASE("distances in the transition graph") {
  Graph w1 = spiders_web(1);
  auto tg1 = build_transition_graph(w1);
  auto [m1a, m2a] = web_special_matchings(1);
  CHECK(distance(tg1, m1a, m1a) == 0);
  CHECK(distance(tg1, m1a, m2a) == 2);  // k(3k-1), k=1

  Graph w2 = spiders_web(2);
  auto tg2 = build_transition_graph(w2);
  auto [m1b, m2b] = web_special_matchings(2);
  CHECK(distance(tg2, m1b, m2b) == 10);  // k(3k-1), k=2

  auto c6 = build_transition_graph(cycle_graph(6));
  auto ms = enumerate_perfect_matchings(cycle_graph(6));
  CHECK_FALSE(distance(c6, ms[0], ms[1]).has_value());  // disconnected

  CHECK_THROWS_AS(distance(tg1, PerfectMatching({{0, 2}, {1, 3}, {4, 5}}), m1a),
                  GraphError);
}

TEST_CASE("diameter") {
  auto k4 = build_transition_graph(complete_graph(4));
  CHECK(k4.size() == 3);
  CHECK(k4.num_edges() == 3);     // a triangle
  CHECK(diameter(k4) == 1);       // = n - 3

  CHECK(diameter(build_transition_graph(cycle_graph(4))) == 1);

  // C8 with all odd chords added is K_{4,4}; diameter |C|/2 - 1 = 3.
  auto k44 = build_transition_graph(complete_bipartite(4, 4));
  CHECK(k44.size() == 24);
  CHECK(diameter(k44) == 3);

  CHECK_FALSE(diameter(build_transition_graph(cycle_graph(6))).has_value());
}

TEST_CASE("components") {
  auto c6 = components(build_transition_graph(cycle_graph(6)));
  REQUIRE(c6.size() == 2);
  CHECK(c6[0].size() == 1);
  CHECK(c6[1].size() == 1);

  auto ann = components(build_transition_graph(web_annulus()));
  REQUIRE(ann.size() == 3);
  CHECK(ann[0].size() == 18);
  CHECK(ann[1].size() == 1);
  CHECK(ann[2].size() == 1);

  auto cl = cross_ladder(2);
  auto tg = build_transition_graph(cl.graph);
  auto comps = components(tg);
  REQUIRE(comps.size() == 2);
  const int xid = tg.id_of(cl.x);
  const int yid = tg.id_of(cl.y);
  for (const auto& comp : comps) {
    const bool has_x = std::count(comp.begin(), comp.end(), xid) > 0;
    const bool has_y = std::count(comp.begin(), comp.end(), yid) > 0;
    CHECK_FALSE((has_x && has_y));
    if (has_x) CHECK(comp.size() >= 4);  // 2^k, k=2
  }
}

TEST_CASE("transition graphs over a random corpus stay consistent") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = testsupport::random_graph(8, 0.45, seed * 5 + 2);
    auto tg = build_transition_graph(g);
    CHECK(tg.size() ==
          static_cast<int>(enumerate_perfect_matchings(g).size()));
    for (int i = 0; i < tg.size(); ++i)
      for (int j : tg.adjacency[i]) {
        CHECK(i != j);
        const auto& back = tg.adjacency[j];
        CHECK(std::count(back.begin(), back.end(), i) == 1);
      }
  }
}
