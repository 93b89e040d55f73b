#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

// Small building blocks used across generators, fixtures and tests.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

/// Even cycle on r vertices plus the r/2 long chords {i, i + r/2}.
/// r = 4 gives K4.
Graph mobius_ladder(int r);

/// Hamilton cycle on 4k vertices with the two canonical perfect matchings
/// X (odd cycle edges) and Y (even cycle edges), plus k disjoint chord
/// pairs, each forming an even switch of the Hamilton cycle with no
/// crossing chord. The transition graph splits: Y is unreachable from X.
struct CrossLadder {
  Graph graph;
  PerfectMatching x;
  PerfectMatching y;
};
CrossLadder cross_ladder(int k);

/// Slow-mixing gadget on 4k+2 vertices: groups U, W (clique), X = {x1,x2}
/// joined to everything, Y (clique), Z, with staircase edges u_i w_j and
/// z_i y_j for i <= j. A cograph with exactly 2*3^k - 1 perfect matchings.
Graph slow_gk(int k);

/// Concentric hexagons u_{i,1..6} for i = 1..k, consecutive rings joined by
/// six radial edges, plus the single spoke (u_{1,1}, u_{1,4}).
Graph spiders_web(int k);

/// The two all-ring perfect matchings M1, M2 of spiders_web(k); they use
/// neither radial edges nor the spoke and are maximally far apart.
std::pair<PerfectMatching, PerfectMatching> web_special_matchings(int k);

/// Two concentric hexagons plus six radial edges (12 vertices, 18 edges,
/// no spoke): the annulus subgraph of the web.
Graph web_annulus();

/// Byte-stable named fixture graphs; throws GraphError on unknown names.
Graph fixture(const std::string& name);
std::vector<std::string> fixture_names();

/// Intersection graph of n unit intervals with uniform-random left
/// endpoints in [0, n/2]; bit-exact per seed.
Graph random_unit_interval(int n, std::uint64_t seed);

}  // namespace matchkit
