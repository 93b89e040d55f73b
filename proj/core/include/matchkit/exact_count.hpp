#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchkit/bigint.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/treewidth.hpp"

namespace matchkit {

/// Bipartite graph with nested neighborhoods: Adj(x_1) subseteq ... subseteq
/// Adj(x_n). Degrees are taken in the chain graph itself.
struct ChainModel {
  std::vector<int> x_order;  // host vertex ids, neighborhoods ascending
  std::vector<int> y_order;
  std::vector<int> x_deg;    // non-decreasing
};

/// A graph whose complement is a chain graph: X and Y are cliques of the
/// host, and deleting their internal edges leaves the chain graph.
struct CochainModel {
  Graph host;
  ChainModel chain;  // chain structure of the complement
};

/// Chain-graph structure of a bipartite graph, if it has one.
std::optional<ChainModel> recognize_chain(const Graph& g);

/// Cochain recognition via the complement; isolated complement vertices go
/// to X, the other components' two-colorings are tried exhaustively.
std::optional<CochainModel> recognize_cochain(const Graph& g);

/// Matching counts M(n, s) of the chain graph, s = 0..n, via the recurrence
/// M(i,s) = M(i-1,s) + (deg(x_i)-s+1) M(i-1,s-1), negative factors clamped
/// to zero.
std::vector<BigInt> chain_profile(const ChainModel& c);

/// Perfect matchings of the complete graph K_q: 0 for odd q, (q-1)!! for
/// even q. (The source recurrence's "(2n)!!" is an erratum: K4 has 3
/// perfect matchings, not 8; the odd double factorial is the value the
/// brute-force oracle confirms.)
BigInt pm_complete(int q);

/// p(G) = sum_s M(n,s) * p(K_{n-s}) * p(K_{m-s}) over the cochain model.
BigInt count_pm_cochain(const CochainModel& m);

struct CountResult {
  BigInt count;
  std::string method;  // cograph | cochain | treewidth | brute
  int width = -1;      // treewidth method only
};

/// Tries cograph, then cochain, then the treewidth DP when the min-fill
/// width is at most width_cap, else brute-force enumeration under budget.
CountResult count_pm_auto(const Graph& g, Budget& budget, int width_cap = 12);
CountResult count_pm_auto(const Graph& g);

}  // namespace matchkit
