#pragma once

#include <map>
#include <optional>
#include <vector>

#include "matchkit/chain.hpp"
#include "matchkit/graph.hpp"

namespace matchkit {

/// Explicit transition graph of the switch chain: one node per perfect
/// matching of the host graph, edges between matchings one switch apart.
struct TransitionGraph {
  std::vector<PerfectMatching> nodes;        // canonically sorted
  std::map<PerfectMatching, int> index;
  std::vector<std::vector<int>> adjacency;   // sorted neighbor ids
  int host_n = 0;

  int size() const { return static_cast<int>(nodes.size()); }
  int num_edges() const;
  int id_of(const PerfectMatching& m) const;  // throws on unknown matching
};

TransitionGraph build_transition_graph(const Graph& g, Budget& budget);
TransitionGraph build_transition_graph(const Graph& g);

/// A graph is ergodic when its transition graph is connected; vacuously
/// true with at most one perfect matching.
bool is_ergodic(const Graph& g, Budget& budget);
bool is_ergodic(const Graph& g);

/// Conjunction of is_ergodic over all even-size induced subgraphs
/// (odd-size ones have no perfect matchings and are vacuous).
bool is_hereditarily_ergodic_bruteforce(const Graph& g, Budget& budget);
bool is_hereditarily_ergodic_bruteforce(const Graph& g);

/// BFS distance between two nodes; empty when disconnected.
std::optional<int> distance(const TransitionGraph& tg, const PerfectMatching& x,
                            const PerfectMatching& y);

/// Max pairwise distance; empty when disconnected; 0 for a single node;
/// throws on an empty transition graph.
std::optional<int> diameter(const TransitionGraph& tg);

/// Connected components as node-id sets, largest first (ties by least id).
std::vector<std::vector<int>> components(const TransitionGraph& tg);

}  // namespace matchkit
