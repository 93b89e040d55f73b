#pragma once

#include <optional>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

/// Exhaustive perfect-matching enumeration by backtracking that always
/// matches the lowest-index uncovered vertex. Output is sorted and
/// duplicate-free; the empty graph yields the single matching {}.
/// This is the oracle every counter and recognizer is validated against.
std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g,
                                                         Budget& budget);
std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g);

/// First perfect matching in the oracle's backtracking order, if any.
std::optional<PerfectMatching> find_perfect_matching(const Graph& g,
                                                     Budget& budget);
std::optional<PerfectMatching> find_perfect_matching(const Graph& g);

/// Number of matchings of each size 0..floor(n/2), by brute force.
std::vector<long long> count_matchings_by_size(const Graph& g, Budget& budget);

/// Decomposes X xor Y into vertex-disjoint alternating even cycles.
/// X = Y gives the empty list; every cycle has even length >= 4.
std::vector<CycleSeq> alternating_cycles(const PerfectMatching& x,
                                         const PerfectMatching& y);

}  // namespace matchkit
