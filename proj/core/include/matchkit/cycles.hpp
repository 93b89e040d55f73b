#pragma once

#include <functional>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

/// Calls fn for every even cycle of length >= min_len, deduplicated by
/// canonical form, in deterministic DFS order (least root first, neighbors
/// ascending). fn returning false stops the enumeration early.
void for_each_even_cycle(const Graph& g, int min_len, Budget& budget,
                         const std::function<bool(const CycleSeq&)>& fn);

std::vector<CycleSeq> even_cycles(const Graph& g, int min_len, Budget& budget);

struct ChordInfo {
  CycleSeq cycle;
  Edge chord;
  int pos_i = 0, pos_j = 0;  // positions along the stored cycle, i < j
  bool odd = false;          // (j - i) odd
};

/// All chords of an even cycle: host edges between cycle vertices that are
/// not cycle edges, with their position parity.
std::vector<ChordInfo> chords_of(const Graph& g, const CycleSeq& cycle);

bool has_odd_chord(const Graph& g, const CycleSeq& cycle);
bool is_chordless(const Graph& g, const CycleSeq& cycle);

}  // namespace matchkit
