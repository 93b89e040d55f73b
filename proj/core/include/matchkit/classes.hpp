#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchkit/cycles.hpp"
#include "matchkit/graph.hpp"

namespace matchkit {

/// Certificate that one even cycle is harmless for switchability: either an
/// odd chord, or an even switch (two even chords forming a 4-cycle with two
/// cycle edges) together with a chord crossing between the two cycle
/// segments the switch separates. Segment endpoints count as segment
/// members; the switch chords themselves do not count as crossing chords.
struct SwitchWitness {
  enum class Kind { kOddChord, kEvenSwitch };

  CycleSeq cycle;
  Kind kind = Kind::kOddChord;
  std::optional<Edge> odd_chord;
  std::optional<std::pair<Edge, Edge>> even_switch;
  std::optional<Edge> crossing_chord;
};

/// Membership answer with a witness for the negative case: the violating
/// cycle for the cycle-based classes, or the vertices of a forbidden
/// induced subgraph for the pattern-based ones.
struct ClassVerdict {
  bool member = false;
  std::string detail;
  std::optional<CycleSeq> cycle;
  std::optional<std::vector<int>> vertices;
};

/// Witness search for a single even cycle; both parity phases of the cycle
/// numbering are tried for the even switch. Empty when the cycle has
/// neither an odd chord nor a switch with a crossing chord.
std::optional<SwitchWitness> switch_witness(const Graph& g, const CycleSeq& cycle);

/// Every even cycle of length >= 6 has an odd chord.
ClassVerdict is_odd_chordal(const Graph& g, Budget& budget);
ClassVerdict is_odd_chordal(const Graph& g);

/// Every even cycle of length >= 6 admits a SwitchWitness.
ClassVerdict is_switchable(const Graph& g, Budget& budget);
ClassVerdict is_switchable(const Graph& g);

/// No 7-vertex subset induces a graph with a bipartition whose cut-graph is
/// a tripod, armchair or stirrer.
ClassVerdict is_flawless(const Graph& g);

/// Flawless and odd-chordal.
ClassVerdict is_quasimonotone(const Graph& g, Budget& budget);
ClassVerdict is_quasimonotone(const Graph& g);

/// Bipartite, no chordless cycle of length >= 6, and no induced tripod,
/// armchair or stirrer (exact induced subgraphs, not bipartition-relative).
ClassVerdict is_monotone(const Graph& g, Budget& budget);
ClassVerdict is_monotone(const Graph& g);

/// No induced triangle, C5 or P5.
ClassVerdict is_chains(const Graph& g);

/// No 5-vertex subset induces a graph with a bipartition whose cut-graph is
/// a P5.
ClassVerdict is_qua_chains(const Graph& g);

/// Direct definitional check for chain graphs: bipartite with nested
/// neighborhoods on each side. Used to cross-validate is_chains.
bool has_nested_neighborhoods(const Graph& g);

}  // namespace matchkit
