#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

/// Bit-packed encoding of graphs on up to 11 vertices: bit index of pair
/// (u,v), u < v, is v*(v-1)/2 + u. Used for isomorphism-class bookkeeping
/// in the forbidden-subgraph scans.
using GraphCode = std::uint64_t;

constexpr int kMaxCodeVertices = 11;

GraphCode encode_graph(const Graph& g);
Graph graph_from_code(int n, GraphCode code);

/// Isomorphism-complete canonical form: minimum encoding over all vertex
/// relabelings that sort degrees non-increasingly. Equal codes iff isomorphic.
GraphCode canonical_code(const Graph& g);

/// True iff g has an induced subgraph isomorphic to the pattern; the first
/// witnessing vertex subset (lexicographic) is stored when requested.
bool has_induced_subgraph(const Graph& g, const Graph& pattern,
                          std::vector<int>* witness = nullptr);

/// Canonical codes of every graph that admits a bipartition whose cut-graph
/// is isomorphic to the bipartite pattern h (the "pre-h" graphs): h plus any
/// set of same-side edges, over every proper 2-coloring of h.
std::set<GraphCode> pre_pattern_codes(const Graph& h);

/// First |V(h)|-subset of V(g) (lexicographic) inducing a pre-h graph.
std::optional<std::vector<int>> find_induced_pre(const Graph& h, const Graph& g);

}  // namespace matchkit
