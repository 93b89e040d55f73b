#pragma once

#include <optional>
#include <vector>

#include "matchkit/bigint.hpp"
#include "matchkit/graph.hpp"

namespace matchkit {

/// Binary decomposition tree of a cograph: leaves are the host vertices,
/// internal nodes are disjoint unions or complete joins. Two vertices are
/// adjacent iff their lowest common ancestor is a join.
struct Cotree {
  enum class Kind { kLeaf, kUnion, kJoin };
  struct Node {
    Kind kind = Kind::kLeaf;
    int vertex = -1;          // leaves only
    int left = -1, right = -1;
    int size = 0;             // leaves under this node
  };
  std::vector<Node> nodes;
  int root = -1;

  /// Rebuilds the represented graph (adjacency iff the LCA is a join).
  Graph to_graph() const;
};

/// Recursive cograph decomposition: disconnected -> union of one component
/// vs the rest, co-disconnected -> join likewise. Empty result iff G is not
/// a cograph, in which case the witness (when requested) is an induced P4.
std::optional<Cotree> build_cotree(const Graph& g,
                                   std::vector<int>* p4_witness = nullptr);

/// Matching counts by size, indexed s = 0..floor(n/2).
struct MatchingProfile {
  std::vector<BigInt> counts;
  int n = 0;
};

MatchingProfile cograph_profile(const Cotree& t);

/// Perfect-matching count of a cograph; throws GraphError otherwise.
BigInt count_pm_cograph(const Graph& g);

}  // namespace matchkit
