#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchkit/bigint.hpp"
#include "matchkit/graph.hpp"

namespace matchkit {

struct TreeDecomposition {
  std::vector<std::vector<int>> bags;          // node id -> sorted vertex set
  std::vector<std::pair<int, int>> tree_edges; // over node ids

  int width() const;
};

/// Checks the three tree-decomposition conditions (vertex coverage, edge
/// coverage, connected bag-sets) plus treeness; empty result means valid,
/// otherwise the first violation in words.
std::optional<std::string> validate_td(const Graph& g,
                                       const TreeDecomposition& d);

/// Rooted decomposition with start (empty leaf), introduce, forget and join
/// nodes; the root bag is empty.
struct NiceTreeDecomposition {
  enum class Kind { kStart, kIntroduce, kForget, kJoin };
  struct Node {
    Kind kind = Kind::kStart;
    int vertex = -1;             // introduce/forget only
    std::vector<int> bag;        // sorted
    std::vector<int> children;   // at most two
  };
  std::vector<Node> nodes;
  int root = -1;

  int width() const;
  TreeDecomposition underlying() const;
};

/// Same width, O(|V| * width) nodes; throws GraphError on an invalid input
/// decomposition (validated against nothing but its own tree structure).
NiceTreeDecomposition make_nice(const TreeDecomposition& d);

/// Heuristic decomposition from the min-fill elimination ordering, ties
/// broken by least vertex id. Always valid; width not necessarily optimal.
TreeDecomposition minfill_td(const Graph& g);

/// Perfect-matching count via the p(i, U) dynamic program over the nice
/// decomposition; throws GraphError when the decomposition is not valid
/// for g. O(3^w n) time with join nodes.
BigInt count_pm_td(const Graph& g, const NiceTreeDecomposition& nd);

}  // namespace matchkit
