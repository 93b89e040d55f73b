#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchkit {

using Edge = std::pair<int, int>;  // always stored (min, max)

inline Edge make_edge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exponential search exceeds its node budget. Distinct from
/// any domain answer: callers must not confuse "too big" with "no".
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

/// Search budget for the exponential oracles, in backtracking nodes.
/// Decremented by the search loops; throws BudgetExceeded when drained.
struct Budget {
  std::int64_t remaining = 100'000'000;

  void charge(std::int64_t cost = 1) {
    remaining -= cost;
    if (remaining < 0) throw BudgetExceeded{};
  }
};

/// Default budget, overridable via the MATCHKIT_BUDGET environment variable.
Budget default_budget();

/// Simple undirected graph on dense 0-based vertex indices.
/// Immutable after construction; no loops, no parallel edges.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  bool operator==(const Graph&) const = default;

  Graph complement() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;             // sorted, deduplicated
  std::vector<std::vector<int>> adj_;   // sorted neighbor lists
};

/// Canonical matching: vertex-disjoint (min,max) pairs, lexicographically
/// sorted, usable directly as a map key.
struct Matching {
  std::vector<Edge> edges;

  Matching() = default;
  explicit Matching(std::vector<Edge> e);

  int size() const { return static_cast<int>(edges.size()); }
  bool contains(const Edge& e) const;
  /// Matched partner of v, or -1 when v is uncovered.
  int partner(int v) const;
  bool covers_all(int n) const;
  /// Every edge in the host graph and pairwise disjointness.
  bool valid_in(const Graph& g) const;
  bool is_perfect_in(const Graph& g) const {
    return valid_in(g) && covers_all(g.n());
  }

  auto operator<=>(const Matching&) const = default;
};

using PerfectMatching = Matching;

struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;
};

/// Cyclic vertex sequence, canonicalized: minimal rotation of the
/// lexicographically smaller orientation. Consecutive pairs are host edges.
struct CycleSeq {
  std::vector<int> vertices;

  CycleSeq() = default;
  explicit CycleSeq(std::vector<int> vs);  // canonicalizes

  int length() const { return static_cast<int>(vertices.size()); }
  auto operator<=>(const CycleSeq&) const = default;
};

/// Parses the edge-list format: "n m" then m lines "u v", 1-based, with
/// '#'/'c' comment lines. Rejects loops, duplicates and out-of-range indices.
Graph parse_graph(const std::string& text);

/// Byte-stable writer for the same format (LF, single spaces).
std::string write_graph(const Graph& g);

struct IndexedSubgraph {
  Graph graph;
  std::vector<int> index_map;  // new index -> original vertex
};

IndexedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Same vertex set; keeps exactly the edges with one endpoint on each side.
Graph cut_bigraph(const Graph& g, const Bipartition& b);

/// BFS 2-coloring, component by component; the least vertex of each
/// component goes left. Empty optional iff an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace matchkit
