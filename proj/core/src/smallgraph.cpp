#include "matchkit/smallgraph.hpp"

#include <algorithm>
#include <numeric>

namespace matchkit {

namespace {

inline int pair_bit(int u, int v) {  // u < v
  return v * (v - 1) / 2 + u;
}

}  // namespace

GraphCode encode_graph(const Graph& g) {
  if (g.n() > kMaxCodeVertices) throw GraphError("graph too large to encode");
  GraphCode code = 0;
  for (const auto& [u, v] : g.edges()) code |= GraphCode{1} << pair_bit(u, v);
  return code;
}

Graph graph_from_code(int n, GraphCode code) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (code & (GraphCode{1} << pair_bit(u, v))) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

namespace {

// Permutes within degree classes only; classes themselves are ordered by
// decreasing degree, which every minimizing candidate must respect.
void min_code_rec(const Graph& g, std::vector<int>& order,
                  const std::vector<std::vector<int>>& classes, std::size_t ci,
                  GraphCode& best) {
  if (ci == classes.size()) {
    // order[i] = original vertex placed at position i
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
    GraphCode code = 0;
    for (const auto& [u, v] : g.edges()) {
      int a = pos[u], b = pos[v];
      if (a > b) std::swap(a, b);
      code |= GraphCode{1} << pair_bit(a, b);
    }
    best = std::min(best, code);
    return;
  }
  std::vector<int> cls = classes[ci];
  std::sort(cls.begin(), cls.end());
  do {
    order.insert(order.end(), cls.begin(), cls.end());
    min_code_rec(g, order, classes, ci + 1, best);
    order.resize(order.size() - cls.size());
  } while (std::next_permutation(cls.begin(), cls.end()));
}

}  // namespace

GraphCode canonical_code(const Graph& g) {
  if (g.n() > kMaxCodeVertices) throw GraphError("graph too large to encode");
  if (g.n() <= 1) return 0;
  std::vector<int> by_degree(g.n());
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  std::vector<std::vector<int>> classes;
  for (int v : by_degree) {
    if (classes.empty() || g.degree(classes.back().back()) != g.degree(v))
      classes.emplace_back();
    classes.back().push_back(v);
  }
  GraphCode best = ~GraphCode{0};
  std::vector<int> order;
  min_code_rec(g, order, classes, 0, best);
  return best;
}

bool has_induced_subgraph(const Graph& g, const Graph& pattern,
                          std::vector<int>* witness) {
  const int h = pattern.n();
  if (h > g.n()) return false;
  const GraphCode target = canonical_code(pattern);
  std::vector<int> subset(h);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    if (canonical_code(induced_subgraph(g, subset).graph) == target) {
      if (witness) *witness = subset;
      return true;
    }
    // next combination
    int i = h - 1;
    while (i >= 0 && subset[i] == g.n() - h + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < h; ++j) subset[j] = subset[j - 1] + 1;
  }
}

std::set<GraphCode> pre_pattern_codes(const Graph& h) {
  const int n = h.n();
  std::set<GraphCode> codes;
  // Every proper 2-coloring of h, then every completion with same-side edges.
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool proper = true;
    for (const auto& [u, v] : h.edges())
      if (((mask >> u) & 1) == ((mask >> v) & 1)) {
        proper = false;
        break;
      }
    if (!proper) continue;
    std::vector<Edge> same_side;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (((mask >> u) & 1) == ((mask >> v) & 1)) same_side.emplace_back(u, v);
    const std::size_t k = same_side.size();
    for (std::uint64_t extra = 0; extra < (1ULL << k); ++extra) {
      std::vector<Edge> edges = h.edges();
      for (std::size_t i = 0; i < k; ++i)
        if (extra & (1ULL << i)) edges.push_back(same_side[i]);
      codes.insert(canonical_code(Graph(n, std::move(edges))));
    }
  }
  return codes;
}

std::optional<std::vector<int>> find_induced_pre(const Graph& h, const Graph& g) {
  const int hs = h.n();
  if (hs > g.n()) return std::nullopt;
  const auto codes = pre_pattern_codes(h);
  std::vector<int> subset(hs);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    if (codes.count(canonical_code(induced_subgraph(g, subset).graph)))
      return subset;
    int i = hs - 1;
    while (i >= 0 && subset[i] == g.n() - hs + i) --i;
    if (i < 0) return std::nullopt;
    ++subset[i];
    for (int j = i + 1; j < hs; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace matchkit
