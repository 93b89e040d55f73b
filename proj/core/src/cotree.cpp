#include "matchkit/cotree.hpp"

#include <algorithm>

#include "matchkit/gadgets.hpp"
#include "matchkit/smallgraph.hpp"

namespace matchkit {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

namespace {

void collect_leaves(const Cotree& t, int node, std::vector<int>& out) {
  const auto& nd = t.nodes[node];
  if (nd.kind == Cotree::Kind::kLeaf) {
    out.push_back(nd.vertex);
    return;
  }
  collect_leaves(t, nd.left, out);
  collect_leaves(t, nd.right, out);
}

struct CotreeBuilder {
  const Graph& g;
  Cotree tree;
  std::vector<int>* witness;
  bool failed = false;

  // Builds the subtree for the induced subgraph on the given original
  // vertices; returns the node id, or -1 on failure (not a cograph).
  int build(const std::vector<int>& vertices) {
    if (failed) return -1;
    if (vertices.size() == 1) {
      tree.nodes.push_back({Cotree::Kind::kLeaf, vertices[0], -1, -1, 1});
      return static_cast<int>(tree.nodes.size()) - 1;
    }
    IndexedSubgraph sub = induced_subgraph(g, vertices);
    auto split = [&](const std::vector<std::vector<int>>& comps,
                     Cotree::Kind kind) {
      std::vector<int> first, rest;
      std::vector<char> in_first(sub.graph.n(), 0);
      for (int v : comps[0]) in_first[v] = 1;
      for (int v = 0; v < sub.graph.n(); ++v)
        (in_first[v] ? first : rest).push_back(sub.index_map[v]);
      int l = build(first);
      int r = build(rest);
      if (failed) return -1;
      int size = tree.nodes[l].size + tree.nodes[r].size;
      tree.nodes.push_back({kind, -1, l, r, size});
      return static_cast<int>(tree.nodes.size()) - 1;
    };
    auto comps = connected_components(sub.graph);
    if (comps.size() > 1) return split(comps, Cotree::Kind::kUnion);
    auto co_comps = connected_components(sub.graph.complement());
    if (co_comps.size() > 1) return split(co_comps, Cotree::Kind::kJoin);
    // Connected with connected complement on >= 2 vertices: not a cograph.
    failed = true;
    if (witness) {
      std::vector<int> local;
      has_induced_subgraph(sub.graph, path_graph(4), &local);
      witness->clear();
      for (int v : local) witness->push_back(sub.index_map[v]);
    }
    return -1;
  }
};

MatchingProfile profile_at(const Cotree& t, int node) {
  const auto& nd = t.nodes[node];
  if (nd.kind == Cotree::Kind::kLeaf) return {{BigInt(1)}, 1};
  MatchingProfile a = profile_at(t, nd.left);
  MatchingProfile b = profile_at(t, nd.right);
  const int n = a.n + b.n;
  MatchingProfile out{std::vector<BigInt>(n / 2 + 1, 0), n};
  auto get = [](const MatchingProfile& p, int s) -> BigInt {
    return (s >= 0 && s < static_cast<int>(p.counts.size())) ? p.counts[s]
                                                             : BigInt(0);
  };
  for (int s = 0; s <= n / 2; ++s) {
    if (nd.kind == Cotree::Kind::kUnion) {
      for (int i = 0; i <= s; ++i) out.counts[s] += get(a, i) * get(b, s - i);
    } else {
      for (int i = 0; i <= std::min(s, a.n / 2); ++i) {
        for (int j = 0; j <= std::min(s - i, b.n / 2); ++j) {
          const int k = s - i - j;
          out.counts[s] += get(a, i) * get(b, j) * binomial(a.n - 2 * i, k) *
                           binomial(b.n - 2 * j, k) * factorial(k);
        }
      }
    }
  }
  return out;
}

}  // namespace

Graph Cotree::to_graph() const {
  std::vector<Edge> edges;
  int n = 0;
  for (const auto& nd : nodes) {
    if (nd.kind == Kind::kLeaf) n = std::max(n, nd.vertex + 1);
    if (nd.kind != Kind::kJoin) continue;
    std::vector<int> left_vs, right_vs;
    collect_leaves(*this, nd.left, left_vs);
    collect_leaves(*this, nd.right, right_vs);
    for (int u : left_vs)
      for (int v : right_vs) edges.push_back(make_edge(u, v));
  }
  return Graph(n, std::move(edges));
}

std::optional<Cotree> build_cotree(const Graph& g, std::vector<int>* witness) {
  if (g.n() == 0) return std::nullopt;
  CotreeBuilder builder{g, {}, witness};
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  int root = builder.build(all);
  if (builder.failed) return std::nullopt;
  builder.tree.root = root;
  return builder.tree;
}

MatchingProfile cograph_profile(const Cotree& t) {
  if (t.root < 0) throw GraphError("cograph_profile: malformed cotree");
  return profile_at(t, t.root);
}

BigInt count_pm_cograph(const Graph& g) {
  auto tree = build_cotree(g);
  if (!tree) throw GraphError("count_pm_cograph: not a cograph");
  if (g.n() % 2 != 0) return 0;
  return cograph_profile(*tree).counts[g.n() / 2];
}

}  // namespace matchkit
