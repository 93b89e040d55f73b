#include "matchkit/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>

namespace matchkit {

Budget default_budget() {
  Budget b;
  if (const char* env = std::getenv("MATCHKIT_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) b.remaining = v;
  }
  return b;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(n);
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v >= n) throw GraphError("vertex index out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw GraphError("duplicate edge");
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::complement() const {
  std::vector<Edge> ce;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) ce.emplace_back(u, v);
  return Graph(n_, std::move(ce));
}

Matching::Matching(std::vector<Edge> e) {
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  std::sort(e.begin(), e.end());
  edges = std::move(e);
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), make_edge(e.first, e.second));
}

int Matching::partner(int v) const {
  for (const auto& [a, b] : edges) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return -1;
}

bool Matching::covers_all(int n) const {
  if (static_cast<int>(edges.size()) * 2 != n) return false;
  std::vector<char> seen(n, 0);
  for (const auto& [a, b] : edges) {
    if (seen[a] || seen[b]) return false;
    seen[a] = seen[b] = 1;
  }
  return true;
}

bool Matching::valid_in(const Graph& g) const {
  std::vector<char> seen(g.n(), 0);
  for (const auto& [a, b] : edges) {
    if (!g.has_edge(a, b)) return false;
    if (seen[a] || seen[b]) return false;
    seen[a] = seen[b] = 1;
  }
  return true;
}

CycleSeq::CycleSeq(std::vector<int> vs) {
  const int m = static_cast<int>(vs.size());
  if (m < 3) throw GraphError("cycle of length < 3");
  // Minimal rotation of the lexicographically smaller orientation.
  auto best = vs;
  auto consider = [&](const std::vector<int>& seq) {
    for (int r = 0; r < m; ++r) {
      std::vector<int> rot(m);
      for (int i = 0; i < m; ++i) rot[i] = seq[(r + i) % m];
      if (rot < best) best = std::move(rot);
    }
  };
  consider(vs);
  std::reverse(vs.begin(), vs.end());
  consider(vs);
  vertices = std::move(best);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  int seen = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#' || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw GraphError("malformed header at line " + std::to_string(lineno));
      continue;
    }
    int u, v;
    if (!(ls >> u >> v))
      throw GraphError("malformed edge at line " + std::to_string(lineno));
    std::string rest;
    if (ls >> rest)
      throw GraphError("trailing tokens at line " + std::to_string(lineno));
    if (u < 1 || u > n || v < 1 || v > n)
      throw GraphError("vertex index out of range at line " + std::to_string(lineno));
    edges.emplace_back(u - 1, v - 1);  // 1-based on the wire, 0-based inside
    ++seen;
  }
  if (n < 0) throw GraphError("empty document");
  if (seen != m) throw GraphError("edge count mismatch: declared " +
                                  std::to_string(m) + ", found " + std::to_string(seen));
  return Graph(n, std::move(edges));
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges())
    out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

IndexedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> map = vertices;
  std::sort(map.begin(), map.end());
  map.erase(std::unique(map.begin(), map.end()), map.end());
  std::vector<int> inv(g.n(), -1);
  for (int i = 0; i < static_cast<int>(map.size()); ++i) {
    if (map[i] < 0 || map[i] >= g.n()) throw GraphError("subset vertex out of range");
    inv[map[i]] = i;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (inv[u] >= 0 && inv[v] >= 0) edges.emplace_back(inv[u], inv[v]);
  return {Graph(static_cast<int>(map.size()), std::move(edges)), std::move(map)};
}

Graph cut_bigraph(const Graph& g, const Bipartition& b) {
  std::vector<int> side(g.n(), -1);
  for (int v : b.left) {
    if (v < 0 || v >= g.n() || side[v] != -1) throw GraphError("invalid bipartition");
    side[v] = 0;
  }
  for (int v : b.right) {
    if (v < 0 || v >= g.n() || side[v] != -1) throw GraphError("invalid bipartition");
    side[v] = 1;
  }
  for (int v = 0; v < g.n(); ++v)
    if (side[v] == -1) throw GraphError("bipartition does not cover all vertices");
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (side[u] != side[v]) edges.emplace_back(u, v);
  return Graph(g.n(), std::move(edges));
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  Bipartition b;
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;  // least vertex of the component goes left
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < g.n(); ++v)
    (color[v] == 0 ? b.left : b.right).push_back(v);
  return b;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.n() == 0 || connected_components(g).size() == 1;
}

}  // namespace matchkit
