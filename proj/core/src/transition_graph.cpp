#include "matchkit/transition_graph.hpp"

#include <algorithm>
#include <deque>

#include "matchkit/oracle.hpp"

namespace matchkit {

int TransitionGraph::num_edges() const {
  int total = 0;
  for (const auto& nb : adjacency) total += static_cast<int>(nb.size());
  return total / 2;
}

int TransitionGraph::id_of(const PerfectMatching& m) const {
  auto it = index.find(m);
  if (it == index.end()) throw GraphError("matching is not a node of the transition graph");
  return it->second;
}

TransitionGraph build_transition_graph(const Graph& g, Budget& budget) {
  TransitionGraph tg;
  tg.host_n = g.n();
  tg.nodes = enumerate_perfect_matchings(g, budget);
  for (int i = 0; i < tg.size(); ++i) tg.index[tg.nodes[i]] = i;
  tg.adjacency.resize(tg.size());
  for (int i = 0; i < tg.size(); ++i) {
    for (const auto& nb : switch_neighbors(g, tg.nodes[i])) {
      int j = tg.index.at(nb);
      if (j != i) tg.adjacency[i].push_back(j);
    }
    std::sort(tg.adjacency[i].begin(), tg.adjacency[i].end());
  }
  return tg;
}

TransitionGraph build_transition_graph(const Graph& g) {
  Budget b = default_budget();
  return build_transition_graph(g, b);
}

namespace {

std::vector<int> bfs(const TransitionGraph& tg, int src) {
  std::vector<int> dist(tg.size(), -1);
  dist[src] = 0;
  std::deque<int> queue{src};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : tg.adjacency[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace

bool is_ergodic(const Graph& g, Budget& budget) {
  auto tg = build_transition_graph(g, budget);
  if (tg.size() <= 1) return true;
  auto dist = bfs(tg, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_ergodic(const Graph& g) {
  Budget b = default_budget();
  return is_ergodic(g, b);
}

bool is_hereditarily_ergodic_bruteforce(const Graph& g, Budget& budget) {
  const int n = g.n();
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    if (__builtin_popcountll(mask) % 2 != 0) continue;
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask & (1ULL << v)) subset.push_back(v);
    if (!is_ergodic(induced_subgraph(g, subset).graph, budget)) return false;
  }
  return true;
}

bool is_hereditarily_ergodic_bruteforce(const Graph& g) {
  Budget b = default_budget();
  return is_hereditarily_ergodic_bruteforce(g, b);
}

std::optional<int> distance(const TransitionGraph& tg, const PerfectMatching& x,
                            const PerfectMatching& y) {
  int sx = tg.id_of(x), sy = tg.id_of(y);
  int d = bfs(tg, sx)[sy];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> diameter(const TransitionGraph& tg) {
  if (tg.size() == 0) throw GraphError("diameter of an empty transition graph");
  int best = 0;
  for (int s = 0; s < tg.size(); ++s) {
    auto dist = bfs(tg, s);
    for (int d : dist) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::vector<std::vector<int>> components(const TransitionGraph& tg) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(tg.size(), 0);
  for (int s = 0; s < tg.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int w : tg.adjacency[v])
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return comps;
}

}  // namespace matchkit
