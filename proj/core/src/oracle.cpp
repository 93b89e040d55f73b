#include "matchkit/oracle.hpp"

#include <algorithm>
#include <map>

namespace matchkit {

namespace {

void backtrack(const Graph& g, std::vector<int>& partner, int covered,
               std::vector<Edge>& acc, std::vector<PerfectMatching>& out,
               Budget& budget, bool first_only) {
  budget.charge();
  const int n = g.n();
  if (covered == n) {
    out.emplace_back(acc);
    return;
  }
  int v = 0;
  while (partner[v] != -1) ++v;  // lowest uncovered vertex
  for (int w : g.neighbors(v)) {
    if (partner[w] != -1) continue;
    partner[v] = w;
    partner[w] = v;
    acc.emplace_back(v, w);
    backtrack(g, partner, covered + 2, acc, out, budget, first_only);
    acc.pop_back();
    partner[v] = partner[w] = -1;
    if (first_only && !out.empty()) return;
  }
}

}  // namespace

std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g,
                                                         Budget& budget) {
  if (g.n() % 2 != 0) return {};
  std::vector<int> partner(g.n(), -1);
  std::vector<Edge> acc;
  std::vector<PerfectMatching> out;
  backtrack(g, partner, 0, acc, out, budget, false);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g) {
  Budget b = default_budget();
  return enumerate_perfect_matchings(g, b);
}

std::optional<PerfectMatching> find_perfect_matching(const Graph& g,
                                                     Budget& budget) {
  if (g.n() % 2 != 0) return std::nullopt;
  std::vector<int> partner(g.n(), -1);
  std::vector<Edge> acc;
  std::vector<PerfectMatching> out;
  backtrack(g, partner, 0, acc, out, budget, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::optional<PerfectMatching> find_perfect_matching(const Graph& g) {
  Budget b = default_budget();
  return find_perfect_matching(g, b);
}

namespace {

void count_by_size_rec(const Graph& g, int from, std::vector<char>& used,
                       int size, std::vector<long long>& out, Budget& budget) {
  budget.charge();
  out[size] += 1;
  const auto& edges = g.edges();
  for (int i = from; i < static_cast<int>(edges.size()); ++i) {
    auto [u, v] = edges[i];
    if (used[u] || used[v]) continue;
    used[u] = used[v] = 1;
    count_by_size_rec(g, i + 1, used, size + 1, out, budget);
    used[u] = used[v] = 0;
  }
}

}  // namespace

std::vector<long long> count_matchings_by_size(const Graph& g, Budget& budget) {
  std::vector<long long> out(g.n() / 2 + 1, 0);
  std::vector<char> used(g.n(), 0);
  count_by_size_rec(g, 0, used, 0, out, budget);
  return out;
}

std::vector<CycleSeq> alternating_cycles(const PerfectMatching& x,
                                         const PerfectMatching& y) {
  // X xor Y: each covered vertex has exactly one X-partner and one
  // Y-partner differing from it, so the symmetric difference is a union of
  // even alternating cycles. Walk each, alternating the two matchings.
  std::map<int, int> px, py;
  for (const auto& [a, b] : x.edges) {
    px[a] = b;
    px[b] = a;
  }
  for (const auto& [a, b] : y.edges) {
    py[a] = b;
    py[b] = a;
  }
  if (px.size() != py.size())
    throw GraphError("matchings cover different vertex sets");
  for (const auto& [v, _] : px)
    if (!py.count(v)) throw GraphError("matchings cover different vertex sets");

  std::vector<CycleSeq> cycles;
  std::map<int, char> done;
  for (const auto& [start, _] : px) {
    if (done[start]) continue;
    if (px[start] == py[start]) {  // shared edge, not in the difference
      done[start] = done[px[start]] = 1;
      continue;
    }
    std::vector<int> cyc;
    int v = start;
    bool use_x = true;
    do {
      cyc.push_back(v);
      done[v] = 1;
      v = use_x ? px[v] : py[v];
      use_x = !use_x;
    } while (v != start);
    cycles.emplace_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace matchkit
