#include "matchkit/cycles.hpp"

#include <algorithm>

namespace matchkit {

namespace {

// DFS cycle enumeration rooted at the least cycle vertex.  Within a root the
// path only visits larger vertices, and a cycle is closed only when the
// second path vertex is smaller than the last one, so each cycle is produced
// exactly once (one root, one orientation).
struct CycleSearch {
  const Graph& g;
  int min_len;
  Budget& budget;
  const std::function<bool(const CycleSeq&)>& fn;
  std::vector<int> path;
  std::vector<char> on_path;
  bool stopped = false;

  void dfs(int root, int v) {
    if (stopped) return;
    for (int w : g.neighbors(v)) {
      if (stopped) return;
      budget.charge(1);
      if (w == root) {
        if (static_cast<int>(path.size()) >= std::max(3, min_len) &&
            path.size() % 2 == 0 && path[1] < path.back()) {
          if (!fn(CycleSeq(path))) stopped = true;
        }
        continue;
      }
      if (w < root || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      dfs(root, w);
      on_path[w] = 0;
      path.pop_back();
    }
  }
};

}  // namespace

void for_each_even_cycle(const Graph& g, int min_len, Budget& budget,
                         const std::function<bool(const CycleSeq&)>& fn) {
  if (min_len < 4) min_len = 4;
  CycleSearch search{g, min_len, budget, fn};
  search.on_path.assign(g.n(), 0);
  for (int root = 0; root < g.n() && !search.stopped; ++root) {
    search.path = {root};
    search.on_path[root] = 1;
    search.dfs(root, root);
    search.on_path[root] = 0;
  }
}

std::vector<CycleSeq> even_cycles(const Graph& g, int min_len, Budget& budget) {
  std::vector<CycleSeq> out;
  for_each_even_cycle(g, min_len, budget, [&](const CycleSeq& c) {
    out.push_back(c);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ChordInfo> chords_of(const Graph& g, const CycleSeq& cycle) {
  const auto& vs = cycle.vertices;
  const int len = static_cast<int>(vs.size());
  std::vector<ChordInfo> out;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (consecutive) continue;
      if (!g.has_edge(vs[i], vs[j])) continue;
      out.push_back(
          {cycle, make_edge(vs[i], vs[j]), i, j, (j - i) % 2 == 1});
    }
  }
  return out;
}

bool has_odd_chord(const Graph& g, const CycleSeq& cycle) {
  for (const auto& c : chords_of(g, cycle))
    if (c.odd) return true;
  return false;
}

bool is_chordless(const Graph& g, const CycleSeq& cycle) {
  return chords_of(g, cycle).empty();
}

}  // namespace matchkit
