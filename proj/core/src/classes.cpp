#include "matchkit/classes.hpp"

#include <algorithm>
#include <set>

#include "matchkit/gadgets.hpp"
#include "matchkit/smallgraph.hpp"

namespace matchkit {

namespace {

bool consecutive_on_cycle(int i, int j, int len) {
  int d = std::abs(i - j);
  return d == 1 || d == len - 1;
}

/// Lexicographic scan over k-subsets of [0, n); fn returning true stops and
/// makes the whole call true with the subset as witness.
bool scan_subsets(int n, int k, std::vector<int>& subset,
                  const std::function<bool(const std::vector<int>&)>& fn,
                  int next = 0) {
  if (static_cast<int>(subset.size()) == k) return fn(subset);
  for (int v = next; v <= n - (k - static_cast<int>(subset.size())); ++v) {
    subset.push_back(v);
    if (scan_subsets(n, k, subset, fn, v + 1)) return true;
    subset.pop_back();
  }
  return false;
}

struct PrePattern {
  std::string name;
  std::set<GraphCode> codes;
  int size;
};

const std::vector<PrePattern>& flaw_patterns() {
  static const std::vector<PrePattern> patterns = [] {
    std::vector<PrePattern> out;
    for (const char* name : {"tripod", "armchair", "stirrer"}) {
      Graph h = fixture(name);
      out.push_back({name, pre_pattern_codes(h), h.n()});
    }
    return out;
  }();
  return patterns;
}

const std::set<GraphCode>& pre_p5_codes() {
  static const std::set<GraphCode> codes = pre_pattern_codes(path_graph(5));
  return codes;
}

/// First k-subset (lexicographic) whose induced subgraph's canonical code
/// lies in any of the given pattern sets; reports which pattern matched.
std::optional<std::pair<std::vector<int>, std::string>> find_pre_violation(
    const Graph& g, const std::vector<PrePattern>& patterns, int k) {
  if (g.n() < k) return std::nullopt;
  std::optional<std::pair<std::vector<int>, std::string>> found;
  std::vector<int> subset;
  scan_subsets(g.n(), k, subset, [&](const std::vector<int>& s) {
    GraphCode code = canonical_code(induced_subgraph(g, s).graph);
    for (const auto& p : patterns) {
      if (p.codes.count(code)) {
        found = {{s, p.name}};
        return true;
      }
    }
    return false;
  });
  return found;
}

}  // namespace

std::optional<SwitchWitness> switch_witness(const Graph& g,
                                            const CycleSeq& cycle) {
  const auto chords = chords_of(g, cycle);
  for (const auto& c : chords) {
    if (c.odd)
      return SwitchWitness{cycle, SwitchWitness::Kind::kOddChord, c.chord,
                           std::nullopt, std::nullopt};
  }

  const auto& vs = cycle.vertices;
  const int len = cycle.length();
  auto is_chord = [&](int i, int j) {
    return !consecutive_on_cycle(i, j, len) && g.has_edge(vs[i], vs[j]);
  };

  // Even switch at positions (p, q), partner chord at (p+1, q+1) mod len;
  // iterating every even-distance pair covers both parity phases of the
  // cycle numbering.
  for (int p = 0; p < len; ++p) {
    for (int q = p + 2; q < len; q += 2) {
      const int p2 = (p + 1) % len, q2 = (q + 1) % len;
      if (!is_chord(p, q) || !is_chord(p2, q2)) continue;
      const Edge chord1 = make_edge(vs[p], vs[q]);
      const Edge chord2 = make_edge(vs[p2], vs[q2]);

      // Segments separated by the switch, endpoints included:
      // P1 = positions p+1..q, P2 = positions q+1..p (wrapping).
      std::vector<int> seg1, seg2;
      for (int i = p + 1; i <= q; ++i) seg1.push_back(i);
      for (int i = (q + 1) % len; ; i = (i + 1) % len) {
        seg2.push_back(i);
        if (i == p) break;
      }
      for (int k : seg1) {
        for (int l : seg2) {
          if (!is_chord(k, l)) continue;
          const Edge e = make_edge(vs[k], vs[l]);
          if (e == chord1 || e == chord2) continue;
          return SwitchWitness{cycle, SwitchWitness::Kind::kEvenSwitch,
                               std::nullopt, std::make_pair(chord1, chord2),
                               e};
        }
      }
    }
  }
  return std::nullopt;
}

ClassVerdict is_odd_chordal(const Graph& g, Budget& budget) {
  ClassVerdict verdict{true, "every even cycle of length >= 6 has an odd chord",
                       std::nullopt, std::nullopt};
  for_each_even_cycle(g, 6, budget, [&](const CycleSeq& c) {
    if (has_odd_chord(g, c)) return true;
    verdict = {false, "even cycle without odd chord", c, std::nullopt};
    return false;
  });
  return verdict;
}

ClassVerdict is_odd_chordal(const Graph& g) {
  Budget b = default_budget();
  return is_odd_chordal(g, b);
}

ClassVerdict is_switchable(const Graph& g, Budget& budget) {
  ClassVerdict verdict{true, "every even cycle of length >= 6 has a witness",
                       std::nullopt, std::nullopt};
  for_each_even_cycle(g, 6, budget, [&](const CycleSeq& c) {
    if (switch_witness(g, c)) return true;
    verdict = {false,
               "even cycle with neither odd chord nor even switch with "
               "crossing chord",
               c, std::nullopt};
    return false;
  });
  return verdict;
}

ClassVerdict is_switchable(const Graph& g) {
  Budget b = default_budget();
  return is_switchable(g, b);
}

ClassVerdict is_flawless(const Graph& g) {
  if (auto hit = find_pre_violation(g, flaw_patterns(), 7)) {
    return {false, "induced pre-" + hit->second, std::nullopt, hit->first};
  }
  return {true, "no induced pre-tripod/armchair/stirrer", std::nullopt,
          std::nullopt};
}

ClassVerdict is_quasimonotone(const Graph& g, Budget& budget) {
  ClassVerdict flaw = is_flawless(g);
  if (!flaw.member) return flaw;
  ClassVerdict och = is_odd_chordal(g, budget);
  if (!och.member) return och;
  return {true, "flawless and odd-chordal", std::nullopt, std::nullopt};
}

ClassVerdict is_quasimonotone(const Graph& g) {
  Budget b = default_budget();
  return is_quasimonotone(g, b);
}

ClassVerdict is_monotone(const Graph& g, Budget& budget) {
  if (!is_bipartite(g)) {
    return {false, "not bipartite", std::nullopt, std::nullopt};
  }
  ClassVerdict verdict{true,
                       "bipartite, hole-free, no tripod/armchair/stirrer",
                       std::nullopt, std::nullopt};
  for_each_even_cycle(g, 6, budget, [&](const CycleSeq& c) {
    if (!is_chordless(g, c)) return true;
    verdict = {false, "chordless cycle of length >= 6", c, std::nullopt};
    return false;
  });
  if (!verdict.member) return verdict;
  for (const char* name : {"tripod", "armchair", "stirrer"}) {
    std::vector<int> witness;
    if (has_induced_subgraph(g, fixture(name), &witness)) {
      return {false, std::string("induced ") + name, std::nullopt, witness};
    }
  }
  return verdict;
}

ClassVerdict is_monotone(const Graph& g) {
  Budget b = default_budget();
  return is_monotone(g, b);
}

ClassVerdict is_chains(const Graph& g) {
  struct Forbidden {
    const char* name;
    Graph pattern;
  };
  static const std::vector<Forbidden> forbidden = {
      {"triangle", complete_graph(3)},
      {"C5", cycle_graph(5)},
      {"P5", path_graph(5)},
  };
  for (const auto& f : forbidden) {
    std::vector<int> witness;
    if (has_induced_subgraph(g, f.pattern, &witness)) {
      return {false, std::string("induced ") + f.name, std::nullopt, witness};
    }
  }
  return {true, "(triangle, C5, P5)-free", std::nullopt, std::nullopt};
}

ClassVerdict is_qua_chains(const Graph& g) {
  static const std::vector<PrePattern> patterns = {
      {"P5", pre_p5_codes(), 5}};
  if (auto hit = find_pre_violation(g, patterns, 5)) {
    return {false, "induced pre-P5", std::nullopt, hit->first};
  }
  return {true, "(pre-P5)-free", std::nullopt, std::nullopt};
}

bool has_nested_neighborhoods(const Graph& g) {
  auto bip = is_bipartite(g);
  if (!bip) return false;
  std::vector<char> on_left(g.n(), 0);
  for (int v : bip->left) on_left[v] = 1;
  for (const auto& comp : connected_components(g)) {
    std::vector<int> left;
    for (int v : comp)
      if (on_left[v]) left.push_back(v);
    std::sort(left.begin(), left.end(), [&](int a, int b) {
      return g.degree(a) < g.degree(b);
    });
    for (size_t i = 0; i + 1 < left.size(); ++i) {
      for (int w : g.neighbors(left[i])) {
        if (!g.has_edge(left[i + 1], w) && left[i + 1] != w) return false;
      }
    }
  }
  return true;
}

}  // namespace matchkit
