#include "matchkit/chain.hpp"

#include <algorithm>
#include <thread>

#include "matchkit/oracle.hpp"

namespace matchkit {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

PerfectMatching rewire(const PerfectMatching& m, Edge out1, Edge out2,
                       Edge in1, Edge in2) {
  std::vector<Edge> edges;
  edges.reserve(m.edges.size());
  for (const auto& e : m.edges)
    if (e != out1 && e != out2) edges.push_back(e);
  edges.push_back(in1);
  edges.push_back(in2);
  return PerfectMatching(std::move(edges));
}

std::vector<int> partner_table(const Graph& g, const PerfectMatching& m) {
  if (!m.is_perfect_in(g)) throw GraphError("not a perfect matching of the graph");
  std::vector<int> partner(g.n(), -1);
  for (const auto& [a, b] : m.edges) {
    partner[a] = b;
    partner[b] = a;
  }
  return partner;
}

}  // namespace

PerfectMatching switch_step_at(const Graph& g, const PerfectMatching& m,
                               int v, int vp) {
  const auto partner = partner_table(g, m);
  if (v < 0 || vp < 0 || v >= g.n() || vp >= g.n())
    throw GraphError("switch_step_at: vertex out of range");
  const int u = partner[v];
  const int up = partner[vp];
  if (v == vp || u == vp) return m;  // hold (laziness)
  if (g.has_edge(up, v) && g.has_edge(u, vp))
    return rewire(m, make_edge(u, v), make_edge(up, vp),
                  make_edge(up, v), make_edge(u, vp));
  return m;
}

PerfectMatching switch_step(const Graph& g, const PerfectMatching& m, Rng& rng) {
  const int n = g.n();
  // Exactly two bounded draws per step, always, so runs are reproducible
  // independent of which branches hold.
  const int v = static_cast<int>(rng.below(n));
  const int vp = static_cast<int>(rng.below(n));
  return switch_step_at(g, m, v, vp);
}

std::set<PerfectMatching> switch_neighbors(const Graph& g, const PerfectMatching& m) {
  partner_table(g, m);  // validates
  std::set<PerfectMatching> out;
  const auto& edges = m.edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [u, v] = edges[i];
      auto [up, vp] = edges[j];
      // Two rewirings of the four endpoints.
      if (g.has_edge(u, up) && g.has_edge(v, vp))
        out.insert(rewire(m, edges[i], edges[j], make_edge(u, up), make_edge(v, vp)));
      if (g.has_edge(u, vp) && g.has_edge(v, up))
        out.insert(rewire(m, edges[i], edges[j], make_edge(u, vp), make_edge(v, up)));
    }
  }
  out.erase(m);
  return out;
}

ChainRun run_chain(const Graph& g, const PerfectMatching& m0, const ChainConfig& cfg) {
  if (cfg.t_max < 0) throw GraphError("negative step count");
  Rng rng(cfg.seed);
  ChainRun run;
  run.final = m0;
  if (cfg.record_trajectory) run.trajectory.push_back(m0);
  for (std::int64_t t = 0; t < cfg.t_max; ++t) {
    run.final = switch_step(g, run.final, rng);
    if (cfg.record_trajectory) run.trajectory.push_back(run.final);
  }
  return run;
}

Histogram sample_distribution(const Graph& g, std::int64_t steps,
                              std::int64_t samples, std::uint64_t seed) {
  auto m0 = find_perfect_matching(g);
  if (!m0) throw GraphError("graph has no perfect matching");

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t num_threads = std::min<std::int64_t>(hw, std::max<std::int64_t>(samples, 1));
  std::vector<Histogram> partial(num_threads);
  std::vector<std::thread> workers;
  for (std::int64_t w = 0; w < num_threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::int64_t i = w; i < samples; i += num_threads) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(i)));
        PerfectMatching m = *m0;
        for (std::int64_t t = 0; t < steps; ++t) m = switch_step(g, m, rng);
        partial[w].counts[m] += 1;
        partial[w].total += 1;
      }
    });
  }
  for (auto& t : workers) t.join();

  Histogram h;
  for (const auto& p : partial) {
    for (const auto& [m, c] : p.counts) h.counts[m] += c;
    h.total += p.total;
  }
  return h;
}

}  // namespace matchkit
