#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

/// Deterministic 64-bit generator: std::mt19937_64, whose output sequence
/// is pinned by the C++ standard, with an explicit rejection sampler so
/// bounded draws are identical on every platform (the standard library's
/// distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw in [0, n), unbiased via rejection.
  std::uint64_t below(std::uint64_t n);

  /// Replica seeding: splitmix64 finalizer over (seed, index).
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

struct ChainConfig {
  std::int64_t t_max = 0;
  std::uint64_t seed = 0;
  bool record_trajectory = false;
};

struct Histogram {
  std::map<PerfectMatching, std::int64_t> counts;
  std::int64_t total = 0;
};

/// One step of the switch chain: draws an ordered pair (v,v') with two
/// bounded RNG draws, and performs the rewiring {u'v, uv'} when legal.
/// Degenerate draws (v = v', or v matched to v') hold.
PerfectMatching switch_step(const Graph& g, const PerfectMatching& m, Rng& rng);

/// The deterministic outcome of one step for a fixed ordered draw (v, v').
/// switch_step is exactly this applied to two uniform draws, so enumerating
/// all n*n ordered pairs gives the exact one-step law.  Each neighboring
/// matching is produced by exactly four ordered draws (the two endpoints the
/// switch unmatches, in either order, and likewise the two it rematches), so
/// every neighbor has single-step probability 4/n^2.
PerfectMatching switch_step_at(const Graph& g, const PerfectMatching& m,
                               int v, int vp);

/// All matchings one non-trivial switch away from m: for each pair of
/// matched edges, both candidate rewirings of the four endpoints.
std::set<PerfectMatching> switch_neighbors(const Graph& g, const PerfectMatching& m);

struct ChainRun {
  PerfectMatching final;
  std::vector<PerfectMatching> trajectory;  // filled iff requested; includes m0
};

ChainRun run_chain(const Graph& g, const PerfectMatching& m0, const ChainConfig& cfg);

/// N independent trajectories of t steps from the oracle's first matching,
/// replica i seeded with Rng::mix(seed, i); returns the end-state histogram.
Histogram sample_distribution(const Graph& g, std::int64_t steps,
                              std::int64_t samples, std::uint64_t seed);

}  // namespace matchkit
