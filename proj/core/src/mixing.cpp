#include "matchkit/mixing.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "matchkit/bigint.hpp"
#include "matchkit/oracle.hpp"

namespace matchkit {

TransitionMatrix transition_matrix(const TransitionGraph& tg) {
  const int n = tg.host_n;
  const int size = tg.size();
  if (size == 0) throw GraphError("transition_matrix: empty transition graph");
  const Rational step(2, std::int64_t{n} * n);
  TransitionMatrix tm{size, n,
                      std::vector<std::vector<Rational>>(
                          size, std::vector<Rational>(size, 0))};
  for (int i = 0; i < size; ++i) {
    for (int j : tg.adjacency[i]) tm.p[i][j] = step;
    tm.p[i][i] = 1 - Rational(2 * tg.adjacency[i].size(),
                              std::int64_t{n} * n);
  }
  return tm;
}

namespace {

long long cross_edges(const TransitionGraph& tg, const std::vector<char>& in_s) {
  long long cross = 0;
  for (int i = 0; i < tg.size(); ++i) {
    if (!in_s[i]) continue;
    for (int j : tg.adjacency[i])
      if (!in_s[j]) ++cross;
  }
  return cross;
}

}  // namespace

CutReport cut_flow(const TransitionGraph& tg, std::vector<int> s) {
  const int size = tg.size();
  std::vector<char> in_s(size, 0);
  for (int v : s) {
    if (v < 0 || v >= size) throw GraphError("cut_flow: node id out of range");
    in_s[v] = 1;
  }
  int count = 0;
  for (char c : in_s) count += c;
  if (count == 0 || count == size)
    throw GraphError("cut_flow: cut must be nontrivial");
  if (2 * count > size) {  // orient so pi(S) <= 1/2
    s.clear();
    for (int i = 0; i < size; ++i) {
      in_s[i] = !in_s[i];
      if (in_s[i]) s.push_back(i);
    }
    count = size - count;
  }
  std::sort(s.begin(), s.end());
  const long long cross = cross_edges(tg, in_s);
  const std::int64_t n2 = std::int64_t{tg.host_n} * tg.host_n;
  CutReport report;
  report.s = std::move(s);
  report.flow = Rational(2 * cross, n2) / size;
  report.pi_s = Rational(count, size);
  report.conductance_of_cut = Rational(2 * cross, n2 * count);
  return report;
}

Rational conductance_exact(const TransitionGraph& tg) {
  const int size = tg.size();
  if (size < 2) throw GraphError("conductance_exact: need at least two nodes");
  if (size > 22) throw GraphError("conductance_exact: transition graph too large");
  long long best_cross = -1, best_count = 1;
  std::vector<char> in_s(size, 0);
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << size); ++mask) {
    const int count = __builtin_popcountll(mask);
    if (2 * count > size) continue;
    for (int i = 0; i < size; ++i) in_s[i] = mask >> i & 1;
    const long long cross = cross_edges(tg, in_s);
    if (best_cross < 0 || cross * best_count < best_cross * count) {
      best_cross = cross;
      best_count = count;
    }
  }
  return Rational(2 * best_cross,
                  std::int64_t{tg.host_n} * tg.host_n * best_count);
}

GkBounds gk_bounds(int k) {
  if (k < 1) throw GraphError("gk_bounds: k must be >= 1");
  BigInt pow3 = 1;
  for (int i = 0; i < k; ++i) pow3 *= 3;
  const BigInt m = 2 * pow3 - 1;  // number of perfect matchings of G_k
  return {Rational(1) / Rational(4 * k * m), Rational(k * m)};
}

double spectral_gap(const TransitionMatrix& tm) {
  if (tm.size > 2000) throw GraphError("spectral_gap: matrix too large");
  if (tm.size == 1) return 1.0;
  Eigen::MatrixXd m(tm.size, tm.size);
  for (int i = 0; i < tm.size; ++i)
    for (int j = 0; j < tm.size; ++j)
      m(i, j) = tm.p[i][j].convert_to<double>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const auto& ev = solver.eigenvalues();  // ascending
  return 1.0 - ev(tm.size - 2);
}

std::vector<TvPoint> tv_curve(const Graph& g,
                              const std::vector<std::int64_t>& t_grid,
                              std::int64_t samples, std::uint64_t seed) {
  const auto all = enumerate_perfect_matchings(g);
  if (all.empty()) throw GraphError("tv_curve: graph has no perfect matching");
  const double uniform = 1.0 / static_cast<double>(all.size());
  std::vector<TvPoint> out;
  for (std::int64_t t : t_grid) {
    Histogram hist = sample_distribution(g, t, samples, seed);
    double tv = 0.0, var = 0.0;
    for (const auto& m : all) {
      auto it = hist.counts.find(m);
      const double p =
          it == hist.counts.end()
              ? 0.0
              : static_cast<double>(it->second) / static_cast<double>(samples);
      tv += std::abs(p - uniform);
      var += p * (1.0 - p) / static_cast<double>(samples);
    }
    out.push_back({t, tv / 2.0, std::sqrt(var) / 2.0});
  }
  return out;
}

}  // namespace matchkit
