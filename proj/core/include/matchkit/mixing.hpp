#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/transition_graph.hpp"

namespace matchkit {

using Rational = boost::multiprecision::cpp_rational;

/// Lazy switch-chain kernel over an explicit transition graph, kept as
/// exact rationals: P(M,M') = 2/n^2 on edges, the rest on the diagonal.
/// Symmetric, so the uniform distribution is stationary.
struct TransitionMatrix {
  int size = 0;
  int host_n = 0;
  std::vector<std::vector<Rational>> p;

  Rational pi() const { return Rational(1, size); }  // uniform
};

TransitionMatrix transition_matrix(const TransitionGraph& tg);

/// Exact probability flow through one cut, oriented so pi(S) <= 1/2.
struct CutReport {
  std::vector<int> s;  // node ids on the small side
  Rational flow;       // Q(S, complement)
  Rational pi_s;
  Rational conductance_of_cut;
};

CutReport cut_flow(const TransitionGraph& tg, std::vector<int> s);

/// Minimum cut conductance over all nontrivial cuts with pi(S) <= 1/2;
/// exhaustive over 2^N subsets, capped at N <= 22. Zero iff disconnected.
Rational conductance_exact(const TransitionGraph& tg);

/// Closed-form slow-mixing bounds for the staircase gadget: the one-cut
/// conductance bound 1/(4k(2*3^k - 1)) and the implied mixing-time lower
/// bound k(2*3^k - 1).
struct GkBounds {
  Rational phi_upper;
  Rational tmix_lower;
};
GkBounds gk_bounds(int k);

/// 1 - lambda_2 of the symmetric kernel, dense eigensolve, ~1e-9 accurate.
double spectral_gap(const TransitionMatrix& tm);

/// Empirical total-variation distance to uniform after t steps, estimated
/// from `samples` independent walks per grid point, with the Monte-Carlo
/// standard error of the TV estimate.
struct TvPoint {
  std::int64_t t = 0;
  double tv = 0.0;
  double std_error = 0.0;
};

std::vector<TvPoint> tv_curve(const Graph& g,
                              const std::vector<std::int64_t>& t_grid,
                              std::int64_t samples, std::uint64_t seed);

}  // namespace matchkit
