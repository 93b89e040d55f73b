#include "matchkit/exact_count.hpp"

#include <algorithm>

#include "matchkit/cotree.hpp"
#include "matchkit/oracle.hpp"

namespace matchkit {

namespace {

/// Builds a ChainModel from a fixed side assignment, or fails when the
/// x-side neighborhoods are not totally ordered by inclusion.
std::optional<ChainModel> chain_from_sides(const Graph& g, std::vector<int> xs,
                                           std::vector<int> ys) {
  std::stable_sort(xs.begin(), xs.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    for (int w : g.neighbors(xs[i]))
      if (!g.has_edge(xs[i + 1], w)) return std::nullopt;
  }
  std::stable_sort(ys.begin(), ys.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  ChainModel model{std::move(xs), std::move(ys), {}};
  for (int x : model.x_order) model.x_deg.push_back(g.degree(x));
  return model;
}

}  // namespace

std::optional<ChainModel> recognize_chain(const Graph& g) {
  auto bip = is_bipartite(g);
  if (!bip) return std::nullopt;
  // Each component's two-coloring is unique up to a swap; isolated vertices
  // always fit on the x side (empty neighborhoods nest below everything).
  std::vector<std::vector<int>> comps;
  std::vector<int> isolated;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1)
      isolated.push_back(comp[0]);
    else
      comps.push_back(comp);
  }
  if (comps.size() > 20)
    throw GraphError("recognize_chain: too many components to try");
  std::vector<char> base_left(g.n(), 0);
  for (int v : bip->left) base_left[v] = 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << comps.size());
       ++mask) {
    std::vector<int> xs = isolated, ys;
    for (size_t c = 0; c < comps.size(); ++c) {
      const bool swap = mask >> c & 1;
      for (int v : comps[c])
        ((base_left[v] != swap) ? xs : ys).push_back(v);
    }
    if (auto model = chain_from_sides(g, std::move(xs), std::move(ys)))
      return model;
  }
  return std::nullopt;
}

std::optional<CochainModel> recognize_cochain(const Graph& g) {
  auto chain = recognize_chain(g.complement());
  if (!chain) return std::nullopt;
  return CochainModel{g, std::move(*chain)};
}

std::vector<BigInt> chain_profile(const ChainModel& c) {
  const int n = static_cast<int>(c.x_order.size());
  std::vector<BigInt> row(n + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(n + 1, 0);
    next[0] = 1;
    for (int s = 1; s <= i; ++s) {
      const int factor = std::max(c.x_deg[i - 1] - s + 1, 0);
      next[s] = row[s] + factor * row[s - 1];
    }
    row = std::move(next);
  }
  return row;
}

BigInt pm_complete(int q) {
  if (q < 0) throw GraphError("pm_complete: negative order");
  if (q % 2 != 0) return 0;
  BigInt r = 1;
  for (int i = 1; i < q; i += 2) r *= i;
  return r;
}

BigInt count_pm_cochain(const CochainModel& m) {
  const int n = static_cast<int>(m.chain.x_order.size());
  const int mm = static_cast<int>(m.chain.y_order.size());
  if (n + mm != m.host.n())
    throw GraphError("count_pm_cochain: model does not cover the host");
  // Cross edges of the host are the bipartite complement of the chain
  // structure, itself a chain graph with the neighborhood nesting reversed:
  // the s cross edges of a perfect matching come from that complement.
  ChainModel cross;
  cross.x_order.assign(m.chain.x_order.rbegin(), m.chain.x_order.rend());
  cross.y_order = m.chain.y_order;
  for (auto it = m.chain.x_deg.rbegin(); it != m.chain.x_deg.rend(); ++it)
    cross.x_deg.push_back(mm - *it);
  const auto profile = chain_profile(cross);
  BigInt total = 0;
  for (int s = 0; s <= std::min(n, mm); ++s)
    total += profile[s] * pm_complete(n - s) * pm_complete(mm - s);
  return total;
}

CountResult count_pm_auto(const Graph& g, Budget& budget, int width_cap) {
  if (auto cotree = build_cotree(g)) {
    if (g.n() % 2 != 0) return {0, "cograph", -1};
    return {cograph_profile(*cotree).counts[g.n() / 2], "cograph", -1};
  }
  if (auto model = recognize_cochain(g))
    return {count_pm_cochain(*model), "cochain", -1};
  TreeDecomposition d = minfill_td(g);
  if (d.width() <= width_cap)
    return {count_pm_td(g, make_nice(d)), "treewidth", d.width()};
  return {BigInt(enumerate_perfect_matchings(g, budget).size()), "brute", -1};
}

CountResult count_pm_auto(const Graph& g) {
  Budget b = default_budget();
  return count_pm_auto(g, b);
}

}  // namespace matchkit
