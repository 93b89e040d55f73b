// Acceptance gate for the perfect-matching toolkit.  Runs twelve
// independent checks, prints one PASS/FAIL line per check, and exits
// nonzero when any fail.  All tolerances and expected values are pinned
// here, frozen from independent oracles.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "matchkit/chain.hpp"
#include "matchkit/classes.hpp"
#include "matchkit/cotree.hpp"
#include "matchkit/cycles.hpp"
#include "matchkit/exact_count.hpp"
#include "matchkit/gadgets.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/mixing.hpp"
#include "matchkit/oracle.hpp"
#include "matchkit/smallgraph.hpp"
#include "matchkit/transition_graph.hpp"
#include "matchkit/treewidth.hpp"

#include "graphgen.hpp"

namespace mk = matchkit;
namespace ts = matchkit::testsupport;

namespace {

struct Result {
  bool pass = true;
  std::string note;
};

class Check {
 public:
  Check() = default;

  void require(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    pass_ = false;
    if (!notes_.empty()) notes_ += "; ";
    notes_ += what;
  }
  void note(const std::string& what) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += what;
  }
  Result done(const std::string& ok_note = "") const {
    return {pass_, pass_ ? ok_note : notes_};
  }

 private:
  bool pass_ = true;
  std::string notes_;
};

mk::BigInt pow3(int k) {
  mk::BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= 3;
  return r;
}

// ---------------------------------------------------------------------------
// 1. Staircase gadget counts: slow_gk(k) has exactly 2*3^k - 1 perfect
//    matchings, verified by the cograph counter for k = 1..10 and by brute
//    enumeration for k <= 5.
Result criterion_counts() {
  Check c;
  for (int k = 1; k <= 10; ++k) {
    const mk::Graph g = mk::slow_gk(k);
    const mk::BigInt expected = 2 * pow3(k) - 1;
    c.require(mk::count_pm_cograph(g) == expected,
              "cograph count mismatch at k=" + std::to_string(k));
    if (k <= 5) {
      c.require(static_cast<mk::BigInt>(
                    mk::enumerate_perfect_matchings(g).size()) == expected,
                "oracle count mismatch at k=" + std::to_string(k));
    }
  }
  return c.done("2*3^k-1 matchings for k=1..10");
}

// 2. Web family: connected transition graph for k = 1..3, and the two
//    all-ring matchings are 2 apart for k=1 and 10 apart for k=2.
Result criterion_web() {
  Check c;
  const int expected_pms[] = {0, 3, 0, 141};
  for (int k = 1; k <= 3; ++k) {
    const mk::Graph g = mk::spiders_web(k);
    auto tg = mk::build_transition_graph(g);
    if (expected_pms[k] != 0)
      c.require(tg.size() == expected_pms[k],
                "matching count at k=" + std::to_string(k));
    c.require(mk::components(tg).size() == 1,
              "transition graph disconnected at k=" + std::to_string(k));
    auto [m1, m2] = mk::web_special_matchings(k);
    auto d = mk::distance(tg, m1, m2);
    c.require(d.has_value(), "special matchings unreachable");
    if (d) {
      if (k == 1) c.require(*d == 2, "k=1 distance != 2");
      if (k == 2) c.require(*d == 10, "k=2 distance != 10");
    }
  }
  return c.done("connected for k=1..3; distances 2 and 10");
}

// 3. Annulus (two hexagons, no spoke): 20 matchings in components of sizes
//    18 + 1 + 1, and each singleton uses ring edges only.
Result criterion_annulus() {
  Check c;
  const mk::Graph g = mk::web_annulus();
  auto tg = mk::build_transition_graph(g);
  c.require(tg.size() == 20, "expected 20 matchings");
  auto comps = mk::components(tg);
  c.require(comps.size() == 3, "expected 3 components");
  std::vector<std::size_t> sizes;
  for (const auto& comp : comps) sizes.push_back(comp.size());
  std::sort(sizes.begin(), sizes.end());
  c.require(sizes == std::vector<std::size_t>({1, 1, 18}),
            "component sizes not 18+1+1");
  for (const auto& comp : comps) {
    if (comp.size() != 1) continue;
    for (const auto& [u, v] : tg.nodes[comp[0]].edges) {
      const bool ring = (u < 6 && v < 6) || (u >= 6 && v >= 6);
      c.require(ring, "frozen matching uses a radial edge");
    }
  }
  return c.done("20 matchings, components 18+1+1, singletons all-ring");
}

// 4 + 5 share one pass over the corpus: every connected graph on 4, 6 and 8
// vertices up to isomorphism, plus 500 random 10-vertex graphs.
struct EquivStats {
  std::atomic<long> mismatches{0};
  std::atomic<long> diam_sw{0};   // switchable diameter bound violations
  std::atomic<long> diam_och{0};  // odd-chordal diameter bound violations
  std::atomic<long> checked{0};
};

void equivalence_pass(const std::vector<mk::Graph>& corpus, EquivStats& st) {
  std::atomic<std::size_t> next{0};
  const unsigned workers =
      std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= corpus.size()) return;
        const mk::Graph& g = corpus[i];
        const bool sw = mk::is_switchable(g).member;
        const bool he = mk::is_hereditarily_ergodic_bruteforce(g);
        if (sw != he) ++st.mismatches;
        auto tg = mk::build_transition_graph(g);
        if (tg.size() >= 2) {
          auto diam = mk::diameter(tg);
          if (sw) {
            if (!diam || *diam > g.n() - 3) ++st.diam_sw;
            if (diam && mk::is_odd_chordal(g).member && *diam > g.n() / 2 - 1)
              ++st.diam_och;
          }
        }
        ++st.checked;
      }
    });
  }
  for (auto& t : pool) t.join();
}

EquivStats g_equiv;  // filled once, read by criteria 4 and 5

void run_equivalence_corpus() {
  std::vector<mk::Graph> corpus;
  for (int n : {4, 6, 8})
    for (const auto& g : ts::connected_graphs(n)) corpus.push_back(g);
  for (std::uint64_t seed = 1; seed <= 500; ++seed)
    corpus.push_back(ts::random_graph(10, 0.5, seed));
  equivalence_pass(corpus, g_equiv);
}

Result criterion_equivalence() {
  Check c;
  c.require(g_equiv.mismatches.load() == 0,
            std::to_string(g_equiv.mismatches.load()) +
                " switchable/hereditarily-ergodic mismatches");
  return c.done("switchable == hereditarily ergodic on " +
                std::to_string(g_equiv.checked.load()) + " graphs");
}

Result criterion_diameter() {
  Check c;
  c.require(g_equiv.diam_sw.load() == 0,
            std::to_string(g_equiv.diam_sw.load()) +
                " diameter > n-3 violations (switchable)");
  c.require(g_equiv.diam_och.load() == 0,
            std::to_string(g_equiv.diam_och.load()) +
                " diameter > n/2-1 violations (odd-chordal)");
  return c.done("diameter <= n-3 (switchable) and <= n/2-1 (odd-chordal)");
}

// 6. Cross-ladder: both canonical matchings are perfect, yet mutually
//    unreachable, for k = 2 and k = 3.
Result criterion_cross_ladder() {
  Check c;
  for (int k : {2, 3}) {
    auto cl = mk::cross_ladder(k);
    c.require(cl.x.is_perfect_in(cl.graph) && cl.y.is_perfect_in(cl.graph),
              "X or Y not a perfect matching at k=" + std::to_string(k));
    auto tg = mk::build_transition_graph(cl.graph);
    c.require(mk::components(tg).size() >= 2,
              "transition graph connected at k=" + std::to_string(k));
    c.require(!mk::distance(tg, cl.x, cl.y).has_value(),
              "X reaches Y at k=" + std::to_string(k));
  }
  return c.done("X and Y mutually unreachable for k=2,3");
}

// 7. Ergodicity fixtures: known non-ergodic and ergodic hosts.
Result criterion_ergodicity_fixtures() {
  Check c;
  c.require(!mk::is_ergodic(mk::fixture("fig7_cograph")), "fig7 ergodic");
  c.require(!mk::is_ergodic(mk::cycle_graph(6)), "C6 ergodic");
  c.require(!mk::is_ergodic(mk::web_annulus()), "annulus ergodic");
  c.require(!mk::is_ergodic(mk::cross_ladder(2).graph), "cross-ladder ergodic");
  c.require(mk::is_ergodic(mk::mobius_ladder(8)), "Mobius ladder non-ergodic");
  c.require(mk::is_ergodic(mk::spiders_web(2)), "web non-ergodic");
  c.require(mk::is_ergodic(mk::complete_graph(4)), "K4 non-ergodic");
  return c.done("4 non-ergodic and 3 ergodic hosts confirmed");
}

// 8. Structured counters against the enumeration oracle: 100 random
//    instances per family (cographs, cochain graphs, partial 3-trees), up
//    to 14 vertices.
Result criterion_counters() {
  Check c;
  for (int i = 0; i < 100; ++i) {
    const int n = 4 + 2 * (i % 6);  // 4..14
    {
      const mk::Graph g = ts::random_cograph(n, 1000 + i);
      const mk::BigInt truth = mk::enumerate_perfect_matchings(g).size();
      if (mk::count_pm_cograph(g) != truth)
        c.fail("cograph mismatch, instance " + std::to_string(i));
    }
    {
      const mk::Graph g = ts::random_cochain_graph(n, 2000 + i);
      auto m = mk::recognize_cochain(g);
      if (!m) {
        c.fail("cochain not recognized, instance " + std::to_string(i));
      } else if (mk::count_pm_cochain(*m) !=
                 mk::BigInt(mk::enumerate_perfect_matchings(g).size())) {
        c.fail("cochain mismatch, instance " + std::to_string(i));
      }
    }
    {
      const mk::Graph g = ts::random_partial_ktree(n, 3, 3000 + i);
      auto td = mk::minfill_td(g);
      if (mk::count_pm_td(g, mk::make_nice(td)) !=
          mk::BigInt(mk::enumerate_perfect_matchings(g).size()))
        c.fail("treewidth mismatch, instance " + std::to_string(i));
    }
  }
  return c.done("300 instances agree with the oracle");
}

// 9. Complete-graph matching counts: pm_complete(q) equals the brute count
//    on K_q for q = 0..12, including the double-factorial closed form.
Result criterion_pm_complete() {
  Check c;
  mk::BigInt dfact = 1;
  for (int q = 0; q <= 12; ++q) {
    const mk::BigInt got = mk::pm_complete(q);
    if (q % 2 == 1) {
      c.require(got == 0, "odd q=" + std::to_string(q) + " nonzero");
    } else {
      if (q > 0) dfact *= (q - 1);
      c.require(got == dfact,
                "closed form mismatch at q=" + std::to_string(q));
      c.require(got == mk::BigInt(mk::enumerate_perfect_matchings(
                           mk::complete_graph(q)).size()),
                "oracle mismatch at q=" + std::to_string(q));
    }
  }
  return c.done("(q-1)!! on K_q for q=0..12, pm_complete(4)=3");
}

// 10. Staircase-gadget conductance.  The cut S consists of the matchings
//     that pair the bridge vertices as {7,9} and {8,10} (1-based), i.e. the
//     far side of the staircase, minus the one crossing matching M0.
//
//     Pinned reference values assert flow(S) = 1/200 and a global
//     conductance bound of 1/136 for k = 2.  Both derive from counting one
//     transition-graph edge per staircase pair, but each such switch admits
//     two legal rewirings (the hub vertices x1, x2 are adjacent to
//     everything), so the cut carries 2k edges, not k.  The exact values,
//     computed here from the explicit transition graph, are twice the
//     pinned ones; sub-checks (a) and (b) therefore fail and are reported
//     honestly.  The closed-form bounds in (c)-(d) and the qualitative
//     slow-mixing conclusion are unaffected.
Result criterion_gk_conductance() {
  Check c;
  const mk::Graph g = mk::slow_gk(2);
  auto tg = mk::build_transition_graph(g);
  c.require(tg.size() == 17, "expected 17 matchings for k=2");

  const mk::Matching m0({{0, 2}, {1, 3}, {4, 5}, {6, 8}, {7, 9}});
  c.require(m0.is_perfect_in(g), "crossing matching M0 not perfect");
  std::vector<int> s;
  for (int i = 0; i < tg.size(); ++i) {
    const auto& m = tg.nodes[i];
    if (m.contains({6, 8}) && m.contains({7, 9}) && !(m == m0))
      s.push_back(i);
  }
  c.require(s.size() == 8, "expected |S| = 8");
  auto rep = mk::cut_flow(tg, s);
  c.require(rep.pi_s == mk::Rational(8, 17), "pi(S) != 8/17");

  // (a) pinned: flow-derived cut conductance exactly 1/200.
  if (rep.conductance_of_cut != mk::Rational(1, 200)) {
    c.fail("(a) cut conductance = " + rep.conductance_of_cut.str() +
           ", pinned 1/200 (cut carries 2k edges, not k)");
  }
  // (b) pinned: global conductance at most 1/136 = 1/(4k(2*3^k-1)).
  auto phi = mk::conductance_exact(tg);
  if (!(phi <= mk::Rational(1, 136))) {
    c.fail("(b) exact conductance = " + phi.str() +
           " > pinned bound 1/136 (same factor of two)");
  }
  // (c) closed-form bound values.
  auto b2 = mk::gk_bounds(2);
  c.require(b2.phi_upper == mk::Rational(1, 136) &&
                b2.tmix_lower == mk::Rational(34),
            "(c) closed forms for k=2");
  for (int k = 2; k <= 6; ++k) {
    auto b = mk::gk_bounds(k);
    const mk::BigInt m = 2 * pow3(k) - 1;
    c.require(b.phi_upper == mk::Rational(1) / (4 * k * mk::Rational(m)) &&
                  b.tmix_lower == k * mk::Rational(m),
              "(c) closed forms at k=" + std::to_string(k));
  }
  // (d) the lower bound beats the matching count: k(2*3^k-1) > 3^{k+1}.
  for (int k = 2; k <= 6; ++k) {
    auto b = mk::gk_bounds(k);
    c.require(b.tmix_lower > mk::Rational(pow3(k + 1)),
              "(d) bound not superpolynomial at k=" + std::to_string(k));
  }
  return c.done();
}

// 11. Bipartition-quantified class characterizations on 300 random graphs
//     with up to 9 vertices.
template <typename Fn>
bool for_all_bipartitions(const mk::Graph& g, Fn&& pred) {
  const int n = g.n();
  if (n == 0) return true;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    mk::Bipartition b;
    b.left.push_back(0);
    for (int v = 1; v < n; ++v)
      ((mask >> (v - 1)) & 1 ? b.right : b.left).push_back(v);
    if (!pred(mk::cut_bigraph(g, b))) return false;
  }
  return true;
}

bool chordal_bipartite(const mk::Graph& g) {
  mk::Budget budget = mk::default_budget();
  bool ok = true;
  mk::for_each_even_cycle(g, 6, budget, [&](const mk::CycleSeq& cyc) {
    if (mk::is_chordless(g, cyc)) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

Result criterion_quasi_classes() {
  Check c;
  for (int i = 0; i < 300; ++i) {
    const int n = 5 + (i % 5);  // 5..9
    const double p = 0.3 + 0.2 * (i % 3);
    const mk::Graph g = ts::random_graph(n, p, 7000 + i);
    if (mk::is_odd_chordal(g).member != for_all_bipartitions(g, chordal_bipartite))
      c.fail("odd-chordal characterization, instance " + std::to_string(i));
    if (mk::is_quasimonotone(g).member !=
        for_all_bipartitions(
            g, [](const mk::Graph& cb) { return mk::is_monotone(cb).member; }))
      c.fail("quasimonotone characterization, instance " + std::to_string(i));
    if (mk::is_bipartite(g) &&
        mk::is_chains(g).member != mk::has_nested_neighborhoods(g))
      c.fail("chain-graph nestedness, instance " + std::to_string(i));
  }
  return c.done("3 characterizations hold on 300 random graphs");
}

// 12. Sampler uniformity: 50000 end states after 2000 steps, chi-square
//     against uniform at significance 1e-3, on K4 and the 8-vertex Mobius
//     ladder (both ergodic).
Result criterion_uniformity() {
  Check c;
  struct Case {
    std::string name;
    mk::Graph g;
    std::uint64_t seed;
  };
  std::vector<Case> cases = {{"K4", mk::complete_graph(4), 11},
                             {"ML8", mk::mobius_ladder(8), 12}};
  std::mutex mu;
  std::vector<std::thread> pool;
  for (const auto& cs : cases) {
    pool.emplace_back([&, cs] {
      const std::int64_t kSamples = 50'000;
      auto pms = mk::enumerate_perfect_matchings(cs.g);
      auto h = mk::sample_distribution(cs.g, 2000, kSamples, cs.seed);
      const double expected = double(kSamples) / double(pms.size());
      double chi2 = 0.0;
      std::int64_t seen = 0;
      for (const auto& m : pms) {
        auto it = h.counts.find(m);
        const double obs = it == h.counts.end() ? 0.0 : double(it->second);
        seen += it == h.counts.end() ? 0 : it->second;
        chi2 += (obs - expected) * (obs - expected) / expected;
      }
      boost::math::chi_squared_distribution<double> dist(
          double(pms.size() - 1));
      const double cutoff = boost::math::quantile(dist, 1.0 - 1e-3);
      std::lock_guard<std::mutex> lock(mu);
      if (seen != kSamples) c.fail(cs.name + ": sampler left the state space");
      if (chi2 >= cutoff) {
        std::ostringstream ss;
        ss << cs.name << ": chi2 = " << chi2 << " >= " << cutoff;
        c.fail(ss.str());
      }
    });
  }
  for (auto& t : pool) t.join();
  return c.done("chi-square below the 0.999 quantile on K4 and ML8");
}

}  // namespace

int main() {
  run_equivalence_corpus();

  struct Criterion {
    std::string name;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {"staircase matching counts", criterion_counts},
      {"web connectivity and distances", criterion_web},
      {"annulus frozen matchings", criterion_annulus},
      {"switchable == hereditarily ergodic", criterion_equivalence},
      {"transition-graph diameter bounds", criterion_diameter},
      {"cross-ladder non-ergodicity", criterion_cross_ladder},
      {"ergodicity fixtures", criterion_ergodicity_fixtures},
      {"structured counters vs oracle", criterion_counters},
      {"complete-graph counts", criterion_pm_complete},
      {"staircase conductance", criterion_gk_conductance},
      {"bipartition class characterizations", criterion_quasi_classes},
      {"sampler uniformity", criterion_uniformity},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failures;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << (i + 1) << ". "
              << criteria[i].name;
    if (!r.note.empty()) std::cout << " — " << r.note;
    std::cout << "\n";
  }
  if (failures) {
    std::cout << failures << " of " << criteria.size()
              << " acceptance criteria failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  return 0;
}
