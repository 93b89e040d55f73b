#include "matchkit/gadgets.hpp"

#include <algorithm>
#include <map>

#include "matchkit/chain.hpp"

namespace matchkit {

Graph path_graph(int n) {
  if (n < 1) throw GraphError("path_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle_graph: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 0) throw GraphError("complete_graph: n must be >= 0");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back(make_edge(u, a + v));
  return Graph(a + b, std::move(edges));
}

Graph mobius_ladder(int r) {
  if (r < 4 || r % 2 != 0)
    throw GraphError("mobius_ladder: r must be even and >= 4");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < r; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, r - 1});
  for (int i = 0; i < r / 2; ++i) edges.push_back({i, i + r / 2});
  return Graph(r, std::move(edges));
}

CrossLadder cross_ladder(int k) {
  if (k < 2) throw GraphError("cross_ladder: k must be >= 2");
  const int n = 4 * k;
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  // One even switch per block of four cycle vertices; the two chords pair
  // positions (4i, 4i+2) and (4i+1, 4i+3), and there is no crossing chord.
  for (int i = 0; i < k; ++i) {
    edges.push_back({4 * i, 4 * i + 2});
    edges.push_back({4 * i + 1, 4 * i + 3});
  }
  std::vector<Edge> x_edges, y_edges;
  for (int i = 0; i < 2 * k; ++i) x_edges.push_back({2 * i, 2 * i + 1});
  for (int i = 0; i + 1 < 2 * k; ++i) y_edges.push_back({2 * i + 1, 2 * i + 2});
  y_edges.push_back({0, n - 1});
  return {Graph(n, std::move(edges)), PerfectMatching(std::move(x_edges)),
          PerfectMatching(std::move(y_edges))};
}

Graph slow_gk(int k) {
  if (k < 1) throw GraphError("slow_gk: k must be >= 1");
  // Vertex layout: u_1..u_k, w_1..w_k, x1, x2, y_1..y_k, z_1..z_k.
  auto u = [&](int i) { return i - 1; };
  auto w = [&](int i) { return k + i - 1; };
  const int x1 = 2 * k, x2 = 2 * k + 1;
  auto y = [&](int i) { return 2 * k + 2 + i - 1; };
  auto z = [&](int i) { return 3 * k + 2 + i - 1; };
  const int n = 4 * k + 2;

  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      edges.push_back(make_edge(u(i), w(j)));  // staircase u_i w_j, i <= j
      edges.push_back(make_edge(z(i), y(j)));  // staircase z_i y_j, i <= j
    }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      edges.push_back(make_edge(w(i), w(j)));  // W clique
      edges.push_back(make_edge(y(i), y(j)));  // Y clique
    }
  for (int v = 0; v < n; ++v) {
    if (v != x1) edges.push_back(make_edge(x1, v));
    if (v != x2 && v != x1) edges.push_back(make_edge(x2, v));
  }
  return Graph(n, std::move(edges));
}

namespace {

// 0-based index of web vertex u_{ij}, i >= 1, j in [1,6].
int web_vertex(int i, int j) { return (i - 1) * 6 + (j - 1); }

}  // namespace

Graph spiders_web(int k) {
  if (k < 1) throw GraphError("spiders_web: k must be >= 1");
  std::vector<Edge> edges;
  edges.push_back(make_edge(web_vertex(1, 1), web_vertex(1, 4)));  // spoke
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= 6; ++j) {
      edges.push_back(make_edge(web_vertex(i, j), web_vertex(i, j % 6 + 1)));
      if (i > 1)
        edges.push_back(make_edge(web_vertex(i - 1, j), web_vertex(i, j)));
    }
  }
  return Graph(6 * k, std::move(edges));
}

std::pair<PerfectMatching, PerfectMatching> web_special_matchings(int k) {
  if (k < 1) throw GraphError("web_special_matchings: k must be >= 1");
  std::vector<Edge> m1, m2;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= 6; ++j) {
      Edge e = make_edge(web_vertex(i, j), web_vertex(i, j % 6 + 1));
      ((i + j) % 2 == 0 ? m1 : m2).push_back(e);
    }
  }
  return {PerfectMatching(std::move(m1)), PerfectMatching(std::move(m2))};
}

Graph web_annulus() {
  std::vector<Edge> edges;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 6; ++j) {
      edges.push_back(make_edge(web_vertex(i, j), web_vertex(i, j % 6 + 1)));
      if (i == 2)
        edges.push_back(make_edge(web_vertex(1, j), web_vertex(2, j)));
    }
  return Graph(12, std::move(edges));
}

namespace {

Graph from_edges(int n, std::vector<Edge> raw) {
  for (auto& e : raw) e = make_edge(e.first, e.second);
  return Graph(n, std::move(raw));
}

std::map<std::string, Graph> make_fixtures() {
  std::map<std::string, Graph> f;

  // Six-cycle 0..5 used by several fixtures below.
  const std::vector<Edge> c6 = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
  auto with_c6 = [&](std::vector<Edge> extra) {
    std::vector<Edge> e = c6;
    e.insert(e.end(), extra.begin(), extra.end());
    return from_edges(6, std::move(e));
  };

  // Cograph join of two 3-vertex paths; its two halves each hold a perfect
  // matching edge, but the switch chain cannot move between them.
  f.emplace("fig7_cograph", with_c6({{0, 2}, {2, 4}, {1, 5}, {3, 5}}));
  // Four-rung ladder with a triangle at each end, drawn as a permutation
  // diagram; no odd chord and no even switch.
  f.emplace("fig8_permutation",
            from_edges(6, {{0, 1}, {1, 3}, {2, 3}, {2, 4}, {4, 5}, {0, 5},
                           {0, 3}, {2, 5}}));

  f.emplace("fig4a", with_c6({{0, 4}, {0, 3}}));
  f.emplace("fig4b", with_c6({{0, 4}}));
  f.emplace("fig4c", from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                                    {2, 5}, {5, 6}, {6, 7}, {2, 7}}));
  f.emplace("fig4d", with_c6({{1, 3}, {3, 5}, {1, 5}}));

  // The three 7-vertex forbidden patterns for monotone graphs.
  f.emplace("tripod", from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5},
                                     {5, 6}}));
  f.emplace("armchair", from_edges(7, {{6, 5}, {5, 4}, {4, 2}, {2, 3}, {3, 1},
                                       {0, 2}, {3, 5}}));
  f.emplace("stirrer", from_edges(7, {{0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3},
                                      {3, 0}, {1, 4}, {4, 6}}));

  // Forbidden patterns for unit interval graphs.
  f.emplace("claw", from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
  f.emplace("net", from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4},
                                  {2, 5}}));
  f.emplace("3sun", with_c6({{0, 2}, {2, 4}, {0, 4}}));

  // The ten five-vertex graphs admitting a bipartition whose cut-graph
  // is P5.
  f.emplace("p5", path_graph(5));
  f.emplace("c5", cycle_graph(5));
  f.emplace("bull", from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 2}}));
  f.emplace("cobanner", from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3},
                                       {3, 4}}));
  f.emplace("dart", from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 2},
                                   {0, 4}}));
  f.emplace("butterfly", from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3},
                                        {2, 4}, {3, 4}}));
  f.emplace("house", from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4},
                                    {2, 4}}));
  f.emplace("3fan", from_edges(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {0, 1},
                                   {1, 3}, {3, 4}}));
  f.emplace("sailboat", from_edges(5, {{0, 1}, {1, 2}, {2, 4}, {4, 3}, {0, 4},
                                       {0, 3}, {3, 2}}));
  f.emplace("w4", from_edges(5, {{0, 1}, {1, 3}, {3, 4}, {0, 4}, {0, 2},
                                 {1, 2}, {2, 3}, {2, 4}}));

  // A 19-vertex chordal quasimonotone example: a caterpillar-like spine
  // m1, m3, ..., m13 with top/bottom vertices t/b at even positions.
  {
    auto m = [](int i) { return (i - 1) / 2; };            // i odd, 1..13
    auto t = [](int i) { return 7 + i / 2 - 1; };          // i even, 2..12
    auto b = [](int i) { return 13 + i / 2 - 1; };         // i even, 2..12
    std::vector<Edge> e;
    for (int i = 1; i <= 11; i += 2) {
      e.push_back(make_edge(m(i), t(i + 1)));
      e.push_back(make_edge(m(i), b(i + 1)));
    }
    for (int i = 3; i <= 13; i += 2) {
      e.push_back(make_edge(m(i), t(i - 1)));
      e.push_back(make_edge(m(i), b(i - 1)));
    }
    e.push_back(make_edge(t(2), b(2)));
    e.push_back(make_edge(t(8), b(8)));
    e.push_back(make_edge(t(10), b(10)));
    e.push_back(make_edge(m(3), m(5)));
    e.push_back(make_edge(m(5), m(7)));
    e.push_back(make_edge(m(11), m(13)));
    f.emplace("fig13b", from_edges(19, std::move(e)));
  }

  return f;
}

const std::map<std::string, Graph>& fixtures() {
  static const std::map<std::string, Graph> f = make_fixtures();
  return f;
}

}  // namespace

Graph fixture(const std::string& name) {
  const auto& f = fixtures();
  auto it = f.find(name);
  if (it == f.end()) throw GraphError("unknown fixture: " + name);
  return it->second;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, g] : fixtures()) names.push_back(name);
  return names;
}

Graph random_unit_interval(int n, std::uint64_t seed) {
  if (n < 1) throw GraphError("random_unit_interval: n must be >= 1");
  Rng rng(seed);
  std::vector<double> left(n);
  for (int i = 0; i < n; ++i) {
    // 53-bit mantissa draw, scaled to [0, n/2]: bit-exact per seed.
    double u = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
    left[i] = u * (n / 2.0);
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::max(left[u], left[v]) <= std::min(left[u], left[v]) + 1.0)
        edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

}  // namespace matchkit
