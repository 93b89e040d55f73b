// matchkit: command-line front end for the perfect-matching toolkit.
//
// Subcommands: count, enumerate, recognize, chain run|sample,
// tgraph build|analyze, gadget, mix analyze.  All output is JSON on stdout
// (TSV optionally for histograms), "schema": 1, big counts as decimal
// strings, byte-identical for identical invocations.  Exit codes: 0 ok,
// 1 domain error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "matchkit/chain.hpp"
#include "matchkit/classes.hpp"
#include "matchkit/cotree.hpp"
#include "matchkit/exact_count.hpp"
#include "matchkit/gadgets.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/mixing.hpp"
#include "matchkit/oracle.hpp"
#include "matchkit/transition_graph.hpp"
#include "matchkit/treewidth.hpp"

namespace mk = matchkit;
using json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mk::GraphError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mk::GraphError("cannot write file: " + path);
  out << content;
}

mk::Graph load_graph(const std::string& path) {
  return mk::parse_graph(read_file(path));
}

// 1-based vertex list for output.
json one_based(const std::vector<int>& vs) {
  json a = json::array();
  for (int v : vs) a.push_back(v + 1);
  return a;
}

json matching_json(const mk::PerfectMatching& m) {
  json a = json::array();
  for (const auto& [u, v] : m.edges) a.push_back(json::array({u + 1, v + 1}));
  return a;
}

void emit(const json& payload) {
  json doc;
  doc["schema"] = 1;
  doc["status"] = "ok";
  for (const auto& [k, v] : payload.items()) doc[k] = v;
  std::cout << doc.dump(2) << "\n";
}

[[noreturn]] void die(const std::string& kind, const std::string& message) {
  json doc;
  doc["schema"] = 1;
  doc["status"] = "error";
  doc["error"] = {{"kind", kind}, {"message", message}};
  std::cout << doc.dump(2) << "\n";
  std::exit(1);
}

// PACE-style tree decomposition: "s td <#bags> <width+1> <n>", bag lines
// "b <id> <v...>", then edges "<i> <j>", all 1-based.
mk::TreeDecomposition parse_td(const std::string& text) {
  mk::TreeDecomposition d;
  std::istringstream in(text);
  std::string line;
  int nbags = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 's') {
      std::string s, td;
      int w1 = 0, n = 0;
      ls >> s >> td >> nbags >> w1 >> n;
      if (td != "td" || nbags < 0) throw mk::GraphError("malformed td header");
      d.bags.assign(nbags, {});
    } else if (line[0] == 'b') {
      char b;
      int id = 0, v = 0;
      ls >> b >> id;
      if (nbags < 0 || id < 1 || id > nbags)
        throw mk::GraphError("bag id out of range in td file");
      std::vector<int> bag;
      while (ls >> v) bag.push_back(v - 1);
      std::sort(bag.begin(), bag.end());
      d.bags[id - 1] = bag;
    } else {
      int i = 0, j = 0;
      ls >> i >> j;
      if (nbags < 0 || i < 1 || j < 1 || i > nbags || j > nbags)
        throw mk::GraphError("tree edge out of range in td file");
      d.tree_edges.emplace_back(i - 1, j - 1);
    }
  }
  if (nbags < 0) throw mk::GraphError("td file has no header");
  return d;
}

int cmd_count(const std::string& graph_path, const std::string& algorithm,
              const std::string& td_path, bool profile) {
  mk::Graph g = load_graph(graph_path);
  mk::Budget budget = mk::default_budget();
  json out;
  if (!td_path.empty()) {
    mk::TreeDecomposition d = parse_td(read_file(td_path));
    if (auto err = mk::validate_td(g, d)) die("domain", "invalid tree decomposition: " + *err);
    auto nice = mk::make_nice(d);
    out["count"] = mk::count_pm_td(g, nice).str();
    out["method"] = "treewidth";
    out["width"] = d.width();
  } else if (algorithm == "auto") {
    auto r = mk::count_pm_auto(g, budget);
    out["count"] = r.count.str();
    out["method"] = r.method;
    if (r.width >= 0) out["width"] = r.width;
  } else if (algorithm == "cograph") {
    out["count"] = mk::count_pm_cograph(g).str();
    out["method"] = "cograph";
  } else if (algorithm == "cochain") {
    auto m = mk::recognize_cochain(g);
    if (!m) die("domain", "graph is not a cochain graph");
    out["count"] = mk::count_pm_cochain(*m).str();
    out["method"] = "cochain";
  } else if (algorithm == "treewidth") {
    auto d = mk::minfill_td(g);
    out["count"] = mk::count_pm_td(g, mk::make_nice(d)).str();
    out["method"] = "treewidth";
    out["width"] = d.width();
  } else {  // brute
    out["count"] = std::to_string(mk::enumerate_perfect_matchings(g, budget).size());
    out["method"] = "brute";
  }
  if (profile) {
    json prof = json::array();
    if (auto t = mk::build_cotree(g)) {
      for (const auto& c : mk::cograph_profile(*t).counts) prof.push_back(c.str());
    } else {
      for (long long c : mk::count_matchings_by_size(g, budget))
        prof.push_back(std::to_string(c));
    }
    out["profile"] = prof;
  }
  emit(out);
  return 0;
}

int cmd_enumerate(const std::string& graph_path) {
  mk::Graph g = load_graph(graph_path);
  mk::Budget budget = mk::default_budget();
  auto ms = mk::enumerate_perfect_matchings(g, budget);
  json out;
  out["count"] = std::to_string(ms.size());
  json arr = json::array();
  for (const auto& m : ms) arr.push_back(matching_json(m));
  out["matchings"] = arr;
  emit(out);
  return 0;
}

int cmd_recognize(const std::string& graph_path, const std::string& cls,
                  std::int64_t budget_nodes) {
  mk::Graph g = load_graph(graph_path);
  mk::Budget budget = mk::default_budget();
  if (budget_nodes > 0) budget.remaining = budget_nodes;

  json out;
  out["class"] = cls;
  auto put_verdict = [&](const mk::ClassVerdict& v) {
    out["member"] = v.member;
    if (!v.detail.empty()) out["detail"] = v.detail;
    if (v.cycle) out["witness_cycle"] = one_based(v.cycle->vertices);
    if (v.vertices) out["witness_vertices"] = one_based(*v.vertices);
  };
  if (cls == "och") {
    put_verdict(mk::is_odd_chordal(g, budget));
  } else if (cls == "switchable") {
    put_verdict(mk::is_switchable(g, budget));
  } else if (cls == "qmon") {
    put_verdict(mk::is_quasimonotone(g, budget));
  } else if (cls == "mono") {
    put_verdict(mk::is_monotone(g, budget));
  } else if (cls == "chains") {
    put_verdict(mk::is_chains(g));
  } else if (cls == "quachains") {
    put_verdict(mk::is_qua_chains(g));
  } else if (cls == "cograph") {
    std::vector<int> p4;
    bool member = mk::build_cotree(g, &p4).has_value();
    out["member"] = member;
    if (!member) {
      out["detail"] = "induced P4";
      out["witness_vertices"] = one_based(p4);
    }
  } else {  // cochain
    auto m = mk::recognize_cochain(g);
    out["member"] = m.has_value();
    if (!m) out["detail"] = "complement is not a chain graph";
  }
  emit(out);
  return 0;
}

int cmd_chain_run(const std::string& graph_path, std::int64_t steps,
                  std::uint64_t seed, bool trace) {
  mk::Graph g = load_graph(graph_path);
  auto m0 = mk::find_perfect_matching(g);
  if (!m0) die("domain", "graph has no perfect matching");
  mk::ChainConfig cfg;
  cfg.t_max = steps;
  cfg.seed = seed;
  cfg.record_trajectory = trace;
  auto run = mk::run_chain(g, *m0, cfg);
  json out;
  out["seed"] = seed;
  out["steps"] = steps;
  out["start"] = matching_json(*m0);
  out["final"] = matching_json(run.final);
  if (trace) {
    json tr = json::array();
    for (const auto& m : run.trajectory) tr.push_back(matching_json(m));
    out["trajectory"] = tr;
  }
  emit(out);
  return 0;
}

int cmd_chain_sample(const std::string& graph_path, std::int64_t steps,
                     std::int64_t samples, std::uint64_t seed,
                     const std::string& format) {
  mk::Graph g = load_graph(graph_path);
  auto h = mk::sample_distribution(g, steps, samples, seed);
  if (format == "tsv") {
    for (const auto& [m, c] : h.counts) {
      std::string key;
      for (const auto& [u, v] : m.edges) {
        if (!key.empty()) key += ' ';
        key += std::to_string(u + 1) + "-" + std::to_string(v + 1);
      }
      std::cout << key << "\t" << c << "\n";
    }
    return 0;
  }
  json out;
  out["seed"] = seed;
  out["steps"] = steps;
  out["samples"] = h.total;
  json hist = json::array();
  for (const auto& [m, c] : h.counts)
    hist.push_back(json{{"matching", matching_json(m)}, {"count", c}});
  out["histogram"] = hist;
  emit(out);
  return 0;
}

json tgraph_json(const mk::TransitionGraph& tg) {
  json nodes = json::array();
  for (const auto& m : tg.nodes) nodes.push_back(matching_json(m));
  json edges = json::array();
  for (int i = 0; i < tg.size(); ++i)
    for (int j : tg.adjacency[i])
      if (i < j) edges.push_back(json::array({i, j}));
  return json{{"host_n", tg.host_n}, {"nodes", nodes}, {"edges", edges}};
}

int cmd_tgraph(bool build, const std::string& graph_path, const std::string& out_path) {
  mk::Graph g = load_graph(graph_path);
  mk::Budget budget = mk::default_budget();
  auto tg = mk::build_transition_graph(g, budget);
  if (build) {
    json doc;
    doc["schema"] = 1;
    const json body = tgraph_json(tg);
    for (const auto& [k, v] : body.items()) doc[k] = v;
    write_file(out_path, doc.dump(2) + "\n");
    emit(json{{"out", out_path},
              {"num_matchings", tg.size()},
              {"num_edges", tg.num_edges()}});
    return 0;
  }
  auto comps = mk::components(tg);
  json out;
  out["num_matchings"] = tg.size();
  out["num_edges"] = tg.num_edges();
  out["components"] = comps.size();
  auto diam = mk::diameter(tg);
  if (diam)
    out["diameter"] = *diam;
  else
    out["diameter"] = nullptr;
  out["ergodic"] = comps.size() <= 1;
  emit(out);
  return 0;
}

int cmd_gadget(const std::string& family, int k, const std::string& name,
               std::uint64_t seed, const std::string& out_path) {
  mk::Graph g;
  if (family == "mobius") {
    g = mk::mobius_ladder(k);
  } else if (family == "crossladder") {
    g = mk::cross_ladder(k).graph;
  } else if (family == "gk") {
    g = mk::slow_gk(k);
  } else if (family == "web") {
    g = mk::spiders_web(k);
  } else if (family == "annulus") {
    g = mk::web_annulus();
  } else if (family == "unitinterval") {
    g = mk::random_unit_interval(k, seed);
  } else {  // fixture
    g = mk::fixture(name);
  }
  write_file(out_path, mk::write_graph(g));
  emit(json{{"family", family},
            {"n", g.n()},
            {"m", g.num_edges()},
            {"out", out_path}});
  return 0;
}

int cmd_mix(const std::string& graph_path, const std::string& cut,
            const std::string& tv_spec, std::int64_t samples,
            std::uint64_t seed) {
  mk::Graph g = load_graph(graph_path);
  mk::Budget budget = mk::default_budget();
  auto tg = mk::build_transition_graph(g, budget);
  json out;
  out["num_matchings"] = tg.size();
  if (cut == "auto") {
    if (tg.size() >= 2 && tg.size() <= 22)
      out["phi_exact"] = mk::conductance_exact(tg).str();
  } else if (!cut.empty()) {
    // Cut file: one 0-based transition-graph node id per line.
    std::istringstream in(read_file(cut));
    std::vector<int> s;
    int id;
    while (in >> id) s.push_back(id);
    auto rep = mk::cut_flow(tg, s);
    out["cut"] = {{"size", rep.s.size()},
                  {"flow", rep.flow.str()},
                  {"pi_s", rep.pi_s.str()},
                  {"conductance", rep.conductance_of_cut.str()}};
  }
  if (tg.size() >= 1 && tg.size() <= 2000) {
    auto tm = mk::transition_matrix(tg);
    out["gap"] = mk::spectral_gap(tm);
  }
  if (!tv_spec.empty()) {
    std::vector<std::int64_t> grid;
    std::istringstream ts(tv_spec);
    std::string tok;
    while (std::getline(ts, tok, ',')) grid.push_back(std::stoll(tok));
    out["seed"] = seed;
    json series = json::array();
    for (const auto& p : mk::tv_curve(g, grid, samples, seed))
      series.push_back(json{{"t", p.t}, {"tv", p.tv}, {"std_error", p.std_error}});
    out["tv_series"] = series;
  }
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect-matching toolkit: switch chain, class recognition, exact counting"};
  app.require_subcommand(1);
  argv = app.ensure_utf8(argv);

  std::string graph_path, algorithm = "auto", td_path, cls, format = "json";
  std::string family, name, out_path, cut = "auto", tv_spec;
  std::int64_t steps = 0, samples = 0, budget_nodes = 0;
  std::uint64_t seed = 0;
  int k = 1;
  bool profile = false, trace = false;

  auto* count = app.add_subcommand("count", "Exact perfect-matching count");
  count->add_option("--graph", graph_path)->required();
  count->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"auto", "cograph", "treewidth", "cochain", "brute"}));
  count->add_option("--td", td_path);
  count->add_flag("--profile", profile);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all perfect matchings");
  enumerate->add_option("--graph", graph_path)->required();

  auto* recognize = app.add_subcommand("recognize", "Graph-class membership with witness");
  recognize->add_option("--graph", graph_path)->required();
  recognize->add_option("--class", cls)
      ->required()
      ->check(CLI::IsMember({"och", "switchable", "qmon", "mono", "chains",
                             "quachains", "cograph", "cochain"}));
  recognize->add_option("--budget", budget_nodes);

  auto* chain = app.add_subcommand("chain", "Switch Markov chain");
  chain->require_subcommand(1);
  auto* chain_run = chain->add_subcommand("run", "Single trajectory");
  chain_run->add_option("--graph", graph_path)->required();
  chain_run->add_option("--steps", steps)->required();
  chain_run->add_option("--seed", seed);
  chain_run->add_flag("--trace", trace);
  auto* chain_sample = chain->add_subcommand("sample", "End-state histogram");
  chain_sample->add_option("--graph", graph_path)->required();
  chain_sample->add_option("--steps", steps)->required();
  chain_sample->add_option("--samples", samples)->required();
  chain_sample->add_option("--seed", seed);
  chain_sample->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

  auto* tgraph = app.add_subcommand("tgraph", "Transition graph");
  tgraph->require_subcommand(1);
  auto* tg_build = tgraph->add_subcommand("build", "Write transition graph JSON");
  tg_build->add_option("--graph", graph_path)->required();
  tg_build->add_option("--out", out_path)->required();
  auto* tg_analyze = tgraph->add_subcommand("analyze", "Connectivity and diameter");
  tg_analyze->add_option("--graph", graph_path)->required();

  auto* gadget = app.add_subcommand("gadget", "Generate a named graph family");
  gadget->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"mobius", "crossladder", "gk", "web", "annulus",
                             "unitinterval", "fixture"}));
  gadget->add_option("--k", k);
  gadget->add_option("--name", name);
  gadget->add_option("--seed", seed);
  gadget->add_option("--out", out_path)->required();

  auto* mix = app.add_subcommand("mix", "Mixing analysis");
  mix->require_subcommand(1);
  auto* mix_analyze = mix->add_subcommand("analyze", "Conductance, gap, TV decay");
  mix_analyze->add_option("--graph", graph_path)->required();
  mix_analyze->add_option("--cut", cut);
  mix_analyze->add_option("--tv", tv_spec);
  mix_analyze->add_option("--samples", samples);
  mix_analyze->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) return cmd_count(graph_path, algorithm, td_path, profile);
    if (*enumerate) return cmd_enumerate(graph_path);
    if (*recognize) return cmd_recognize(graph_path, cls, budget_nodes);
    if (*chain_run) return cmd_chain_run(graph_path, steps, seed, trace);
    if (*chain_sample) return cmd_chain_sample(graph_path, steps, samples, seed, format);
    if (*tg_build) return cmd_tgraph(true, graph_path, out_path);
    if (*tg_analyze) return cmd_tgraph(false, graph_path, "");
    if (*gadget) return cmd_gadget(family, k, name, seed, out_path);
    if (*mix_analyze) return cmd_mix(graph_path, cut, tv_spec, samples, seed);
  } catch (const mk::BudgetExceeded& e) {
    die("budget", e.what());
  } catch (const mk::GraphError& e) {
    die("domain", e.what());
  } catch (const std::exception& e) {
    die("internal", e.what());
  }
  return 2;
}
