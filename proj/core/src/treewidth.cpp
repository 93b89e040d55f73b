#include "matchkit/treewidth.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace matchkit {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::optional<std::string> validate_td(const Graph& g,
                                       const TreeDecomposition& d) {
  const int t = static_cast<int>(d.bags.size());
  if (t == 0) return "decomposition has no bags";
  std::vector<std::vector<int>> adj(t);
  for (auto [a, b] : d.tree_edges) {
    if (a < 0 || a >= t || b < 0 || b >= t) return "tree edge out of range";
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Treeness: connected with exactly t - 1 edges.
  if (static_cast<int>(d.tree_edges.size()) != t - 1)
    return "tree has wrong edge count";
  {
    std::vector<char> seen(t, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          q.push(y);
        }
    }
    if (reached != t) return "tree is disconnected";
  }
  std::vector<std::vector<char>> in_bag(t, std::vector<char>(g.n(), 0));
  for (int i = 0; i < t; ++i)
    for (int v : d.bags[i]) {
      if (v < 0 || v >= g.n()) return "bag vertex out of range";
      in_bag[i][v] = 1;
    }
  for (int v = 0; v < g.n(); ++v) {
    bool found = false;
    for (int i = 0; i < t && !found; ++i) found = in_bag[i][v];
    if (!found)
      return "condition 1: vertex " + std::to_string(v + 1) + " in no bag";
  }
  for (const auto& [u, v] : g.edges()) {
    bool found = false;
    for (int i = 0; i < t && !found; ++i) found = in_bag[i][u] && in_bag[i][v];
    if (!found)
      return "condition 2: edge " + std::to_string(u + 1) + "-" +
             std::to_string(v + 1) + " in no bag";
  }
  for (int v = 0; v < g.n(); ++v) {
    int start = -1, total = 0;
    for (int i = 0; i < t; ++i)
      if (in_bag[i][v]) {
        start = i;
        ++total;
      }
    std::vector<char> seen(t, 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    int reached = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (!seen[y] && in_bag[y][v]) {
          seen[y] = 1;
          ++reached;
          q.push(y);
        }
    }
    if (reached != total)
      return "condition 3: bag-set of vertex " + std::to_string(v + 1) +
             " is disconnected";
  }
  return std::nullopt;
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& nd : nodes)
    w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
  return w;
}

TreeDecomposition NiceTreeDecomposition::underlying() const {
  TreeDecomposition d;
  for (const auto& nd : nodes) d.bags.push_back(nd.bag);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    for (int c : nodes[i].children) d.tree_edges.push_back({i, c});
  return d;
}

namespace {

struct NiceBuilder {
  const TreeDecomposition& d;
  std::vector<std::vector<int>> adj;
  NiceTreeDecomposition out;

  int add(NiceTreeDecomposition::Kind kind, int vertex, std::vector<int> bag,
          std::vector<int> children) {
    out.nodes.push_back({kind, vertex, std::move(bag), std::move(children)});
    return static_cast<int>(out.nodes.size()) - 1;
  }

  // A start node followed by introduces of every vertex in target.
  int chain_from_empty(const std::vector<int>& target) {
    int cur = add(NiceTreeDecomposition::Kind::kStart, -1, {}, {});
    std::vector<int> bag;
    for (int v : target) {
      bag.push_back(v);
      cur = add(NiceTreeDecomposition::Kind::kIntroduce, v, bag, {cur});
    }
    return cur;
  }

  // Forgets then introduces to morph the nice node's bag into target.
  int morph(int nice_node, const std::vector<int>& target) {
    std::vector<int> bag = out.nodes[nice_node].bag;
    int cur = nice_node;
    std::vector<int> to_forget;
    for (int v : bag)
      if (!std::binary_search(target.begin(), target.end(), v))
        to_forget.push_back(v);
    for (int v : to_forget) {
      bag.erase(std::find(bag.begin(), bag.end(), v));
      cur = add(NiceTreeDecomposition::Kind::kForget, v, bag, {cur});
    }
    for (int v : target) {
      if (std::binary_search(out.nodes[cur].bag.begin(),
                             out.nodes[cur].bag.end(), v))
        continue;
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      cur = add(NiceTreeDecomposition::Kind::kIntroduce, v, bag, {cur});
    }
    return cur;
  }

  int convert(int node, int parent) {
    std::vector<int> kids;
    for (int c : adj[node])
      if (c != parent) kids.push_back(c);
    if (kids.empty()) return chain_from_empty(d.bags[node]);
    std::vector<int> adapted;
    for (int c : kids) adapted.push_back(morph(convert(c, node), d.bags[node]));
    int cur = adapted[0];
    for (size_t i = 1; i < adapted.size(); ++i)
      cur = add(NiceTreeDecomposition::Kind::kJoin, -1, d.bags[node],
                {cur, adapted[i]});
    return cur;
  }
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& d) {
  const int t = static_cast<int>(d.bags.size());
  if (t == 0) throw GraphError("make_nice: decomposition has no bags");
  for (const auto& b : d.bags)
    if (!std::is_sorted(b.begin(), b.end()))
      throw GraphError("make_nice: bags must be sorted");
  NiceBuilder builder{d, std::vector<std::vector<int>>(t), {}};
  for (auto [a, b] : d.tree_edges) {
    builder.adj[a].push_back(b);
    builder.adj[b].push_back(a);
  }
  int top = builder.convert(0, -1);
  builder.out.root = builder.morph(top, {});
  if (builder.out.root == top) {
    // Degenerate single empty bag: keep a distinct forget-free root.
    builder.out.root = top;
  }
  return builder.out;
}

TreeDecomposition minfill_td(const Graph& g) {
  const int n = g.n();
  if (n == 0) throw GraphError("minfill_td: empty graph");
  std::vector<std::set<int>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> gone(n, 0);
  std::vector<int> order;
  std::vector<std::vector<int>> bags;
  std::vector<int> position(n, -1);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long long best_fill = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long long fill = 0;
      for (int a : adj[v])
        for (int b : adj[v])
          if (a < b && !adj[a].count(b)) ++fill;
      if (best == -1 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    std::vector<int> bag(adj[best].begin(), adj[best].end());
    bag.push_back(best);
    std::sort(bag.begin(), bag.end());
    bags.push_back(std::move(bag));
    position[best] = step;
    order.push_back(best);
    for (int a : adj[best])
      for (int b : adj[best])
        if (a < b) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
    for (int a : adj[best]) adj[a].erase(best);
    adj[best].clear();
    gone[best] = 1;
  }
  TreeDecomposition d;
  d.bags = bags;
  for (int i = 0; i < n; ++i) {
    // Attach to the earliest-eliminated later vertex in this bag, falling
    // back to the next node so the tree stays connected.
    int parent = -1;
    for (int v : bags[i])
      if (position[v] > i && (parent == -1 || position[v] < parent))
        parent = position[v];
    if (parent == -1 && i + 1 < n) parent = i + 1;
    if (parent != -1) d.tree_edges.push_back({i, parent});
  }
  return d;
}

namespace {

int bag_index(const std::vector<int>& bag, int v) {
  auto it = std::lower_bound(bag.begin(), bag.end(), v);
  if (it == bag.end() || *it != v) return -1;
  return static_cast<int>(it - bag.begin());
}

std::vector<BigInt> table_at(const Graph& g, const NiceTreeDecomposition& nd,
                             int node) {
  using Kind = NiceTreeDecomposition::Kind;
  const auto& me = nd.nodes[node];
  const auto& bag = me.bag;
  const int b = static_cast<int>(bag.size());
  std::vector<BigInt> table(std::size_t{1} << b, 0);
  switch (me.kind) {
    case Kind::kStart:
      table[0] = 1;
      break;
    case Kind::kIntroduce: {
      auto child = table_at(g, nd, me.children[0]);
      const auto& cbag = nd.nodes[me.children[0]].bag;
      const int vpos = bag_index(bag, me.vertex);
      for (std::size_t cu = 0; cu < child.size(); ++cu) {
        std::size_t u = std::size_t{1} << vpos;  // v always excluded from the
                                                 // matched-below set's complement
        for (int i = 0; i < static_cast<int>(cbag.size()); ++i)
          if (cu >> i & 1) u |= std::size_t{1} << bag_index(bag, cbag[i]);
        table[u] = child[cu];
      }
      break;
    }
    case Kind::kForget: {
      auto child = table_at(g, nd, me.children[0]);
      const auto& cbag = nd.nodes[me.children[0]].bag;
      const int vpos = bag_index(cbag, me.vertex);
      std::vector<int> to_child(b);
      for (int i = 0; i < b; ++i) to_child[i] = bag_index(cbag, bag[i]);
      for (std::size_t u = 0; u < table.size(); ++u) {
        std::size_t cu = std::size_t{1} << vpos;
        for (int i = 0; i < b; ++i)
          if (u >> i & 1) cu |= std::size_t{1} << to_child[i];
        // v was matched earlier, when its partner was forgotten below.
        BigInt sum = child[cu ^ (std::size_t{1} << vpos)];
        for (int i = 0; i < b; ++i) {
          if (u >> i & 1) continue;
          if (!g.has_edge(me.vertex, bag[i])) continue;
          sum += child[cu | std::size_t{1} << to_child[i]];
        }
        table[u] = sum;
      }
      break;
    }
    case Kind::kJoin: {
      auto left = table_at(g, nd, me.children[0]);
      auto right = table_at(g, nd, me.children[1]);
      for (std::size_t u = 0; u < table.size(); ++u) {
        const std::size_t rest = (table.size() - 1) & ~u;
        BigInt sum = 0;
        for (std::size_t j = rest;; j = (j - 1) & rest) {
          sum += left[u | j] * right[u | (rest & ~j)];
          if (j == 0) break;
        }
        table[u] = sum;
      }
      break;
    }
  }
  return table;
}

}  // namespace

BigInt count_pm_td(const Graph& g, const NiceTreeDecomposition& nd) {
  if (nd.root < 0) throw GraphError("count_pm_td: empty decomposition");
  if (auto violation = validate_td(g, nd.underlying()))
    throw GraphError("count_pm_td: " + *violation);
  if (!nd.nodes[nd.root].bag.empty())
    throw GraphError("count_pm_td: root bag must be empty");
  return table_at(g, nd, nd.root)[0];
}

}  // namespace matchkit
