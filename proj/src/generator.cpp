#include "khop/generator.hpp"

#include <algorithm>
#include <set>

namespace khop {

namespace {

bool connected_without(int n, const std::vector<std::pair<int, int>>& edges,
                       std::size_t skip) {
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i == skip) continue;
    adj[edges[i].first].push_back(edges[i].second);
    adj[edges[i].second].push_back(edges[i].first);
  }
  std::vector<char> vis(n, 0);
  std::vector<int> st = {0};
  vis[0] = 1;
  int cnt = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w : adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++cnt;
        st.push_back(w);
      }
  }
  return cnt == n;
}

}  // namespace

Generated generate(const GenOptions& opts) {
  if (opts.n < 1) throw Error(ErrorKind::Precondition, "need at least one vertex");
  if (opts.wmin < 1 || opts.wmax < opts.wmin)
    throw Error(ErrorKind::Precondition, "weight range must satisfy 1 <= wmin <= wmax");
  Rng rng(opts.seed);
  const int n = opts.n;

  Generated out;
  std::vector<std::pair<int, int>> edges;

  if (opts.kind == "path") {
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  } else if (opts.kind == "tree") {
    for (int i = 1; i < n; ++i) edges.push_back({rng.range(0, i - 1), i});
  } else if (opts.kind == "random-connected") {
    for (int i = 1; i < n; ++i) edges.push_back({rng.range(0, i - 1), i});
    std::set<std::pair<int, int>> present(edges.begin(), edges.end());
    int extras = opts.extra_edges >= 0 ? opts.extra_edges : n / 2;
    int attempts = 8 * extras + 16;
    while (extras > 0 && attempts-- > 0 && n > 2) {
      int a = rng.range(0, n - 1), b = rng.range(0, n - 1);
      if (a == b) continue;
      auto key = std::minmax(a, b);
      if (present.count({key.first, key.second})) continue;
      present.insert({key.first, key.second});
      edges.push_back({key.first, key.second});
      --extras;
    }
  } else if (opts.kind == "partial-ktree") {
    const int w = std::min(opts.ktree_width, n - 1);
    TreeDecomposition td;
    std::vector<Vertex> base;
    for (int v = 0; v <= w; ++v) base.push_back(v);
    for (int a = 0; a <= w; ++a)
      for (int b = a + 1; b <= w; ++b) edges.push_back({a, b});
    td.bags.push_back(base);
    // cliques[i] = (vertex set, owning bag id)
    std::vector<std::pair<std::vector<Vertex>, int>> cliques = {{base, 0}};
    for (int v = w + 1; v < n; ++v) {
      auto [cv, parent_bag] =
          cliques[rng.range(0, static_cast<int>(cliques.size()) - 1)];
      std::vector<Vertex> bag = cv;
      bag.push_back(v);
      std::sort(bag.begin(), bag.end());
      int bag_id = static_cast<int>(td.bags.size());
      td.bags.push_back(bag);
      td.edges.push_back({parent_bag, bag_id});
      for (Vertex u : cv) edges.push_back({u, v});
      for (std::size_t drop = 0; drop < cv.size(); ++drop) {
        std::vector<Vertex> nc;
        for (std::size_t i = 0; i < cv.size(); ++i)
          if (i != drop) nc.push_back(cv[i]);
        nc.push_back(v);
        std::sort(nc.begin(), nc.end());
        cliques.push_back({nc, bag_id});
      }
    }
    int to_delete = static_cast<int>(opts.delete_frac * static_cast<double>(edges.size()));
    int attempts = 4 * static_cast<int>(edges.size()) + 8;
    while (to_delete > 0 && attempts-- > 0 && edges.size() > 1) {
      std::size_t pick = static_cast<std::size_t>(
          rng.range(0, static_cast<int>(edges.size()) - 1));
      if (!connected_without(n, edges, pick)) continue;
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
      --to_delete;
    }
    out.decomposition = std::move(td);
  } else {
    throw Error(ErrorKind::Precondition, "unknown generator kind: " + opts.kind);
  }

  InstanceFile f;
  f.n = n;
  f.k = opts.k;
  f.root = 0;
  f.terminals.push_back(0);
  for (Vertex v = 1; v < n; ++v)
    if (rng.unit() < opts.terminal_density) f.terminals.push_back(v);
  for (auto [a, b] : edges)
    f.edges.push_back({a, b, std::to_string(rng.range(opts.wmin, opts.wmax))});
  f.m = static_cast<int>(f.edges.size());
  out.instance = std::move(f);
  return out;
}

}  // namespace khop
