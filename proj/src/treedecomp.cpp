#include "khop/treedecomp.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace khop {

int validate_decomposition(const WeightedGraph& g, const TreeDecomposition& td) {
  const int n = g.vertex_count();
  const int nb = td.bag_count();
  if (nb == 0)
    throw Error(ErrorKind::InvalidDecomposition, "decomposition has no bags");

  // Bag graph must be a tree.
  if (static_cast<int>(td.edges.size()) != nb - 1)
    throw Error(ErrorKind::InvalidDecomposition,
                "bag graph is not a tree (edge count)");
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : td.edges) {
    if (a < 0 || a >= nb || b < 0 || b >= nb || a == b)
      throw Error(ErrorKind::InvalidDecomposition, "bad bag edge");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(nb, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    for (int c : adj[b])
      if (!seen[c]) {
        seen[c] = 1;
        ++reached;
        stack.push_back(c);
      }
  }
  if (reached != nb)
    throw Error(ErrorKind::InvalidDecomposition, "bag graph is not connected");

  int width = -1;
  std::vector<std::vector<int>> holding(n);  // bags containing each vertex
  for (int b = 0; b < nb; ++b) {
    std::set<Vertex> uniq(td.bags[b].begin(), td.bags[b].end());
    if (uniq.size() != td.bags[b].size())
      throw Error(ErrorKind::InvalidDecomposition, "duplicate vertex in a bag");
    for (Vertex v : td.bags[b]) {
      if (v < 0 || v >= n)
        throw Error(ErrorKind::InvalidDecomposition, "bag vertex out of range");
      holding[v].push_back(b);
    }
    width = std::max(width, static_cast<int>(td.bags[b].size()) - 1);
  }

  for (Vertex v = 0; v < n; ++v)
    if (holding[v].empty())
      throw Error(ErrorKind::InvalidDecomposition,
                  "vertex " + std::to_string(v) + " is in no bag");

  for (const auto& e : g.edges()) {
    bool covered = false;
    for (int b : holding[e.u]) {
      if (std::find(td.bags[b].begin(), td.bags[b].end(), e.v) != td.bags[b].end()) {
        covered = true;
        break;
      }
    }
    if (!covered)
      throw Error(ErrorKind::InvalidDecomposition,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                      " is in no bag");
  }

  // Bags containing a fixed vertex must form a connected subtree.
  for (Vertex v = 0; v < n; ++v) {
    std::vector<char> in_set(nb, 0);
    for (int b : holding[v]) in_set[b] = 1;
    std::vector<int> st = {holding[v][0]};
    std::vector<char> vis(nb, 0);
    vis[holding[v][0]] = 1;
    std::size_t cnt = 1;
    while (!st.empty()) {
      int b = st.back();
      st.pop_back();
      for (int c : adj[b])
        if (in_set[c] && !vis[c]) {
          vis[c] = 1;
          ++cnt;
          st.push_back(c);
        }
    }
    if (cnt != holding[v].size())
      throw Error(ErrorKind::InvalidDecomposition,
                  "bags of vertex " + std::to_string(v) + " are not connected");
  }
  return width;
}

TreeDecomposition heuristic_decompose(const WeightedGraph& g) {
  const int n = g.vertex_count();
  TreeDecomposition td;
  if (n == 1) {
    td.bags.push_back({0});
    return td;
  }

  std::vector<std::set<Vertex>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }

  std::vector<char> gone(n, 0);
  std::vector<int> elim_pos(n, -1);
  std::vector<std::vector<Vertex>> bag_of(n);
  std::vector<Vertex> order;

  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long best_fill = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long fill = 0;
      for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
        for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
          if (!adj[*it].count(*jt)) ++fill;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    bag_of[best].assign(adj[best].begin(), adj[best].end());
    bag_of[best].push_back(best);
    std::sort(bag_of[best].begin(), bag_of[best].end());
    for (Vertex a : adj[best])
      for (Vertex b : adj[best])
        if (a < b) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
    for (Vertex a : adj[best]) adj[a].erase(best);
    adj[best].clear();
    gone[best] = 1;
    elim_pos[best] = step;
    order.push_back(best);
  }

  td.bags.resize(n);
  for (Vertex v = 0; v < n; ++v) td.bags[elim_pos[v]] = bag_of[v];
  for (int i = 0; i < n - 1; ++i) {
    // Parent bag: the earliest-eliminated other member of this bag.
    Vertex v = order[i];
    int parent_pos = n - 1;
    for (Vertex w : bag_of[v])
      if (w != v) parent_pos = std::min(parent_pos, elim_pos[w]);
    if (bag_of[v].size() == 1) parent_pos = i + 1;  // isolated after removals
    td.edges.push_back({i, parent_pos});
  }
  return td;
}

namespace {

std::vector<Vertex> sorted_diff(const std::vector<Vertex>& a,
                                const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

struct NiceBuilder {
  const TreeDecomposition& td;
  std::vector<std::vector<int>> adj;
  NiceTreeDecomposition out;

  int add_node(NiceNodeType type, std::vector<Vertex> bag, std::vector<int> children,
               Vertex v = -1) {
    NiceNode nd;
    nd.type = type;
    nd.bag = std::move(bag);
    nd.children = std::move(children);
    nd.vertex = v;
    out.nodes.push_back(std::move(nd));
    return static_cast<int>(out.nodes.size()) - 1;
  }

  // Chain from a built node (bag == from) up to a node with bag == to:
  // forget what disappears, then introduce what appears, ids ascending.
  int chain(int node, std::vector<Vertex> from, const std::vector<Vertex>& to) {
    for (Vertex x : sorted_diff(from, to)) {
      from.erase(std::find(from.begin(), from.end(), x));
      node = add_node(NiceNodeType::Forget, from, {node}, x);
    }
    for (Vertex y : sorted_diff(to, from)) {
      from.insert(std::upper_bound(from.begin(), from.end(), y), y);
      node = add_node(NiceNodeType::Introduce, from, {node}, y);
    }
    return node;
  }

  int leaf_chain(const std::vector<Vertex>& bag) {
    int node = add_node(NiceNodeType::Leaf, {}, {});
    return chain(node, {}, bag);
  }

  int build(int b, int parent) {
    std::vector<Vertex> bag = td.bags[b];
    std::sort(bag.begin(), bag.end());
    std::vector<int> tops;
    for (int c : adj[b]) {
      if (c == parent) continue;
      std::vector<Vertex> cbag = td.bags[c];
      std::sort(cbag.begin(), cbag.end());
      tops.push_back(chain(build(c, b), cbag, bag));
    }
    if (tops.empty()) return leaf_chain(bag);
    int cur = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i)
      cur = add_node(NiceNodeType::Join, bag, {cur, tops[i]});
    return cur;
  }
};

void fill_below(NiceTreeDecomposition& ntd, int n) {
  // Post-order union of descendant bags, minus the own bag.
  std::vector<int> order;
  std::vector<int> stack = {ntd.root};
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    order.push_back(b);
    for (int c : ntd.nodes[b].children) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NiceNode& nd = ntd.nodes[*it];
    nd.in_below.assign(n, 0);
    for (int c : nd.children) {
      const NiceNode& ch = ntd.nodes[c];
      for (Vertex v : ch.bag) nd.in_below[v] = 1;
      for (Vertex v : ch.below) nd.in_below[v] = 1;
    }
    for (Vertex v : nd.bag) nd.in_below[v] = 0;
    nd.below.clear();
    for (Vertex v = 0; v < n; ++v)
      if (nd.in_below[v]) nd.below.push_back(v);
  }
}

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const WeightedGraph& g,
                                Vertex root) {
  int width = validate_decomposition(g, td);
  int root_bag = -1;
  for (int b = 0; b < td.bag_count() && root_bag < 0; ++b)
    if (std::find(td.bags[b].begin(), td.bags[b].end(), root) != td.bags[b].end())
      root_bag = b;
  if (root_bag < 0)
    throw Error(ErrorKind::InvalidDecomposition, "no bag contains the root");

  NiceBuilder builder{td, {}, {}};
  builder.adj.assign(td.bag_count(), {});
  for (auto [a, b] : td.edges) {
    builder.adj[a].push_back(b);
    builder.adj[b].push_back(a);
  }
  builder.out.root = builder.build(root_bag, -1);
  builder.out.width = width;
  fill_below(builder.out, g.vertex_count());
  validate_nice(builder.out, g, root);
  return builder.out;
}

void validate_nice(const NiceTreeDecomposition& ntd, const WeightedGraph& g,
                   Vertex root) {
  const int n = g.vertex_count();
  if (ntd.root < 0 || ntd.root >= ntd.size())
    throw Error(ErrorKind::InvalidDecomposition, "nice decomposition has no root");
  const auto& rbag = ntd.nodes[ntd.root].bag;
  if (std::find(rbag.begin(), rbag.end(), root) == rbag.end())
    throw Error(ErrorKind::InvalidDecomposition, "root bag misses the tree root");

  std::vector<int> forget_count(n, 0);
  std::vector<char> reached(ntd.size(), 0);
  std::vector<int> stack = {ntd.root};
  reached[ntd.root] = 1;
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const NiceNode& nd = ntd.nodes[id];
    if (!std::is_sorted(nd.bag.begin(), nd.bag.end()))
      throw Error(ErrorKind::InvalidDecomposition, "bag not sorted");
    switch (nd.type) {
      case NiceNodeType::Leaf:
        if (!nd.bag.empty() || !nd.children.empty())
          throw Error(ErrorKind::InvalidDecomposition, "bad leaf node");
        break;
      case NiceNodeType::Join: {
        if (nd.children.size() != 2)
          throw Error(ErrorKind::InvalidDecomposition, "join without two children");
        const auto& c1 = ntd.nodes[nd.children[0]];
        const auto& c2 = ntd.nodes[nd.children[1]];
        if (c1.bag != nd.bag || c2.bag != nd.bag)
          throw Error(ErrorKind::InvalidDecomposition, "join bags differ");
        for (Vertex v : c1.below)
          if (c2.in_below[v])
            throw Error(ErrorKind::InvalidDecomposition,
                        "join children share below-vertices");
        break;
      }
      case NiceNodeType::Forget: {
        if (nd.children.size() != 1 || nd.vertex < 0)
          throw Error(ErrorKind::InvalidDecomposition, "bad forget node");
        std::vector<Vertex> expect = nd.bag;
        expect.insert(std::upper_bound(expect.begin(), expect.end(), nd.vertex),
                      nd.vertex);
        if (ntd.nodes[nd.children[0]].bag != expect ||
            std::binary_search(nd.bag.begin(), nd.bag.end(), nd.vertex))
          throw Error(ErrorKind::InvalidDecomposition, "bad forget node");
        ++forget_count[nd.vertex];
        break;
      }
      case NiceNodeType::Introduce: {
        if (nd.children.size() != 1 || nd.vertex < 0)
          throw Error(ErrorKind::InvalidDecomposition, "bad introduce node");
        std::vector<Vertex> expect = nd.bag;
        auto it = std::find(expect.begin(), expect.end(), nd.vertex);
        if (it == expect.end())
          throw Error(ErrorKind::InvalidDecomposition, "bad introduce node");
        expect.erase(it);
        if (ntd.nodes[nd.children[0]].bag != expect)
          throw Error(ErrorKind::InvalidDecomposition, "bad introduce node");
        break;
      }
    }
    for (int c : nd.children) {
      if (reached[c])
        throw Error(ErrorKind::InvalidDecomposition, "node reached twice");
      reached[c] = 1;
      stack.push_back(c);
    }
  }

  // Flatten back and re-check the plain decomposition properties.
  TreeDecomposition flat;
  for (const auto& nd : ntd.nodes) flat.bags.push_back(nd.bag);
  for (int id = 0; id < ntd.size(); ++id)
    for (int c : ntd.nodes[id].children) flat.edges.push_back({id, c});
  int w = validate_decomposition(g, flat);
  if (w > ntd.width)
    throw Error(ErrorKind::InvalidDecomposition, "nice form increased the width");

  for (Vertex v = 0; v < n; ++v) {
    bool in_root = std::binary_search(rbag.begin(), rbag.end(), v);
    if (!in_root && forget_count[v] != 1)
      throw Error(ErrorKind::InvalidDecomposition,
                  "vertex " + std::to_string(v) + " must be forgotten exactly once");
    if (in_root && forget_count[v] != 0)
      throw Error(ErrorKind::InvalidDecomposition,
                  "root-bag vertex " + std::to_string(v) + " must not be forgotten");
  }
}

TreeDecomposition decomposition_from_tree_edges(const WeightedGraph& tree) {
  TreeDecomposition td;
  const int n = tree.vertex_count();
  if (n == 1) {
    td.bags.push_back({0});
    return td;
  }
  // One bag per tree edge, chained along a traversal.
  std::vector<int> bag_of_vertex(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& [w, c] : tree.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      int id = static_cast<int>(td.bags.size());
      td.bags.push_back({std::min(v, w), std::max(v, w)});
      if (bag_of_vertex[v] >= 0) td.edges.push_back({bag_of_vertex[v], id});
      bag_of_vertex[v] = (bag_of_vertex[v] >= 0) ? bag_of_vertex[v] : id;
      bag_of_vertex[w] = id;
      stack.push_back(w);
    }
  }
  return td;
}

}  // namespace khop
