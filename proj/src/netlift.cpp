#include "khop/netlift.hpp"

#include <algorithm>

#include "khop/oracle.hpp"
#include "khop/tree_solver.hpp"
#include "khop/twdp_solver.hpp"

namespace khop {

DeltaNet build_delta_net(const Metric& m, Vertex root, Cost delta) {
  if (delta.is_infinite())
    throw Error(ErrorKind::Precondition, "net radius must be finite");
  DeltaNet net;
  net.delta = delta;

  auto far_from_net = [&](Vertex v) {
    for (Vertex u : net.net)
      if (m.d(v, u) <= delta) return false;
    return true;
  };
  net.net.push_back(root);
  for (Vertex v = 0; v < m.size(); ++v)
    if (v != root && far_from_net(v)) net.net.push_back(v);
  std::sort(net.net.begin(), net.net.end());

  std::vector<VertexOrBottom> candidates;
  for (Vertex u : net.net) candidates.push_back(VertexOrBottom(u));
  net.assignment.resize(m.size());
  for (Vertex v = 0; v < m.size(); ++v)
    net.assignment[v] = m.closest(v, candidates).vertex();
  return net;
}

NetInstance restrict_to_net(const Instance& ins, const DeltaNet& net) {
  NetInstance out;
  out.original_of = net.net;
  const int nn = static_cast<int>(net.net.size());

  // Metric closure on the net, then its minimal inducing graph; rebuilding
  // from the minimal graph must reproduce the restriction exactly.
  std::vector<WeightedEdge> closure;
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j)
      closure.push_back({i, j, ins.metric.d(net.net[i], net.net[j])});
  WeightedGraph complete(nn, std::move(closure));
  Metric closure_metric = build_metric(complete);
  WeightedGraph minimal = minimal_inducing_subgraph(complete, closure_metric);
  Metric restricted = build_metric(minimal);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      if (restricted.d(i, j) != ins.metric.d(net.net[i], net.net[j]))
        throw Error(ErrorKind::Precondition, "net restriction distance drift");

  Vertex root_id = -1;
  std::vector<Vertex> terminals(nn);
  for (int i = 0; i < nn; ++i) {
    terminals[i] = i;
    if (net.net[i] == ins.root) root_id = i;
  }
  out.instance = make_instance(std::move(restricted), std::move(terminals),
                               root_id, ins.hops);
  return out;
}

SteinerTree lift_solution(const SteinerTree& net_tree, const Instance& ins,
                          const DeltaNet& net) {
  const int n = ins.n();
  if (net_tree.size() != n || net_tree.root != ins.root)
    throw Error(ErrorKind::InvalidNetTree, "net tree is not over the instance vertices");
  for (Vertex v = 0; v < n; ++v) {
    bool in = net.in_net(v);
    if (in && !net_tree.contains(v))
      throw Error(ErrorKind::InvalidNetTree,
                  "net vertex " + std::to_string(v) + " missing from the net tree");
    if (!in && net_tree.contains(v))
      throw Error(ErrorKind::InvalidNetTree,
                  "non-net vertex " + std::to_string(v) + " inside the net tree");
    if (!in) continue;
    if (net_tree.depth[v] > ins.hops)
      throw Error(ErrorKind::InvalidNetTree, "net tree exceeds the hop bound");
    if (v != ins.root) {
      Vertex p = net_tree.parent[v];
      if (p < 0 || !net.in_net(p) || net_tree.depth[p] + 1 != net_tree.depth[v])
        throw Error(ErrorKind::InvalidNetTree, "net tree parent structure broken");
    }
  }

  SteinerTree lifted = net_tree;
  for (Vertex v = 0; v < n; ++v) {
    if (net.in_net(v)) continue;
    Vertex a = net.assignment[v];
    lifted.parent[v] = a;
    lifted.depth[v] = net_tree.depth[a] + 1;
  }
  return lifted;
}

WeightedGraph prune_heavy_edges(const WeightedGraph& g, Cost upper_bound) {
  std::vector<WeightedEdge> kept;
  for (const auto& e : g.edges())
    if (!(e.w > upper_bound)) kept.push_back(e);
  return WeightedGraph(g.vertex_count(), std::move(kept));
}

Cost star_upper_bound(const Metric& m, Vertex root) {
  Cost total = Cost::zero();
  for (Vertex v = 0; v < m.size(); ++v)
    if (v != root) total += m.d(root, v);
  return total;
}

NetPipelineResult net_pipeline(const Instance& ins, Cost delta, NetSolver solver) {
  ins.validate();
  DeltaNet net = build_delta_net(ins.metric, ins.root, delta);
  NetInstance sub = restrict_to_net(ins, net);

  // Any edge above the star bound is useless in an optimal tree; harmless on
  // a metric closure, load-bearing only for heavy input edges.
  {
    Cost ub = star_upper_bound(sub.instance.metric, sub.instance.root);
    WeightedGraph pruned = prune_heavy_edges(sub.instance.metric.source_graph(), ub);
    sub.instance.metric = build_metric(pruned);
  }

  SteinerTree net_tree_compact;
  Cost net_cost = Cost::zero();
  switch (solver) {
    case NetSolver::Oracle: {
      OracleResult r = oracle_khop(sub.instance);
      net_tree_compact = lap_to_tree(sub.instance, r.witness);
      net_cost = r.cost;
      break;
    }
    case NetSolver::Tree: {
      TreeSolveResult r = solve_tree(sub.instance);
      net_tree_compact = r.tree;
      net_cost = r.cost;
      break;
    }
    case NetSolver::Treewidth: {
      TwdpSolveResult r = solve_treewidth(sub.instance);
      net_tree_compact = r.tree;
      net_cost = r.cost;
      break;
    }
  }

  SteinerTree net_tree;
  net_tree.root = ins.root;
  net_tree.parent.assign(ins.n(), -1);
  net_tree.depth.assign(ins.n(), kLabelInf);
  for (int i = 0; i < static_cast<int>(sub.original_of.size()); ++i) {
    net_tree.depth[sub.original_of[i]] = net_tree_compact.depth[i];
    if (net_tree_compact.parent[i] >= 0)
      net_tree.parent[sub.original_of[i]] = sub.original_of[net_tree_compact.parent[i]];
  }

  NetPipelineResult res;
  res.tree = lift_solution(net_tree, ins, net);
  res.net_cost = net_cost;
  res.net_size = net.net.size();
  for (Vertex v = 0; v < ins.n(); ++v)
    if (!net.in_net(v)) res.lift_cost += ins.metric.d(v, net.assignment[v]);
  res.total = tree_cost(ins.metric, res.tree);
  if (res.total != net_cost + res.lift_cost)
    throw Error(ErrorKind::Precondition, "lift certificate does not reconcile");
  std::int64_t bound_scaled;
  if (__builtin_mul_overflow(delta.scaled(), static_cast<std::int64_t>(ins.n()),
                             &bound_scaled))
    throw Error(ErrorKind::Precondition, "net bound overflow");
  res.bound = Cost::from_scaled(bound_scaled);
  return res;
}

}  // namespace khop
