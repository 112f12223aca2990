#include "khop/metric.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <thread>

namespace khop {

namespace {

// Plain Dijkstra row; path tie-breaking is applied lazily in shortest_path,
// so the row only carries exact distances.
void dijkstra_row(const WeightedGraph& g, Vertex src, Cost* out) {
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i) out[i] = Cost::infinity();
  using Item = std::pair<std::int64_t, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  out[src] = Cost::zero();
  pq.push({0, src});
  while (!pq.empty()) {
    auto [dv, v] = pq.top();
    pq.pop();
    if (out[v].scaled() != dv) continue;
    for (const auto& [w, c] : g.neighbors(v)) {
      Cost cand = out[v] + c;
      if (cand < out[w]) {
        out[w] = cand;
        pq.push({cand.scaled(), w});
      }
    }
  }
}

}  // namespace

Metric build_metric(const WeightedGraph& g, const MetricBuildOptions& opts) {
  const int n = g.vertex_count();
  Metric m;
  m.n_ = n;
  m.graph_ = g;
  m.dist_.assign(static_cast<std::size_t>(n) * n, Cost::infinity());

  int threads = opts.threads;
  if (threads <= 0) {
    threads = (n >= 64) ? static_cast<int>(std::thread::hardware_concurrency()) : 1;
    if (threads <= 0) threads = 1;
  }
  threads = std::min(threads, n);

  auto run = [&](int first, int step) {
    for (int s = first; s < n; s += step)
      dijkstra_row(g, s, m.dist_.data() + static_cast<std::size_t>(s) * n);
  };
  if (threads == 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(run, t, threads);
    for (auto& th : pool) th.join();
  }

  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      Cost duv = m.d(u, v);
      if (duv.is_infinite())
        throw Error(ErrorKind::DisconnectedGraph,
                    "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                        " are not connected");
      if (u == v && duv != Cost::zero())
        throw Error(ErrorKind::Precondition, "nonzero diagonal distance");
    }
  return m;
}

VertexOrBottom Metric::closest(Vertex from,
                               std::span<const VertexOrBottom> candidates) const {
  if (candidates.empty())
    throw Error(ErrorKind::EmptySet, "closest over an empty candidate set");
  VertexOrBottom best = candidates[0];
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (closer(from, candidates[i], best)) best = candidates[i];
  return best;
}

std::vector<Vertex> Metric::shortest_path(Vertex u, Vertex v) const {
  // Greedy front-to-back construction: among neighbors w of the current
  // vertex that lie on some shortest path to v, the smallest id yields the
  // lexicographically smallest full id sequence.
  std::vector<Vertex> path = {u};
  Vertex cur = u;
  while (cur != v) {
    Vertex next = -1;
    for (const auto& [w, c] : graph_.neighbors(cur)) {
      if (d(cur, v) == c + d(w, v)) {
        next = w;  // neighbors are id-sorted, first hit is smallest
        break;
      }
    }
    if (next < 0)
      throw Error(ErrorKind::Precondition, "shortest path reconstruction failed");
    path.push_back(next);
    cur = next;
  }
  return path;
}

WeightedGraph minimal_inducing_subgraph(const WeightedGraph& g, const Metric& m) {
  // An alternative u-v path (a simple path other than the edge itself) of
  // length <= w(u,v) exists iff some third vertex z has
  // d(u,z) + d(z,v) <= w(u,v); with positive weights neither shortest leg can
  // use the edge {u,v} in that case.
  std::vector<WeightedEdge> kept;
  for (const auto& e : g.edges()) {
    if (m.d(e.u, e.v) < e.w) continue;
    bool redundant = false;
    for (int z = 0; z < g.vertex_count() && !redundant; ++z) {
      if (z == e.u || z == e.v) continue;
      if (m.d(e.u, z) + m.d(z, e.v) <= e.w) redundant = true;
    }
    if (!redundant) kept.push_back(e);
  }
  return WeightedGraph(g.vertex_count(), std::move(kept));
}

}  // namespace khop
