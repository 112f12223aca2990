#ifndef KHOP_METRIC_HPP
#define KHOP_METRIC_HPP

#include <span>
#include <utility>
#include <vector>

#include "khop/graph.hpp"

namespace khop {

struct MetricBuildOptions {
  // 0 = pick automatically; 1 = sequential. Per-source rows are independent,
  // so the table is bit-identical for any thread count.
  int threads = 0;
};

// All-pairs shortest-path metric of a connected weighted graph.
//
// Ties between equal-length shortest paths are broken by comparing the paths
// as vertex-id sequences and keeping the lexicographically smallest one, which
// plays the role of a consistent infinitesimal perturbation: every ordered
// pair has one canonical shortest path and the optimal tree cost is unchanged.
class Metric {
 public:
  Metric() : n_(0) {}

  int size() const { return n_; }
  const WeightedGraph& source_graph() const { return graph_; }

  Cost d(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }

  Cost d(Vertex u, VertexOrBottom x) const {
    return x.is_bottom() ? Cost::infinity() : d(u, x.id);
  }

  // Total order used for every closest-vertex decision: distance first, then
  // vertex id; the auxiliary vertex sorts after everything.
  std::pair<Cost, Vertex> closest_key(Vertex from, VertexOrBottom x) const {
    if (x.is_bottom()) return {Cost::infinity(), std::numeric_limits<Vertex>::max()};
    return {d(from, x.id), x.id};
  }

  bool closer(Vertex from, VertexOrBottom a, VertexOrBottom b) const {
    return closest_key(from, a) < closest_key(from, b);
  }

  // The unique minimizer of the closest order over a nonempty candidate set.
  VertexOrBottom closest(Vertex from, std::span<const VertexOrBottom> candidates) const;

  VertexOrBottom closest2(Vertex from, VertexOrBottom a, VertexOrBottom b) const {
    return closer(from, b, a) ? b : a;
  }

  // Canonical shortest path (as vertex ids, from u to v inclusive).
  std::vector<Vertex> shortest_path(Vertex u, Vertex v) const;

  friend Metric build_metric(const WeightedGraph& g, const MetricBuildOptions& opts);

 private:
  int n_;
  WeightedGraph graph_;
  std::vector<Cost> dist_;
};

Metric build_metric(const WeightedGraph& g, const MetricBuildOptions& opts = {});

// Subgraph keeping edge {u,v} iff no alternative u-v path of length at most
// w(u,v) exists. The result induces the same metric.
WeightedGraph minimal_inducing_subgraph(const WeightedGraph& g, const Metric& m);

}  // namespace khop

#endif
