#ifndef KHOP_GRAPH_HPP
#define KHOP_GRAPH_HPP

#include <cstdint>
#include <vector>

#include "khop/cost.hpp"

namespace khop {

using Vertex = int;

// Either a vertex id or the auxiliary "no such vertex" value. The auxiliary
// vertex is at infinite distance from everything and equals only itself; it
// loses every closest-vertex comparison against a real vertex.
struct VertexOrBottom {
  static constexpr Vertex kBottomId = -1;

  VertexOrBottom() : id(kBottomId) {}
  explicit VertexOrBottom(Vertex v) : id(v) {}
  static VertexOrBottom bottom() { return VertexOrBottom(); }

  bool is_bottom() const { return id < 0; }
  Vertex vertex() const {
    if (is_bottom()) throw Error(ErrorKind::Precondition, "bottom has no vertex id");
    return id;
  }

  friend bool operator==(VertexOrBottom a, VertexOrBottom b) { return a.id == b.id; }
  friend bool operator!=(VertexOrBottom a, VertexOrBottom b) { return a.id != b.id; }

  Vertex id;
};

struct WeightedEdge {
  Vertex u;
  Vertex v;
  Cost w;
};

// Undirected graph with positive exact edge costs. Vertex ids are 0..n-1;
// self-loops and duplicate undirected edges are rejected on construction.
class WeightedGraph {
 public:
  WeightedGraph() : n_(0) {}
  WeightedGraph(int n, std::vector<WeightedEdge> edges);

  int vertex_count() const { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  // Neighbors sorted by vertex id, fixed once at construction.
  const std::vector<std::pair<Vertex, Cost>>& neighbors(Vertex v) const {
    return adj_[v];
  }

  bool is_connected() const;

 private:
  int n_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<std::pair<Vertex, Cost>>> adj_;
};

}  // namespace khop

#endif
