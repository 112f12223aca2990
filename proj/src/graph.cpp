#include "khop/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace khop {

WeightedGraph::WeightedGraph(int n, std::vector<WeightedEdge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw Error(ErrorKind::Precondition, "graph needs at least one vertex");
  std::set<std::pair<Vertex, Vertex>> seen;
  adj_.assign(n_, {});
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw Error(ErrorKind::ParseError,
                  "edge endpoint out of range: " + std::to_string(e.u) + " " +
                      std::to_string(e.v));
    if (e.u == e.v)
      throw Error(ErrorKind::ParseError, "self-loop at vertex " + std::to_string(e.u));
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second)
      throw Error(ErrorKind::ParseError,
                  "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    if (e.w.scaled() <= 0 || e.w.is_infinite())
      throw Error(ErrorKind::NonPositiveWeight, "edge weight must be positive and finite");
    adj_[e.u].push_back({e.v, e.w});
    adj_[e.v].push_back({e.u, e.w});
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool WeightedGraph::is_connected() const {
  std::vector<char> vis(n_, 0);
  std::vector<Vertex> stack = {0};
  vis[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const auto& [w, c] : adj_[v]) {
      if (!vis[w]) {
        vis[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

}  // namespace khop
