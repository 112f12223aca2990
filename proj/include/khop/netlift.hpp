#ifndef KHOP_NETLIFT_HPP
#define KHOP_NETLIFT_HPP

#include "khop/lap.hpp"
#include "khop/treedecomp.hpp"

namespace khop {

// Covering/packing net: every vertex within delta of the net, net vertices
// pairwise more than delta apart, root always included.
struct DeltaNet {
  std::vector<Vertex> net;            // sorted
  Cost delta = Cost::zero();
  std::vector<Vertex> assignment;     // vertex -> nearest net vertex

  bool in_net(Vertex v) const {
    return std::binary_search(net.begin(), net.end(), v);
  }
};

// Greedy scan (root first, then ascending ids): a vertex joins the net iff it
// is farther than delta from everything already picked.
DeltaNet build_delta_net(const Metric& m, Vertex root, Cost delta);

enum class NetSolver { Oracle, Tree, Treewidth };

// Sub-instance on the net vertices: restricted metric rebuilt from its
// minimal inducing graph, every net vertex a terminal. original_of maps the
// compact ids back.
struct NetInstance {
  Instance instance;
  std::vector<Vertex> original_of;
};

NetInstance restrict_to_net(const Instance& ins, const DeltaNet& net);

// Attaches every non-net vertex to its assigned net vertex underneath a
// hop-feasible tree on the net, adding one hop and exactly the assignment
// distances to the cost.
SteinerTree lift_solution(const SteinerTree& net_tree, const Instance& ins,
                          const DeltaNet& net);

struct NetPipelineResult {
  SteinerTree tree;               // spans every vertex, depth <= k+1
  Cost net_cost = Cost::zero();   // optimal cost on the net sub-instance
  Cost lift_cost = Cost::zero();  // sum of assignment distances
  Cost total = Cost::zero();
  Cost bound = Cost::zero();      // n * delta
  std::size_t net_size = 0;
};

// Solve-on-net-then-lift heuristic with an additive certificate: the lift
// adds exactly lift_cost <= n * delta on top of the exact net optimum.
NetPipelineResult net_pipeline(const Instance& ins, Cost delta, NetSolver solver);

// Drops edges that no optimal tree can use because a star through the root is
// already cheaper. Never disconnects the graph.
WeightedGraph prune_heavy_edges(const WeightedGraph& g, Cost upper_bound);

// Star upper bound: sum of root distances over all vertices.
Cost star_upper_bound(const Metric& m, Vertex root);

}  // namespace khop

#endif
