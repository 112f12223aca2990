#ifndef KHOP_TWDP_SOLVER_HPP
#define KHOP_TWDP_SOLVER_HPP

#include <functional>
#include <string>
#include <unordered_map>

#include "khop/lap.hpp"
#include "khop/treedecomp.hpp"

namespace khop {

// Anchoring guarantees of one decomposition-node cell: for every bag vertex
// (in sorted bag order) and every depth 1..k-1, the promised closest depth-i
// vertex inside the processed region below the node and the promised closest
// one outside of it. Depth 0 is pinned to the tree root outside and nothing
// inside.
struct BagGuarantees {
  // outside[u_pos][i-1], inside[u_pos][i-1] for i in 1..k-1
  std::vector<std::vector<VertexOrBottom>> outside;
  std::vector<std::vector<VertexOrBottom>> inside;

  static BagGuarantees empty(std::size_t bag_size, int k) {
    BagGuarantees g;
    g.outside.assign(bag_size, std::vector<VertexOrBottom>(k - 1, VertexOrBottom()));
    g.inside = g.outside;
    return g;
  }
};

struct TwdpSolveResult {
  Cost cost = Cost::infinity();
  Lap lap;
  SteinerTree tree;
  std::uint64_t cells = 0;
  // Anchoring charge collected per vertex during extraction; every non-root
  // vertex is decided exactly once.
  std::vector<Cost> charges;
};

class TwdpSolver {
 public:
  TwdpSolver(const Instance& ins, const NiceTreeDecomposition& ntd);

  // Minimum cost of anchoring the below-set of the node under the given
  // guarantees; infinite when they are contradictory.
  Cost cell(int node, const BagGuarantees& g);

  TwdpSolveResult solve();

  void for_each_cell(
      const std::function<void(int, const BagGuarantees&, Cost)>& fn) const;

 private:
  struct Entry {
    Cost value = Cost::infinity();
    int forget_label = 0;  // chosen depth at forget nodes (kLabelInf allowed)
    std::vector<std::vector<std::vector<VertexOrBottom>>> child_inside;  // per child
  };

  std::string encode(int node, const BagGuarantees& g) const;
  BagGuarantees decode(int node, const std::string& key) const;

  bool respects_outside_order(int node, const BagGuarantees& g) const;
  Cost eval_join(int node, const BagGuarantees& g, Entry* entry);
  Cost eval_forget(int node, const BagGuarantees& g, Entry* entry);
  Cost eval_introduce(int node, const BagGuarantees& g, Entry* entry);

  BagGuarantees derive_join_child(int node, const BagGuarantees& g, int which) const;
  BagGuarantees derive_forget_child_outside(int node, const BagGuarantees& g,
                                            int label) const;

  void reconstruct(int node, const BagGuarantees& g, Lap* lap,
                   std::vector<Cost>* charges, std::vector<char>* decided);

  int bag_pos(int node, Vertex v) const;

  const Instance& ins_;
  const NiceTreeDecomposition& ntd_;
  const Metric& m_;
  int k_;
  // Below-set of each node pre-sorted by distance-then-id from each bag vertex.
  std::vector<std::vector<std::vector<Vertex>>> below_sorted_;
  std::vector<std::unordered_map<std::string, Entry>> memo_;
  std::uint64_t cells_ = 0;
};

// Full pipeline: nice decomposition in, optimal tree out.
TwdpSolveResult solve_treewidth(const Instance& ins, const NiceTreeDecomposition& ntd);

// Convenience: heuristic decomposition of the instance graph.
TwdpSolveResult solve_treewidth(const Instance& ins);

// State-space estimate used by the command-line budget guard:
// (n + 2) ^ (2 (k-1) * max_bag). Saturates instead of overflowing.
long double treewidth_state_estimate(int n, int k, int max_bag);

}  // namespace khop

#endif
