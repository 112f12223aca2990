#ifndef KHOP_TREE_SOLVER_HPP
#define KHOP_TREE_SOLVER_HPP

#include <functional>
#include <string>
#include <unordered_map>

#include "khop/lap.hpp"

namespace khop {

// Rooted form of a tree-induced metric. Subtree membership is answered with
// preorder intervals; T[v] vertex lists are kept explicitly for candidate
// enumeration.
struct RootedMetricTree {
  Vertex root = 0;
  std::vector<Vertex> parent;                 // -1 at root
  std::vector<std::vector<Vertex>> children;  // id-sorted
  std::vector<int> tin, tout;
  std::vector<std::vector<Vertex>> subtree;   // T[v], preorder

  bool in_subtree(Vertex top, Vertex w) const {
    return tin[top] <= tin[w] && tin[w] < tout[top];
  }
};

// Builds the rooted tree from the minimal inducing subgraph and checks that
// it reproduces the metric exactly. Throws ClassMismatch otherwise.
RootedMetricTree tree_form(const Instance& ins);

// Anchoring guarantees of a subtree cell. For each depth i there is one
// promised closest depth-i vertex inside the subtree and one outside of it.
// Index 0 is pinned (outside: the root; inside: none); inside slots run up to
// depth k because a vertex of maximal depth must still be claimable, while
// outside slots stop at k-1 since only depths 0..k-1 ever serve as anchor
// targets.
struct TreeGuarantees {
  std::vector<VertexOrBottom> outside;  // size k, [0] = root
  std::vector<VertexOrBottom> inside;   // size k+1, [0] = bottom

  static TreeGuarantees empty(int k, Vertex root) {
    TreeGuarantees g;
    g.outside.assign(k, VertexOrBottom());
    g.outside[0] = VertexOrBottom(root);
    g.inside.assign(k + 1, VertexOrBottom());
    return g;
  }
};

struct TreeSolveResult {
  Cost cost = Cost::infinity();
  Lap lap;
  SteinerTree tree;
  std::uint64_t cells = 0;
};

class TreeSolver {
 public:
  TreeSolver(const Instance& ins, const RootedMetricTree& tree);

  // Cost of anchoring v itself under the guarantees: zero when v is skippable,
  // the distance to the closest depth-(i_v - 1) promise when exactly one
  // inside slot claims v, infinite when the claims are contradictory.
  Cost anchor_cost(Vertex v, const TreeGuarantees& g) const;

  // Feasible inside-guarantee values a child may report for depth i, ordered
  // by distance from v then id, with "none" last.
  std::vector<VertexOrBottom> child_inside_candidates(Vertex v, Vertex child,
                                                      VertexOrBottom inside_i) const;

  // The child's outside guarantee for depth i, determined by the parent cell.
  VertexOrBottom child_outside(Vertex v, Vertex child, VertexOrBottom outside_i,
                               VertexOrBottom inside_i) const;

  // Memoized cell: minimum cost of anchoring the whole subtree of v under the
  // guarantees; infinite when they are unsatisfiable.
  Cost cell(Vertex v, const TreeGuarantees& g);

  TreeSolveResult solve();

  // Test hook: every evaluated cell with its value.
  void for_each_cell(
      const std::function<void(Vertex, const TreeGuarantees&, Cost)>& fn) const;

  int hops() const { return k_; }

 private:
  struct Entry {
    Cost value = Cost::infinity();
    std::vector<std::vector<VertexOrBottom>> child_inside;  // decision per child
  };

  std::string encode(const TreeGuarantees& g) const;
  TreeGuarantees decode(const std::string& key) const;

  // Minimum over a child's candidate combinations; records the chosen vector.
  Cost best_child_choice(Vertex v, Vertex child, const TreeGuarantees& g,
                         std::vector<VertexOrBottom>* chosen, bool at_root = false);

  void reconstruct(Vertex v, const TreeGuarantees& g, Lap* lap);

  const Instance& ins_;
  const RootedMetricTree& tree_;
  const Metric& m_;
  int k_;
  // Subtree vertices of each child sorted by distance-then-id from its parent.
  std::vector<std::vector<Vertex>> cand_from_parent_;
  std::vector<std::unordered_map<std::string, Entry>> memo_;
  std::uint64_t cells_ = 0;
};

// Convenience wrapper: derives the tree form and runs the solver.
TreeSolveResult solve_tree(const Instance& ins);
TreeSolveResult solve_tree(const Instance& ins, const RootedMetricTree& tree);

}  // namespace khop

#endif
