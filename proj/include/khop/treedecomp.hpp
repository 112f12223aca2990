#ifndef KHOP_TREEDECOMP_HPP
#define KHOP_TREEDECOMP_HPP

#include <vector>

#include "khop/graph.hpp"

namespace khop {

// Plain tree decomposition: bags over graph vertices plus a tree on bag ids
// (0-based internally; the file format is 1-based).
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> edges;

  int bag_count() const { return static_cast<int>(bags.size()); }
};

// Checks coverage of all vertices and edges, per-vertex connectivity of the
// bag subtree, and that the bag graph is a tree. Returns the width.
// Throws InvalidDecomposition naming the violated property.
int validate_decomposition(const WeightedGraph& g, const TreeDecomposition& td);

// Min-fill elimination-order decomposition: valid by construction, no
// optimality guarantee.
TreeDecomposition heuristic_decompose(const WeightedGraph& g);

enum class NiceNodeType { Leaf, Join, Forget, Introduce };

struct NiceNode {
  NiceNodeType type = NiceNodeType::Leaf;
  std::vector<Vertex> bag;       // sorted
  std::vector<int> children;     // 1 (forget/introduce) or 2 (join) or 0 (leaf)
  Vertex vertex = -1;            // forgotten/introduced vertex
  std::vector<Vertex> below;     // strict-descendant bag union minus bag, sorted
  std::vector<char> in_below;    // size n membership
};

struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  int width = 0;

  const NiceNode& node(int id) const { return nodes[id]; }
  int size() const { return static_cast<int>(nodes.size()); }
};

// Roots the decomposition at the first bag containing `root` and rewrites it
// with leaf/join/forget/introduce nodes only. Width is unchanged and the node
// count stays linear in n * width.
NiceTreeDecomposition make_nice(const TreeDecomposition& td, const WeightedGraph& g,
                                Vertex root);

// Structural re-validation of a nice decomposition (node typing rules, root
// bag containing the root, below-set identities, one forget per vertex).
void validate_nice(const NiceTreeDecomposition& ntd, const WeightedGraph& g,
                   Vertex root);

// Width-1 decomposition of a tree-induced metric's inducing tree (bags are
// the tree edges); convenience for cross-solver agreement runs.
TreeDecomposition decomposition_from_tree_edges(const WeightedGraph& tree);

}  // namespace khop

#endif
