#ifndef KHOP_LAP_HPP
#define KHOP_LAP_HPP

#include <limits>
#include <string>
#include <vector>

#include "khop/instance.hpp"

namespace khop {

// Depth label of a vertex: 0 for the root, 1..k for tree vertices, and the
// "excluded" value for vertices outside the tree.
using Label = int;
constexpr Label kLabelInf = std::numeric_limits<Label>::max();
inline bool label_finite(Label l) { return l != kLabelInf; }

// Labeling-anchoring pair over a vertex domain. A vertex's label is its depth;
// its anchor is its tree parent. Excluded vertices carry the infinite label
// and anchor to themselves, so every consistency condition stays local.
struct Lap {
  std::vector<char> in_domain;  // size n
  std::vector<Label> label;     // size n, meaningful on the domain
  std::vector<Vertex> anchor;   // size n, meaningful on the domain minus root

  explicit Lap(int n = 0)
      : in_domain(n, 0), label(n, kLabelInf), anchor(n, -1) {
    for (int v = 0; v < n; ++v) anchor[v] = v;
  }

  static Lap full_domain(int n) {
    Lap lap(n);
    std::fill(lap.in_domain.begin(), lap.in_domain.end(), 1);
    return lap;
  }

  int size() const { return static_cast<int>(label.size()); }
};

// Explicit rooted tree view of a full-domain pair: parent and depth per
// included vertex (-1 parent for the root and for excluded vertices).
struct SteinerTree {
  Vertex root = 0;
  std::vector<Vertex> parent;  // -1 when absent or root
  std::vector<Label> depth;    // kLabelInf when absent

  int size() const { return static_cast<int>(parent.size()); }
  bool contains(Vertex v) const { return label_finite(depth[v]); }
};

// True iff the pair is consistent on its domain: label 0 only at the root,
// finite labels increase by one along anchors inside the domain, terminals
// are labeled, and excluded vertices are self-anchored with no one anchored
// to them. Returns false on violations, never throws.
bool validate_lap(const Instance& ins, const Lap& lap);

// Sum of d(u, anchor(u)) over domain vertices other than the root.
Cost lap_cost(const Metric& m, const Lap& lap);

// Completes a full-domain labeling into the cheapest consistent pair by
// anchoring every labeled vertex to the closest vertex one level up.
// Throws InfeasibleLabeling when a needed level is empty.
Lap anchoring_from_labeling(const Instance& ins, const std::vector<Label>& labels);

// Converts a valid full-domain pair into an explicit tree, checking the hop
// bound, terminal coverage and structural soundness.
// Throws NotAKHopTree naming the violated condition.
SteinerTree lap_to_tree(const Instance& ins, const Lap& lap);

// Exact total edge cost of the tree.
Cost tree_cost(const Metric& m, const SteinerTree& t);

// Tree -> pair conversion (labels from depths, anchors from parents).
Lap tree_to_lap(const SteinerTree& t);

// Canonical solution text: {"cost":...,"edges":[[p,c],...],"labels":{...}}
// with edges sorted by (parent, child) and label keys in vertex order.
std::string solution_to_json(const Metric& m, const SteinerTree& t);

}  // namespace khop

#endif
