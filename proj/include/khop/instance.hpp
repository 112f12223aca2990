#ifndef KHOP_INSTANCE_HPP
#define KHOP_INSTANCE_HPP

#include <algorithm>
#include <vector>

#include "khop/metric.hpp"

namespace khop {

enum class MetricClass { Path, Tree, General };

// A rooted hop-bounded Steiner tree instance: metric, terminal set containing
// the root, and the hop bound k >= 1.
struct Instance {
  Metric metric;
  std::vector<Vertex> terminals;  // sorted, includes root
  Vertex root = 0;
  int hops = 1;

  int n() const { return metric.size(); }

  bool is_terminal(Vertex v) const {
    return std::binary_search(terminals.begin(), terminals.end(), v);
  }

  void validate() const {
    if (hops < 1) throw Error(ErrorKind::Precondition, "hop bound must be >= 1");
    if (root < 0 || root >= n())
      throw Error(ErrorKind::Precondition, "root out of range");
    if (!is_terminal(root))
      throw Error(ErrorKind::Precondition, "root must be a terminal");
    for (Vertex t : terminals)
      if (t < 0 || t >= n())
        throw Error(ErrorKind::Precondition, "terminal out of range");
  }
};

inline Instance make_instance(Metric metric, std::vector<Vertex> terminals,
                              Vertex root, int hops) {
  Instance ins{std::move(metric), std::move(terminals), root, hops};
  std::sort(ins.terminals.begin(), ins.terminals.end());
  ins.terminals.erase(std::unique(ins.terminals.begin(), ins.terminals.end()),
                      ins.terminals.end());
  if (!ins.is_terminal(root)) {
    ins.terminals.push_back(root);
    std::sort(ins.terminals.begin(), ins.terminals.end());
  }
  ins.validate();
  return ins;
}

}  // namespace khop

#endif
