#include "khop/lap.hpp"

#include <algorithm>

namespace khop {

bool validate_lap(const Instance& ins, const Lap& lap) {
  const int n = lap.size();
  if (n != ins.n()) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (!lap.in_domain[v]) continue;
    Label l = lap.label[v];
    if (label_finite(l) && (l < 0 || l > ins.hops)) return false;
    if (l == 0 && v != ins.root) return false;
    if (v == ins.root && l != 0) return false;
    if (ins.is_terminal(v) && !label_finite(l)) return false;
    if (v == ins.root) continue;
    Vertex a = lap.anchor[v];
    if (a < 0 || a >= n) return false;
    if (!label_finite(l)) {
      if (a != v) return false;
      if (ins.is_terminal(v)) return false;
    } else {
      if (a == v) return false;
      // Consistency is checkable only when the anchor lies in the domain.
      if (lap.in_domain[a]) {
        if (!label_finite(lap.label[a])) return false;  // anchored into excluded
        if (l != lap.label[a] + 1) return false;
      }
    }
  }
  // No vertex may anchor to an excluded domain vertex.
  for (Vertex v = 0; v < n; ++v) {
    if (!lap.in_domain[v] || v == ins.root) continue;
    Vertex a = lap.anchor[v];
    if (a != v && lap.in_domain[a] && !label_finite(lap.label[a])) return false;
  }
  return true;
}

Cost lap_cost(const Metric& m, const Lap& lap) {
  Cost total = Cost::zero();
  for (Vertex v = 0; v < lap.size(); ++v) {
    if (!lap.in_domain[v] || lap.anchor[v] == v) continue;
    total += m.d(v, lap.anchor[v]);
  }
  return total;
}

Lap anchoring_from_labeling(const Instance& ins, const std::vector<Label>& labels) {
  const int n = ins.n();
  if (static_cast<int>(labels.size()) != n)
    throw Error(ErrorKind::Precondition, "labeling size mismatch");
  if (labels[ins.root] != 0)
    throw Error(ErrorKind::Precondition, "root must carry label 0");

  std::vector<std::vector<VertexOrBottom>> level(ins.hops + 1);
  for (Vertex v = 0; v < n; ++v) {
    Label l = labels[v];
    if (!label_finite(l)) {
      if (ins.is_terminal(v))
        throw Error(ErrorKind::Precondition, "terminal without a label");
      continue;
    }
    if (l < 0 || l > ins.hops)
      throw Error(ErrorKind::Precondition, "label out of range");
    if (l == 0 && v != ins.root)
      throw Error(ErrorKind::Precondition, "label 0 on a non-root vertex");
    level[l].push_back(VertexOrBottom(v));
  }

  Lap lap = Lap::full_domain(n);
  lap.label = labels;
  for (Vertex v = 0; v < n; ++v) {
    Label l = labels[v];
    if (v == ins.root || !label_finite(l)) continue;
    const auto& parents = level[l - 1];
    if (parents.empty())
      throw Error(ErrorKind::InfeasibleLabeling,
                  "no vertex of depth " + std::to_string(l - 1) +
                      " to anchor vertex " + std::to_string(v));
    lap.anchor[v] = ins.metric.closest(v, parents).vertex();
  }
  return lap;
}

SteinerTree lap_to_tree(const Instance& ins, const Lap& lap) {
  const int n = ins.n();
  for (Vertex v = 0; v < n; ++v)
    if (!lap.in_domain[v])
      throw Error(ErrorKind::NotAKHopTree, "pair does not cover every vertex");

  SteinerTree t;
  t.root = ins.root;
  t.parent.assign(n, -1);
  t.depth.assign(n, kLabelInf);

  if (lap.label[ins.root] != 0)
    throw Error(ErrorKind::NotAKHopTree, "root is not at depth 0");
  for (Vertex v = 0; v < n; ++v) {
    Label l = lap.label[v];
    if (!label_finite(l)) {
      if (ins.is_terminal(v))
        throw Error(ErrorKind::NotAKHopTree,
                    "terminal " + std::to_string(v) + " is not in the tree");
      continue;
    }
    if (l > ins.hops)
      throw Error(ErrorKind::NotAKHopTree,
                  "vertex " + std::to_string(v) + " exceeds the hop bound");
    t.depth[v] = l;
    if (v == ins.root) continue;
    Vertex a = lap.anchor[v];
    if (a < 0 || a >= n || a == v)
      throw Error(ErrorKind::NotAKHopTree, "missing parent for vertex " + std::to_string(v));
    if (!label_finite(lap.label[a]) || lap.label[a] + 1 != l)
      throw Error(ErrorKind::NotAKHopTree,
                  "parent depth mismatch at vertex " + std::to_string(v));
    t.parent[v] = a;
  }
  // Depths strictly decrease along parents, so the structure is acyclic by
  // construction; root reachability is implied the same way.
  return t;
}

Cost tree_cost(const Metric& m, const SteinerTree& t) {
  Cost total = Cost::zero();
  for (Vertex v = 0; v < t.size(); ++v)
    if (t.parent[v] >= 0) total += m.d(v, t.parent[v]);
  return total;
}

Lap tree_to_lap(const SteinerTree& t) {
  Lap lap = Lap::full_domain(t.size());
  for (Vertex v = 0; v < t.size(); ++v) {
    lap.label[v] = t.depth[v];
    lap.anchor[v] = t.parent[v] >= 0 ? t.parent[v] : v;
  }
  lap.label[t.root] = 0;
  return lap;
}

std::string solution_to_json(const Metric& m, const SteinerTree& t) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < t.size(); ++v)
    if (t.parent[v] >= 0) edges.push_back({t.parent[v], v});
  std::sort(edges.begin(), edges.end());

  std::string out = "{\"cost\":";
  out += tree_cost(m, t).to_decimal();
  out += ",\"edges\":[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += '[' + std::to_string(edges[i].first) + ',' +
           std::to_string(edges[i].second) + ']';
  }
  out += "],\"labels\":{";
  for (Vertex v = 0; v < t.size(); ++v) {
    if (v) out += ',';
    out += '"' + std::to_string(v) + "\":";
    out += label_finite(t.depth[v]) ? std::to_string(t.depth[v]) : "\"inf\"";
  }
  out += "}}";
  return out;
}

}  // namespace khop
