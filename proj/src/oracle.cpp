#include "khop/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace khop {

namespace {

int effective_hops(const Instance& ins) {
  // Any tree on n vertices has depth at most n-1, so larger bounds are
  // equivalent and only widen the enumeration.
  return std::min(ins.hops, std::max(1, ins.n() - 1));
}

}  // namespace

OracleResult oracle_khop(const Instance& ins) {
  ins.validate();
  const int n = ins.n();
  if (n > 10)
    throw Error(ErrorKind::TooLarge, "reference solver is limited to 10 vertices");
  const int k = effective_hops(ins);
  if (std::pow(static_cast<double>(k + 1), n - 1) > 2e8)
    throw Error(ErrorKind::TooLarge, "labeling space too large for the reference solver");

  OracleResult best;
  if (n == 1) {
    best.cost = Cost::zero();
    best.witness = Lap::full_domain(1);
    best.witness.label[0] = 0;
    best.labelings_tried = 1;
    return best;
  }

  // Odometer over per-vertex label choices. Digit order 1..k then excluded,
  // so the first strict optimum found is the lexicographically least labeling.
  std::vector<Vertex> free_vertices;
  for (Vertex v = 0; v < n; ++v)
    if (v != ins.root) free_vertices.push_back(v);
  const int m = static_cast<int>(free_vertices.size());
  std::vector<int> digit(m, 0);  // 0..k-1 encode labels 1..k, k encodes excluded

  std::vector<Label> labels(n, kLabelInf);
  labels[ins.root] = 0;
  std::vector<int> level_count(k + 1, 0);

  bool done = false;
  while (!done) {
    ++best.labelings_tried;
    bool feasible = true;
    std::fill(level_count.begin(), level_count.end(), 0);
    level_count[0] = 1;
    for (int i = 0; i < m; ++i) {
      Label l = digit[i] < k ? digit[i] + 1 : kLabelInf;
      if (!label_finite(l) && ins.is_terminal(free_vertices[i])) {
        feasible = false;
        break;
      }
      labels[free_vertices[i]] = l;
      if (label_finite(l)) ++level_count[l];
    }
    if (feasible) {
      for (int l = 1; l <= k; ++l)
        if (level_count[l] > 0 && level_count[l - 1] == 0) {
          feasible = false;
          break;
        }
    }
    if (feasible) {
      Lap lap = anchoring_from_labeling(ins, labels);
      Cost c = lap_cost(ins.metric, lap);
      if (c < best.cost) {
        best.cost = c;
        best.witness = lap;
      }
    }
    done = true;
    for (int i = m - 1; i >= 0; --i) {
      if (++digit[i] <= k) {
        done = false;
        break;
      }
      digit[i] = 0;
    }
  }
  if (best.cost.is_infinite())
    throw Error(ErrorKind::InfeasibleInstance, "no feasible labeling found");
  return best;
}

OracleResult oracle_khop_parent_enum(const Instance& ins) {
  ins.validate();
  const int n = ins.n();
  if (n > 6)
    throw Error(ErrorKind::TooLarge, "parent enumeration is limited to 6 vertices");
  const int k = ins.hops;

  OracleResult best;
  std::vector<Vertex> free_vertices;
  for (Vertex v = 0; v < n; ++v)
    if (v != ins.root) free_vertices.push_back(v);
  const int m = static_cast<int>(free_vertices.size());

  // choice[i] in [0..n-1]: parent id, with choice == v meaning "excluded".
  std::vector<int> choice(m, 0);
  bool done = m == 0;

  auto evaluate = [&]() {
    ++best.labelings_tried;
    Lap lap = Lap::full_domain(n);
    lap.label[ins.root] = 0;
    for (int i = 0; i < m; ++i) lap.anchor[free_vertices[i]] = choice[i];
    // Resolve depths by chasing parents; reject cycles and broken chains.
    for (Vertex v = 0; v < n; ++v) {
      if (v == ins.root || lap.anchor[v] == v) continue;
      Vertex cur = v;
      int steps = 0;
      while (cur != ins.root) {
        if (lap.anchor[cur] == cur || ++steps > n) return;  // excluded parent or cycle
        cur = lap.anchor[cur];
      }
      lap.label[v] = steps;
      if (steps > k) return;
    }
    for (Vertex v = 0; v < n; ++v)
      if (ins.is_terminal(v) && !label_finite(lap.label[v])) return;
    if (!validate_lap(ins, lap)) return;
    Cost c = lap_cost(ins.metric, lap);
    if (c < best.cost) {
      best.cost = c;
      best.witness = lap;
    }
  };

  if (m == 0) {
    best.cost = Cost::zero();
    best.witness = Lap::full_domain(n);
    best.witness.label[ins.root] = 0;
    best.labelings_tried = 1;
    return best;
  }
  while (!done) {
    evaluate();
    done = true;
    for (int i = m - 1; i >= 0; --i) {
      if (++choice[i] < n) {
        done = false;
        break;
      }
      choice[i] = 0;
    }
  }
  if (best.cost.is_infinite())
    throw Error(ErrorKind::InfeasibleInstance, "no feasible parent function found");
  return best;
}

Cost oracle_ufl(const Instance& ins) {
  ins.validate();
  if (ins.hops != 2)
    throw Error(ErrorKind::Precondition, "facility-location form requires k = 2");
  const int n = ins.n();
  if (n > 16)
    throw Error(ErrorKind::TooLarge, "facility enumeration is limited to 16 vertices");

  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v)
    if (v != ins.root) others.push_back(v);
  const int m = static_cast<int>(others.size());

  Cost best = Cost::infinity();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Cost open = Cost::zero();
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) open += ins.metric.d(ins.root, others[i]);
    Cost serve = Cost::zero();
    for (Vertex x : ins.terminals) {
      if (x == ins.root) continue;
      bool is_open = false;
      for (int i = 0; i < m && !is_open; ++i)
        if ((mask & (1u << i)) && others[i] == x) is_open = true;
      if (is_open) continue;
      Cost nearest = ins.metric.d(x, ins.root);
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i))
          nearest = std::min(nearest, ins.metric.d(x, others[i]));
      serve += nearest;
    }
    Cost total = open + serve;
    if (total < best) best = total;
  }
  return best;
}

Cost oracle_star(const Instance& ins) {
  ins.validate();
  Cost total = Cost::zero();
  for (Vertex x : ins.terminals)
    if (x != ins.root) total += ins.metric.d(ins.root, x);
  return total;
}

Cost oracle_mst(const Instance& ins) {
  ins.validate();
  const int n = ins.n();
  if (static_cast<int>(ins.terminals.size()) != n)
    throw Error(ErrorKind::Precondition,
                "metric-closure MST requires every vertex to be a terminal");
  std::vector<char> in_tree(n, 0);
  std::vector<Cost> key(n, Cost::infinity());
  key[ins.root] = Cost::zero();
  Cost total = Cost::zero();
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!in_tree[v] && (best < 0 || key[v] < key[best])) best = v;
    in_tree[best] = 1;
    total += key[best];
    for (Vertex v = 0; v < n; ++v)
      if (!in_tree[v]) key[v] = std::min(key[v], ins.metric.d(best, v));
  }
  return total;
}

}  // namespace khop
