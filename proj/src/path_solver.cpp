#include "khop/path_solver.hpp"

#include <algorithm>
#include <cstdlib>

namespace khop {

namespace {

constexpr std::size_t kMaxTableCells = 300'000'000;

struct Table {
  int m = 0;
  int k = 0;
  std::vector<std::int64_t> val;
  std::vector<std::pair<std::int16_t, std::int16_t>> bp;  // (s', c) per cell
  std::uint64_t cells = 0;

  std::size_t idx(int p, int s, int a, int b) const {
    return ((static_cast<std::size_t>(p) * m + s) * m + a) * m + b;
  }
  std::int64_t get(int p, int s, int a, int b) const {
    return a > b ? 0 : val[idx(p, s, a, b)];
  }
};

// Iterative fill: hop budget outermost, interval length innermost-ascending.
// A cell with p > 1 only reads same-budget cells over shorter intervals and
// previous-budget cells, so every dependency is ready.
Table fill_table(const PathInstance& line, int k) {
  const int m = line.size();
  Table t;
  t.m = m;
  t.k = k;
  if (static_cast<std::size_t>(k + 1) * m * m * m > kMaxTableCells)
    throw Error(ErrorKind::TooLarge, "path table exceeds the memory guard");
  t.val.assign(static_cast<std::size_t>(k + 1) * m * m * m, 0);
  t.bp.assign(t.val.size(), {-1, -1});

  // prefix[s][j] = sum of d(s, x) for x in [0, j].
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(m) * m, 0);
  for (int s = 0; s < m; ++s) {
    std::int64_t acc = 0;
    for (int j = 0; j < m; ++j) {
      acc += std::abs(line.coord[s] - line.coord[j]);
      prefix[static_cast<std::size_t>(s) * m + j] = acc;
    }
  }
  auto range_sum = [&](int s, int a, int b) {
    std::int64_t hi = prefix[static_cast<std::size_t>(s) * m + b];
    return a == 0 ? hi : hi - prefix[static_cast<std::size_t>(s) * m + a - 1];
  };

  const std::int64_t* coord = line.coord.data();
  for (int p = 1; p <= k; ++p) {
    for (int len = 1; len <= m; ++len) {
      for (int a = 0; a + len - 1 < m; ++a) {
        const int b = a + len - 1;
        for (int s = 0; s < m; ++s) {
          if (s >= a && s <= b) continue;
          ++t.cells;
          std::size_t cell = t.idx(p, s, a, b);
          if (a == b) {
            t.val[cell] = std::abs(coord[s] - coord[a]);
            continue;
          }
          if (p == 1) {
            t.val[cell] = range_sum(s, a, b);
            continue;
          }
          std::int64_t best = std::numeric_limits<std::int64_t>::max();
          int best_sp = -1, best_c = -1;
          for (int sp = a; sp <= b; ++sp) {
            const std::int64_t head =
                std::abs(coord[sp] - coord[s]) + t.get(p - 1, sp, sp + 1, b);
            if (head >= best) continue;
            for (int c = a; c <= sp; ++c) {
              const std::int64_t cand =
                  head + t.get(p, s, a, c - 1) + t.get(p - 1, sp, c, sp - 1);
              if (cand < best) {
                best = cand;
                best_sp = sp;
                best_c = c;
              }
            }
          }
          t.val[cell] = best;
          t.bp[cell] = {static_cast<std::int16_t>(best_sp),
                        static_cast<std::int16_t>(best_c)};
        }
      }
    }
  }
  return t;
}

void expand(const Table& t, int p, int s, int a, int b, std::vector<int>& parent_pos) {
  if (a > b) return;
  if (a == b) {
    parent_pos[a] = s;
    return;
  }
  if (p == 1) {
    for (int x = a; x <= b; ++x) parent_pos[x] = s;
    return;
  }
  auto [sp, c] = t.bp[t.idx(p, s, a, b)];
  parent_pos[sp] = s;
  expand(t, p, s, a, c - 1, parent_pos);
  expand(t, p - 1, sp, c, sp - 1, parent_pos);
  expand(t, p - 1, sp, sp + 1, b, parent_pos);
}

}  // namespace

PathInstance path_form(const Instance& ins) {
  ins.validate();
  const int n = ins.n();
  PathInstance line;
  line.hops = ins.hops;
  if (n == 1) {
    line.order = {0};
    line.coord = {0};
    line.root_pos = 0;
    return line;
  }

  WeightedGraph mg = minimal_inducing_subgraph(ins.metric.source_graph(), ins.metric);
  if (static_cast<int>(mg.edges().size()) != n - 1)
    throw Error(ErrorKind::ClassMismatch, "metric is not induced by a path");
  Vertex start = -1;
  for (Vertex v = 0; v < n; ++v) {
    std::size_t deg = mg.neighbors(v).size();
    if (deg > 2 || deg == 0)
      throw Error(ErrorKind::ClassMismatch, "metric is not induced by a path");
    if (deg == 1 && start < 0) start = v;  // endpoints scanned in id order
  }
  if (start < 0)
    throw Error(ErrorKind::ClassMismatch, "metric is not induced by a path");

  line.order.reserve(n);
  line.coord.reserve(n);
  Vertex prev = -1, cur = start;
  std::int64_t pos = 0;
  line.order.push_back(cur);
  line.coord.push_back(0);
  while (static_cast<int>(line.order.size()) < n) {
    Vertex next = -1;
    Cost w = Cost::zero();
    for (const auto& [nb, c] : mg.neighbors(cur))
      if (nb != prev) {
        next = nb;
        w = c;
        break;
      }
    if (next < 0)
      throw Error(ErrorKind::ClassMismatch, "metric is not induced by a path");
    pos += w.scaled();
    prev = cur;
    cur = next;
    line.order.push_back(cur);
    line.coord.push_back(pos);
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (ins.metric.d(line.order[i], line.order[j]).scaled() !=
          line.coord[j] - line.coord[i])
        throw Error(ErrorKind::NotAPathOrder,
                    "pairwise distances disagree with the line order");

  for (int i = 0; i < n; ++i)
    if (line.order[i] == ins.root) line.root_pos = i;
  return line;
}

PathInstance reduce_to_terminals(const Instance& ins, const PathInstance& line) {
  PathInstance red;
  red.hops = line.hops;
  for (int i = 0; i < line.size(); ++i) {
    if (!ins.is_terminal(line.order[i])) continue;
    if (line.order[i] == ins.root) red.root_pos = static_cast<int>(red.order.size());
    red.order.push_back(line.order[i]);
    red.coord.push_back(line.coord[i]);
  }
  return red;
}

Cost path_dp_cell(const PathInstance& line, int p, int s, int a, int b) {
  if (a > b) return Cost::zero();
  if (p < 1 || s < 0 || s >= line.size() || (s >= a && s <= b))
    throw Error(ErrorKind::Precondition, "cell indices out of range");
  Table t = fill_table(line, p);
  return Cost::from_scaled(t.get(p, s, a, b));
}

PathSolveResult solve_path(const Instance& ins) {
  PathInstance line = path_form(ins);
  PathInstance red = reduce_to_terminals(ins, line);
  const int m = red.size();
  const int k = std::min(ins.hops, std::max(1, m - 1));

  PathSolveResult res;
  std::vector<int> parent_pos(m, -2);
  parent_pos[red.root_pos] = -1;
  if (m == 1) {
    res.cost = Cost::zero();
  } else {
    Table t = fill_table(red, k);
    std::int64_t left = t.get(k, red.root_pos, 0, red.root_pos - 1);
    std::int64_t right = t.get(k, red.root_pos, red.root_pos + 1, m - 1);
    res.cost = Cost::from_scaled(left + right);
    res.cells = t.cells;
    expand(t, k, red.root_pos, 0, red.root_pos - 1, parent_pos);
    expand(t, k, red.root_pos, red.root_pos + 1, m - 1, parent_pos);
  }

  std::vector<Label> depth_pos(m, kLabelInf);
  depth_pos[red.root_pos] = 0;
  for (int i = 0; i < m; ++i) {
    // Chase parents; chains are short and acyclic by construction.
    int x = i;
    std::vector<int> chain;
    while (depth_pos[x] == kLabelInf) {
      chain.push_back(x);
      x = parent_pos[x];
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      depth_pos[*it] = depth_pos[x] + 1;
      x = *it;
    }
  }

  SteinerTree tree;
  tree.root = ins.root;
  tree.parent.assign(ins.n(), -1);
  tree.depth.assign(ins.n(), kLabelInf);
  for (int i = 0; i < m; ++i) {
    tree.depth[red.order[i]] = depth_pos[i];
    if (parent_pos[i] >= 0) tree.parent[red.order[i]] = red.order[parent_pos[i]];
  }
  res.tree = std::move(tree);
  return res;
}

}  // namespace khop
