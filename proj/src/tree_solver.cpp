#include "khop/tree_solver.hpp"

#include <algorithm>

namespace khop {

RootedMetricTree tree_form(const Instance& ins) {
  ins.validate();
  const int n = ins.n();
  WeightedGraph mg = minimal_inducing_subgraph(ins.metric.source_graph(), ins.metric);
  if (static_cast<int>(mg.edges().size()) != n - 1)
    throw Error(ErrorKind::ClassMismatch, "metric is not induced by a tree");

  RootedMetricTree t;
  t.root = ins.root;
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  t.tin.assign(n, 0);
  t.tout.assign(n, 0);
  t.subtree.assign(n, {});

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {ins.root};
  seen[ins.root] = 1;
  std::vector<Vertex> preorder;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    preorder.push_back(v);
    for (const auto& [w, c] : mg.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = v;
      t.children[v].push_back(w);
      stack.push_back(w);
    }
  }
  if (static_cast<int>(preorder.size()) != n)
    throw Error(ErrorKind::ClassMismatch, "metric is not induced by a tree");
  for (auto& ch : t.children) std::sort(ch.begin(), ch.end());

  // Recursive preorder with id-sorted children for stable timestamps.
  int timer = 0;
  std::vector<std::pair<Vertex, std::size_t>> walk = {{ins.root, 0}};
  t.tin[ins.root] = timer++;
  while (!walk.empty()) {
    auto& [v, next] = walk.back();
    if (next < t.children[v].size()) {
      Vertex c = t.children[v][next++];
      t.tin[c] = timer++;
      walk.push_back({c, 0});
    } else {
      t.tout[v] = timer;
      walk.pop_back();
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& sub = t.subtree[v];
    for (Vertex w = 0; w < n; ++w)
      if (t.in_subtree(v, w)) sub.push_back(w);
  }

  // The tree must reproduce the metric exactly; a mismatch means the declared
  // class is wrong even though the minimal graph happens to be a tree.
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      Cost along = Cost::zero();
      Vertex a = v, b = w;
      // Walk both endpoints up to their meeting point.
      std::vector<char> on_path(n, 0);
      for (Vertex x = a; x >= 0; x = t.parent[x]) on_path[x] = 1;
      while (!on_path[b]) {
        along += ins.metric.d(b, t.parent[b]);
        b = t.parent[b];
      }
      while (a != b) {
        along += ins.metric.d(a, t.parent[a]);
        a = t.parent[a];
      }
      if (along != ins.metric.d(v, w))
        throw Error(ErrorKind::ClassMismatch, "tree does not induce the metric");
    }
  }
  return t;
}

TreeSolver::TreeSolver(const Instance& ins, const RootedMetricTree& tree)
    : ins_(ins), tree_(tree), m_(ins.metric),
      k_(std::min(ins.hops, std::max(1, ins.n() - 1))) {
  const int n = ins.n();
  memo_.resize(n);
  cand_from_parent_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v == tree_.root) continue;
    Vertex p = tree_.parent[v];
    auto& cand = cand_from_parent_[v];
    cand = tree_.subtree[v];
    std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
      return m_.closest_key(p, VertexOrBottom(a)) <
             m_.closest_key(p, VertexOrBottom(b));
    });
  }
}

Cost TreeSolver::anchor_cost(Vertex v, const TreeGuarantees& g) const {
  int claim = -1;
  int claims = 0;
  for (int i = 1; i <= k_; ++i)
    if (g.inside[i] == VertexOrBottom(v)) {
      claim = i;
      ++claims;
    }
  if (claims == 0) return ins_.is_terminal(v) ? Cost::infinity() : Cost::zero();
  if (claims > 1) return Cost::infinity();
  VertexOrBottom target = m_.closest2(v, g.outside[claim - 1], g.inside[claim - 1]);
  return m_.d(v, target);
}

std::vector<VertexOrBottom> TreeSolver::child_inside_candidates(
    Vertex v, Vertex child, VertexOrBottom inside_i) const {
  if (inside_i.is_bottom()) return {VertexOrBottom()};
  if (tree_.in_subtree(child, inside_i.id)) return {inside_i};
  // The child may only report vertices that do not beat the promised closest
  // one; strictness under the distance-then-id order keeps it unique.
  std::vector<VertexOrBottom> out;
  auto bar = m_.closest_key(v, inside_i);
  for (Vertex w : cand_from_parent_[child])
    if (m_.closest_key(v, VertexOrBottom(w)) > bar) out.push_back(VertexOrBottom(w));
  out.push_back(VertexOrBottom());
  return out;
}

VertexOrBottom TreeSolver::child_outside(Vertex v, Vertex child,
                                         VertexOrBottom outside_i,
                                         VertexOrBottom inside_i) const {
  if (!inside_i.is_bottom() && tree_.in_subtree(child, inside_i.id)) return outside_i;
  return m_.closest2(v, outside_i, inside_i);
}

std::string TreeSolver::encode(const TreeGuarantees& g) const {
  std::string key;
  key.reserve(2 * (2 * k_ - 1));
  auto push = [&](VertexOrBottom x) {
    int enc = x.is_bottom() ? ins_.n() : x.id;
    key.push_back(static_cast<char>(enc & 0xff));
    key.push_back(static_cast<char>((enc >> 8) & 0xff));
  };
  for (int i = 1; i < k_; ++i) push(g.outside[i]);
  for (int i = 1; i <= k_; ++i) push(g.inside[i]);
  return key;
}

TreeGuarantees TreeSolver::decode(const std::string& key) const {
  TreeGuarantees g = TreeGuarantees::empty(k_, tree_.root);
  std::size_t pos = 0;
  auto pull = [&]() {
    int enc = static_cast<unsigned char>(key[pos]) |
              (static_cast<unsigned char>(key[pos + 1]) << 8);
    pos += 2;
    return enc == ins_.n() ? VertexOrBottom() : VertexOrBottom(enc);
  };
  for (int i = 1; i < k_; ++i) g.outside[i] = pull();
  for (int i = 1; i <= k_; ++i) g.inside[i] = pull();
  return g;
}

Cost TreeSolver::best_child_choice(Vertex v, Vertex child, const TreeGuarantees& g,
                                   std::vector<VertexOrBottom>* chosen, bool at_root) {
  // Candidate lists per depth, then an odometer over their product. Slots
  // never reuse a real vertex already taken by another depth; such pairs are
  // contradictory and would only burn time before dying in the child cell.
  // At the root every subtree vertex is admissible for every depth.
  std::vector<std::vector<VertexOrBottom>> cand(k_ + 1);
  if (at_root) {
    std::vector<VertexOrBottom> all;
    all.reserve(cand_from_parent_[child].size() + 1);
    for (Vertex w : cand_from_parent_[child]) all.push_back(VertexOrBottom(w));
    all.push_back(VertexOrBottom());
    for (int i = 1; i <= k_; ++i) cand[i] = all;
  } else {
    for (int i = 1; i <= k_; ++i) cand[i] = child_inside_candidates(v, child, g.inside[i]);
  }

  TreeGuarantees cg = TreeGuarantees::empty(k_, tree_.root);
  for (int i = 1; i < k_; ++i)
    cg.outside[i] = child_outside(v, child, g.outside[i], g.inside[i]);

  std::vector<char> used(ins_.n(), 0);
  std::vector<int> pick(k_ + 1, -1);
  Cost best = Cost::infinity();

  // Depth-first odometer with in-place used bookkeeping.
  int depth = 1;
  while (depth >= 1) {
    if (depth > k_) {
      for (int i = 1; i <= k_; ++i) cg.inside[i] = cand[i][pick[i]];
      Cost val = cell(child, cg);
      if (val < best) {
        best = val;
        if (chosen) *chosen = cg.inside;
      }
      --depth;
      continue;
    }
    if (pick[depth] >= 0 && !cand[depth][pick[depth]].is_bottom())
      used[cand[depth][pick[depth]].id] = 0;
    bool advanced = false;
    for (int next = pick[depth] + 1; next < static_cast<int>(cand[depth].size());
         ++next) {
      VertexOrBottom c = cand[depth][next];
      if (!c.is_bottom() && used[c.id]) continue;
      pick[depth] = next;
      if (!c.is_bottom()) used[c.id] = 1;
      advanced = true;
      break;
    }
    if (!advanced) {
      pick[depth] = -1;
      --depth;
    } else {
      ++depth;
    }
  }
  return best;
}

Cost TreeSolver::cell(Vertex v, const TreeGuarantees& g) {
  std::string key = encode(g);
  auto& map = memo_[v];
  if (auto it = map.find(key); it != map.end()) return it->second.value;

  Entry entry;
  ++cells_;

  bool sane = true;
  for (int i = 1; i <= k_ && sane; ++i) {
    if (!g.inside[i].is_bottom() && !tree_.in_subtree(v, g.inside[i].id)) sane = false;
    for (int j = i + 1; j <= k_ && sane; ++j)
      if (!g.inside[i].is_bottom() && g.inside[i] == g.inside[j]) sane = false;
  }
  for (int i = 1; i < k_ && sane; ++i)
    if (!g.outside[i].is_bottom() && tree_.in_subtree(v, g.outside[i].id)) sane = false;
  if (!sane) {
    map.emplace(std::move(key), std::move(entry));
    return Cost::infinity();
  }

  Cost self = anchor_cost(v, g);
  if (!self.is_infinite()) {
    Cost total = self;
    entry.child_inside.resize(tree_.children[v].size());
    for (std::size_t j = 0; j < tree_.children[v].size(); ++j) {
      Cost sub = best_child_choice(v, tree_.children[v][j], g, &entry.child_inside[j]);
      if (sub.is_infinite()) {
        total = Cost::infinity();
        break;
      }
      total += sub;
    }
    entry.value = total;
  }
  Cost value = entry.value;
  map.emplace(std::move(key), std::move(entry));
  return value;
}

TreeSolveResult TreeSolver::solve() {
  TreeSolveResult res;
  const int n = ins_.n();
  Lap lap = Lap::full_domain(n);
  lap.label[tree_.root] = 0;

  Cost total = Cost::zero();
  TreeGuarantees root_g = TreeGuarantees::empty(k_, tree_.root);
  std::vector<std::vector<VertexOrBottom>> root_choices(tree_.children[tree_.root].size());
  for (std::size_t j = 0; j < tree_.children[tree_.root].size(); ++j) {
    Cost sub = best_child_choice(tree_.root, tree_.children[tree_.root][j], root_g,
                                 &root_choices[j], /*at_root=*/true);
    if (sub.is_infinite())
      throw Error(ErrorKind::InfeasibleInstance, "no feasible anchoring for a subtree");
    total += sub;
  }
  for (std::size_t j = 0; j < tree_.children[tree_.root].size(); ++j) {
    Vertex c = tree_.children[tree_.root][j];
    TreeGuarantees cg = TreeGuarantees::empty(k_, tree_.root);
    cg.inside = root_choices[j];
    reconstruct(c, cg, &lap);
  }

  res.cost = total;
  res.lap = std::move(lap);
  res.tree = lap_to_tree(ins_, res.lap);
  res.cells = cells_;
  return res;
}

void TreeSolver::reconstruct(Vertex v, const TreeGuarantees& g, Lap* lap) {
  auto it = memo_[v].find(encode(g));
  if (it == memo_[v].end() || it->second.value.is_infinite())
    throw Error(ErrorKind::Precondition, "reconstruction hit an unevaluated cell");
  const Entry& entry = it->second;

  int claim = -1;
  for (int i = 1; i <= k_; ++i)
    if (g.inside[i] == VertexOrBottom(v)) claim = i;
  if (claim > 0) {
    lap->label[v] = claim;
    lap->anchor[v] =
        m_.closest2(v, g.outside[claim - 1], g.inside[claim - 1]).vertex();
  }  // otherwise v stays excluded and self-anchored

  for (std::size_t j = 0; j < tree_.children[v].size(); ++j) {
    Vertex c = tree_.children[v][j];
    TreeGuarantees cg = TreeGuarantees::empty(k_, tree_.root);
    for (int i = 1; i < k_; ++i)
      cg.outside[i] = child_outside(v, c, g.outside[i], g.inside[i]);
    cg.inside = entry.child_inside[j];
    reconstruct(c, cg, lap);
  }
}

void TreeSolver::for_each_cell(
    const std::function<void(Vertex, const TreeGuarantees&, Cost)>& fn) const {
  for (Vertex v = 0; v < static_cast<int>(memo_.size()); ++v)
    for (const auto& [key, entry] : memo_[v]) fn(v, decode(key), entry.value);
}

TreeSolveResult solve_tree(const Instance& ins, const RootedMetricTree& tree) {
  TreeSolver solver(ins, tree);
  return solver.solve();
}

TreeSolveResult solve_tree(const Instance& ins) {
  RootedMetricTree tree = tree_form(ins);
  return solve_tree(ins, tree);
}

}  // namespace khop
