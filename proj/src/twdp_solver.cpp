#include "khop/twdp_solver.hpp"

#include <algorithm>
#include <cmath>

namespace khop {

namespace {

// Runs fn for every slot assignment from the per-slot candidate lists.
// Assignments never place the same real vertex at two different depths; two
// slots of equal depth may share a vertex. Candidate order is preserved, so
// the first strict optimum seen by the caller is deterministic.
void enumerate_assignments(const std::vector<std::vector<VertexOrBottom>>& cand,
                           const std::vector<int>& level_of, int n,
                           const std::function<void(const std::vector<VertexOrBottom>&)>& fn) {
  const int slots = static_cast<int>(cand.size());
  std::vector<VertexOrBottom> assign(slots);
  if (slots == 0) {
    fn(assign);
    return;
  }
  std::vector<int> pick(slots, -1);
  std::vector<int> used_level(n, -1);
  std::vector<int> used_count(n, 0);

  auto release = [&](int slot) {
    if (pick[slot] < 0) return;
    VertexOrBottom x = cand[slot][pick[slot]];
    if (!x.is_bottom() && --used_count[x.id] == 0) used_level[x.id] = -1;
  };

  int depth = 0;
  while (depth >= 0) {
    if (depth == slots) {
      for (int s = 0; s < slots; ++s) assign[s] = cand[s][pick[s]];
      fn(assign);
      --depth;
      continue;
    }
    release(depth);
    bool advanced = false;
    for (int next = pick[depth] + 1; next < static_cast<int>(cand[depth].size());
         ++next) {
      VertexOrBottom x = cand[depth][next];
      if (!x.is_bottom() && used_level[x.id] >= 0 &&
          used_level[x.id] != level_of[depth])
        continue;
      pick[depth] = next;
      if (!x.is_bottom()) {
        used_level[x.id] = level_of[depth];
        ++used_count[x.id];
      }
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
}

}  // namespace

TwdpSolver::TwdpSolver(const Instance& ins, const NiceTreeDecomposition& ntd)
    : ins_(ins), ntd_(ntd), m_(ins.metric),
      k_(std::min(ins.hops, std::max(1, ins.n() - 1))) {
  memo_.resize(ntd_.size());
  below_sorted_.resize(ntd_.size());
  for (int b = 0; b < ntd_.size(); ++b) {
    const NiceNode& nd = ntd_.nodes[b];
    below_sorted_[b].resize(nd.bag.size());
    for (std::size_t p = 0; p < nd.bag.size(); ++p) {
      auto& lst = below_sorted_[b][p];
      lst = nd.below;
      Vertex u = nd.bag[p];
      std::sort(lst.begin(), lst.end(), [&](Vertex a, Vertex c) {
        return m_.closest_key(u, VertexOrBottom(a)) <
               m_.closest_key(u, VertexOrBottom(c));
      });
    }
  }
}

int TwdpSolver::bag_pos(int node, Vertex v) const {
  const auto& bag = ntd_.nodes[node].bag;
  auto it = std::lower_bound(bag.begin(), bag.end(), v);
  if (it == bag.end() || *it != v)
    throw Error(ErrorKind::Precondition, "vertex not in bag");
  return static_cast<int>(it - bag.begin());
}

std::string TwdpSolver::encode(int node, const BagGuarantees& g) const {
  const auto& bag = ntd_.nodes[node].bag;
  std::string key;
  key.reserve(bag.size() * (k_ - 1) * 4);
  auto push = [&](VertexOrBottom x) {
    int enc = x.is_bottom() ? ins_.n() : x.id;
    key.push_back(static_cast<char>(enc & 0xff));
    key.push_back(static_cast<char>((enc >> 8) & 0xff));
  };
  for (std::size_t p = 0; p < bag.size(); ++p)
    for (int i = 1; i < k_; ++i) {
      push(g.outside[p][i - 1]);
      push(g.inside[p][i - 1]);
    }
  return key;
}

BagGuarantees TwdpSolver::decode(int node, const std::string& key) const {
  const auto& bag = ntd_.nodes[node].bag;
  BagGuarantees g = BagGuarantees::empty(bag.size(), k_);
  std::size_t pos = 0;
  auto pull = [&]() {
    int enc = static_cast<unsigned char>(key[pos]) |
              (static_cast<unsigned char>(key[pos + 1]) << 8);
    pos += 2;
    return enc == ins_.n() ? VertexOrBottom() : VertexOrBottom(enc);
  };
  for (std::size_t p = 0; p < bag.size(); ++p)
    for (int i = 1; i < k_; ++i) {
      g.outside[p][i - 1] = pull();
      g.inside[p][i - 1] = pull();
    }
  return g;
}

bool TwdpSolver::respects_outside_order(int node, const BagGuarantees& g) const {
  // Every bag vertex must find its own outside promise at least as close as
  // anyone else's promise of the same depth.
  const auto& bag = ntd_.nodes[node].bag;
  for (int i = 0; i < k_ - 1; ++i)
    for (std::size_t u = 0; u < bag.size(); ++u)
      for (std::size_t w = 0; w < bag.size(); ++w)
        if (m_.d(bag[u], g.outside[u][i]) > m_.d(bag[u], g.outside[w][i]))
          return false;
  return true;
}

Cost TwdpSolver::cell(int node, const BagGuarantees& g) {
  std::string key = encode(node, g);
  auto& map = memo_[node];
  if (auto it = map.find(key); it != map.end()) return it->second.value;

  ++cells_;
  Entry entry;
  const NiceNode& nd = ntd_.nodes[node];

  bool sane = respects_outside_order(node, g);
  for (std::size_t p = 0; p < nd.bag.size() && sane; ++p)
    for (int i = 0; i < k_ - 1 && sane; ++i) {
      const VertexOrBottom in = g.inside[p][i];
      const VertexOrBottom out = g.outside[p][i];
      if (!in.is_bottom() && !nd.in_below[in.id]) sane = false;
      if (!out.is_bottom() && nd.in_below[out.id]) sane = false;
    }
  // A real vertex carries one depth: duplicated inside promises across depths
  // are contradictory.
  for (std::size_t p = 0; p < nd.bag.size() && sane; ++p)
    for (std::size_t q = 0; q < nd.bag.size() && sane; ++q)
      for (int i = 0; i < k_ - 1 && sane; ++i)
        for (int j = i + 1; j < k_ - 1 && sane; ++j)
          if (!g.inside[p][i].is_bottom() && g.inside[p][i] == g.inside[q][j])
            sane = false;

  if (sane) {
    switch (nd.type) {
      case NiceNodeType::Leaf:
        entry.value = Cost::zero();
        break;
      case NiceNodeType::Join:
        entry.value = eval_join(node, g, &entry);
        break;
      case NiceNodeType::Forget:
        entry.value = eval_forget(node, g, &entry);
        break;
      case NiceNodeType::Introduce:
        entry.value = eval_introduce(node, g, &entry);
        break;
    }
  }
  Cost value = entry.value;
  map.emplace(std::move(key), std::move(entry));
  return value;
}

BagGuarantees TwdpSolver::derive_join_child(int node, const BagGuarantees& g,
                                            int which) const {
  const NiceNode& nd = ntd_.nodes[node];
  const NiceNode& ch = ntd_.nodes[nd.children[which]];
  BagGuarantees cg = BagGuarantees::empty(nd.bag.size(), k_);
  for (std::size_t u = 0; u < nd.bag.size(); ++u)
    for (int i = 0; i < k_ - 1; ++i) {
      // Closest of the old promise and every inside promise that falls on the
      // other side of this child.
      VertexOrBottom best = g.outside[u][i];
      for (std::size_t w = 0; w < nd.bag.size(); ++w) {
        VertexOrBottom x = g.inside[w][i];
        if (!x.is_bottom() && ch.in_below[x.id]) continue;
        best = m_.closest2(nd.bag[u], best, x);
      }
      cg.outside[u][i] = best;
    }
  return cg;
}

Cost TwdpSolver::eval_join(int node, const BagGuarantees& g, Entry* entry) {
  const NiceNode& nd = ntd_.nodes[node];
  entry->child_inside.resize(2);
  Cost total = Cost::zero();
  for (int which = 0; which < 2; ++which) {
    const int child = nd.children[which];
    const NiceNode& ch = ntd_.nodes[child];
    BagGuarantees cg = derive_join_child(node, g, which);

    std::vector<std::vector<VertexOrBottom>> cand(nd.bag.size() * (k_ - 1));
    std::vector<int> level_of(cand.size());
    for (std::size_t u = 0; u < nd.bag.size(); ++u)
      for (int i = 0; i < k_ - 1; ++i) {
        auto& c = cand[u * (k_ - 1) + i];
        level_of[u * (k_ - 1) + i] = i;
        VertexOrBottom pin = g.inside[u][i];
        if (!pin.is_bottom() && ch.in_below[pin.id]) {
          c = {pin};
          continue;
        }
        for (Vertex x : below_sorted_[child][u]) {
          bool ok = true;
          for (std::size_t z = 0; z < nd.bag.size() && ok; ++z)
            if (m_.closest_key(nd.bag[z], VertexOrBottom(x)) <
                m_.closest_key(nd.bag[z], g.inside[z][i]))
              ok = false;
          if (ok) c.push_back(VertexOrBottom(x));
        }
        c.push_back(VertexOrBottom());
      }

    Cost best = Cost::infinity();
    enumerate_assignments(cand, level_of, ins_.n(),
                          [&](const std::vector<VertexOrBottom>& assign) {
                            BagGuarantees q = cg;
                            for (std::size_t u = 0; u < nd.bag.size(); ++u)
                              for (int i = 0; i < k_ - 1; ++i)
                                q.inside[u][i] = assign[u * (k_ - 1) + i];
                            Cost val = cell(child, q);
                            if (val < best) {
                              best = val;
                              entry->child_inside[which].assign(1, {});
                              entry->child_inside[which][0] = assign;
                            }
                          });
    if (best.is_infinite()) return Cost::infinity();
    total += best;
  }
  return total;
}

Cost TwdpSolver::eval_forget(int node, const BagGuarantees& g, Entry* entry) {
  const NiceNode& nd = ntd_.nodes[node];
  const Vertex v = nd.vertex;
  const int child = nd.children[0];
  const NiceNode& ch = ntd_.nodes[child];
  const int vpos = bag_pos(child, v);

  // Allowed depths for v given the inside promises.
  std::vector<int> labels;
  bool v_claimed = false;
  for (std::size_t u = 0; u < nd.bag.size(); ++u)
    for (int i = 0; i < k_ - 1; ++i)
      if (g.inside[u][i] == VertexOrBottom(v)) v_claimed = true;
  for (int lv = 1; lv <= k_; ++lv) {
    bool ok = true;
    for (std::size_t u = 0; u < nd.bag.size() && ok; ++u) {
      if (lv <= k_ - 1 &&
          m_.closest_key(nd.bag[u], VertexOrBottom(v)) <
              m_.closest_key(nd.bag[u], g.inside[u][lv - 1]))
        ok = false;
      for (int i = 0; i < k_ - 1 && ok; ++i)
        if (i != lv - 1 && g.inside[u][i] == VertexOrBottom(v)) ok = false;
    }
    if (ok) labels.push_back(lv);
  }
  if (!ins_.is_terminal(v) && !v_claimed) labels.push_back(kLabelInf);
  if (labels.empty()) return Cost::infinity();

  Cost best = Cost::infinity();
  for (int lv : labels) {
    BagGuarantees base = derive_forget_child_outside(node, g, lv);

    // Candidate sets for the child's inside promises, child-bag row-major.
    std::vector<std::vector<VertexOrBottom>> cand(ch.bag.size() * (k_ - 1));
    std::vector<int> level_of(cand.size());
    for (std::size_t p = 0; p < ch.bag.size(); ++p)
      for (int i = 0; i < k_ - 1; ++i) {
        auto& c = cand[p * (k_ - 1) + i];
        level_of[p * (k_ - 1) + i] = i;
        if (static_cast<int>(p) == vpos) {
          for (Vertex x : below_sorted_[child][p]) {
            bool ok = true;
            for (std::size_t u = 0; u < nd.bag.size() && ok; ++u)
              if (m_.closest_key(nd.bag[u], VertexOrBottom(x)) <
                  m_.closest_key(nd.bag[u], g.inside[u][i]))
                ok = false;
            if (ok) c.push_back(VertexOrBottom(x));
          }
          c.push_back(VertexOrBottom());
          continue;
        }
        // The child bag is the parent bag plus v, so parent rows shift by one
        // past v's position.
        const std::size_t parent_row = static_cast<int>(p) < vpos ? p : p - 1;
        VertexOrBottom pin = g.inside[parent_row][i];
        if (pin == VertexOrBottom(v)) {
          Vertex u = nd.bag[parent_row];
          for (Vertex x : below_sorted_[child][p])
            if (m_.closest_key(u, VertexOrBottom(x)) >
                m_.closest_key(u, VertexOrBottom(v)))
              c.push_back(VertexOrBottom(x));
          c.push_back(VertexOrBottom());
        } else {
          c = {pin};
        }
      }

    enumerate_assignments(cand, level_of, ins_.n(),
                          [&](const std::vector<VertexOrBottom>& assign) {
                            BagGuarantees q = base;
                            for (std::size_t p = 0; p < ch.bag.size(); ++p)
                              for (int i = 0; i < k_ - 1; ++i)
                                q.inside[p][i] = assign[p * (k_ - 1) + i];
                            Cost anchor = Cost::zero();
                            if (lv != kLabelInf) {
                              VertexOrBottom tgt;
                              if (lv == 1) {
                                tgt = VertexOrBottom(ins_.root);
                              } else {
                                tgt = m_.closest2(v, q.inside[vpos][lv - 2],
                                                  q.outside[vpos][lv - 2]);
                              }
                              if (tgt.is_bottom()) return;
                              anchor = m_.d(v, tgt);
                            }
                            Cost val = anchor + cell(child, q);
                            if (val < best) {
                              best = val;
                              entry->forget_label = lv;
                              entry->child_inside.assign(1, {assign});
                            }
                          });
  }
  return best;
}

BagGuarantees TwdpSolver::derive_forget_child_outside(int node, const BagGuarantees& g,
                                                      int label) const {
  const NiceNode& nd = ntd_.nodes[node];
  const int child = ntd_.nodes[node].children[0];
  const NiceNode& ch = ntd_.nodes[child];
  const Vertex v = nd.vertex;
  const int vpos = bag_pos(child, v);

  BagGuarantees cg = BagGuarantees::empty(ch.bag.size(), k_);
  for (std::size_t p = 0; p < ch.bag.size(); ++p) {
    if (static_cast<int>(p) == vpos) {
      for (int i = 0; i < k_ - 1; ++i) {
        if (label != kLabelInf && i == label - 1) {
          cg.outside[p][i] = VertexOrBottom(v);
          continue;
        }
        VertexOrBottom best;
        for (std::size_t u = 0; u < nd.bag.size(); ++u)
          best = m_.closest2(v, best, g.outside[u][i]);
        cg.outside[p][i] = best;
      }
      continue;
    }
    const std::size_t parent_row = static_cast<int>(p) < vpos ? p : p - 1;
    for (int i = 0; i < k_ - 1; ++i) {
      VertexOrBottom out = g.outside[parent_row][i];
      if (label != kLabelInf && i == label - 1)
        out = m_.closest2(nd.bag[parent_row], out, VertexOrBottom(v));
      cg.outside[p][i] = out;
    }
  }
  return cg;
}

Cost TwdpSolver::eval_introduce(int node, const BagGuarantees& g, Entry* entry) {
  (void)entry;
  const NiceNode& nd = ntd_.nodes[node];
  const int child = nd.children[0];
  const NiceNode& ch = ntd_.nodes[child];
  const Vertex v = nd.vertex;
  const int vpos = bag_pos(node, v);

  // The introduced vertex has no edge into the region below, so its inside
  // promises must be deducible from the remaining rows.
  for (int i = 0; i < k_ - 1; ++i) {
    VertexOrBottom expected;
    for (std::size_t p = 0; p < ch.bag.size(); ++p) {
      const std::size_t parent_row = static_cast<int>(p) < vpos ? p : p + 1;
      expected = m_.closest2(v, expected, g.inside[parent_row][i]);
    }
    if (!(g.inside[vpos][i] == expected)) return Cost::infinity();
  }

  BagGuarantees cg = BagGuarantees::empty(ch.bag.size(), k_);
  for (std::size_t p = 0; p < ch.bag.size(); ++p) {
    const std::size_t parent_row = static_cast<int>(p) < vpos ? p : p + 1;
    cg.outside[p] = g.outside[parent_row];
    cg.inside[p] = g.inside[parent_row];
  }
  return cell(child, cg);
}

TwdpSolveResult TwdpSolver::solve() {
  const int root_node = ntd_.root;
  const NiceNode& rb = ntd_.nodes[root_node];
  const Vertex r = ins_.root;
  const int n = ins_.n();

  std::vector<Vertex> others;
  for (Vertex v : rb.bag)
    if (v != r) others.push_back(v);
  const int m = static_cast<int>(others.size());

  Cost best = Cost::infinity();
  std::vector<Label> best_lbar;
  BagGuarantees best_g;

  // Depth assignment odometer over the root-bag vertices (terminals never
  // excluded), with inside-promise enumeration nested per assignment.
  std::vector<int> digit(m, 0);  // 0..k-1 -> depth 1..k, k -> excluded
  bool done = false;
  while (!done) {
    std::vector<Label> lbar(n, kLabelInf);
    lbar[r] = 0;
    bool feasible = true;
    for (int i = 0; i < m; ++i) {
      if (digit[i] == k_ && ins_.is_terminal(others[i])) {
        feasible = false;
        break;
      }
      lbar[others[i]] = digit[i] < k_ ? digit[i] + 1 : kLabelInf;
    }
    if (feasible) {
      BagGuarantees g = BagGuarantees::empty(rb.bag.size(), k_);
      for (std::size_t p = 0; p < rb.bag.size(); ++p)
        for (int i = 1; i < k_; ++i) {
          VertexOrBottom bestw;
          for (Vertex w : rb.bag)
            if (lbar[w] == i) bestw = m_.closest2(rb.bag[p], bestw, VertexOrBottom(w));
          g.outside[p][i - 1] = bestw;
        }

      std::vector<std::vector<VertexOrBottom>> cand(rb.bag.size() * (k_ - 1));
      std::vector<int> level_of(cand.size());
      for (std::size_t p = 0; p < rb.bag.size(); ++p)
        for (int i = 0; i < k_ - 1; ++i) {
          auto& c = cand[p * (k_ - 1) + i];
          level_of[p * (k_ - 1) + i] = i;
          for (Vertex x : below_sorted_[root_node][p]) c.push_back(VertexOrBottom(x));
          c.push_back(VertexOrBottom());
        }
      enumerate_assignments(
          cand, level_of, n, [&](const std::vector<VertexOrBottom>& assign) {
            BagGuarantees q = g;
            for (std::size_t p = 0; p < rb.bag.size(); ++p)
              for (int i = 0; i < k_ - 1; ++i)
                q.inside[p][i] = assign[p * (k_ - 1) + i];
            Cost base = cell(root_node, q);
            if (base.is_infinite()) return;
            Cost anchors = Cost::zero();
            for (int i = 0; i < m; ++i) {
              Label lv = lbar[others[i]];
              if (!label_finite(lv)) continue;
              int p = bag_pos(root_node, others[i]);
              VertexOrBottom tgt;
              if (lv == 1) {
                tgt = VertexOrBottom(r);
              } else {
                tgt = m_.closest2(others[i], q.inside[p][lv - 2],
                                  q.outside[p][lv - 2]);
              }
              if (tgt.is_bottom()) return;
              anchors += m_.d(others[i], tgt);
            }
            Cost total = base + anchors;
            if (total < best) {
              best = total;
              best_lbar = lbar;
              best_g = q;
            }
          });
    }
    done = true;
    for (int i = m - 1; i >= 0; --i) {
      if (++digit[i] <= k_) {
        done = false;
        break;
      }
      digit[i] = 0;
    }
  }

  if (best.is_infinite())
    throw Error(ErrorKind::InfeasibleInstance,
                "no feasible assignment at the decomposition root");

  TwdpSolveResult res;
  res.cost = best;
  res.cells = cells_;
  res.charges.assign(n, Cost::zero());
  Lap lap = Lap::full_domain(n);
  lap.label[r] = 0;
  std::vector<char> decided(n, 0);
  decided[r] = 1;

  for (int i = 0; i < m; ++i) {
    Vertex v = others[i];
    decided[v] = 1;
    Label lv = best_lbar[v];
    if (!label_finite(lv)) continue;
    int p = bag_pos(root_node, v);
    VertexOrBottom tgt = lv == 1 ? VertexOrBottom(r)
                                 : m_.closest2(v, best_g.inside[p][lv - 2],
                                               best_g.outside[p][lv - 2]);
    lap.label[v] = lv;
    lap.anchor[v] = tgt.vertex();
    res.charges[v] = m_.d(v, tgt);
  }
  reconstruct(root_node, best_g, &lap, &res.charges, &decided);
  for (Vertex v = 0; v < n; ++v)
    if (!decided[v])
      throw Error(ErrorKind::Precondition, "vertex left undecided after extraction");

  res.lap = std::move(lap);
  res.tree = lap_to_tree(ins_, res.lap);
  return res;
}

void TwdpSolver::reconstruct(int node, const BagGuarantees& g, Lap* lap,
                             std::vector<Cost>* charges, std::vector<char>* decided) {
  auto it = memo_[node].find(encode(node, g));
  if (it == memo_[node].end() || it->second.value.is_infinite())
    throw Error(ErrorKind::Precondition, "extraction hit an unevaluated cell");
  const Entry& entry = it->second;
  const NiceNode& nd = ntd_.nodes[node];

  switch (nd.type) {
    case NiceNodeType::Leaf:
      return;
    case NiceNodeType::Introduce: {
      const int child = nd.children[0];
      const NiceNode& ch = ntd_.nodes[child];
      const int vpos = bag_pos(node, nd.vertex);
      BagGuarantees cg = BagGuarantees::empty(ch.bag.size(), k_);
      for (std::size_t p = 0; p < ch.bag.size(); ++p) {
        const std::size_t parent_row = static_cast<int>(p) < vpos ? p : p + 1;
        cg.outside[p] = g.outside[parent_row];
        cg.inside[p] = g.inside[parent_row];
      }
      reconstruct(child, cg, lap, charges, decided);
      return;
    }
    case NiceNodeType::Forget: {
      const int child = nd.children[0];
      const NiceNode& ch = ntd_.nodes[child];
      const Vertex v = nd.vertex;
      const int vpos = bag_pos(child, v);
      const int lv = entry.forget_label;
      BagGuarantees cg = derive_forget_child_outside(node, g, lv);
      const auto& assign = entry.child_inside[0][0];
      for (std::size_t p = 0; p < ch.bag.size(); ++p)
        for (int i = 0; i < k_ - 1; ++i)
          cg.inside[p][i] = assign[p * (k_ - 1) + i];

      if ((*decided)[v])
        throw Error(ErrorKind::Precondition, "vertex decided twice");
      (*decided)[v] = 1;
      if (lv != kLabelInf) {
        VertexOrBottom tgt = lv == 1 ? VertexOrBottom(ins_.root)
                                     : m_.closest2(v, cg.inside[vpos][lv - 2],
                                                   cg.outside[vpos][lv - 2]);
        lap->label[v] = lv;
        lap->anchor[v] = tgt.vertex();
        (*charges)[v] = m_.d(v, tgt);
      }
      reconstruct(child, cg, lap, charges, decided);
      return;
    }
    case NiceNodeType::Join: {
      for (int which = 0; which < 2; ++which) {
        BagGuarantees cg = derive_join_child(node, g, which);
        const auto& assign = entry.child_inside[which][0];
        for (std::size_t u = 0; u < nd.bag.size(); ++u)
          for (int i = 0; i < k_ - 1; ++i)
            cg.inside[u][i] = assign[u * (k_ - 1) + i];
        reconstruct(nd.children[which], cg, lap, charges, decided);
      }
      return;
    }
  }
}

void TwdpSolver::for_each_cell(
    const std::function<void(int, const BagGuarantees&, Cost)>& fn) const {
  for (int node = 0; node < static_cast<int>(memo_.size()); ++node)
    for (const auto& [key, entry] : memo_[node])
      fn(node, decode(node, key), entry.value);
}

TwdpSolveResult solve_treewidth(const Instance& ins, const NiceTreeDecomposition& ntd) {
  ins.validate();
  TwdpSolver solver(ins, ntd);
  return solver.solve();
}

TwdpSolveResult solve_treewidth(const Instance& ins) {
  TreeDecomposition td = heuristic_decompose(ins.metric.source_graph());
  NiceTreeDecomposition ntd = make_nice(td, ins.metric.source_graph(), ins.root);
  return solve_treewidth(ins, ntd);
}

long double treewidth_state_estimate(int n, int k, int max_bag) {
  long double exponent = 2.0L * (k - 1) * max_bag;
  long double lg = exponent * std::log2(static_cast<long double>(n) + 2);
  if (lg > 400) return std::numeric_limits<long double>::infinity();
  return std::pow(static_cast<long double>(n) + 2, exponent);
}

}  // namespace khop
