#include "doctest.h"

#include "khop/oracle.hpp"
#include "khop/path_solver.hpp"
#include "khop/tree_solver.hpp"
#include "test_support.hpp"

using namespace khop;
using namespace khop::testing;

namespace {

Instance unit_star(int leaves, int k) {
  std::vector<std::tuple<int, int, std::string>> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, "1"});
  return instance_of(leaves + 1, std::move(edges), all_vertices(leaves + 1), 0, k);
}

// Independent cell reference: every labeling of the subtree below v, checked
// against the promises, each vertex anchored to its cheapest admissible
// target.
Cost brute_cell(const Instance& ins, const RootedMetricTree& tree, int k, Vertex v,
                const TreeGuarantees& g) {
  const auto& sub = tree.subtree[v];
  const Metric& m = ins.metric;
  Cost best = Cost::infinity();
  std::vector<int> digit(sub.size(), 0);
  bool done = false;
  while (!done) {
    std::vector<Label> label(ins.n(), kLabelInf);
    bool ok = true;
    for (std::size_t i = 0; i < sub.size(); ++i) {
      Label l = digit[i] < k ? digit[i] + 1 : kLabelInf;
      if (!label_finite(l) && ins.is_terminal(sub[i])) ok = false;
      label[sub[i]] = l;
    }
    if (ok) {
      for (int i = 1; i <= k && ok; ++i) {
        VertexOrBottom closest_inside;
        for (Vertex w : sub)
          if (label[w] == i) closest_inside = m.closest2(v, closest_inside, VertexOrBottom(w));
        if (!(closest_inside == g.inside[i])) ok = false;
      }
    }
    if (ok) {
      Cost total = Cost::zero();
      for (Vertex w : sub) {
        if (!label_finite(label[w])) continue;
        VertexOrBottom target = g.outside[label[w] - 1];
        for (Vertex x : sub)
          if (label[x] == label[w] - 1) target = m.closest2(w, target, VertexOrBottom(x));
        if (target.is_bottom()) {
          ok = false;
          break;
        }
        total += m.d(w, target);
      }
      if (ok && total < best) best = total;
    }
    done = true;
    for (int i = static_cast<int>(sub.size()) - 1; i >= 0; --i) {
      if (++digit[i] <= k) {
        done = false;
        break;
      }
      digit[i] = 0;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("tree form roots the inducing tree and rejects other metrics") {
  GenOptions opts;
  opts.kind = "tree";
  opts.n = 8;
  opts.seed = 3;
  opts.wmax = 5;
  Instance ins = build_instance(generate(opts).instance);
  RootedMetricTree t = tree_form(ins);
  CHECK(t.root == ins.root);
  CHECK(t.subtree[ins.root].size() == 8);

  Instance cyc = instance_of(4, {{0, 1, "1"}, {1, 2, "1"}, {2, 3, "1"}, {0, 3, "2"}},
                             all_vertices(4), 0, 2);
  CHECK_THROWS_AS(tree_form(cyc), Error);
}

TEST_CASE("anchor cost: skippable, contradictory and claimed vertices") {
  Instance ins = unit_path(6, 0, 3, {0, 5});
  RootedMetricTree tree = tree_form(ins);
  TreeSolver solver(ins, tree);
  const int k = solver.hops();

  TreeGuarantees g = TreeGuarantees::empty(k, ins.root);
  CHECK(solver.anchor_cost(2, g) == Cost::zero());      // non-terminal, unclaimed
  CHECK(solver.anchor_cost(5, g).is_infinite());        // terminal, unclaimed

  g.inside[1] = VertexOrBottom(2);
  g.inside[2] = VertexOrBottom(2);
  CHECK(solver.anchor_cost(2, g).is_infinite());        // claimed twice
}

TEST_CASE("anchor cost picks the closer of the two depth-(i-1) promises") {
  // 0 -5- 1 -5- 2, plus hanging vertex 3 at distance 5 from 2.
  Instance ins = instance_of(4, {{0, 1, "5"}, {1, 2, "5"}, {2, 3, "5"}},
                             {0, 3}, 0, 3);
  RootedMetricTree tree = tree_form(ins);
  TreeSolver solver(ins, tree);
  TreeGuarantees g = TreeGuarantees::empty(solver.hops(), ins.root);
  g.inside[2] = VertexOrBottom(3);  // vertex 3 takes depth 2
  g.outside[1] = VertexOrBottom(2);  // depth-1 promise outside, distance 5
  Cost c = solver.anchor_cost(3, g);
  CHECK(c == Cost::from_integer(5));
}

TEST_CASE("child candidate sets: forced bottom, forced singleton, distance filter") {
  Instance ins = unit_star(2, 2);  // root 0, leaves 1 and 2
  RootedMetricTree tree = tree_form(ins);
  TreeSolver solver(ins, tree);

  auto forced = solver.child_inside_candidates(0, 1, VertexOrBottom());
  REQUIRE(forced.size() == 1);
  CHECK(forced[0].is_bottom());

  auto singleton = solver.child_inside_candidates(0, 1, VertexOrBottom(1));
  REQUIRE(singleton.size() == 1);
  CHECK(singleton[0].id == 1);

  // Promise sits in the sibling subtree at distance 1; the other child may
  // report an equally distant vertex only if its id loses the tie.
  auto filtered = solver.child_inside_candidates(0, 1, VertexOrBottom(2));
  REQUIRE(filtered.size() == 1);  // vertex 1 ties at distance 1 but has smaller id
  CHECK(filtered[0].is_bottom());
  auto filtered2 = solver.child_inside_candidates(0, 2, VertexOrBottom(1));
  REQUIRE(filtered2.size() == 2);
  CHECK(filtered2[0].id == 2);
  CHECK(filtered2[1].is_bottom());
}

TEST_CASE("child outside promises follow the closer side") {
  Instance ins = unit_path(4, 0, 3);
  RootedMetricTree tree = tree_form(ins);
  TreeSolver solver(ins, tree);
  // At vertex 1 with child 2: a promise inside the child's subtree keeps the
  // outside value; otherwise the closer of promise pair wins, seen from 1.
  CHECK(solver.child_outside(1, 2, VertexOrBottom(0), VertexOrBottom(3)).id == 0);
  CHECK(solver.child_outside(1, 2, VertexOrBottom(0), VertexOrBottom()).id == 0);
  CHECK(solver.child_outside(1, 2, VertexOrBottom(0), VertexOrBottom(1)).id == 1);
}

TEST_CASE("leaf cells: claimed terminal pays, idle non-terminal is free") {
  Instance ins = instance_of(3, {{0, 1, "2"}, {1, 2, "3"}}, {0, 2}, 0, 2);
  RootedMetricTree tree = tree_form(ins);
  TreeSolver solver(ins, tree);
  const int k = solver.hops();

  TreeGuarantees g = TreeGuarantees::empty(k, ins.root);
  g.inside[1] = VertexOrBottom(2);
  CHECK(solver.cell(2, g) == Cost::from_integer(5));  // anchored to the root

  TreeGuarantees idle = TreeGuarantees::empty(k, ins.root);
  Instance loose = instance_of(3, {{0, 1, "2"}, {1, 2, "3"}}, {0}, 0, 2);
  RootedMetricTree loose_tree = tree_form(loose);
  TreeSolver loose_solver(loose, loose_tree);
  CHECK(loose_solver.cell(2, idle) == Cost::zero());

  CHECK(solver.cell(2, idle).is_infinite());  // terminal left unclaimed
}

TEST_CASE("solve_tree on canonical fixtures") {
  Instance single = unit_path(1, 0, 1);
  CHECK(solve_tree(single).cost == Cost::zero());

  Instance star = unit_star(4, 1);
  CHECK(solve_tree(star).cost == Cost::from_integer(4));

  Instance path = unit_path(4, 0, 2);
  TreeSolveResult res = solve_tree(path);
  CHECK(res.cost == Cost::from_integer(4));
  CHECK(res.cost == solve_path(path).cost);
  CHECK(res.cost == oracle_khop(path).cost);
  CHECK(validate_lap(path, res.lap));
}

TEST_CASE("random tree instances match the reference solver exactly") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    GenOptions opts;
    opts.kind = "tree";
    opts.n = 2 + static_cast<int>(seed % 7);  // up to 8
    opts.seed = 4000 + seed;
    opts.wmax = 10;
    opts.terminal_density = seed % 3 ? 1.0 : 0.6;
    opts.k = 1 + static_cast<int>(seed % 3);
    Instance ins = build_instance(generate(opts).instance);
    TreeSolveResult res = solve_tree(ins);
    OracleResult ref = oracle_khop(ins);
    CHECK(res.cost == ref.cost);
    CHECK(validate_lap(ins, res.lap));
    CHECK(lap_cost(ins.metric, res.lap) == res.cost);
  }
}

TEST_CASE("every evaluated cell equals its brute-force value") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GenOptions opts;
    opts.kind = "tree";
    opts.n = 2 + static_cast<int>(seed % 5);  // up to 6
    opts.seed = 6000 + seed;
    opts.wmax = 8;
    opts.terminal_density = 0.7;
    opts.k = 1 + static_cast<int>(seed % 3);
    Instance ins = build_instance(generate(opts).instance);
    RootedMetricTree tree = tree_form(ins);
    TreeSolver solver(ins, tree);
    TreeSolveResult res = solver.solve();
    CHECK(res.cost == oracle_khop(ins).cost);
    int checked = 0;
    solver.for_each_cell([&](Vertex v, const TreeGuarantees& g, Cost value) {
      CHECK(value == brute_cell(ins, tree, solver.hops(), v, g));
      ++checked;
    });
    CHECK(checked > 0);
  }
}

TEST_CASE("solving twice yields identical witnesses") {
  GenOptions opts;
  opts.kind = "tree";
  opts.n = 8;
  opts.seed = 99;
  opts.wmax = 10;
  opts.k = 2;
  Instance ins = build_instance(generate(opts).instance);
  TreeSolveResult a = solve_tree(ins);
  TreeSolveResult b = solve_tree(ins);
  CHECK(a.cost == b.cost);
  CHECK(a.lap.label == b.lap.label);
  CHECK(a.lap.anchor == b.lap.anchor);
}
