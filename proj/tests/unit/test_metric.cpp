#include "doctest.h"

#include <algorithm>

#include "khop/metric.hpp"
#include "test_support.hpp"

using namespace khop;
using namespace khop::testing;

namespace {

// Exhaustive simple-path enumeration; reference for the canonical-path rule.
void all_paths(const WeightedGraph& g, Vertex cur, Vertex goal, std::vector<Vertex>& acc,
               std::vector<char>& used, Cost len,
               std::vector<std::pair<Cost, std::vector<Vertex>>>& out) {
  if (cur == goal) {
    out.push_back({len, acc});
    return;
  }
  for (const auto& [w, c] : g.neighbors(cur)) {
    if (used[w]) continue;
    used[w] = 1;
    acc.push_back(w);
    all_paths(g, w, goal, acc, used, len + c, out);
    acc.pop_back();
    used[w] = 0;
  }
}

std::vector<Vertex> brute_lex_shortest(const WeightedGraph& g, Vertex u, Vertex v) {
  std::vector<std::pair<Cost, std::vector<Vertex>>> out;
  std::vector<Vertex> acc = {u};
  std::vector<char> used(g.vertex_count(), 0);
  used[u] = 1;
  all_paths(g, u, v, acc, used, Cost::zero(), out);
  Cost best = Cost::infinity();
  for (auto& [len, p] : out) best = std::min(best, len);
  std::vector<Vertex> lex;
  for (auto& [len, p] : out)
    if (len == best && (lex.empty() || p < lex)) lex = p;
  return lex;
}

}  // namespace

TEST_CASE("unit triangle has unit distances") {
  Metric m = build_metric(graph_of(3, {{0, 1, "1"}, {1, 2, "1"}, {0, 2, "1"}}));
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      CHECK(m.d(u, v) == (u == v ? Cost::zero() : Cost::from_integer(1)));
}

TEST_CASE("two-edge path adds weights") {
  Metric m = build_metric(graph_of(3, {{0, 1, "2"}, {1, 2, "3"}}));
  CHECK(m.d(0, 2) == Cost::from_integer(5));
  CHECK(m.d(2, 0) == Cost::from_integer(5));
}

TEST_CASE("four-cycle: opposite distance 2, tie broken toward smaller id") {
  WeightedGraph g = graph_of(4, {{0, 1, "1"}, {1, 2, "1"}, {2, 3, "1"}, {0, 3, "1"}});
  Metric m = build_metric(g);
  CHECK(m.d(0, 2) == Cost::from_integer(2));
  CHECK(m.shortest_path(0, 2) == std::vector<Vertex>{0, 1, 2});
  CHECK(m.shortest_path(2, 0) == std::vector<Vertex>{2, 1, 0});
}

TEST_CASE("disconnected graph and bad weights are rejected") {
  CHECK_THROWS_AS(build_metric(graph_of(3, {{0, 1, "1"}})), Error);
  CHECK_THROWS_AS(parse_weight("0"), Error);
  CHECK_THROWS_AS(parse_weight("-1"), Error);
  CHECK_THROWS_AS(parse_weight("1.2345678"), Error);
  CHECK(parse_weight("2.5").scaled() == 2'500'000);
  CHECK(parse_weight("0.000001").scaled() == 1);
}

TEST_CASE("decimal rendering is exact and trimmed") {
  CHECK(Cost::from_integer(4).to_decimal() == "4");
  CHECK(parse_weight("2.50").to_decimal() == "2.5");
  CHECK(parse_weight("0.000001").to_decimal() == "0.000001");
}

TEST_CASE("minimal inducing subgraph: dominated triangle edge is dropped") {
  WeightedGraph g = graph_of(3, {{0, 1, "1"}, {1, 2, "1"}, {0, 2, "2"}});
  Metric m = build_metric(g);
  WeightedGraph mg = minimal_inducing_subgraph(g, m);
  CHECK(mg.edges().size() == 2);
  for (const auto& e : mg.edges()) CHECK(e.w == Cost::from_integer(1));
}

TEST_CASE("minimal inducing subgraph keeps trees intact") {
  WeightedGraph g = graph_of(5, {{0, 1, "2"}, {0, 2, "1"}, {2, 3, "4"}, {2, 4, "1"}});
  Metric m = build_metric(g);
  CHECK(minimal_inducing_subgraph(g, m).edges().size() == 4);
}

TEST_CASE("minimal inducing subgraph: 1,1,1,3 cycle loses the heavy edge") {
  WeightedGraph g = graph_of(4, {{0, 1, "1"}, {1, 2, "1"}, {2, 3, "1"}, {0, 3, "3"}});
  Metric m = build_metric(g);
  WeightedGraph mg = minimal_inducing_subgraph(g, m);
  CHECK(mg.edges().size() == 3);
  for (const auto& e : mg.edges()) CHECK(e.w == Cost::from_integer(1));
}

TEST_CASE("rebuilding the metric from the minimal subgraph changes nothing") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenOptions opts;
    opts.kind = "random-connected";
    opts.n = 8;
    opts.seed = seed;
    opts.wmax = 9;
    opts.extra_edges = 6;
    Generated gen = generate(opts);
    Instance ins = build_instance(gen.instance);
    WeightedGraph mg =
        minimal_inducing_subgraph(ins.metric.source_graph(), ins.metric);
    Metric again = build_metric(mg);
    for (int u = 0; u < ins.n(); ++u)
      for (int v = 0; v < ins.n(); ++v) CHECK(again.d(u, v) == ins.metric.d(u, v));
  }
}

TEST_CASE("closest: forced bottom, identity, and id tie-breaks") {
  Instance ins = unit_path(3, 0, 2);
  const Metric& m = ins.metric;
  std::vector<VertexOrBottom> only_bottom = {VertexOrBottom()};
  CHECK(m.closest(1, only_bottom).is_bottom());
  std::vector<VertexOrBottom> self = {VertexOrBottom(1)};
  CHECK(m.closest(1, self).id == 1);
  std::vector<VertexOrBottom> tie = {VertexOrBottom(2), VertexOrBottom(0)};
  CHECK(m.closest(1, tie).id == 0);
  std::vector<VertexOrBottom> empty;
  CHECK_THROWS_AS(m.closest(1, empty), Error);
  CHECK(m.closest2(1, VertexOrBottom(0), VertexOrBottom()).id == 0);
}

TEST_CASE("metric axioms hold on random graphs") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GenOptions opts;
    opts.kind = "random-connected";
    opts.n = seed <= 3 ? 12 : 50;
    opts.seed = 100 + seed;
    opts.wmax = 10;
    opts.extra_edges = opts.n;
    Instance ins = build_instance(generate(opts).instance);
    const Metric& m = ins.metric;
    for (int u = 0; u < ins.n(); ++u) {
      CHECK(m.d(u, u) == Cost::zero());
      for (int v = 0; v < ins.n(); ++v) {
        CHECK(m.d(u, v) == m.d(v, u));
        if (u != v) CHECK(m.d(u, v) > Cost::zero());
        for (int w = 0; w < ins.n(); ++w) CHECK(m.d(u, w) <= m.d(u, v) + m.d(v, w));
      }
    }
  }
}

TEST_CASE("recorded paths are shortest and id-lexicographically minimal") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GenOptions opts;
    opts.kind = "random-connected";
    opts.n = 7;
    opts.seed = 31 * seed;
    opts.wmax = 4;
    opts.extra_edges = 5;
    Instance ins = build_instance(generate(opts).instance);
    const WeightedGraph& g = ins.metric.source_graph();
    for (int u = 0; u < ins.n(); ++u)
      for (int v = 0; v < ins.n(); ++v) {
        if (u == v) continue;
        auto path = ins.metric.shortest_path(u, v);
        Cost len = Cost::zero();
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
          len += ins.metric.d(path[i], path[i + 1]);
        CHECK(len == ins.metric.d(u, v));
        CHECK(path == brute_lex_shortest(g, u, v));
      }
  }
}

TEST_CASE("parallel metric build is bit-identical to sequential") {
  GenOptions opts;
  opts.kind = "random-connected";
  opts.n = 70;
  opts.seed = 7;
  opts.wmax = 10;
  opts.extra_edges = 120;
  Generated gen = generate(opts);
  Instance seq = build_instance(gen.instance, {.threads = 1});
  Instance par = build_instance(gen.instance, {.threads = 4});
  for (int u = 0; u < seq.n(); ++u)
    for (int v = 0; v < seq.n(); ++v) CHECK(seq.metric.d(u, v) == par.metric.d(u, v));
}

TEST_CASE("closest is deterministic across repeated calls") {
  Instance ins = unit_path(6, 0, 2);
  std::vector<VertexOrBottom> set = {VertexOrBottom(5), VertexOrBottom(3),
                                     VertexOrBottom(), VertexOrBottom(1)};
  auto a = ins.metric.closest(2, set);
  auto b = ins.metric.closest(2, set);
  CHECK(a == b);
  CHECK(a.id == 1);
}
