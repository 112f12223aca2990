#include "khop/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "khop/path_solver.hpp"
#include "khop/tree_solver.hpp"

namespace khop {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    parse_fail(line_no, std::string("bad ") + what + ": " + tok);
  }
}

}  // namespace

InstanceFile read_instance_text(std::istream& in) {
  InstanceFile f;
  bool have_header = false, have_root = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "p") {
      if (have_header) parse_fail(line_no, "duplicate header");
      if (toks.size() != 5 || toks[1] != "khop")
        parse_fail(line_no, "expected 'p khop <n> <m> <k>'");
      f.n = parse_int(toks[2], line_no, "vertex count");
      f.m = parse_int(toks[3], line_no, "edge count");
      f.k = parse_int(toks[4], line_no, "hop bound");
      if (f.n < 1) parse_fail(line_no, "vertex count must be positive");
      if (f.m < 0) parse_fail(line_no, "negative edge count");
      if (f.k < 1) parse_fail(line_no, "hop bound must be at least 1");
      have_header = true;
    } else if (toks[0] == "r") {
      if (!have_header) parse_fail(line_no, "root before header");
      if (have_root) parse_fail(line_no, "duplicate root line");
      if (toks.size() != 2) parse_fail(line_no, "expected 'r <root-id>'");
      f.root = parse_int(toks[1], line_no, "root id");
      if (f.root < 0 || f.root >= f.n) parse_fail(line_no, "root id out of range");
      have_root = true;
    } else if (toks[0] == "t") {
      if (!have_header) parse_fail(line_no, "terminal before header");
      if (toks.size() != 2) parse_fail(line_no, "expected 't <id>'");
      int t = parse_int(toks[1], line_no, "terminal id");
      if (t < 0 || t >= f.n) parse_fail(line_no, "terminal id out of range");
      f.terminals.push_back(t);
    } else if (toks[0] == "e") {
      if (!have_header) parse_fail(line_no, "edge before header");
      if (toks.size() != 4) parse_fail(line_no, "expected 'e <u> <v> <weight>'");
      int u = parse_int(toks[1], line_no, "edge endpoint");
      int v = parse_int(toks[2], line_no, "edge endpoint");
      if (u < 0 || u >= f.n || v < 0 || v >= f.n)
        parse_fail(line_no, "edge endpoint out of range");
      if (u == v) parse_fail(line_no, "self-loop");
      try {
        parse_weight(toks[3]);
      } catch (const Error& e) {
        parse_fail(line_no, e.what());
      }
      f.edges.push_back({u, v, toks[3]});
    } else {
      parse_fail(line_no, "unknown line type '" + toks[0] + "'");
    }
  }
  if (!have_header) throw Error(ErrorKind::ParseError, "missing 'p khop' header");
  if (!have_root) throw Error(ErrorKind::ParseError, "missing 'r' line");
  if (static_cast<int>(f.edges.size()) != f.m)
    throw Error(ErrorKind::ParseError,
                "edge count mismatch: header says " + std::to_string(f.m) + ", found " +
                    std::to_string(f.edges.size()));
  std::sort(f.terminals.begin(), f.terminals.end());
  f.terminals.erase(std::unique(f.terminals.begin(), f.terminals.end()),
                    f.terminals.end());
  return f;
}

InstanceFile read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return read_instance_text(in);
}

std::string render_instance_file(const InstanceFile& f) {
  std::string out = "p khop " + std::to_string(f.n) + ' ' + std::to_string(f.m) + ' ' +
                    std::to_string(f.k) + "\nr " + std::to_string(f.root) + "\n";
  for (Vertex t : f.terminals) out += "t " + std::to_string(t) + "\n";
  for (const auto& [u, v, w] : f.edges)
    out += "e " + std::to_string(u) + ' ' + std::to_string(v) + ' ' + w + "\n";
  return out;
}

Instance build_instance(const InstanceFile& f, const MetricBuildOptions& opts) {
  std::vector<WeightedEdge> edges;
  edges.reserve(f.edges.size());
  for (const auto& [u, v, w] : f.edges) edges.push_back({u, v, parse_weight(w)});
  WeightedGraph g(f.n, std::move(edges));
  Metric m = build_metric(g, opts);
  std::vector<Vertex> terms = f.terminals;
  return make_instance(std::move(m), std::move(terms), f.root, f.k);
}

void check_declared_class(const Instance& ins, MetricClass cls) {
  switch (cls) {
    case MetricClass::Path:
      path_form(ins);
      break;
    case MetricClass::Tree:
      tree_form(ins);
      break;
    case MetricClass::General:
      break;
  }
}

TreeDecomposition read_decomposition_text(std::istream& in, int n) {
  TreeDecomposition td;
  std::string line;
  int line_no = 0;
  int num_bags = -1, max_bag = -1;
  std::vector<char> seen_bag;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "s") {
      if (num_bags >= 0) parse_fail(line_no, "duplicate 's td' header");
      if (toks.size() != 5 || toks[1] != "td")
        parse_fail(line_no, "expected 's td <num_bags> <max_bag_size> <n>'");
      num_bags = parse_int(toks[2], line_no, "bag count");
      max_bag = parse_int(toks[3], line_no, "max bag size");
      int file_n = parse_int(toks[4], line_no, "vertex count");
      if (file_n != n)
        parse_fail(line_no, "decomposition is for " + std::to_string(file_n) +
                                " vertices, instance has " + std::to_string(n));
      if (num_bags < 1) parse_fail(line_no, "need at least one bag");
      td.bags.assign(num_bags, {});
      seen_bag.assign(num_bags, 0);
    } else if (toks[0] == "b") {
      if (num_bags < 0) parse_fail(line_no, "bag before header");
      if (toks.size() < 2) parse_fail(line_no, "expected 'b <bag-id> <v...>'");
      int id = parse_int(toks[1], line_no, "bag id");
      if (id < 1 || id > num_bags) parse_fail(line_no, "bag id out of range");
      if (seen_bag[id - 1]) parse_fail(line_no, "duplicate bag id");
      seen_bag[id - 1] = 1;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        int v = parse_int(toks[i], line_no, "bag vertex");
        if (v < 0 || v >= n) parse_fail(line_no, "bag vertex out of range");
        td.bags[id - 1].push_back(v);
      }
      if (static_cast<int>(td.bags[id - 1].size()) > max_bag)
        parse_fail(line_no, "bag larger than the declared maximum");
    } else {
      if (num_bags < 0) parse_fail(line_no, "edge before header");
      if (toks.size() != 2) parse_fail(line_no, "expected '<b1> <b2>'");
      int a = parse_int(toks[0], line_no, "bag id");
      int b = parse_int(toks[1], line_no, "bag id");
      if (a < 1 || a > num_bags || b < 1 || b > num_bags)
        parse_fail(line_no, "bag id out of range");
      td.edges.push_back({a - 1, b - 1});
    }
  }
  if (num_bags < 0) throw Error(ErrorKind::ParseError, "missing 's td' header");
  for (int b = 0; b < num_bags; ++b)
    if (!seen_bag[b])
      throw Error(ErrorKind::ParseError, "bag " + std::to_string(b + 1) + " missing");
  return td;
}

TreeDecomposition read_decomposition_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  return read_decomposition_text(in, n);
}

std::string render_decomposition_file(const TreeDecomposition& td, int n) {
  std::size_t max_bag = 1;
  for (const auto& b : td.bags) max_bag = std::max(max_bag, b.size());
  std::string out = "s td " + std::to_string(td.bag_count()) + ' ' +
                    std::to_string(max_bag) + ' ' + std::to_string(n) + "\n";
  for (int b = 0; b < td.bag_count(); ++b) {
    out += "b " + std::to_string(b + 1);
    for (Vertex v : td.bags[b]) out += ' ' + std::to_string(v);
    out += "\n";
  }
  for (auto [a, b] : td.edges)
    out += std::to_string(a + 1) + ' ' + std::to_string(b + 1) + "\n";
  return out;
}

namespace {

// Costs live on a 10^-6 grid; doubles hold that exactly well past any desk
// scale total, so round-and-check recovery is lossless here.
std::optional<Cost> cost_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0) return std::nullopt;
    return Cost::from_integer(v);
  }
  if (j.is_number_float()) {
    double x = j.get<double>();
    if (!(x >= 0) || x > 4.0e9) return std::nullopt;
    double scaled = x * static_cast<double>(Cost::kScale);
    double rounded = std::nearbyint(scaled);
    if (std::fabs(scaled - rounded) > 1e-3) return std::nullopt;
    return Cost::from_scaled(static_cast<std::int64_t>(rounded));
  }
  return std::nullopt;
}

}  // namespace

VerifyReport verify_solution(const Instance& ins, const std::string& solution_json,
                             std::optional<int> hops_override) {
  VerifyReport rep;
  const int hops = hops_override.value_or(ins.hops);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(solution_json);
  } catch (const std::exception& e) {
    rep.fail(std::string("solution is not valid JSON: ") + e.what());
    return rep;
  }
  if (!j.is_object() || !j.contains("cost") || !j.contains("edges") ||
      !j.contains("labels")) {
    rep.fail("solution must carry cost, edges and labels");
    return rep;
  }
  auto declared = cost_from_json(j["cost"]);
  if (!declared) {
    rep.fail("cost field is not an exactly recoverable decimal");
    return rep;
  }
  rep.declared = *declared;

  const int n = ins.n();
  std::vector<Vertex> parent(n, -1);
  std::vector<char> is_child(n, 0);
  if (!j["edges"].is_array()) {
    rep.fail("edges must be an array");
    return rep;
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      rep.fail("edge entries must be [parent, child] id pairs");
      return rep;
    }
    int p = e[0].get<int>(), c = e[1].get<int>();
    if (p < 0 || p >= n || c < 0 || c >= n || p == c) {
      rep.fail("edge endpoints out of range");
      continue;
    }
    if (is_child[c]) {
      rep.fail("vertex " + std::to_string(c) + " has two parents");
      continue;
    }
    is_child[c] = 1;
    parent[c] = p;
  }
  if (is_child[ins.root]) rep.fail("root must not have a parent");

  // Depths via parent chains; cycles show up as overlong chains.
  std::vector<Label> depth(n, kLabelInf);
  depth[ins.root] = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == ins.root || parent[v] < 0) continue;
    Vertex cur = v;
    int steps = 0;
    while (cur != ins.root && parent[cur] >= 0 && steps <= n) {
      cur = parent[cur];
      ++steps;
    }
    if (cur != ins.root) {
      rep.fail("vertex " + std::to_string(v) + " is not connected to the root");
      continue;
    }
    depth[v] = steps;
    if (steps > hops)
      rep.fail("vertex " + std::to_string(v) + " at depth " + std::to_string(steps) +
               " exceeds the hop bound " + std::to_string(hops));
  }

  for (Vertex t : ins.terminals)
    if (t != ins.root && parent[t] < 0)
      rep.fail("terminal " + std::to_string(t) + " is not spanned");

  if (!j["labels"].is_object()) {
    rep.fail("labels must be an object");
  } else {
    for (Vertex v = 0; v < n; ++v) {
      auto key = std::to_string(v);
      if (!j["labels"].contains(key)) {
        rep.fail("labels miss vertex " + key);
        continue;
      }
      const auto& lv = j["labels"][key];
      if (lv.is_string()) {
        if (lv.get<std::string>() != "inf") {
          rep.fail("label of vertex " + key + " must be a depth or \"inf\"");
        } else if (label_finite(depth[v])) {
          rep.fail("vertex " + key + " is in the tree but labeled \"inf\"");
        }
      } else if (lv.is_number_integer()) {
        if (depth[v] != lv.get<int>())
          rep.fail("label of vertex " + key + " disagrees with its depth");
      } else {
        rep.fail("label of vertex " + key + " has a bad type");
      }
    }
  }

  Cost recomputed = Cost::zero();
  for (Vertex v = 0; v < n; ++v)
    if (parent[v] >= 0) recomputed += ins.metric.d(v, parent[v]);
  rep.recomputed = recomputed;
  if (recomputed != rep.declared)
    rep.fail("declared cost " + rep.declared.to_decimal() +
             " does not match recomputed cost " + recomputed.to_decimal());
  return rep;
}

}  // namespace khop
