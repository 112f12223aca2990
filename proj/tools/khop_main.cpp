#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "khop/generator.hpp"
#include "khop/io.hpp"
#include "khop/netlift.hpp"
#include "khop/oracle.hpp"
#include "khop/path_solver.hpp"
#include "khop/tree_solver.hpp"
#include "khop/twdp_solver.hpp"

namespace {

using namespace khop;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitVerify = 4;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::ClassMismatch:
    case ErrorKind::NotAPathOrder:
    case ErrorKind::NonPositiveWeight:
    case ErrorKind::DisconnectedGraph:
    case ErrorKind::InvalidDecomposition:
      return kExitParse;
    case ErrorKind::TooLarge:
    case ErrorKind::InfeasibleInstance:
      return kExitInfeasible;
    default:
      return 1;
  }
}

struct SolveOutput {
  Cost cost = Cost::infinity();
  SteinerTree tree;
  std::uint64_t cells = 0;
};

MetricClass class_from_name(const std::string& name) {
  if (name == "path") return MetricClass::Path;
  if (name == "tree") return MetricClass::Tree;
  return MetricClass::General;
}

SolveOutput run_algorithm(const Instance& ins, const std::string& algo,
                          const std::string& td_path, long double budget, bool force) {
  SolveOutput out;
  if (algo == "path") {
    PathSolveResult r = solve_path(ins);
    out = {r.cost, std::move(r.tree), r.cells};
  } else if (algo == "tree") {
    TreeSolveResult r = solve_tree(ins);
    out = {r.cost, std::move(r.tree), r.cells};
  } else if (algo == "treewidth") {
    TreeDecomposition td = td_path.empty()
                               ? heuristic_decompose(ins.metric.source_graph())
                               : read_decomposition_file(td_path, ins.n());
    NiceTreeDecomposition ntd = make_nice(td, ins.metric.source_graph(), ins.root);
    long double estimate =
        treewidth_state_estimate(ins.n(), std::min(ins.hops, ins.n() - 1),
                                 ntd.width + 1);
    if (!force && estimate > budget)
      throw Error(ErrorKind::TooLarge,
                  "state-space estimate exceeds the budget; rerun with --force");
    TwdpSolveResult r = solve_treewidth(ins, ntd);
    out = {r.cost, std::move(r.tree), r.cells};
  } else if (algo == "oracle") {
    OracleResult r = oracle_khop(ins);
    out.cost = r.cost;
    out.tree = lap_to_tree(ins, r.witness);
    out.cells = r.labelings_tried;
  } else {
    throw Error(ErrorKind::Precondition, "unknown algorithm: " + algo);
  }
  return out;
}

void write_json_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text << "\n";
}

int cmd_solve(const std::string& input, const std::string& algo,
              const std::string& declared, int k_override, const std::string& td_path,
              long double budget, bool force, const std::string& json_out) {
  InstanceFile f = read_instance_file(input);
  if (k_override > 0) f.k = k_override;
  Instance ins = build_instance(f);

  std::string cls = declared;
  if (cls.empty()) cls = (algo == "path" || algo == "tree") ? algo : "general";
  check_declared_class(ins, class_from_name(cls));

  auto t0 = std::chrono::steady_clock::now();
  SolveOutput out = run_algorithm(ins, algo, td_path, budget, force);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();

  std::string json = solution_to_json(ins.metric, out.tree);
  VerifyReport rep = verify_solution(ins, json);
  if (!rep.ok) {
    for (const auto& p : rep.problems) std::cerr << "internal check: " << p << "\n";
    return 1;
  }
  if (!json_out.empty()) write_json_file(json_out, json);
  std::cout << "cost " << out.cost.to_decimal() << "\n"
            << "cells " << out.cells << "\n"
            << "ms " << ms << "\n";
  return kExitOk;
}

int cmd_gen(const GenOptions& opts, const std::string& out_path) {
  Generated gen = generate(opts);
  std::string text = render_instance_file(gen.instance);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
    out << text;
    if (gen.decomposition) {
      std::ofstream td_out(out_path + ".td");
      if (!td_out) throw Error(ErrorKind::ParseError, "cannot write " + out_path + ".td");
      td_out << render_decomposition_file(*gen.decomposition, opts.n);
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& sol_path, int hops_override) {
  Instance ins = build_instance(read_instance_file(input));
  std::ifstream in(sol_path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + sol_path);
  std::string json((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  std::optional<int> hops;
  if (hops_override > 0) hops = hops_override;
  VerifyReport rep = verify_solution(ins, json, hops);
  if (rep.ok) {
    std::cout << "valid cost " << rep.recomputed.to_decimal() << "\n";
    return kExitOk;
  }
  for (const auto& p : rep.problems) std::cout << "invalid: " << p << "\n";
  return kExitVerify;
}

int cmd_net(const std::string& input, const std::string& delta_text,
            const std::string& algo, int k_override, const std::string& json_out) {
  InstanceFile f = read_instance_file(input);
  if (k_override > 0) f.k = k_override;
  Instance ins = build_instance(f);
  Cost delta = parse_cost_decimal(delta_text);
  NetSolver solver = NetSolver::Oracle;
  if (algo == "tree") solver = NetSolver::Tree;
  else if (algo == "treewidth") solver = NetSolver::Treewidth;
  else if (algo != "oracle")
    throw Error(ErrorKind::Precondition, "unknown net solver: " + algo);

  NetPipelineResult res = net_pipeline(ins, delta, solver);
  std::string json = solution_to_json(ins.metric, res.tree);
  VerifyReport rep = verify_solution(ins, json, ins.hops + 1);
  if (!rep.ok) {
    for (const auto& p : rep.problems) std::cerr << "internal check: " << p << "\n";
    return 1;
  }
  if (!json_out.empty()) write_json_file(json_out, json);
  std::cout << "net-size " << res.net_size << "\n"
            << "net-cost " << res.net_cost.to_decimal() << "\n"
            << "lift-cost " << res.lift_cost.to_decimal() << "\n"
            << "total " << res.total.to_decimal() << "\n"
            << "bound " << res.bound.to_decimal() << "\n"
            << "hops " << ins.hops + 1 << "\n";
  return kExitOk;
}

int cmd_bench(const std::vector<std::string>& inputs, const std::string& algos_csv,
              long double budget, bool force, const std::string& out_path) {
  std::vector<std::string> algos;
  std::string tok;
  for (char c : algos_csv + ",") {
    if (c == ',') {
      if (!tok.empty()) algos.push_back(tok);
      tok.clear();
    } else {
      tok += c;
    }
  }

  struct Row {
    std::string instance, algo, k, cost, ms, cells, agree;
  };
  std::vector<Row> rows;
  for (const auto& path : inputs) {
    std::string first_cost;
    for (const auto& algo : algos) {
      Row row{path, algo, "", "", "", "", "-"};
      auto t0 = std::chrono::steady_clock::now();
      try {
        Instance ins = build_instance(read_instance_file(path));
        row.k = std::to_string(ins.hops);
        if (algo == "treewidth") {
          TreeDecomposition td = heuristic_decompose(ins.metric.source_graph());
          int width = validate_decomposition(ins.metric.source_graph(), td);
          long double estimate = treewidth_state_estimate(
              ins.n(), std::min(ins.hops, ins.n() - 1), width + 1);
          if (!force && estimate > budget)
            throw Error(ErrorKind::TooLarge, "budget");
        }
        SolveOutput out = run_algorithm(ins, algo, "", budget, force);
        row.cost = out.cost.to_decimal();
        row.cells = std::to_string(out.cells);
        if (first_cost.empty()) first_cost = row.cost;
        row.agree = (row.cost == first_cost) ? "yes" : "no";
      } catch (const Error& e) {
        row.cost = e.kind() == ErrorKind::TooLarge ? "budget-exceeded"
                                                   : std::string("error:") +
                                                         error_kind_name(e.kind());
        row.cells = "0";
      }
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      row.ms = std::to_string(ms);
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.instance, a.algo) < std::tie(b.instance, b.algo);
  });
  std::string csv = "instance,algo,k,cost,ms,cells,agree\n";
  for (const auto& r : rows)
    csv += r.instance + ',' + r.algo + ',' + r.k + ',' + r.cost + ',' + r.ms + ',' +
           r.cells + ',' + r.agree + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
    out << csv;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hop-bounded Steiner trees on path, tree and bounded-treewidth metrics"};
  app.require_subcommand(1);

  std::string input, algo = "oracle", declared, td_path, json_out, out_path;
  std::string delta_text = "0", algos_csv = "oracle";
  int k_override = 0, hops_override = 0;
  long double budget = 1e12L;
  bool force = false;
  GenOptions gen_opts;
  std::vector<std::string> inputs;

  auto* solve = app.add_subcommand("solve", "solve an instance exactly");
  solve->add_option("input", input, "instance file")->required();
  solve->add_option("--algo", algo, "path | tree | treewidth | oracle");
  solve->add_option("--class", declared, "declared metric class (path | tree | general)");
  solve->add_option("--k", k_override, "hop bound override");
  solve->add_option("--td", td_path, "decomposition file (treewidth only)");
  solve->add_option("--budget", budget, "state-space budget for treewidth");
  solve->add_flag("--force", force, "ignore the state-space budget");
  solve->add_option("--json", json_out, "write the solution JSON here");

  auto* gen = app.add_subcommand("gen", "generate a deterministic instance");
  gen->add_option("--kind", gen_opts.kind, "path | tree | partial-ktree | random-connected");
  gen->add_option("--n", gen_opts.n, "vertex count");
  gen->add_option("--seed", gen_opts.seed, "seed");
  gen->add_option("--wmin", gen_opts.wmin, "minimum weight");
  gen->add_option("--wmax", gen_opts.wmax, "maximum weight");
  gen->add_option("--tdensity", gen_opts.terminal_density, "terminal density");
  gen->add_option("--k", gen_opts.k, "hop bound");
  gen->add_option("--ktree-width", gen_opts.ktree_width, "backbone width");
  gen->add_option("--delete-frac", gen_opts.delete_frac, "edge deletion share");
  gen->add_option("--extra-edges", gen_opts.extra_edges, "extra edges beyond a tree");
  gen->add_option("--out", out_path, "output file ('-' for stdout)");

  auto* verify = app.add_subcommand("verify", "check a solution file");
  verify->add_option("input", input, "instance file")->required();
  verify->add_option("--sol", json_out, "solution JSON file")->required();
  verify->add_option("--hops", hops_override, "hop bound override (lifted trees)");

  auto* net = app.add_subcommand("net", "net-and-lift heuristic with certificate");
  net->add_option("input", input, "instance file")->required();
  net->add_option("--delta", delta_text, "net radius (decimal)");
  net->add_option("--algo", algo, "oracle | tree | treewidth");
  net->add_option("--k", k_override, "hop bound override");
  net->add_option("--json", json_out, "write the lifted solution JSON here");

  auto* bench = app.add_subcommand("bench", "cost/time table across algorithms");
  bench->add_option("inputs", inputs, "instance files")->required();
  bench->add_option("--algos", algos_csv, "comma-separated algorithm list");
  bench->add_option("--budget", budget, "state-space budget for treewidth");
  bench->add_flag("--force", force, "ignore the state-space budget");
  bench->add_option("--out", out_path, "CSV output ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(input, algo, declared, k_override, td_path, budget, force,
                       json_out);
    if (gen->parsed()) return cmd_gen(gen_opts, out_path);
    if (verify->parsed()) return cmd_verify(input, json_out, hops_override);
    if (net->parsed()) return cmd_net(input, delta_text, algo, k_override, json_out);
    if (bench->parsed()) return cmd_bench(inputs, algos_csv, budget, force, out_path);
  } catch (const Error& e) {
    std::cerr << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
