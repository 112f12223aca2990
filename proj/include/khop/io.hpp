#ifndef KHOP_IO_HPP
#define KHOP_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "khop/instance.hpp"
#include "khop/lap.hpp"
#include "khop/treedecomp.hpp"

namespace khop {

// Line-oriented instance file:
//   p khop <n> <m> <k>
//   r <root-id>
//   t <id>            (root is a terminal whether or not listed)
//   e <u> <v> <weight>
// Weights are decimal literals. Unknown line types are errors; blank lines
// are ignored.
struct InstanceFile {
  int n = 0;
  int m = 0;
  int k = 1;
  Vertex root = 0;
  std::vector<Vertex> terminals;
  std::vector<std::tuple<Vertex, Vertex, std::string>> edges;
};

InstanceFile read_instance_text(std::istream& in);
InstanceFile read_instance_file(const std::string& path);
std::string render_instance_file(const InstanceFile& f);

Instance build_instance(const InstanceFile& f, const MetricBuildOptions& opts = {});

// Checks a declared metric class against the metric itself; throws
// ClassMismatch / NotAPathOrder on failure, no-op for the general class.
void check_declared_class(const Instance& ins, MetricClass cls);

// Decomposition file:
//   s td <num_bags> <max_bag_size> <n>
//   b <bag-id> <v...>        (bag ids 1-based, vertex ids 0-based)
//   <b1> <b2>                (one line per decomposition tree edge)
TreeDecomposition read_decomposition_text(std::istream& in, int n);
TreeDecomposition read_decomposition_file(const std::string& path, int n);
std::string render_decomposition_file(const TreeDecomposition& td, int n);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> problems;
  Cost declared = Cost::zero();
  Cost recomputed = Cost::zero();

  void fail(const std::string& what) {
    ok = false;
    problems.push_back(what);
  }
};

// Re-checks a solution file against an instance: structure, hop bound
// (overridable for one-extra-hop net output), terminal coverage, label
// consistency and exact cost arithmetic. Collects problems, never throws.
VerifyReport verify_solution(const Instance& ins, const std::string& solution_json,
                             std::optional<int> hops_override = std::nullopt);

}  // namespace khop

#endif
