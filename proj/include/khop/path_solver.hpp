#ifndef KHOP_PATH_SOLVER_HPP
#define KHOP_PATH_SOLVER_HPP

#include "khop/lap.hpp"

namespace khop {

// A metric laid out on a line: positions are strictly increasing coordinates,
// distances are coordinate differences. order[i] is the original vertex id at
// line position i.
struct PathInstance {
  std::vector<Vertex> order;      // line position -> original vertex id
  std::vector<std::int64_t> coord;  // scaled coordinates, strictly increasing
  int root_pos = 0;
  int hops = 1;

  int size() const { return static_cast<int>(order.size()); }
  Cost d(int i, int j) const {
    return Cost::from_scaled(std::abs(coord[i] - coord[j]));
  }
};

// Derives the line order of a declared path instance from its minimal
// inducing subgraph and checks every pairwise distance against coordinate
// differences. Throws NotAPathOrder / ClassMismatch when the declaration is
// wrong.
PathInstance path_form(const Instance& ins);

// Drops non-terminal line vertices. The optimum is unaffected: an optimal
// tree never needs a non-terminal, since such a vertex can slide to its
// busier neighbor without extra cost or hops.
PathInstance reduce_to_terminals(const Instance& ins, const PathInstance& line);

// One table cell: cheapest p-hop spanning tree rooted at position s covering
// exactly the positions in [a,b] (empty when a > b). Exposed for testing.
Cost path_dp_cell(const PathInstance& line, int p, int s, int a, int b);

struct PathSolveResult {
  Cost cost = Cost::infinity();
  SteinerTree tree;          // on the original instance's vertex ids
  std::uint64_t cells = 0;   // table cells filled
};

// Exact solve of a declared path instance; the tree is rebuilt over original
// vertex ids with non-terminals excluded.
PathSolveResult solve_path(const Instance& ins);

}  // namespace khop

#endif
