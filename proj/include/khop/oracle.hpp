#ifndef KHOP_ORACLE_HPP
#define KHOP_ORACLE_HPP

#include "khop/lap.hpp"

namespace khop {

struct OracleResult {
  Cost cost = Cost::infinity();
  Lap witness;
  std::uint64_t labelings_tried = 0;
};

// Reference solver: enumerates every labeling (root fixed at depth 0,
// terminals finite) and completes each with the cheapest anchoring, which is
// optimal per labeling because anchor costs are independent across vertices.
// The witness is the first optimum in enumeration order, i.e. the pair with
// the lexicographically smallest labeling (per-vertex value order
// 1 < 2 < ... < k < excluded). Guarded to n <= 10 and a bounded search space.
OracleResult oracle_khop(const Instance& ins);

// Second, even more literal reference: enumerates all parent functions.
// Exists to validate oracle_khop itself; guarded to n <= 6.
OracleResult oracle_khop_parent_enum(const Instance& ins);

// Closed form for k = 2 via facility-set enumeration; guarded to n <= 16.
Cost oracle_ufl(const Instance& ins);

// Closed form for k = 1: every terminal hangs off the root.
Cost oracle_star(const Instance& ins);

// Unconstrained optimum for spanning instances (requires every vertex to be
// a terminal): minimum spanning tree of the metric closure.
Cost oracle_mst(const Instance& ins);

}  // namespace khop

#endif
