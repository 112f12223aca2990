#ifndef KHOP_GENERATOR_HPP
#define KHOP_GENERATOR_HPP

#include <optional>
#include <string>

#include "khop/io.hpp"

namespace khop {

// Deterministic instance generator; the same options always produce the same
// bytes. The stream is a fixed-sequence 64-bit mixer, so files are identical
// across platforms as well.
struct GenOptions {
  std::string kind = "path";  // path | tree | partial-ktree | random-connected
  int n = 4;
  std::uint64_t seed = 1;
  int wmin = 1;
  int wmax = 1;
  double terminal_density = 1.0;  // root always terminal
  int k = 2;
  int ktree_width = 2;       // partial-ktree backbone width
  double delete_frac = 0.2;  // partial-ktree edge deletion share
  int extra_edges = -1;      // random-connected extras; -1 = n/2
};

struct Generated {
  InstanceFile instance;
  std::optional<TreeDecomposition> decomposition;  // witness for partial-ktree
};

Generated generate(const GenOptions& opts);

// Fixed-increment splitmix stream, exposed for seeded test suites.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Bounds are tiny here, modulo bias is irrelevant for fixtures.
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace khop

#endif
