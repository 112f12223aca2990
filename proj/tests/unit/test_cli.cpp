#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path log = fs::temp_directory_path() / ("khop_cli_" + std::to_string(counter++) + ".log");
  std::string cmd = std::string(KHOP_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  res.out = ss.str();
  fs::remove(log);
  return res;
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "khop_cli_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("gen is byte-identical under a fixed seed") {
  auto dir = scratch_dir();
  auto a = dir / "a.gr";
  auto b = dir / "b.gr";
  REQUIRE(run_cli("gen --kind tree --n 7 --seed 42 --wmax 9 --k 2 --out " + a.string())
              .exit_code == 0);
  REQUIRE(run_cli("gen --kind tree --n 7 --seed 42 --wmax 9 --k 2 --out " + b.string())
              .exit_code == 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}

TEST_CASE("solve, write JSON, verify round trip") {
  auto dir = scratch_dir();
  auto ins = dir / "p4.gr";
  auto sol = dir / "p4.json";
  REQUIRE(run_cli("gen --kind path --n 4 --seed 1 --k 2 --out " + ins.string())
              .exit_code == 0);
  RunResult solved = run_cli("solve --algo path " + ins.string() + " --json " + sol.string());
  REQUIRE(solved.exit_code == 0);
  CHECK(solved.out.find("cost 4") != std::string::npos);
  RunResult verified = run_cli("verify " + ins.string() + " --sol " + sol.string());
  CHECK(verified.exit_code == 0);
  CHECK(verified.out.find("valid cost 4") != std::string::npos);
}

TEST_CASE("every algorithm agrees through the CLI on a path instance") {
  auto dir = scratch_dir();
  auto ins = dir / "agree.gr";
  REQUIRE(run_cli("gen --kind path --n 6 --seed 9 --wmax 5 --k 2 --out " + ins.string())
              .exit_code == 0);
  std::string costs[4];
  int i = 0;
  for (const char* algo : {"path", "tree", "treewidth", "oracle"}) {
    RunResult r = run_cli("solve --algo " + std::string(algo) + " " + ins.string());
    REQUIRE(r.exit_code == 0);
    costs[i++] = r.out.substr(0, r.out.find('\n'));
  }
  CHECK(costs[0] == costs[1]);
  CHECK(costs[0] == costs[2]);
  CHECK(costs[0] == costs[3]);
}

TEST_CASE("exit codes: parse failure, class mismatch, budget, verify failure") {
  auto dir = scratch_dir();
  auto bad = dir / "bad.gr";
  std::ofstream(bad) << "p khop 2 1 1\nr 0\ne 0 0 1\n";
  CHECK(run_cli("solve --algo oracle " + bad.string()).exit_code == 2);

  auto cyc = dir / "cyc.gr";
  std::ofstream(cyc) << "p khop 4 4 2\nr 0\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 0 3 2\n";
  CHECK(run_cli("solve --algo tree " + cyc.string()).exit_code == 2);

  CHECK(run_cli("solve --algo treewidth --budget 1 " + cyc.string()).exit_code == 3);
  CHECK(run_cli("solve --algo treewidth --budget 1 --force " + cyc.string()).exit_code == 0);

  auto big = dir / "big.gr";
  REQUIRE(run_cli("gen --kind path --n 12 --seed 3 --k 2 --out " + big.string())
              .exit_code == 0);
  CHECK(run_cli("solve --algo oracle " + big.string()).exit_code == 3);

  auto sol = dir / "cyc.json";
  REQUIRE(run_cli("solve --algo treewidth --force " + cyc.string() + " --json " +
                  sol.string())
              .exit_code == 0);
  CHECK(run_cli("verify " + cyc.string() + " --sol " + sol.string()).exit_code == 0);
  // Tamper: claim a different hop bound.
  CHECK(run_cli("verify --hops 1 " + cyc.string() + " --sol " + sol.string())
            .exit_code == 4);
}

TEST_CASE("net pipeline reports its certificate and passes relaxed verification") {
  auto dir = scratch_dir();
  auto ins = dir / "net.gr";
  auto sol = dir / "net.json";
  REQUIRE(run_cli("gen --kind tree --n 8 --seed 5 --wmax 6 --k 2 --out " + ins.string())
              .exit_code == 0);
  RunResult r = run_cli("net --delta 1 --algo oracle " + ins.string() + " --json " +
                        sol.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("net-size") != std::string::npos);
  CHECK(r.out.find("bound 8") != std::string::npos);
  RunResult v = run_cli("verify --hops 3 " + ins.string() + " --sol " + sol.string());
  CHECK(v.exit_code == 0);
}

TEST_CASE("bench emits the fixed header and an agreement column") {
  auto dir = scratch_dir();
  auto ins = dir / "bench.gr";
  REQUIRE(run_cli("gen --kind path --n 5 --seed 2 --k 2 --out " + ins.string())
              .exit_code == 0);
  auto csv = dir / "bench.csv";
  RunResult r = run_cli("bench --algos path,tree,treewidth,oracle --out " + csv.string() +
                        " " + ins.string());
  REQUIRE(r.exit_code == 0);
  std::ifstream in(csv);
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "instance,algo,k,cost,ms,cells,agree");
  int rows = 0, agrees = 0;
  while (std::getline(in, row)) {
    ++rows;
    if (row.find(",yes") != std::string::npos) ++agrees;
  }
  CHECK(rows == 4);
  CHECK(agrees == 4);

  // An oversized instance without --force shows up as a budget row.
  auto big = dir / "bench_big.gr";
  REQUIRE(run_cli("gen --kind random-connected --n 30 --seed 3 --k 4 --out " +
                  big.string())
              .exit_code == 0);
  RunResult rb = run_cli("bench --algos treewidth --budget 10 --out - " + big.string());
  REQUIRE(rb.exit_code == 0);
  CHECK(rb.out.find("budget-exceeded") != std::string::npos);

  RunResult empty = run_cli("bench --algos path --out - " + ins.string() + " --algos path");
  CHECK(empty.exit_code == 0);
}
