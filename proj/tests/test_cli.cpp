// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "elcp/cli.hpp"
#include "elcp/example_problem.hpp"
#include "elcp/problem_io.hpp"

namespace elcp {
namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool has(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

int parsed_iterations(const std::string& out) {
  const std::size_t pos = out.find("iterations: ");
  REQUIRE(pos != std::string::npos);
  return std::atoi(out.c_str() + pos + 12);
}

int line_count(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

const char* kZeroMapDoc = R"({
  "p": 1, "q": 1,
  "cone": {"type": "orthant", "dim": 1},
  "map": {"type": "affine", "matrix": [[0, 0], [0, 0]], "offset": [0, 0]},
  "start": {"x": [2], "u": [3]}
})";

TEST_CASE("solve on the builtin problem converges and reports a certificate") {
  const CliResult r = run({"solve", "--builtin", "paper-example-7"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(has(r.out, "problem: paper-example-7"));
  CHECK(has(r.out, "p: 2  q: 2  cone: polyhedral"));
  CHECK(has(r.out, "status: residual-tol"));
  CHECK(has(r.out, "u in C: yes"));
  CHECK(has(r.out, "H in C*: yes"));
  CHECK(has(r.out, "seed: 42"));

  const CliResult again = run({"solve", "--builtin", "paper-example-7"});
  CHECK(again.out == r.out);  // byte-identical reruns
}

TEST_CASE("solve accepts an explicit start point") {
  const CliResult same = run({"solve", "--builtin", "paper-example-7", "--start", "0,0,0,0"});
  CHECK(same.code == 0);
  CHECK(same.out == run({"solve", "--builtin", "paper-example-7"}).out);

  // a descent-set start steps downward, which the increasing-order guard refuses
  const CliResult high = run({"solve", "--builtin", "paper-example-7", "--start", "31,31,3,4"});
  CHECK(high.code == 1);
  CHECK(has(high.out, "start: (31, 31; 3, 4)"));
  CHECK(has(high.out, "status: monotonicity-violation"));
  CHECK(has(high.out, "iterations: 1"));
}

TEST_CASE("solve writes csv traces with one row per iterate") {
  const std::string path = "/tmp/elcp_cli_trace.csv";
  const CliResult r = run({"solve", "--builtin", "paper-example-7", "--trace", path});
  CHECK(r.code == 0);
  const int iters = parsed_iterations(r.out);
  CHECK(has(r.out, "trace written to " + path + " (" + std::to_string(iters + 1) + " rows)"));

  const std::string csv = read_file(path);
  CHECK(csv.rfind("n,x_1,x_2,u_1,u_2,residual,step_norm\n", 0) == 0);
  CHECK(line_count(csv) == iters + 2);  // header + start row + iterations
  std::remove(path.c_str());
}

TEST_CASE("solve writes json traces deterministically") {
  const std::string path = "/tmp/elcp_cli_trace_out.json";
  const CliResult r = run({"solve", "--builtin", "paper-example-7", "--trace", path});
  CHECK(r.code == 0);
  const std::string first = read_file(path);

  const Json doc = Json::parse(first);
  CHECK(doc["problem"] == kBuiltinExampleId);
  CHECK(doc["status"] == "residual-tol");
  CHECK(doc["seed"] == 42);
  CHECK(doc["iterations"].get<int>() == parsed_iterations(r.out));
  CHECK(static_cast<int>(doc["trace"].size()) == doc["iterations"].get<int>() + 1);
  CHECK(doc["trace"][0]["n"] == 0);
  CHECK(doc["final"]["x"].size() == 2);

  run({"solve", "--builtin", "paper-example-7", "--trace", path});
  CHECK(read_file(path) == first);
  std::remove(path.c_str());
}

TEST_CASE("solve runs problems from files") {
  const std::string path = "/tmp/elcp_cli_zero_map.json";
  write_file(path, kZeroMapDoc);
  const CliResult r = run({"solve", path});
  CHECK(r.code == 0);
  CHECK(has(r.out, "problem: (unnamed)"));
  CHECK(parsed_iterations(r.out) == 0);  // feasible fixed point at the start
  CHECK(has(r.out, "final: (2; 3)"));
  std::remove(path.c_str());
}

TEST_CASE("solve exits 1 when the iteration cap stops it first") {
  const CliResult r = run({"solve", "--builtin", "paper-example-7", "--max-iter", "2"});
  CHECK(r.code == 1);
  CHECK(has(r.out, "status: max-iter"));
  CHECK(parsed_iterations(r.out) == 2);
}

TEST_CASE("input errors exit 2 with a message on stderr") {
  const CliResult bad_id = run({"solve", "--builtin", "nope"});
  CHECK(bad_id.code == 2);
  CHECK(has(bad_id.err, "unknown builtin problem id 'nope'; available: paper-example-7"));

  const CliResult missing = run({"solve", "/tmp/elcp_no_such_file.json"});
  CHECK(missing.code == 2);
  CHECK(has(missing.err, "cannot open file for reading"));

  const CliResult none = run({"solve"});
  CHECK(none.code == 2);
  CHECK(has(none.err, "no problem given; pass a file path or --builtin <id>"));

  const CliResult both = run({"solve", "/tmp/whatever.json", "--builtin", "paper-example-7"});
  CHECK(both.code == 2);
  CHECK(has(both.err, "give either a problem file or --builtin, not both"));

  const CliResult short_start =
      run({"solve", "--builtin", "paper-example-7", "--start", "1,2,3"});
  CHECK(short_start.code == 2);
  CHECK(has(short_start.err, "start point has 3 entries, expected 4"));

  const CliResult bad_number =
      run({"solve", "--builtin", "paper-example-7", "--start", "1,two,3,4"});
  CHECK(bad_number.code == 2);
  CHECK(has(bad_number.err, "'two' is not a number"));
}

TEST_CASE("usage errors exit 4") {
  CHECK(run({}).code == 4);
  CHECK(run({"solve", "--builtin", "paper-example-7", "--max-iter", "0"}).code == 4);
  CHECK(run({"solve", "--no-such-flag"}).code == 4);
  CHECK(run({"verify", "--suite", "bogus"}).code == 4);

  const CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(has(help.out, "Usage"));
}

TEST_CASE("verify reports the bounding sets for given points") {
  const CliResult good =
      run({"verify", "--builtin", "paper-example-7", "--point", "31,31,3,4"});
  CHECK(good.code == 0);
  CHECK(has(good.out, "PASS  start admissible"));
  CHECK(has(good.out, "PASS  map preserves the order"));
  CHECK(has(good.out, "PASS  point (31, 31; 3, 4) in Omega"));
  CHECK(has(good.out, "PASS  point (31, 31; 3, 4) in Gamma"));
  CHECK(has(good.out, "verify: 4 properties, 0 failures"));

  const CliResult bad = run({"verify", "--builtin", "paper-example-7", "--point", "0,0,0,0"});
  CHECK(bad.code == 3);
  CHECK(has(bad.out, "FAIL  point (0, 0; 0, 0) in Omega"));
  CHECK(has(bad.out, "verify: 4 properties, 2 failures"));
}

TEST_CASE("verify runs the property suites") {
  const CliResult duality = run({"verify", "--suite", "duality", "--samples", "200"});
  CHECK(duality.code == 0);
  CHECK(has(duality.out, "suite duality: 3 properties, 0 failures"));
  CHECK(has(duality.out, "(p=2, q=2)"));

  const CliResult isotone = run({"verify", "--suite", "isotone", "--samples", "300"});
  CHECK(isotone.code == 0);
  CHECK(has(isotone.out, "suite isotone: "));
  CHECK(has(isotone.out, " 0 failures"));

  const CliResult narrowed =
      run({"verify", "--suite", "hyperplane", "--p", "3", "--q", "2", "--samples", "150"});
  CHECK(narrowed.code == 0);
  CHECK(has(narrowed.out, "(p=3, q=2)"));
}

TEST_CASE("reproduce rebuilds every reference row") {
  const CliResult r = run({"reproduce"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "reproduce: 31 rows, 0 failures"));
  CHECK(has(r.out, "seed: 42"));
  CHECK(line_count(r.out) == 33);  // 31 rows + footer + seed
}

}  // namespace
}  // namespace elcp
