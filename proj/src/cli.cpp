// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#include "elcp/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "elcp/example_problem.hpp"
#include "elcp/problem_io.hpp"
#include "elcp/solver.hpp"
#include "elcp/suites.hpp"

namespace elcp {
namespace {

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string point_str(const Point& z) {
  std::string s = "(";
  for (int i = 0; i < z.p(); ++i) {
    if (i) s += ", ";
    s += fmt(z.x(i));
  }
  s += "; ";
  for (int i = 0; i < z.q(); ++i) {
    if (i) s += ", ";
    s += fmt(z.u(i));
  }
  return s + ")";
}

Vector parse_csv_values(const std::string& text, int expected, const std::string& what) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw std::runtime_error(what + ": '" + item + "' is not a number");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw std::runtime_error(what + ": '" + item + "' is not a number");
    vals.push_back(v);
  }
  if (static_cast<int>(vals.size()) != expected) {
    throw std::runtime_error(what + " has " + std::to_string(vals.size()) + " entries, expected " +
                             std::to_string(expected));
  }
  Vector out(expected);
  for (int i = 0; i < expected; ++i) out(i) = vals[i];
  return out;
}

Problem resolve_problem(const std::string& path, const std::string& builtin_id) {
  if (!builtin_id.empty() && !path.empty()) {
    throw std::runtime_error("give either a problem file or --builtin, not both");
  }
  if (!builtin_id.empty()) {
    if (builtin_id != kBuiltinExampleId) {
      throw std::runtime_error("unknown builtin problem id '" + builtin_id + "'; available: " +
                               kBuiltinExampleId);
    }
    return example_problem();
  }
  if (path.empty()) {
    throw std::runtime_error("no problem given; pass a file path or --builtin <id>");
  }
  return load_problem(path);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Json point_json(const Point& z) {
  Json j = Json::object();
  j["x"] = Json::array();
  for (int i = 0; i < z.p(); ++i) j["x"].push_back(z.x(i));
  j["u"] = Json::array();
  for (int i = 0; i < z.q(); ++i) j["u"].push_back(z.u(i));
  return j;
}

void write_trace_file(const std::string& path, const Problem& prob, const SolveReport& rep,
                      std::uint64_t seed) {
  if (ends_with(path, ".csv")) {
    write_file(path, trace_to_csv(rep.trace, prob.p, prob.q));
    return;
  }
  Json doc = Json::object();
  doc["problem"] = prob.name;
  doc["seed"] = seed;
  doc["status"] = to_string(rep.reason);
  doc["iterations"] = rep.iterations;
  doc["residual"] = rep.residual;
  doc["final"] = point_json(rep.final);
  Json rows = Json::array();
  for (const TraceRow& row : rep.trace) {
    Json r = Json::object();
    r["n"] = row.n;
    r["x"] = Json::array();
    for (int i = 0; i < prob.p; ++i) r["x"].push_back(row.z.x(i));
    r["u"] = Json::array();
    for (int i = 0; i < prob.q; ++i) r["u"].push_back(row.z.u(i));
    r["residual"] = row.residual;
    r["step_norm"] = row.step_norm;
    rows.push_back(std::move(r));
  }
  doc["trace"] = std::move(rows);
  write_file(path, dump_json(doc) + "\n");
}

struct SolveArgs {
  std::string path;
  std::string builtin_id;
  std::string start_text;
  std::string trace_path;
  int max_iter = 0;
  double tol_step = 0.0;
  double tol_residual = 0.0;
  std::uint64_t seed = 42;
  bool has_max_iter = false, has_tol_step = false, has_tol_residual = false;
};

int run_solve(const SolveArgs& a, std::ostream& out) {
  Problem prob = resolve_problem(a.path, a.builtin_id);
  SolveOptions opts = prob.options;
  if (a.has_max_iter) opts.max_iter = a.max_iter;
  if (a.has_tol_step) opts.tol_step = a.tol_step;
  if (a.has_tol_residual) opts.tol_residual = a.tol_residual;
  if (!a.trace_path.empty()) opts.trace = true;

  Point z0 = prob.start;
  if (!a.start_text.empty()) {
    z0 = Point::from_flat(parse_csv_values(a.start_text, prob.p + prob.q, "start point"), prob.p,
                          prob.q);
  }

  const SolveReport rep = solve(prob, z0, opts);
  const Certificate cert = solution_certificate(prob, rep.final);

  out << "problem: " << (prob.name.empty() ? "(unnamed)" : prob.name) << "\n";
  out << "p: " << prob.p << "  q: " << prob.q << "  cone: " << prob.C.kind_name() << "\n";
  out << "start: " << point_str(z0) << "\n";
  out << "status: " << to_string(rep.reason) << "\n";
  out << "iterations: " << rep.iterations << "\n";
  out << "residual: " << fmt(rep.residual) << "\n";
  out << "final: " << point_str(rep.final) << "\n";
  out << "certificate: ||G||_inf = " << fmt(cert.g_norm) << ", u in C: "
      << (cert.u_in_cone ? "yes" : "no") << ", H in C*: " << (cert.h_in_dual ? "yes" : "no")
      << ", |<u,H>| = " << fmt(cert.complementarity) << "\n";
  out << "seed: " << a.seed << "\n";

  if (!a.trace_path.empty()) {
    write_trace_file(a.trace_path, prob, rep, a.seed);
    out << "trace written to " << a.trace_path << " (" << rep.trace.size() << " rows)\n";
  }
  return rep.reason == StopReason::ResidualTol ? kExitOk : kExitNotConverged;
}

struct VerifyArgs {
  std::string path;
  std::string builtin_id;
  std::string suite;
  std::vector<std::string> points;
  int p = 0, q = 0;
  bool has_p = false, has_q = false;
  int samples = 1000;
  std::uint64_t seed = 42;
};

void print_rows(const std::vector<PropertyResult>& rows, std::ostream& out, int& failures) {
  for (const PropertyResult& r : rows) {
    if (r.pass()) {
      out << "PASS  " << r.name << " (" << r.samples << " samples)\n";
    } else {
      ++failures;
      out << "FAIL  " << r.name << " (" << r.violations << " of " << r.samples << " violations)";
      if (!r.detail.empty()) out << ": " << r.detail;
      out << "\n";
    }
  }
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  int failures = 0;
  int properties = 0;

  if (!a.suite.empty()) {
    std::vector<PropertyResult> rows;
    if (a.suite == "duality") {
      std::vector<std::pair<int, int>> dims{{2, 2}, {3, 2}, {2, 3}};
      if (a.has_p || a.has_q) dims = {{a.has_p ? a.p : 2, a.has_q ? a.q : 2}};
      rows = duality_suite(dims, a.samples, 1000, a.seed);
    } else if (a.suite == "hyperplane") {
      if (a.has_p || a.has_q) {
        rows = hyperplane_suite(a.has_p ? a.p : 2, a.has_q ? a.q : 2, a.samples, a.seed);
      } else {
        rows = hyperplane_suite_default(a.samples, a.seed);
      }
    } else if (a.suite == "projection") {
      rows = projection_suite(a.samples, std::min(a.samples, 100), a.seed);
    } else {
      rows = isotone_suite(a.samples, a.seed);
    }
    properties = static_cast<int>(rows.size());
    print_rows(rows, out, failures);
    out << "suite " << a.suite << ": " << properties << " properties, " << failures
        << (failures == 1 ? " failure" : " failures") << "\n";
    out << "seed: " << a.seed << "\n";
    return failures ? kExitCheckFailure : kExitOk;
  }

  Problem prob = resolve_problem(a.path, a.builtin_id);
  out << "problem: " << (prob.name.empty() ? "(unnamed)" : prob.name) << "\n";

  const StartCheck sc = check_start(prob, prob.start);
  const bool start_ok = sc.ordered && sc.z0_in_cone && sc.minus_f_in_l;
  ++properties;
  if (start_ok) {
    out << "PASS  start admissible (in cone, ordered below its successor, -F in L)\n";
  } else {
    ++failures;
    out << "FAIL  start admissible (in cone: " << (sc.z0_in_cone ? "yes" : "no")
        << ", ordered: " << (sc.ordered ? "yes" : "no")
        << ", -F in L: " << (sc.minus_f_in_l ? "yes" : "no") << ")\n";
  }

  {
    const MapFn isotone_part = [&prob](const Point& z) { return z - prob.F(z); };
    const IsotonicityReport rep =
        test_isotonicity(isotone_part, prob.p, prob.q, a.samples, a.seed);
    ++properties;
    if (rep.pass()) {
      out << "PASS  map preserves the order (" << rep.samples << " samples)\n";
    } else {
      ++failures;
      out << "FAIL  map preserves the order (" << rep.violations << " of " << rep.samples
          << " violations)";
      if (!rep.witnesses.empty()) out << ": z1 = " << point_str(rep.witnesses[0].z1);
      out << "\n";
    }
  }

  for (const std::string& text : a.points) {
    const Vector flat = parse_csv_values(text, prob.p + prob.q, "point");
    const Point z = Point::from_flat(flat, prob.p, prob.q);
    const bool om = in_omega(prob, z);
    const bool ga = in_gamma(prob, z);
    properties += 2;
    if (!om) ++failures;
    if (!ga) ++failures;
    out << (om ? "PASS" : "FAIL") << "  point " << point_str(z) << " in Omega\n";
    out << (ga ? "PASS" : "FAIL") << "  point " << point_str(z) << " in Gamma\n";
  }

  out << "verify: " << properties << " properties, " << failures
      << (failures == 1 ? " failure" : " failures") << "\n";
  out << "seed: " << a.seed << "\n";
  return failures ? kExitCheckFailure : kExitOk;
}

int run_reproduce(std::ostream& out) {
  const std::vector<ReproRow> rows = reproduce_rows();
  int failures = 0;
  for (const ReproRow& r : rows) {
    const bool ok = r.pass();
    if (!ok) ++failures;
    std::string name = r.name;
    if (name.size() < 52) name.resize(52, ' ');
    out << (ok ? "PASS" : "FAIL") << "  " << name << " measured " << fmt(r.measured)
        << "  expected " << (r.upper_bound ? "<= " : "") << fmt(r.expected + (r.upper_bound ? r.tol : 0.0));
    if (!r.upper_bound && r.tol > 0.0) out << " +- " << fmt(r.tol);
    out << "\n";
  }
  out << "reproduce: " << rows.size() << " rows, " << failures
      << (failures == 1 ? " failure" : " failures") << "\n";
  out << "seed: 42\n";
  return failures ? kExitCheckFailure : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"extended Lorentz cone order, projections, and fixed-point solver"};
  app.require_subcommand(1);

  SolveArgs sa;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run the fixed-point iteration on a problem");
  solve_cmd->add_option("problem", sa.path, "problem file (JSON)");
  solve_cmd->add_option("--builtin", sa.builtin_id, "built-in problem id");
  solve_cmd->add_option("--start", sa.start_text, "start point as comma-separated values");
  solve_cmd->add_option("--trace", sa.trace_path, "write the iterate trace to this file (.csv or JSON)");
  CLI::Option* o_mi = solve_cmd->add_option("--max-iter", sa.max_iter, "iteration cap")
                          ->check(CLI::PositiveNumber);
  CLI::Option* o_ts = solve_cmd->add_option("--tol-step", sa.tol_step, "step-norm stopping tolerance")
                          ->check(CLI::PositiveNumber);
  CLI::Option* o_tr = solve_cmd
                          ->add_option("--tol-residual", sa.tol_residual,
                                       "natural-map residual stopping tolerance")
                          ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", sa.seed, "seed echoed in reports");

  VerifyArgs va;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run property checks on a problem or a suite");
  verify_cmd->add_option("problem", va.path, "problem file (JSON)");
  verify_cmd->add_option("--builtin", va.builtin_id, "built-in problem id");
  verify_cmd->add_option("--suite", va.suite, "property suite to run")
      ->check(CLI::IsMember({"duality", "hyperplane", "projection", "isotone"}));
  verify_cmd->add_option("--point", va.points,
                         "point to test for the solution-bounding sets (comma-separated values)");
  CLI::Option* o_p = verify_cmd->add_option("--p", va.p, "order-cone head dimension")
                         ->check(CLI::PositiveNumber);
  CLI::Option* o_q = verify_cmd->add_option("--q", va.q, "order-cone tail dimension")
                         ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--samples", va.samples, "sample count per property")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", va.seed, "root seed for sampling");

  CLI::App* repro_cmd =
      app.add_subcommand("reproduce", "rebuild the built-in example's reference numbers");

  std::vector<const char*> argv;
  argv.push_back("elcp");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  sa.has_max_iter = o_mi->count() > 0;
  sa.has_tol_step = o_ts->count() > 0;
  sa.has_tol_residual = o_tr->count() > 0;
  va.has_p = o_p->count() > 0;
  va.has_q = o_q->count() > 0;

  try {
    if (solve_cmd->parsed()) return run_solve(sa, out);
    if (verify_cmd->parsed()) return run_verify(va, out);
    (void)repro_cmd;
    return run_reproduce(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace elcp
