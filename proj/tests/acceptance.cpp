// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

// Acceptance gate: one line per criterion, exit status = number of failures.
// Tolerances are fixed here on purpose; loosening them is not an option.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "elcp/cli.hpp"
#include "elcp/example_problem.hpp"
#include "elcp/problem_io.hpp"
#include "elcp/solver.hpp"
#include "elcp/suites.hpp"

namespace {

using namespace elcp;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

int g_failures = 0;

void criterion(int idx, bool ok, const std::string& label) {
  std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", idx, label.c_str());
  if (!ok) ++g_failures;
}

bool all_pass(const std::vector<PropertyResult>& rows) {
  bool ok = true;
  for (const PropertyResult& r : rows) {
    if (!r.pass()) {
      ok = false;
      std::printf("      failing property: %s (%d of %d)\n", r.name.c_str(), r.violations,
                  r.samples);
    }
  }
  return ok;
}

Point known_solution() {
  Vector x(2), u(2);
  x << 8.0 / 15.0, 8.0 / 15.0;
  u << 0.0, 4.0 / 15.0;
  return Point(x, u);
}

}  // namespace

int main() {
  const Problem prob = example_problem();
  const Point zstar_exact = known_solution();

  // 1. convergence of the fixed-point iteration on the builtin example
  SolveOptions opts = prob.options;
  opts.trace = true;
  const SolveReport rep = solve(prob, Point::zero(2, 2), opts);
  criterion(1,
            rep.reason == StopReason::ResidualTol && rep.iterations <= 60 &&
                rep.residual <= 1e-10 && inf_norm(rep.final - zstar_exact) <= 1e-9,
            "convergence to (8/15, 8/15, 0, 4/15), residual <= 1e-10 in <= 60 iterations");

  // 2. geometric contraction at rate 5/24, measured in 50-digit arithmetic
  {
    const std::vector<ExampleIterate<BigFloat>> ref = example_reference_iterates<BigFloat>(32);
    const BigFloat lim_x = BigFloat(8) / 15, lim_u = BigFloat(4) / 15;
    const BigFloat rate = BigFloat(5) / 24;
    BigFloat dev = 0;
    for (int n = 2; n <= 30; ++n) {
      const BigFloat rx = abs(ref[n + 1].x1 - lim_x) / abs(ref[n].x1 - lim_x);
      const BigFloat ru = abs(ref[n + 1].u2 - lim_u) / abs(ref[n].u2 - lim_u);
      const BigFloat dx = abs(rx - rate);
      const BigFloat du = abs(ru - rate);
      if (dx > dev) dev = dx;
      if (du > dev) dev = du;
    }
    criterion(2, dev <= 1e-9,
              "contraction ratio in [5/24 - 1e-9, 5/24 + 1e-9] for x1 and u2, n in [2, 30]");
  }

  // 3. first iterate and the norm of H at the origin
  {
    Vector x1(2), u1(2);
    x1 << 0.4, 0.4;
    u1 << 0.0, 7.0 / 30.0;
    const Point z1 = picard_step(prob, Point::zero(2, 2));
    const double h_norm = prob.H(Point::zero(2, 2)).norm();
    criterion(3,
              inf_norm(z1 - Point(x1, u1)) <= 1e-15 &&
                  std::abs(h_norm - std::sqrt(2.0) / 6.0) <= 1e-15,
              "first step equals ((0.4, 0.4), (0, 7/30)) and ||H(0)|| = sqrt(2)/6, both 1e-15");
  }

  // 4. the iterates stay in the invariant slice and increase in the order
  {
    bool ok = rep.trace.size() == static_cast<std::size_t>(rep.iterations) + 1;
    for (std::size_t i = 1; i < rep.trace.size(); ++i) {
      const Point& z = rep.trace[i].z;
      ok = ok && std::abs(z.x(0) - z.x(1)) <= 1e-12;
      ok = ok && z.x(0) >= -1e-12 && z.x(0) < 8.0 / 15.0;
      ok = ok && std::abs(z.u(0)) <= 1e-12;
      ok = ok && z.u(1) >= -1e-12 && z.u(1) < 4.0 / 15.0;
      ok = ok && std::abs(z.x(0) - (4.0 * z.u(1) - 8.0 / 15.0)) <= 1e-12;
      ok = ok && leq_order(rep.trace[i - 1].z, z, Tolerance{1e-12});
    }
    criterion(4,
              ok && rep.monotone_certificate,
              "iterates lie in the slice x1 = x2 = 4 u2 - 8/15, u1 = 0 and are order-increasing");
  }

  // 5. the admissible witness and the limit as its lower bound
  {
    const Point w = example_omega_witness();
    Vector gw(2), hw(2);
    gw << 24.6, 24.6;
    hw << 23.0 / 15.0, 34.0 / 15.0;
    criterion(5,
              in_omega(prob, w) && in_gamma(prob, w) &&
                  (prob.G(w) - gw).lpNorm<Eigen::Infinity>() <= 1e-12 &&
                  (prob.H(w) - hw).lpNorm<Eigen::Infinity>() <= 1e-12 &&
                  leq_order(rep.final, w),
              "witness ((31, 31), (3, 4)) is admissible, G/H match 1e-12, limit is below it");
  }

  // 6. the stationary candidate with u1 = u2 fails dual feasibility
  {
    const Point cand = example_stationary_candidate();
    const double g_norm = prob.G(cand).lpNorm<Eigen::Infinity>();
    const double compl_val = std::abs(cand.u.dot(prob.H(cand)));
    const bool h_in_dual = prob.C.dual_contains(prob.H(cand));
    criterion(6,
              g_norm <= 1e-12 && compl_val <= 1e-12 && !h_in_dual &&
                  inf_norm(rep.final - zstar_exact) <= 1e-9 &&
                  inf_norm(rep.final - cand) > 0.1,
              std::string("stationary candidate has G = 0, <u, H> = 0, H in C*: ") +
                  (h_in_dual ? "yes" : "no") + "; solver still returns the true solution");
  }

  // 7. dual membership vs inner-product sampling
  criterion(7, all_pass(duality_suite({{2, 2}, {3, 2}, {2, 3}}, 10000, 1000, 42)),
            "dual membership agrees with inner products, 10^4 points x 10^3 members, eps 1e-9");

  // 8. product projections preserve the order
  criterion(8, all_pass(projection_isotonicity_suite(10000, 42)),
            "product projection is order-preserving for orthant, second-order, wedge; 10^4 pairs");

  // 9. hyperplane normal classification
  criterion(9, all_pass(hyperplane_suite_default(1000, 42)),
            "patterned hyperplane normals are isotone, 10^3 others refuted; generator test agrees");

  // 10. projection oracles
  criterion(10, all_pass(projection_suite(10000, 100, 42)),
            "grid oracle within 2e-3 on 100 points; nonexpansive and idempotent on 10^4 samples");

  // 11. generator enumeration for the polyhedral case
  {
    bool ok = true;
    for (int p = 1; p <= 3; ++p) {
      const GeneratorsQ1 g = generators_q1(p);
      ok = ok && g.cone.cols() == (p == 1 ? 2 : p + 2) && g.dual.cols() == 2 * p;
      for (int i = 0; i < g.cone.cols(); ++i) {
        ok = ok && contains_L(Point(g.cone.col(i).head(p), g.cone.col(i).tail(1)), Tolerance{1e-12});
      }
      for (int j = 0; j < g.dual.cols(); ++j) {
        ok = ok && contains_M(Point(g.dual.col(j).head(p), g.dual.col(j).tail(1)), Tolerance{1e-12});
      }
      for (int i = 0; i < g.cone.cols(); ++i) {
        for (int j = 0; j < g.dual.cols(); ++j) {
          ok = ok && g.cone.col(i).dot(g.dual.col(j)) >= 0.0;
        }
      }
    }
    criterion(11, ok,
              "generator counts (p+2 or 2) and 2p for p in {1, 2, 3}; members; cross products >= 0");
  }

  // 12. solution certificate at the limit
  {
    const Certificate cert = solution_certificate(prob, rep.final);
    const Vector h = prob.H(rep.final);
    // C* is generated by (1, 0) and (-1, 1): membership means h2 >= 0 and h1 + h2 >= 0
    const bool dual_explicit = h(1) >= -1e-10 && h(0) + h(1) >= -1e-10;
    std::ostringstream sink;
    const int cli_code = run_cli({"solve", "--builtin", kBuiltinExampleId}, sink, sink);
    criterion(12,
              cert.ok(1e-10) && dual_explicit && cli_code == 0,
              "certificate at the limit: ||G||_inf <= 1e-10, u in C, H in C*, |<u, H>| <= 1e-10");
  }

  std::printf("acceptance: 12 criteria, %d failure%s\n", g_failures, g_failures == 1 ? "" : "s");
  return g_failures;
}
