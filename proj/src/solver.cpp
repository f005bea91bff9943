// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#include "elcp/solver.hpp"

#include "elcp/projection.hpp"

namespace elcp {

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::ResidualTol: return "residual-tol";
    case StopReason::StepTol: return "step-tol";
    case StopReason::MaxIter: return "max-iter";
    case StopReason::MonotonicityViolation: return "monotonicity-violation";
  }
  return "?";
}

MapFn compile_map(const MapSpec& spec, int p, int q) {
  const int m = p + q;
  switch (spec.kind) {
    case MapSpec::Kind::Affine: {
      if (spec.matrix.rows() != m || spec.matrix.cols() != m)
        throw std::invalid_argument("affine map matrix must be (p+q) x (p+q)");
      if (spec.offset.size() != m)
        throw std::invalid_argument("affine map offset must have size p+q");
      return [A = spec.matrix, b = spec.offset, p, q](const Point& z) {
        return Point::from_flat(A * z.flat() + b, p, q);
      };
    }
    case MapSpec::Kind::Combination: {
      if (!spec.combination) throw std::invalid_argument("combination map has no terms");
      if (spec.combination->p() != p || spec.combination->q() != q)
        throw std::invalid_argument("combination dimensions do not match the problem");
      return [comb = *spec.combination](const Point& z) {
        const Point t = comb.eval(z);
        return Point(z.x - t.x, z.u - t.u);
      };
    }
    case MapSpec::Kind::Builtin:
      throw std::invalid_argument("builtin maps are resolved by the problem loader");
  }
  throw std::logic_error("unreachable map kind");
}

static void check_point(const Problem& problem, const Point& z) {
  if (z.p() != problem.p || z.q() != problem.q)
    throw std::invalid_argument("point dimensions do not match the problem");
  if (!z.all_finite()) throw std::invalid_argument("point has non-finite entries");
}

Point picard_step(const Problem& problem, const Point& z, Tolerance tol) {
  check_point(problem, z);
  const Point fz = problem.F(z);
  const Vector w = (z - fz).flat();
  const ConeSpec k = problem.full_cone();
  return Point::from_flat(project(k, w, tol).point, problem.p, problem.q);
}

Point mixed_picard_step(const Problem& problem, const Point& z, Tolerance tol) {
  check_point(problem, z);
  const Point fz = problem.F(z);
  return project_product(z.x - fz.x, z.u - fz.u, problem.C, tol);
}

double residual(const Problem& problem, const Point& z, Tolerance tol) {
  return inf_norm(z - picard_step(problem, z, tol));
}

SolveReport solve(const Problem& problem, const Point& z0, const SolveOptions& opts,
                  Tolerance tol) {
  check_point(problem, z0);
  if (opts.max_iter < 0) throw std::invalid_argument("max_iter must be >= 0");

  SolveReport report;
  report.trace.push_back({0, z0, 0.0, 0.0});

  Point z = z0;
  bool monotone_ok = true;
  bool need_probe = true;

  for (int n = 1; n <= opts.max_iter; ++n) {
    const Point z_next = picard_step(problem, z, tol);
    const double s = inf_norm(z_next - z);  // residual at z and incoming step norm
    report.trace.back().residual = s;

    if (s <= opts.tol_residual) {
      // z already meets the residual tolerance; the probe step is discarded.
      report.reason = StopReason::ResidualTol;
      report.residual = s;
      need_probe = false;
      break;
    }
    if (opts.monotone_check && !leq_order(z, z_next, tol)) {
      monotone_ok = false;
      z = z_next;
      report.iterations = n;
      report.trace.push_back({n, z, 0.0, s});
      report.reason = StopReason::MonotonicityViolation;
      break;
    }
    z = z_next;
    report.iterations = n;
    report.trace.push_back({n, z, 0.0, s});
    if (s <= opts.tol_step) {
      report.reason = StopReason::StepTol;
      break;
    }
  }

  report.final = z;
  if (need_probe) {
    report.residual = residual(problem, z, tol);
    report.trace.back().residual = report.residual;
  }
  report.monotone_certificate = opts.monotone_check && monotone_ok;
  report.gamma_member = in_gamma(problem, report.final, tol);
  if (!opts.trace) report.trace.clear();
  return report;
}

bool in_omega(const Problem& problem, const Point& z, Tolerance tol) {
  check_point(problem, z);
  if (!problem.C.contains(z.u, tol)) return false;
  if (!contains_L(z, tol)) return false;
  return contains_L(problem.F(z), tol);
}

bool in_gamma(const Problem& problem, const Point& z, Tolerance tol) {
  check_point(problem, z);
  if (!problem.C.contains(z.u, tol)) return false;
  if (!contains_L(z, tol)) return false;
  return leq_order(picard_step(problem, z, tol), z, tol);
}

StartCheck check_start(const Problem& problem, const Point& z0, Tolerance tol) {
  check_point(problem, z0);
  StartCheck c;
  c.ordered = leq_order(z0, picard_step(problem, z0, tol), tol);
  c.z0_in_cone = problem.C.contains(z0.u, tol);
  const Point fz = problem.F(z0);
  c.minus_f_in_l = contains_L(Point(-fz.x, -fz.u), tol);
  return c;
}

bool verify_lower_bound(const Problem& problem, const Point& zstar,
                        const std::vector<Point>& omega_samples, Tolerance tol) {
  check_point(problem, zstar);
  for (size_t i = 0; i < omega_samples.size(); ++i) {
    if (!in_omega(problem, omega_samples[i], tol))
      throw std::invalid_argument("sample " + std::to_string(i) +
                                  " is not in the admissible set (K ∩ L with F(z) in L)");
  }
  for (const Point& w : omega_samples)
    if (!leq_order(zstar, w, tol)) return false;
  return true;
}

Certificate solution_certificate(const Problem& problem, const Point& z, Tolerance tol) {
  check_point(problem, z);
  const Point fz = problem.F(z);
  Certificate cert;
  cert.g_norm = fz.x.size() ? fz.x.lpNorm<Eigen::Infinity>() : 0.0;
  cert.u_in_cone = problem.C.contains(z.u, tol);
  cert.h_in_dual = problem.C.dual_contains(fz.u, tol);
  cert.complementarity = std::abs(z.u.dot(fz.u));
  return cert;
}

}  // namespace elcp
