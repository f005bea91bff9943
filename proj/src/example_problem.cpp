// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#include "elcp/example_problem.hpp"

namespace elcp {

Problem example_problem() {
  const int p = 2, q = 2;

  Vector d1(2), d2(2);
  d1 << 1.0 / 12.0, 0.0;
  d2 << 0.0, 1.0 / 12.0;
  MonotoneScalarFn f1 = MonotoneScalarFn::lorentz_affine(d1, 1.0 / 12.0, 1.0);
  MonotoneScalarFn f2 = MonotoneScalarFn::lorentz_affine(d2, 1.0 / 12.0, -0.6);

  Vector w1x(2), w1u(2), w2x(2), w2u(2);
  w1x << 1.0, 1.0;
  w1u << 1.0 / 6.0, 1.0 / 3.0;
  w2x << 1.0, 1.0;
  w2u << 1.0 / 3.0, 1.0 / 6.0;

  std::vector<CombinationTerm> terms;
  terms.push_back({f1, Point(w1x, w1u)});
  terms.push_back({f2, Point(w2x, w2u)});

  Matrix normals(2, 2);
  normals << 1, -1, -1, 0;  // u1 <= u2 and u1 >= 0

  Problem prob;
  prob.name = kBuiltinExampleId;
  prob.p = p;
  prob.q = q;
  prob.C = ConeSpec::polyhedral_halfspaces(normals);
  prob.map.kind = MapSpec::Kind::Combination;
  prob.map.combination = IsotoneCombination(p, q, std::move(terms));
  prob.F = compile_map(prob.map, p, q);
  prob.start = Point::zero(p, q);
  return prob;
}

Point example_solution() {
  Vector x(2), u(2);
  x << 8.0 / 15.0, 8.0 / 15.0;
  u << 0.0, 4.0 / 15.0;
  return Point(x, u);
}

Point example_stationary_candidate() {
  const double s = std::sqrt(2.0);
  const double ui = (120.0 + 6.0 * s) / 995.0;
  const double xi = (480.0 + 24.0 * s) / 995.0;
  Vector x(2), u(2);
  x << xi, xi;
  u << ui, ui;
  return Point(x, u);
}

Point example_omega_witness() {
  Vector x(2), u(2);
  x << 31.0, 31.0;
  u << 3.0, 4.0;
  return Point(x, u);
}

}  // namespace elcp
