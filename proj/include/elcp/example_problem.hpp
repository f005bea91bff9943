// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <vector>

#include "elcp/solver.hpp"

namespace elcp {

// Built-in worked example: p = q = 2, C = { (u1, u2) : 0 <= u1 <= u2 },
// F = I - (f1 w1 + f2 w2) with
//   f1(x,u) = (x1 + ||u|| + 12) / 12     w1 = (1, 1, 1/6, 1/3)
//   f2(x,u) = (x2 + ||u|| - 7.2) / 12    w2 = (1, 1, 1/3, 1/6)
// Known solution (8/15, 8/15, 0, 4/15); the iteration from 0 contracts
// toward it at rate 5/24 per step.
inline constexpr const char* kBuiltinExampleId = "paper-example-7";

Problem example_problem();

Point example_solution();

// Stationary candidate with u1 = u2 > 0: G vanishes and <u, H> = 0 there,
// but H = (2/15, -2/15) is outside C*, so it is not a solution.
Point example_stationary_candidate();

// A point of the admissible set used by the lower-bound checks.
Point example_omega_witness();

// Scalar-templated copy of the built-in step (same formulas, closed-form
// wedge projection). The contraction-rate measurement needs iterates far
// below double resolution, so this runs at whatever precision Real offers.
template <class Real>
struct ExampleIterate {
  Real x1, x2, u1, u2;
};

template <class Real>
ExampleIterate<Real> example_reference_step(const ExampleIterate<Real>& z) {
  using std::sqrt;
  const Real twelve = Real(12);
  const Real nu = sqrt(z.u1 * z.u1 + z.u2 * z.u2);
  const Real f1 = z.x1 / twelve + nu / twelve + Real(1);
  const Real f2 = z.x2 / twelve + nu / twelve - Real(3) / Real(5);
  const Real tx1 = f1 + f2;
  const Real tx2 = f1 + f2;
  const Real tu1 = f1 / Real(6) + f2 / Real(3);
  const Real tu2 = f1 / Real(3) + f2 / Real(6);
  // project (tu1, tu2) onto the wedge 0 <= a <= b
  Real pu1, pu2;
  if (tu1 <= Real(0)) {
    pu1 = Real(0);
    pu2 = tu2 > Real(0) ? tu2 : Real(0);
  } else if (tu2 >= tu1) {
    pu1 = tu1;
    pu2 = tu2;
  } else {
    const Real mid = (tu1 + tu2) / Real(2);
    pu1 = pu2 = mid > Real(0) ? mid : Real(0);
  }
  return {tx1, tx2, pu1, pu2};
}

template <class Real>
std::vector<ExampleIterate<Real>> example_reference_iterates(int count) {
  std::vector<ExampleIterate<Real>> out;
  out.reserve(count + 1);
  ExampleIterate<Real> z{Real(0), Real(0), Real(0), Real(0)};
  out.push_back(z);
  for (int n = 0; n < count; ++n) {
    z = example_reference_step(z);
    out.push_back(z);
  }
  return out;
}

}  // namespace elcp
