// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#pragma once

#include <vector>

#include "elcp/cone.hpp"
#include "elcp/types.hpp"

namespace elcp {

struct ProjectionResult {
  Vector point;
  // Polyhedral case: the enumeration subset that achieved the minimum
  // distance, lexicographically smallest on ties. Empty otherwise.
  std::vector<int> active_set;
  double distance = 0.0;
};

// Metric projection onto the cone described by spec.
//   orthant      componentwise max(v, 0)
//   second-order closed form on (v_1..v_{m-1}, t), scalar last
//   polyhedral   exhaustive active-set enumeration (exact at small sizes)
//   hyperplane   v - <a,v> a
//   product      head block unchanged, tail projected recursively
ProjectionResult project(const ConeSpec& spec, const Vector& v, Tolerance tol = {});

// Projection onto { v : N v <= 0 } by enumerating subsets of rows of N:
// each subset A yields the least-squares projection of v onto the subspace
// { N_A v = 0 }; feasible candidates are compared by distance. The winner
// equals the metric projection because the true projection shows up as the
// candidate of its own active set.
ProjectionResult project_polyhedral(const Matrix& normals, const Vector& v, Tolerance tol = {});

// Projection onto cone(columns of G) by the dual enumeration: least-squares
// coefficients on each independent column subset, kept when nonnegative.
ProjectionResult project_generated(const Matrix& generators, const Vector& v, Tolerance tol = {});

// Projection onto R^p x C. The head block is returned bit-identical.
Point project_product(const Vector& x, const Vector& u, const ConeSpec& inner, Tolerance tol = {});

// Projection onto the translate y + C.
Vector translate_project(const Vector& y, const ConeSpec& spec, const Vector& v, Tolerance tol = {});

}  // namespace elcp
