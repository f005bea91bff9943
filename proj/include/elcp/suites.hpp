// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "elcp/cone.hpp"
#include "elcp/isotone.hpp"
#include "elcp/solver.hpp"

namespace elcp {

struct PropertyResult {
  std::string name;
  int samples = 0;
  int violations = 0;
  std::string detail;  // first witness, empty when clean
  bool pass() const { return violations == 0; }
};

// Sampled equivalence between dual-cone membership and inner-product
// nonnegativity against members of the order cone. The member list for each
// test point contains the p face rays, the extreme ray opposite to the
// point's u block and random mixture draws; the first two groups witness the
// defining inequalities exactly, so agreement is not left to luck.
std::vector<PropertyResult> duality_suite(const std::vector<std::pair<int, int>>& dims, int points,
                                          int members_per_point, std::uint64_t seed,
                                          Tolerance tol = {});

// Projection onto R^2 x C preserves the extended Lorentz order, for C in
// {orthant, second-order cone, wedge 0 <= u1 <= u2}.
std::vector<PropertyResult> projection_isotonicity_suite(int pairs, std::uint64_t seed,
                                                         Tolerance tol = {});

// One (p, q) configuration of the hyperplane checks. q > 1: patterned unit
// normals pass and non-patterned ones fail the sampled projection
// isotonicity test. q = 1: the generator-pair condition agrees with the
// structural pattern on patterned and random normals.
std::vector<PropertyResult> hyperplane_suite(int p, int q, int random_normals, std::uint64_t seed,
                                             Tolerance tol = {});
// The standard set: (p,q) = (2,2), (2,1), (3,1).
std::vector<PropertyResult> hyperplane_suite_default(int random_normals, std::uint64_t seed,
                                                     Tolerance tol = {});

// Idempotence, set membership, nonexpansiveness and obtuse-angle optimality
// across every projection variant, plus the grid-oracle comparison for the
// polyhedral enumeration.
std::vector<PropertyResult> projection_suite(int pairs, int oracle_points, std::uint64_t seed,
                                             Tolerance tol = {});

// Isotone-map machinery: the built-in combination, conic combinations of
// isotone maps, compositions with monotone scalar functions, lifted affine
// forms, and refutation of an antitone map.
std::vector<PropertyResult> isotone_suite(int samples, std::uint64_t seed, Tolerance tol = {});

// Brute-force nearest feasible point of { v : halfspaces v <= 0 } on a
// lattice, refined through shrinking windows centered on the running best.
// The achieved distance is sharp to well below 1e-3 for inputs of norm <= 10;
// the returned point itself is only determined up to the flat valley that the
// distance function has along active faces.
Vector grid_project_oracle(const Matrix& halfspaces, const Vector& v, int stages = 8,
                           int points_per_axis = 41);

// Unit normal in R^{p+q} at Euclidean distance >= 0.05 from every patterned
// normal (resamples until outside that margin).
std::pair<Vector, Vector> random_nonpatterned_normal(Rng& rng, int p, int q);

struct ReproRow {
  std::string name;
  double measured = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool upper_bound = false;  // pass iff measured <= expected + tol
  bool pass() const {
    if (!std::isfinite(measured)) return false;
    return upper_bound ? measured <= expected + tol : std::abs(measured - expected) <= tol;
  }
};

// The full worked-example reproduction table: first step, limit, contraction
// rate, invariant-set bounds, both boundary candidates and the solution
// certificate, each with its documented tolerance. The contraction rows are
// measured on 50-digit floats because consecutive iterate errors shrink to
// the last bits of a double after roughly twelve steps.
std::vector<ReproRow> reproduce_rows();

}  // namespace elcp
