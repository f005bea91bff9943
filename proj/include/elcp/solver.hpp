// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elcp/cone.hpp"
#include "elcp/isotone.hpp"
#include "elcp/types.hpp"

namespace elcp {

struct SolveOptions {
  int max_iter = 10000;
  double tol_step = 1e-12;
  double tol_residual = 1e-10;
  bool monotone_check = true;
  bool trace = false;
};

// Declarative description of the problem map F = (G, H), kept alongside the
// compiled form so problems round-trip through files unchanged.
struct MapSpec {
  enum class Kind { Affine, Combination, Builtin };
  Kind kind = Kind::Affine;
  Matrix matrix;  // affine: F(z) = matrix z + offset
  Vector offset;
  std::optional<IsotoneCombination> combination;  // F(z) = z - T(z)
  std::string builtin_id;
};

// Compile the declarative map. Affine and combination forms only; builtin
// ids are resolved by the problem loader.
MapFn compile_map(const MapSpec& spec, int p, int q);

// Mixed complementarity problem on K = R^p x C:
//   find (x, u) with G(x,u) = 0, u in C, H(x,u) in C*, <u, H(x,u)> = 0,
// solved by the fixed-point iteration z <- P_K(z - F(z)), F = (G, H).
// When I - F is isotone and the start is below its successor, the iterates
// increase in the extended Lorentz order and converge to the least element
// of { z in K ∩ L : P_K(z - F(z)) <= z }.
struct Problem {
  std::string name;
  int p = 0, q = 0;
  ConeSpec C = ConeSpec::orthant(1);
  MapSpec map;        // declarative form, kept for serialization
  MapFn F;            // compiled z -> (G, H)(z)
  Point start;        // default start point
  SolveOptions options;

  Vector G(const Point& z) const { return F(z).x; }
  Vector H(const Point& z) const { return F(z).u; }
  ConeSpec full_cone() const { return ConeSpec::product(p, C); }
};

enum class StopReason { ResidualTol, StepTol, MaxIter, MonotonicityViolation };
std::string to_string(StopReason r);

struct TraceRow {
  int n = 0;
  Point z;
  double residual = 0.0;   // ||z - P_K(z - F(z))||_inf at this iterate
  double step_norm = 0.0;  // ||z^n - z^{n-1}||_inf, 0 for the start row
};

struct SolveReport {
  Point final;
  double residual = 0.0;
  int iterations = 0;
  StopReason reason = StopReason::MaxIter;
  bool monotone_certificate = false;  // every recorded step was order-increasing
  bool gamma_member = false;          // final point lies in the descent set
  std::vector<TraceRow> trace;        // filled when options.trace
};

// One fixed-point step through the generic product-cone projection.
Point picard_step(const Problem& problem, const Point& z, Tolerance tol = {});

// Same step written blockwise: x - G, then project u - H onto C. Kept as an
// independent code path; must agree with picard_step exactly.
Point mixed_picard_step(const Problem& problem, const Point& z, Tolerance tol = {});

// Natural-map residual ||z - P_K(z - F(z))||_inf.
double residual(const Problem& problem, const Point& z, Tolerance tol = {});

SolveReport solve(const Problem& problem, const Point& z0, const SolveOptions& opts = {},
                  Tolerance tol = {});

// z in K ∩ L with F(z) in L. Nonempty feasibility here guarantees the
// iteration's limit is a lower bound for the whole set.
bool in_omega(const Problem& problem, const Point& z, Tolerance tol = {});

// z in K ∩ L with P_K(z - F(z)) <= z in the extended Lorentz order.
bool in_gamma(const Problem& problem, const Point& z, Tolerance tol = {});

struct StartCheck {
  bool ordered = false;       // z0 <= P_K(z0 - F(z0))
  bool z0_in_cone = false;    // z0 in K (sufficient condition, part 1)
  bool minus_f_in_l = false;  // -F(z0) in L (sufficient condition, part 2)
};
StartCheck check_start(const Problem& problem, const Point& z0, Tolerance tol = {});

// True when zstar <= w for every sample; throws if a sample fails the
// in_omega test (the bound claim only makes sense against that set).
bool verify_lower_bound(const Problem& problem, const Point& zstar,
                        const std::vector<Point>& omega_samples, Tolerance tol = {});

struct Certificate {
  double g_norm = 0.0;          // ||G(z)||_inf
  bool u_in_cone = false;       // u in C
  bool h_in_dual = false;       // H(z) in C*
  double complementarity = 0.0;  // |<u, H(z)>|
  bool ok(double value_tol) const {
    return g_norm <= value_tol && u_in_cone && h_in_dual && complementarity <= value_tol;
  }
};
Certificate solution_certificate(const Problem& problem, const Point& z, Tolerance tol = {});

}  // namespace elcp
