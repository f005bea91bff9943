// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "elcp/cone.hpp"
#include "elcp/types.hpp"

namespace elcp {

// Nondecreasing scalar functions from a small closed grammar. Construction
// rejects descriptors that are not provably monotone (negative slopes).
class ScalarFn1D {
 public:
  enum class Kind { Affine, Exp, Arctan, PiecewiseLinear, Compose };

  static ScalarFn1D affine(double slope, double intercept);
  static ScalarFn1D exponential();
  static ScalarFn1D arctangent();
  // Knots (t_i, y_i), t strictly increasing, y nondecreasing; extended
  // linearly beyond the ends with the boundary slopes.
  static ScalarFn1D piecewise_linear(std::vector<double> t, std::vector<double> y);
  static ScalarFn1D compose(ScalarFn1D outer, ScalarFn1D inner);

  double operator()(double t) const;

  Kind kind() const { return kind_; }
  double slope() const { return slope_; }
  double intercept() const { return intercept_; }
  const std::vector<double>& knots_t() const { return t_; }
  const std::vector<double>& knots_y() const { return y_; }
  const ScalarFn1D& outer() const { return *outer_; }
  const ScalarFn1D& inner() const { return *inner_; }

 private:
  ScalarFn1D() = default;
  Kind kind_ = Kind::Affine;
  double slope_ = 0.0, intercept_ = 0.0;
  std::vector<double> t_, y_;
  std::shared_ptr<const ScalarFn1D> outer_, inner_;
};

// d >= 0 componentwise and |beta| <= <d, e>; under these, the scalar map
// z -> <d,x> + beta ||u|| + gamma is monotone for the extended Lorentz order.
bool validate_lorentz_affine(const Vector& d, double beta);

// Scalar functions R^{p+q} -> R that are monotone with respect to the
// extended Lorentz order, by construction.
class MonotoneScalarFn {
 public:
  enum class Kind { LorentzAffine, SeparableSimplicial, Composed };

  static MonotoneScalarFn lorentz_affine(Vector d, double beta, double gamma);
  // z = U lambda  ->  sum_i g_i(lambda_i). Requires the simplicial cone
  // cone(U) to contain the order cone, checked exactly through the dual
  // generators (each column of (U^T)^{-1} must lie in the dual cone M).
  static MonotoneScalarFn separable_simplicial(Matrix basis, std::vector<ScalarFn1D> g,
                                               int p, int q);
  static MonotoneScalarFn composed(MonotoneScalarFn inner, ScalarFn1D psi);

  double eval(const Point& z) const;

  Kind kind() const { return kind_; }
  const Vector& d() const { return d_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<ScalarFn1D>& components() const { return g_; }
  const MonotoneScalarFn& inner() const { return *inner_; }
  const ScalarFn1D& psi() const { return *psi_; }

 private:
  MonotoneScalarFn() = default;
  Kind kind_ = Kind::LorentzAffine;
  Vector d_;
  double beta_ = 0.0, gamma_ = 0.0;
  Matrix basis_;
  Eigen::FullPivLU<Matrix> basis_lu_;
  std::vector<ScalarFn1D> g_;
  std::shared_ptr<const MonotoneScalarFn> inner_;
  std::shared_ptr<const ScalarFn1D> psi_;
};

struct CombinationTerm {
  MonotoneScalarFn fn;
  Point weight;
};

// T(z) = sum_i f_i(z) w^i with each w^i in the order cone and each f_i
// monotone. Such sums are isotone, and stay isotone under addition and
// nonnegative scaling.
class IsotoneCombination {
 public:
  IsotoneCombination(int p, int q, std::vector<CombinationTerm> terms, Tolerance tol = {});

  Point eval(const Point& z) const;

  int p() const { return p_; }
  int q() const { return q_; }
  const std::vector<CombinationTerm>& terms() const { return terms_; }

 private:
  int p_, q_;
  std::vector<CombinationTerm> terms_;
};

using MapFn = std::function<Point(const Point&)>;

MapFn build_combination(IsotoneCombination combination);

// Structural test for a patterned hyperplane normal (a, u): either a = 0,
// or u = 0 and a has exactly one entry +sqrt(2)/2, one entry -sqrt(2)/2 and
// zeros elsewhere. Requires the full normal to be unit.
bool hyperplane_normal_is_patterned(const Vector& a, const Vector& u, Tolerance tol = {});

// Isotone-hyperplane classification for p > 1, q > 1: projection onto the
// hyperplane with unit normal (a, u) is isotone exactly for patterned
// normals. Throws for p <= 1 or q <= 1, where the characterization is
// different (the cone is polyhedral for q = 1 and extra isotone normals
// exist).
bool classify_hyperplane(const Vector& a, const Vector& u, Tolerance tol = {});

// Generator-pair condition for hyperplane isotonicity on polyhedral cones:
// <x,y> >= <a,x><a,y> for all generators x of K and y of K*. Bilinear in
// (x, y), so checking generators is exact.
bool lemma2_condition(const Vector& a, const Matrix& cone_generators,
                      const Matrix& dual_generators, Tolerance tol = {});

// Random member of the extended Lorentz cone, used as an order-pair
// increment: q = 1 draws a scaled convex combination of the generators,
// q > 1 draws (t e, u) with t exponential and ||u|| <= t.
Point random_l_member(Rng& rng, int p, int q);

// Mixture sampler for duality checks: extreme rays (e, ±dir), face rays
// (e_i, 0) and interior points, normalized to unit length so inner-product
// thresholds are comparable across samples.
Point random_l_member_mixture(Rng& rng, int p, int q);

struct IsotonicityReport {
  int samples = 0;
  int violations = 0;
  struct Witness {
    Point z1, z2;
    double slack;
  };
  std::vector<Witness> witnesses;  // first few only
  bool pass() const { return violations == 0; }
};

// Sampled check that F maps ordered pairs to ordered pairs: z2 = z1 + d
// with d in the cone, then F(z2) - F(z1) must be in the cone within eps.
IsotonicityReport test_isotonicity(const MapFn& F, int p, int q, int samples,
                                   std::uint64_t seed, Tolerance tol = {});

}  // namespace elcp
