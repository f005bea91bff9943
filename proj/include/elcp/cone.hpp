// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "elcp/types.hpp"

namespace elcp {

// Extended Lorentz cone L = { (x,u) : x_i >= ||u|| for every i } and its
// dual M = L* = { (x,u) : x >= 0, <x,e> >= ||u|| }. L is subdual (L ⊆ M)
// and self-dual exactly when p = 1.

// min_i x_i - ||u||. Negative means (x,u) is outside L by that margin.
double lorentz_slack(const Point& z);

bool contains_L(const Point& z, Tolerance tol = {});
bool contains_M(const Point& z, Tolerance tol = {});

// Partial order induced by L: a <= b  iff  b - a ∈ L.
bool leq_order(const Point& a, const Point& b, Tolerance tol = {});

// Generator lists for q = 1, where both L and M are polyhedral.
// Columns are generators in R^{p+1}, u coordinate last.
//   p = 1:  L and M are both generated by (1,1), (1,-1).
//   p > 1:  L by (e,1), (e,-1), (e_1,0), ..., (e_p,0);  M by (e_i,±1).
struct GeneratorsQ1 {
  Matrix cone;  // p+2 columns (2 when p = 1)
  Matrix dual;  // 2p columns
};
GeneratorsQ1 generators_q1(int p);

// Dual generators of a simplicial cone: columns of (U^T)^{-1}. Throws when
// U is numerically singular (condition number above cond_limit).
Matrix dual_simplicial(const Matrix& U, double cond_limit = 1e12);

// Description of the constraint cone C (the u block). The solver's full
// cone is always the product R^p x C.
class ConeSpec {
 public:
  enum class Kind { Orthant, SecondOrder, Polyhedral, Hyperplane, Product };

  static ConeSpec orthant(int m);
  // Layout (v_1..v_{m-1}, t): the scalar component is stored last.
  static ConeSpec second_order(int m);
  // { v : <n_j, v> <= 0 for every row n_j }. At most 20 rows.
  static ConeSpec polyhedral_halfspaces(Matrix normals);
  // cone(g_1..g_k), columns are generators. At most 20 columns.
  static ConeSpec polyhedral_generators(Matrix generators);
  // The hyperplane through 0 with unit normal a (a degenerate cone).
  static ConeSpec hyperplane(Vector unit_normal);
  static ConeSpec product(int head_dim, ConeSpec inner);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }

  bool contains(const Vector& v, Tolerance tol = {}) const;
  bool dual_contains(const Vector& v, Tolerance tol = {}) const;

  bool by_halfspaces() const { return by_halfspaces_; }
  const Matrix& halfspaces() const { return halfspaces_; }
  const Matrix& generators() const { return generators_; }
  // Generators of the dual cone; polyhedral halfspace form only.
  Matrix dual_generators() const;
  const Vector& normal() const { return normal_; }
  int head_dim() const { return head_dim_; }
  const ConeSpec& inner() const { return *inner_; }

  std::string kind_name() const;

 private:
  ConeSpec() = default;

  Kind kind_ = Kind::Orthant;
  int dim_ = 0;
  Matrix halfspaces_;   // rows are outward normals
  Matrix generators_;   // columns are generators
  bool by_halfspaces_ = false;
  Vector normal_;
  int head_dim_ = 0;
  std::shared_ptr<const ConeSpec> inner_;
};

}  // namespace elcp
