// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#include "elcp/cone.hpp"

#include <Eigen/SVD>
#include <sstream>

#include "elcp/projection.hpp"

namespace elcp {

static void check_pq(const Point& z) {
  if (z.p() < 1 || z.q() < 1)
    throw std::invalid_argument("extended Lorentz cone needs p >= 1 and q >= 1");
}

double lorentz_slack(const Point& z) {
  check_pq(z);
  return z.x.minCoeff() - z.u.norm();
}

bool contains_L(const Point& z, Tolerance tol) { return lorentz_slack(z) >= -tol.eps; }

bool contains_M(const Point& z, Tolerance tol) {
  check_pq(z);
  return z.x.minCoeff() >= -tol.eps && z.x.sum() - z.u.norm() >= -tol.eps;
}

bool leq_order(const Point& a, const Point& b, Tolerance tol) {
  if (a.p() != b.p() || a.q() != b.q())
    throw std::invalid_argument("order comparison needs matching dimensions");
  return contains_L(b - a, tol);
}

GeneratorsQ1 generators_q1(int p) {
  if (p < 1) throw std::invalid_argument("generators_q1 needs p >= 1");
  GeneratorsQ1 g;
  if (p == 1) {
    g.cone.resize(2, 2);
    g.cone << 1, 1, 1, -1;
    g.dual = g.cone;
    return g;
  }
  g.cone = Matrix::Zero(p + 1, p + 2);
  g.cone.block(0, 0, p, 2).setOnes();
  g.cone(p, 0) = 1;
  g.cone(p, 1) = -1;
  for (int i = 0; i < p; ++i) g.cone(i, 2 + i) = 1;
  g.dual = Matrix::Zero(p + 1, 2 * p);
  for (int i = 0; i < p; ++i) {
    g.dual(i, 2 * i) = 1;
    g.dual(p, 2 * i) = 1;
    g.dual(i, 2 * i + 1) = 1;
    g.dual(p, 2 * i + 1) = -1;
  }
  return g;
}

Matrix dual_simplicial(const Matrix& U, double cond_limit) {
  if (U.rows() != U.cols() || U.rows() < 1)
    throw std::invalid_argument("dual_simplicial needs a square nonempty matrix");
  Eigen::JacobiSVD<Matrix> svd(U);
  double smin = svd.singularValues().minCoeff();
  double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0 || smax / smin > cond_limit) {
    std::ostringstream os;
    os << "simplicial basis is numerically singular (cond > " << cond_limit << ")";
    throw std::runtime_error(os.str());
  }
  Matrix ut = U.transpose();
  return ut.fullPivLu().inverse();
}

// ---------------------------------------------------------------------------
// ConeSpec

static constexpr int kMaxFacets = 20;

ConeSpec ConeSpec::orthant(int m) {
  if (m < 1) throw std::invalid_argument("orthant cone needs dimension >= 1");
  ConeSpec c;
  c.kind_ = Kind::Orthant;
  c.dim_ = m;
  return c;
}

ConeSpec ConeSpec::second_order(int m) {
  if (m < 2) throw std::invalid_argument("second-order cone needs dimension >= 2");
  ConeSpec c;
  c.kind_ = Kind::SecondOrder;
  c.dim_ = m;
  return c;
}

ConeSpec ConeSpec::polyhedral_halfspaces(Matrix normals) {
  if (normals.rows() < 1 || normals.cols() < 1)
    throw std::invalid_argument("polyhedral cone needs a nonempty halfspace list");
  if (normals.rows() > kMaxFacets)
    throw std::invalid_argument("polyhedral cone limited to 20 halfspaces");
  for (int j = 0; j < normals.rows(); ++j)
    if (normals.row(j).norm() == 0.0)
      throw std::invalid_argument("halfspace normal " + std::to_string(j) + " is zero");
  ConeSpec c;
  c.kind_ = Kind::Polyhedral;
  c.dim_ = static_cast<int>(normals.cols());
  c.halfspaces_ = std::move(normals);
  c.by_halfspaces_ = true;
  return c;
}

ConeSpec ConeSpec::polyhedral_generators(Matrix generators) {
  if (generators.rows() < 1 || generators.cols() < 1)
    throw std::invalid_argument("polyhedral cone needs a nonempty generator list");
  if (generators.cols() > kMaxFacets)
    throw std::invalid_argument("polyhedral cone limited to 20 generators");
  for (int j = 0; j < generators.cols(); ++j)
    if (generators.col(j).norm() == 0.0)
      throw std::invalid_argument("generator " + std::to_string(j) + " is zero");
  ConeSpec c;
  c.kind_ = Kind::Polyhedral;
  c.dim_ = static_cast<int>(generators.rows());
  c.generators_ = std::move(generators);
  c.by_halfspaces_ = false;
  return c;
}

ConeSpec ConeSpec::hyperplane(Vector unit_normal) {
  if (unit_normal.size() < 1) throw std::invalid_argument("hyperplane needs a nonempty normal");
  if (std::abs(unit_normal.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("hyperplane normal must be unit within 1e-12");
  ConeSpec c;
  c.kind_ = Kind::Hyperplane;
  c.dim_ = static_cast<int>(unit_normal.size());
  c.normal_ = std::move(unit_normal);
  return c;
}

ConeSpec ConeSpec::product(int head_dim, ConeSpec inner) {
  if (head_dim < 1) throw std::invalid_argument("product cone needs head dimension >= 1");
  ConeSpec c;
  c.kind_ = Kind::Product;
  c.head_dim_ = head_dim;
  c.dim_ = head_dim + inner.dim();
  c.inner_ = std::make_shared<const ConeSpec>(std::move(inner));
  return c;
}

std::string ConeSpec::kind_name() const {
  switch (kind_) {
    case Kind::Orthant: return "orthant";
    case Kind::SecondOrder: return "second_order";
    case Kind::Polyhedral: return "polyhedral";
    case Kind::Hyperplane: return "hyperplane";
    case Kind::Product: return "product";
  }
  return "?";
}

Matrix ConeSpec::dual_generators() const {
  if (kind_ != Kind::Polyhedral || !by_halfspaces_)
    throw std::invalid_argument("dual generators are available for halfspace-form polyhedral cones");
  return -halfspaces_.transpose();
}

static void check_dim(const ConeSpec& c, const Vector& v) {
  if (v.size() != c.dim())
    throw std::invalid_argument("vector size " + std::to_string(v.size()) +
                                " does not match cone dimension " + std::to_string(c.dim()));
}

bool ConeSpec::contains(const Vector& v, Tolerance tol) const {
  check_dim(*this, v);
  switch (kind_) {
    case Kind::Orthant:
      return v.minCoeff() >= -tol.eps;
    case Kind::SecondOrder:
      return v.head(dim_ - 1).norm() <= v(dim_ - 1) + tol.eps;
    case Kind::Polyhedral:
      if (by_halfspaces_) return (halfspaces_ * v).maxCoeff() <= tol.eps;
      return project_generated(generators_, v, tol).distance <= tol.eps;
    case Kind::Hyperplane:
      return std::abs(normal_.dot(v)) <= tol.eps;
    case Kind::Product:
      return inner_->contains(v.tail(dim_ - head_dim_), tol);
  }
  return false;
}

bool ConeSpec::dual_contains(const Vector& v, Tolerance tol) const {
  check_dim(*this, v);
  switch (kind_) {
    case Kind::Orthant:
      return v.minCoeff() >= -tol.eps;
    case Kind::SecondOrder:  // self-dual
      return contains(v, tol);
    case Kind::Polyhedral:
      if (by_halfspaces_)  // dual = cone(-n_j)
        return project_generated(dual_generators(), v, tol).distance <= tol.eps;
      // dual of cone(G) = { y : G^T y >= 0 }
      return (generators_.transpose() * v).minCoeff() >= -tol.eps;
    case Kind::Hyperplane:  // dual of the subspace is its normal line
      return (v - normal_ * normal_.dot(v)).lpNorm<Eigen::Infinity>() <= tol.eps;
    case Kind::Product:  // dual = {0}^p x C*
      return v.head(head_dim_).lpNorm<Eigen::Infinity>() <= tol.eps &&
             inner_->dual_contains(v.tail(dim_ - head_dim_), tol);
  }
  return false;
}

}  // namespace elcp
