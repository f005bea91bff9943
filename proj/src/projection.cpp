// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#include "elcp/projection.hpp"

#include <Eigen/QR>
#include <algorithm>

namespace elcp {

namespace {

std::vector<int> mask_indices(unsigned mask, int k) {
  std::vector<int> idx;
  for (int j = 0; j < k; ++j)
    if (mask & (1u << j)) idx.push_back(j);
  return idx;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Best {
  bool found = false;
  double dist = 0.0;
  Vector point;
  std::vector<int> subset;

  void offer(double d, const Vector& pt, const std::vector<int>& idx, double tie_tol) {
    if (!found || d < dist - tie_tol || (std::abs(d - dist) <= tie_tol && lex_less(idx, subset))) {
      found = true;
      dist = d;
      point = pt;
      subset = idx;
    }
  }
};

}  // namespace

ProjectionResult project_polyhedral(const Matrix& normals, const Vector& v, Tolerance tol) {
  (void)tol;
  const int k = static_cast<int>(normals.rows());
  const int m = static_cast<int>(normals.cols());
  if (v.size() != m) throw std::invalid_argument("projection input size does not match cone dimension");
  if (k > 20) throw std::invalid_argument("polyhedral projection limited to 20 halfspaces");

  // Candidate acceptance has to be far tighter than membership eps, else the
  // identity candidate wins near the boundary and exact face landings
  // (coordinates that should come out exactly 0) are lost.
  double row_scale = 1.0;
  for (int j = 0; j < k; ++j)
    row_scale = std::max(row_scale, normals.row(j).lpNorm<Eigen::Infinity>());
  const double feas = 1e-12 * std::max(1.0, v.lpNorm<Eigen::Infinity>()) * row_scale;
  const double tie = 1e-12 * (1.0 + v.norm());

  Best best;
  const int max_size = std::min(k, m);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> idx = mask_indices(mask, k);
    if (static_cast<int>(idx.size()) > max_size) continue;

    Vector cand;
    if (idx.empty()) {
      cand = v;
    } else {
      Matrix at(m, idx.size());  // columns span the normal space of the face
      for (size_t c = 0; c < idx.size(); ++c) at.col(c) = normals.row(idx[c]).transpose();
      Eigen::ColPivHouseholderQR<Matrix> qr(at);
      if (qr.rank() < static_cast<int>(idx.size())) continue;
      Matrix thin_q = qr.householderQ() * Matrix::Identity(m, static_cast<int>(idx.size()));
      cand = v - thin_q * (thin_q.transpose() * v);
    }
    if ((normals * cand).maxCoeff() > feas) continue;
    best.offer((v - cand).norm(), cand, idx, tie);
  }
  if (!best.found) throw std::runtime_error("polyhedral projection enumeration found no candidate");
  return ProjectionResult{best.point, best.subset, best.dist};
}

ProjectionResult project_generated(const Matrix& generators, const Vector& v, Tolerance tol) {
  (void)tol;
  const int k = static_cast<int>(generators.cols());
  const int m = static_cast<int>(generators.rows());
  if (v.size() != m) throw std::invalid_argument("projection input size does not match cone dimension");
  if (k > 20) throw std::invalid_argument("generated-cone projection limited to 20 generators");

  const double coef_tol = 1e-12 * (1.0 + v.lpNorm<Eigen::Infinity>());
  const double tie = 1e-12 * (1.0 + v.norm());

  Best best;
  const int max_size = std::min(k, m);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> idx = mask_indices(mask, k);
    if (static_cast<int>(idx.size()) > max_size) continue;

    Vector cand;
    if (idx.empty()) {
      cand = Vector::Zero(m);
    } else {
      Matrix gb(m, idx.size());
      for (size_t c = 0; c < idx.size(); ++c) gb.col(c) = generators.col(idx[c]);
      Eigen::ColPivHouseholderQR<Matrix> qr(gb);
      if (qr.rank() < static_cast<int>(idx.size())) continue;
      Vector coef = qr.solve(v);
      double cmin = coef.minCoeff();
      double cscale = std::max(1.0, coef.lpNorm<Eigen::Infinity>());
      if (cmin < -coef_tol * cscale) continue;
      cand = gb * coef;
    }
    best.offer((v - cand).norm(), cand, idx, tie);
  }
  if (!best.found) throw std::runtime_error("generated-cone projection enumeration found no candidate");
  return ProjectionResult{best.point, best.subset, best.dist};
}

ProjectionResult project(const ConeSpec& spec, const Vector& v, Tolerance tol) {
  if (v.size() != spec.dim())
    throw std::invalid_argument("projection input size " + std::to_string(v.size()) +
                                " does not match cone dimension " + std::to_string(spec.dim()));
  switch (spec.kind()) {
    case ConeSpec::Kind::Orthant: {
      Vector p = v.cwiseMax(0.0);
      return ProjectionResult{p, {}, (v - p).norm()};
    }
    case ConeSpec::Kind::SecondOrder: {
      const int m = spec.dim();
      const double a = v.head(m - 1).norm();
      const double t = v(m - 1);
      if (a <= t) return ProjectionResult{v, {}, 0.0};
      if (a <= -t) return ProjectionResult{Vector::Zero(m), {}, v.norm()};
      // a > |t| here, so a is bounded away from 0 and the direction v/a exists
      const double c = 0.5 * (t + a);
      Vector p(m);
      p.head(m - 1) = v.head(m - 1) * (c / a);
      p(m - 1) = c;
      return ProjectionResult{p, {}, (v - p).norm()};
    }
    case ConeSpec::Kind::Polyhedral:
      return spec.by_halfspaces() ? project_polyhedral(spec.halfspaces(), v, tol)
                                  : project_generated(spec.generators(), v, tol);
    case ConeSpec::Kind::Hyperplane: {
      Vector p = v - spec.normal() * spec.normal().dot(v);
      return ProjectionResult{p, {}, (v - p).norm()};
    }
    case ConeSpec::Kind::Product: {
      const int h = spec.head_dim();
      ProjectionResult inner = project(spec.inner(), v.tail(spec.dim() - h), tol);
      Vector p(spec.dim());
      p.head(h) = v.head(h);
      p.tail(spec.dim() - h) = inner.point;
      return ProjectionResult{p, {}, inner.distance};
    }
  }
  throw std::logic_error("unreachable cone kind");
}

Point project_product(const Vector& x, const Vector& u, const ConeSpec& inner, Tolerance tol) {
  return Point(x, project(inner, u, tol).point);
}

Vector translate_project(const Vector& y, const ConeSpec& spec, const Vector& v, Tolerance tol) {
  if (y.size() != spec.dim()) throw std::invalid_argument("translation size does not match cone dimension");
  return y + project(spec, v - y, tol).point;
}

}  // namespace elcp
