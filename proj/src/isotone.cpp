// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#include "elcp/isotone.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace elcp {

// ---------------------------------------------------------------------------
// ScalarFn1D

ScalarFn1D ScalarFn1D::affine(double slope, double intercept) {
  if (!(slope >= 0.0)) throw std::invalid_argument("affine scalar function needs slope >= 0");
  ScalarFn1D f;
  f.kind_ = Kind::Affine;
  f.slope_ = slope;
  f.intercept_ = intercept;
  return f;
}

ScalarFn1D ScalarFn1D::exponential() {
  ScalarFn1D f;
  f.kind_ = Kind::Exp;
  return f;
}

ScalarFn1D ScalarFn1D::arctangent() {
  ScalarFn1D f;
  f.kind_ = Kind::Arctan;
  return f;
}

ScalarFn1D ScalarFn1D::piecewise_linear(std::vector<double> t, std::vector<double> y) {
  if (t.size() != y.size() || t.size() < 2)
    throw std::invalid_argument("piecewise-linear function needs >= 2 knots with matching values");
  for (size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw std::invalid_argument("piecewise-linear knots must be strictly increasing");
    if (!(y[i] >= y[i - 1])) throw std::invalid_argument("piecewise-linear values must be nondecreasing");
  }
  ScalarFn1D f;
  f.kind_ = Kind::PiecewiseLinear;
  f.t_ = std::move(t);
  f.y_ = std::move(y);
  return f;
}

ScalarFn1D ScalarFn1D::compose(ScalarFn1D outer, ScalarFn1D inner) {
  ScalarFn1D f;
  f.kind_ = Kind::Compose;
  f.outer_ = std::make_shared<const ScalarFn1D>(std::move(outer));
  f.inner_ = std::make_shared<const ScalarFn1D>(std::move(inner));
  return f;
}

double ScalarFn1D::operator()(double t) const {
  switch (kind_) {
    case Kind::Affine: return slope_ * t + intercept_;
    case Kind::Exp: return std::exp(t);
    case Kind::Arctan: return std::atan(t);
    case Kind::PiecewiseLinear: {
      const size_t n = t_.size();
      if (t <= t_.front()) {
        double s = (y_[1] - y_[0]) / (t_[1] - t_[0]);
        return y_[0] + s * (t - t_[0]);
      }
      if (t >= t_.back()) {
        double s = (y_[n - 1] - y_[n - 2]) / (t_[n - 1] - t_[n - 2]);
        return y_[n - 1] + s * (t - t_[n - 1]);
      }
      size_t hi = std::upper_bound(t_.begin(), t_.end(), t) - t_.begin();
      double s = (y_[hi] - y_[hi - 1]) / (t_[hi] - t_[hi - 1]);
      return y_[hi - 1] + s * (t - t_[hi - 1]);
    }
    case Kind::Compose: return (*outer_)((*inner_)(t));
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// MonotoneScalarFn

bool validate_lorentz_affine(const Vector& d, double beta) {
  if (d.size() < 1) return false;
  return d.minCoeff() >= 0.0 && std::abs(beta) <= d.sum();
}

MonotoneScalarFn MonotoneScalarFn::lorentz_affine(Vector d, double beta, double gamma) {
  if (!validate_lorentz_affine(d, beta)) {
    std::ostringstream os;
    os << "lorentz_affine is not monotone: needs d >= 0 and |beta| <= sum(d), got |"
       << beta << "| vs " << (d.size() ? d.sum() : 0.0);
    throw std::invalid_argument(os.str());
  }
  MonotoneScalarFn f;
  f.kind_ = Kind::LorentzAffine;
  f.d_ = std::move(d);
  f.beta_ = beta;
  f.gamma_ = gamma;
  return f;
}

MonotoneScalarFn MonotoneScalarFn::separable_simplicial(Matrix basis, std::vector<ScalarFn1D> g,
                                                        int p, int q) {
  const int m = p + q;
  if (p < 1 || q < 1) throw std::invalid_argument("separable_simplicial needs p, q >= 1");
  if (basis.rows() != m || basis.cols() != m)
    throw std::invalid_argument("separable_simplicial basis must be (p+q) x (p+q)");
  if (static_cast<int>(g.size()) != m)
    throw std::invalid_argument("separable_simplicial needs one scalar function per basis column");
  Matrix dual = dual_simplicial(basis);
  for (int j = 0; j < m; ++j) {
    Point vj = Point::from_flat(dual.col(j), p, q);
    if (!contains_M(vj))
      throw std::invalid_argument("simplicial cone does not contain the order cone: dual generator " +
                                  std::to_string(j) + " is outside the dual cone");
  }
  MonotoneScalarFn f;
  f.kind_ = Kind::SeparableSimplicial;
  f.basis_ = std::move(basis);
  f.basis_lu_.compute(f.basis_);
  f.g_ = std::move(g);
  return f;
}

MonotoneScalarFn MonotoneScalarFn::composed(MonotoneScalarFn inner, ScalarFn1D psi) {
  MonotoneScalarFn f;
  f.kind_ = Kind::Composed;
  f.inner_ = std::make_shared<const MonotoneScalarFn>(std::move(inner));
  f.psi_ = std::make_shared<const ScalarFn1D>(std::move(psi));
  return f;
}

double MonotoneScalarFn::eval(const Point& z) const {
  switch (kind_) {
    case Kind::LorentzAffine: {
      if (z.p() != d_.size())
        throw std::invalid_argument("lorentz_affine direction size does not match p");
      return d_.dot(z.x) + beta_ * z.u.norm() + gamma_;
    }
    case Kind::SeparableSimplicial: {
      Vector lambda = basis_lu_.solve(z.flat());
      double s = 0.0;
      for (size_t i = 0; i < g_.size(); ++i) s += g_[i](lambda(static_cast<int>(i)));
      return s;
    }
    case Kind::Composed:
      return (*psi_)(inner_->eval(z));
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// IsotoneCombination

IsotoneCombination::IsotoneCombination(int p, int q, std::vector<CombinationTerm> terms,
                                       Tolerance tol)
    : p_(p), q_(q), terms_(std::move(terms)) {
  if (p_ < 1 || q_ < 1) throw std::invalid_argument("combination needs p, q >= 1");
  if (terms_.empty()) throw std::invalid_argument("combination needs at least one term");
  for (size_t i = 0; i < terms_.size(); ++i) {
    const Point& w = terms_[i].weight;
    if (w.p() != p_ || w.q() != q_)
      throw std::invalid_argument("weight " + std::to_string(i) + " has wrong dimensions");
    if (!contains_L(w, tol)) {
      std::ostringstream os;
      os << "weight " << i << " is outside the extended Lorentz cone: min(x) = "
         << w.x.minCoeff() << " < ||u|| = " << w.u.norm();
      throw std::invalid_argument(os.str());
    }
  }
}

Point IsotoneCombination::eval(const Point& z) const {
  Point out = Point::zero(p_, q_);
  for (const auto& term : terms_) {
    const double f = term.fn.eval(z);
    out.x += f * term.weight.x;
    out.u += f * term.weight.u;
  }
  return out;
}

MapFn build_combination(IsotoneCombination combination) {
  return [comb = std::move(combination)](const Point& z) { return comb.eval(z); };
}

// ---------------------------------------------------------------------------
// Hyperplane classification

bool hyperplane_normal_is_patterned(const Vector& a, const Vector& u, Tolerance tol) {
  if (a.size() < 1 || u.size() < 1)
    throw std::invalid_argument("hyperplane normal needs nonempty blocks");
  double norm2 = a.squaredNorm() + u.squaredNorm();
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12)
    throw std::invalid_argument("hyperplane normal must be unit within 1e-12");

  if (a.lpNorm<Eigen::Infinity>() <= tol.eps) return true;
  if (u.lpNorm<Eigen::Infinity>() > tol.eps) return false;
  const double h = std::sqrt(2.0) / 2.0;
  int plus = 0, minus = 0, zero = 0;
  for (int i = 0; i < a.size(); ++i) {
    if (std::abs(a(i) - h) <= tol.eps) ++plus;
    else if (std::abs(a(i) + h) <= tol.eps) ++minus;
    else if (std::abs(a(i)) <= tol.eps) ++zero;
  }
  return plus == 1 && minus == 1 && plus + minus + zero == a.size();
}

bool classify_hyperplane(const Vector& a, const Vector& u, Tolerance tol) {
  if (a.size() <= 1 || u.size() <= 1)
    throw std::invalid_argument("hyperplane classification needs p > 1 and q > 1");
  return hyperplane_normal_is_patterned(a, u, tol);
}

bool lemma2_condition(const Vector& a, const Matrix& cone_generators,
                      const Matrix& dual_generators, Tolerance tol) {
  if (cone_generators.rows() != a.size() || dual_generators.rows() != a.size())
    throw std::invalid_argument("generator dimension does not match normal size");
  for (int i = 0; i < cone_generators.cols(); ++i) {
    const Vector x = cone_generators.col(i);
    const double ax = a.dot(x);
    for (int j = 0; j < dual_generators.cols(); ++j) {
      const Vector y = dual_generators.col(j);
      if (x.dot(y) < ax * a.dot(y) - tol.eps) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sampling

Point random_l_member(Rng& rng, int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("sampler needs p, q >= 1");
  const double t = rng.exponential();
  if (q == 1) {
    GeneratorsQ1 gens = generators_q1(p);
    const int k = static_cast<int>(gens.cone.cols());
    Vector w(k);
    for (int i = 0; i < k; ++i) w(i) = rng.uniform();
    w /= w.sum();
    Vector z = t * (gens.cone * w);
    return Point::from_flat(z, p, 1);
  }
  const double r = t * std::pow(rng.uniform(), 1.0 / q);
  return Point(Vector::Constant(p, t), r * rng.unit_vector(q));
}

Point random_l_member_mixture(Rng& rng, int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("sampler needs p, q >= 1");
  int branch = rng.index(3);
  if (branch == 1 && p == 1) branch = 0;
  Point w;
  switch (branch) {
    case 0:  // extreme ray (e, dir), ||dir|| = 1
      w = Point(Vector::Ones(p), rng.unit_vector(q));
      break;
    case 1:  // face ray (e_i, 0)
      w = Point(Vector::Unit(p, rng.index(p)), Vector::Zero(q));
      break;
    default: {  // interior (e, u) with ||u|| <= 1
      const double r = std::pow(rng.uniform(), 1.0 / q) * rng.uniform();
      w = Point(Vector::Ones(p), r * rng.unit_vector(q));
      break;
    }
  }
  const double n = std::sqrt(w.x.squaredNorm() + w.u.squaredNorm());
  return (1.0 / n) * w;
}

IsotonicityReport test_isotonicity(const MapFn& F, int p, int q, int samples,
                                   std::uint64_t seed, Tolerance tol) {
  if (samples < 1) throw std::invalid_argument("test_isotonicity needs samples >= 1");
  Rng rng(seed);
  IsotonicityReport report;
  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    Point z1 = Point(rng.normal_vector(p), rng.normal_vector(q));
    Point z2 = z1 + random_l_member(rng, p, q);
    Point diff = F(z2) - F(z1);
    double slack = lorentz_slack(diff);
    if (slack < -tol.eps) {
      ++report.violations;
      if (report.witnesses.size() < 8)
        report.witnesses.push_back({z1, z2, slack});
    }
  }
  return report;
}

}  // namespace elcp
