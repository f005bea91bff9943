// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace elcp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Absolute slack allowed on each defining inequality of a membership test.
struct Tolerance {
  double eps = 1e-9;
};

// A point of R^p x R^q. The x block is ordered by the extended Lorentz
// cone, the u block lives in the constraint cone C.
struct Point {
  Vector x;
  Vector u;

  Point() = default;
  Point(Vector x_, Vector u_) : x(std::move(x_)), u(std::move(u_)) {}

  int p() const { return static_cast<int>(x.size()); }
  int q() const { return static_cast<int>(u.size()); }

  Vector flat() const {
    Vector z(x.size() + u.size());
    z << x, u;
    return z;
  }

  static Point from_flat(const Vector& z, int p, int q) {
    if (z.size() != p + q) throw std::invalid_argument("point size does not match p + q");
    return Point(z.head(p), z.tail(q));
  }

  static Point zero(int p, int q) { return Point(Vector::Zero(p), Vector::Zero(q)); }

  bool all_finite() const { return x.allFinite() && u.allFinite(); }
};

inline Point operator+(const Point& a, const Point& b) { return Point(a.x + b.x, a.u + b.u); }
inline Point operator-(const Point& a, const Point& b) { return Point(a.x - b.x, a.u - b.u); }
inline Point operator*(double t, const Point& a) { return Point(t * a.x, t * a.u); }

inline double inf_norm(const Point& a) {
  double nx = a.x.size() ? a.x.lpNorm<Eigen::Infinity>() : 0.0;
  double nu = a.u.size() ? a.u.lpNorm<Eigen::Infinity>() : 0.0;
  return std::max(nx, nu);
}

// Deterministic sampling. Distributions are built from the raw mt19937_64
// stream directly so seeded runs reproduce across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  double exponential() {  // rate 1
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return -std::log(u);
  }

  Vector normal_vector(int n) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = normal();
    return v;
  }

  Vector unit_vector(int n) {
    Vector v = normal_vector(n);
    double s = v.norm();
    while (s < 1e-12) {
      v = normal_vector(n);
      s = v.norm();
    }
    return v / s;
  }

  int index(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace elcp
