// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#include "doctest.h"

#include "elcp/cone.hpp"

namespace elcp {
namespace {

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector vec3(double a, double b, double c) {
  Vector v(3);
  v << a, b, c;
  return v;
}

Point random_point(Rng& rng, int p, int q, double scale) {
  return Point(scale * rng.normal_vector(p), scale * rng.normal_vector(q));
}

// Exact members: x = t * ones + nonneg noise, ||u|| <= min(x).
Point random_member(Rng& rng, int p, int q) {
  Vector x = rng.normal_vector(p).cwiseAbs();
  Vector u = rng.normal_vector(q);
  const double cap = x.minCoeff();
  u *= rng.uniform() * cap / std::max(u.norm(), 1e-300);
  return Point(x, u);
}

TEST_CASE("slack and membership in the order cone") {
  CHECK(lorentz_slack(Point(vec2(1, 1), vec2(1, 0))) == doctest::Approx(0.0));
  CHECK(lorentz_slack(Point(vec2(1, 2), vec2(0, 1.5))) == doctest::Approx(-0.5));
  CHECK(lorentz_slack(Point(vec2(3, 5), vec2(3, 4))) == doctest::Approx(-2.0));

  CHECK(contains_L(Point(vec2(1, 1), vec2(1, 0))));
  CHECK(contains_L(Point(vec2(5, 3), vec2(0, 3))));
  CHECK_FALSE(contains_L(Point(vec2(1, 2), vec2(0, 1.5))));
  CHECK_FALSE(contains_L(Point(vec2(-1, 2), vec2(0, 0))));
}

TEST_CASE("membership in the dual cone") {
  CHECK(contains_M(Point(vec2(1, 0.2), vec2(0, 1.1))));
  CHECK(contains_M(Point(vec2(0, 0), vec2(0, 0))));
  CHECK_FALSE(contains_M(Point(vec2(1, -0.1), vec2(0, 0.1))));
  CHECK_FALSE(contains_M(Point(vec2(0.5, 0.4), vec2(0, 1.0))));
}

TEST_CASE("the order cone sits inside its dual; they differ for p > 1") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const Point z = random_member(rng, 2, 2);
    CHECK(contains_L(z));
    CHECK(contains_M(z));
  }
  // In the dual but not in the cone: componentwise slack fails, sum passes.
  const Point gap(vec2(1, 0), vec2(0.9, 0));
  CHECK(contains_M(gap));
  CHECK_FALSE(contains_L(gap));
}

TEST_CASE("cone and dual coincide when the head is one-dimensional") {
  Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const Point z = random_point(rng, 1, 2, 1.5);
    CHECK(contains_L(z) == contains_M(z));
  }
}

TEST_CASE("order relation is reflexive, antisymmetric, transitive") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Point a = random_point(rng, 2, 2, 2.0);
    CHECK(leq_order(a, a));

    const Point b = a + random_member(rng, 2, 2);
    const Point c = b + random_member(rng, 2, 2);
    CHECK(leq_order(a, b));
    CHECK(leq_order(b, c));
    CHECK(leq_order(a, c));

    if (leq_order(b, a)) {
      CHECK(inf_norm(a - b) <= 1e-9 * std::max(1.0, inf_norm(a)));
    }
  }
}

TEST_CASE("order relation survives translation and positive scaling") {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Point a = random_point(rng, 2, 2, 2.0);
    const Point b = a + random_member(rng, 2, 2);
    const Point w = random_point(rng, 2, 2, 3.0);
    const double t = rng.uniform(0.0, 4.0);
    CHECK(leq_order(t * a + w, t * b + w));
  }
}

TEST_CASE("generator counts for the one-dimensional tail") {
  const GeneratorsQ1 g1 = generators_q1(1);
  CHECK(g1.cone.cols() == 2);
  CHECK(g1.dual.cols() == 2);

  const GeneratorsQ1 g2 = generators_q1(2);
  CHECK(g2.cone.cols() == 4);
  CHECK(g2.dual.cols() == 4);

  const GeneratorsQ1 g3 = generators_q1(3);
  CHECK(g3.cone.cols() == 5);
  CHECK(g3.dual.cols() == 6);

  CHECK_THROWS_AS(generators_q1(0), std::invalid_argument);
}

TEST_CASE("generators pass their own membership tests and pair nonnegatively") {
  for (int p : {1, 2, 3}) {
    const GeneratorsQ1 g = generators_q1(p);
    for (int j = 0; j < g.cone.cols(); ++j) {
      const Vector c = g.cone.col(j);
      CHECK(contains_L(Point(c.head(p), c.tail(1))));
    }
    for (int j = 0; j < g.dual.cols(); ++j) {
      const Vector d = g.dual.col(j);
      CHECK(contains_M(Point(d.head(p), d.tail(1))));
    }
    for (int a = 0; a < g.cone.cols(); ++a) {
      for (int b = 0; b < g.dual.cols(); ++b) {
        CHECK(g.cone.col(a).dot(g.dual.col(b)) >= 0.0);
      }
    }
  }
}

TEST_CASE("generator inner products decide membership exactly for q = 1") {
  for (int p : {1, 2, 3}) {
    const GeneratorsQ1 g = generators_q1(p);
    Rng rng(100 + p);
    for (int i = 0; i < 1000; ++i) {
      const Point z = random_point(rng, p, 1, 1.5);
      const Vector f = z.flat();
      const bool in_l = (g.dual.transpose() * f).minCoeff() >= -1e-9;
      const bool in_m = (g.cone.transpose() * f).minCoeff() >= -1e-9;
      CHECK(in_l == contains_L(z));
      CHECK(in_m == contains_M(z));
    }
  }
}

TEST_CASE("dual basis of a simplicial cone is biorthogonal") {
  Matrix u(3, 3);
  u << 1, 1, 1, 0, 1, 1, 0, 0, 1;
  const Matrix v = dual_simplicial(u);
  const Matrix g = u.transpose() * v;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(g(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    }
  }
  Matrix s(2, 2);
  s << 1, 1, 1, 1;
  CHECK_THROWS_AS(dual_simplicial(s), std::runtime_error);
}

TEST_CASE("cone factories expose kinds, dimensions, and sanity checks") {
  CHECK(ConeSpec::orthant(3).dim() == 3);
  CHECK(ConeSpec::orthant(3).kind() == ConeSpec::Kind::Orthant);
  CHECK(ConeSpec::second_order(4).dim() == 4);
  CHECK(ConeSpec::hyperplane(vec2(1, 0)).dim() == 2);

  Matrix n(2, 2);
  n << 1, -1, -1, 0;
  const ConeSpec wedge = ConeSpec::polyhedral_halfspaces(n);
  CHECK(wedge.dim() == 2);
  CHECK(wedge.by_halfspaces());

  const ConeSpec prod = ConeSpec::product(2, wedge);
  CHECK(prod.dim() == 4);
  CHECK(prod.head_dim() == 2);
  CHECK(prod.kind_name() == std::string("product"));

  CHECK_THROWS_AS(ConeSpec::orthant(0), std::invalid_argument);
  CHECK_THROWS_AS(ConeSpec::second_order(1), std::invalid_argument);
  CHECK_THROWS_WITH_AS(ConeSpec::hyperplane(vec2(1, 1)),
                       "hyperplane normal must be unit within 1e-12", std::invalid_argument);
  CHECK_THROWS_AS(ConeSpec::polyhedral_halfspaces(Matrix(0, 2)), std::invalid_argument);
  Matrix zero_row(1, 2);
  zero_row << 0, 0;
  CHECK_THROWS_AS(ConeSpec::polyhedral_halfspaces(zero_row), std::invalid_argument);
  CHECK_THROWS_AS(ConeSpec::polyhedral_halfspaces(Matrix::Identity(21, 21)),
                  std::invalid_argument);
}

TEST_CASE("halfspace and generator forms of the wedge agree") {
  Matrix n(2, 2);
  n << 1, -1, -1, 0;
  Matrix g(2, 2);
  g.col(0) = vec2(1, 1);
  g.col(1) = vec2(0, 1);
  const ConeSpec a = ConeSpec::polyhedral_halfspaces(n);
  const ConeSpec b = ConeSpec::polyhedral_generators(g);
  CHECK_FALSE(b.by_halfspaces());
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const Vector v = 2.0 * rng.normal_vector(2);
    CHECK(a.contains(v) == b.contains(v));
    CHECK(a.dual_contains(v) == b.dual_contains(v));
  }
}

TEST_CASE("dual of the wedge contains exactly the documented generators") {
  Matrix n(2, 2);
  n << 1, -1, -1, 0;
  const ConeSpec wedge = ConeSpec::polyhedral_halfspaces(n);
  CHECK(wedge.dual_contains(vec2(1, 0)));
  CHECK(wedge.dual_contains(vec2(-1, 1)));
  CHECK(wedge.dual_contains(vec2(0, 2)));
  CHECK_FALSE(wedge.dual_contains(vec2(0, -1)));
  CHECK_FALSE(wedge.dual_contains(vec2(-1, 0.5)));

  // Sampled cross-check: y in C* iff <y, c> >= 0 for the cone's members.
  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    const Vector y = 2.0 * rng.normal_vector(2);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double l0 = rng.uniform(), l1 = rng.uniform();
      const Vector c = l0 * vec2(1, 1) + l1 * vec2(0, 1);
      worst = std::min(worst, y.dot(c));
    }
    if (wedge.dual_contains(y)) {
      CHECK(worst >= -1e-9);
    } else {
      // find a separating member deterministically
      CHECK(std::min(y.dot(vec2(1, 1)), y.dot(vec2(0, 1))) < 0.0);
    }
  }
}

TEST_CASE("product cone checks only the constrained tail block") {
  Matrix n(2, 2);
  n << 1, -1, -1, 0;
  const ConeSpec k = ConeSpec::product(2, ConeSpec::polyhedral_halfspaces(n));
  Vector v(4);
  v << -5.0, 7.0, 1.0, 2.0;
  CHECK(k.contains(v));
  v(2) = 3.0;  // u1 > u2
  CHECK_FALSE(k.contains(v));

  Vector y(4);
  y << 0, 0, 1.0, 0.0;
  CHECK(k.dual_contains(y));
  y(0) = 0.5;  // head block of the dual must vanish
  CHECK_FALSE(k.dual_contains(y));
}

TEST_CASE("dimension errors name both sizes") {
  CHECK_THROWS_WITH_AS(ConeSpec::orthant(3).contains(vec2(1, 1)),
                       "vector size 2 does not match cone dimension 3", std::invalid_argument);
}

TEST_CASE("second-order membership uses the scalar-last layout") {
  CHECK(ConeSpec::second_order(3).contains(vec3(3, 4, 5)));
  CHECK_FALSE(ConeSpec::second_order(3).contains(vec3(3, 4, 4.9)));
  CHECK(ConeSpec::second_order(3).contains(vec3(0, 0, 0)));
}

}  // namespace
}  // namespace elcp
