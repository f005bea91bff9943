// elcp - Extended Lorentz Cone Projections
// Copyright 2026 elcp Contributors
// Licensed under Apache 2.0

#include "doctest.h"

#include "elcp/projection.hpp"

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

Matrix wedge_normals() {
  Matrix n(2, 2);
  n << 1, -1, -1, 0;
  return n;
}

TEST_CASE("orthant projection clips negatives componentwise") {
  const ConeSpec c = ConeSpec::orthant(3);
  const ProjectionResult r = project(c, vec3(1.5, -2.0, 0.0));
  CHECK(r.point(0) == 1.5);
  CHECK(r.point(1) == 0.0);
  CHECK(r.point(2) == 0.0);
  CHECK(r.distance == doctest::Approx(2.0));
}

TEST_CASE("second-order projection closed form") {
  const ConeSpec c = ConeSpec::second_order(3);

  // outside: scaled blend of the point and its cone shadow
  const ProjectionResult out = project(c, vec3(3, 4, 2));
  CHECK(out.point(0) == doctest::Approx(2.1).epsilon(1e-14));
  CHECK(out.point(1) == doctest::Approx(2.8).epsilon(1e-14));
  CHECK(out.point(2) == doctest::Approx(3.5).epsilon(1e-14));

  // inside: unchanged
  const ProjectionResult in = project(c, vec3(1, 1, 3));
  CHECK((in.point - vec3(1, 1, 3)).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK(in.distance == 0.0);

  // polar: collapses to the vertex
  const ProjectionResult pol = project(c, vec3(1, 1, -3));
  CHECK(pol.point.norm() == 0.0);
}

TEST_CASE("hyperplane projection removes the normal component") {
  Vector a = vec2(3, 4) / 5.0;
  const ConeSpec c = ConeSpec::hyperplane(a);
  const Vector v = vec2(2, -1);
  const ProjectionResult r = project(c, v);
  const Vector expect = v - a.dot(v) * a;
  CHECK((r.point - expect).lpNorm<Eigen::Infinity>() <= 1e-15);
  CHECK(std::abs(a.dot(r.point)) <= 1e-15);
}

TEST_CASE("wedge projection hand cases") {
  const Matrix n = wedge_normals();

  ProjectionResult r = project_polyhedral(n, vec2(-1, 2));
  CHECK(r.point(0) == 0.0);
  CHECK(r.point(1) == 2.0);
  CHECK(r.active_set == std::vector<int>{1});

  r = project_polyhedral(n, vec2(3, 1));
  CHECK(r.point(0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r.point(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(r.active_set == std::vector<int>{0});

  r = project_polyhedral(n, vec2(-2, -1));
  CHECK(r.point.norm() <= 1e-12);  // corner solve leaves rounding noise
  CHECK(r.distance == doctest::Approx(std::sqrt(5.0)));

  r = project_polyhedral(n, vec2(1, 2));
  CHECK((r.point - vec2(1, 2)).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK(r.active_set.empty());
  CHECK(r.distance == 0.0);
}

TEST_CASE("projection lands exactly on a face for near-boundary inputs") {
  const Matrix n = wedge_normals();
  const ProjectionResult r = project_polyhedral(n, vec2(-1e-11, 0.5));
  CHECK(r.point(0) == 0.0);
  CHECK(r.point(1) == 0.5);
}

TEST_CASE("generator and halfspace forms project to the same set") {
  Matrix g(2, 2);
  g.col(0) = vec2(1, 1);
  g.col(1) = vec2(0, 1);
  const Matrix n = wedge_normals();
  Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    const Vector v = 3.0 * rng.normal_vector(2);
    const ProjectionResult a = project_polyhedral(n, v);
    const ProjectionResult b = project_generated(g, v);
    CHECK(std::abs(a.distance - b.distance) <= 1e-12);
    CHECK((a.point - b.point).lpNorm<Eigen::Infinity>() <= 1e-9);
  }
}

TEST_CASE("cone dispatch matches the direct projection routines") {
  const Matrix n = wedge_normals();
  const ConeSpec wedge = ConeSpec::polyhedral_halfspaces(n);
  Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const Vector v = 2.0 * rng.normal_vector(2);
    const ProjectionResult a = project(wedge, v);
    const ProjectionResult b = project_polyhedral(n, v);
    CHECK((a.point - b.point).lpNorm<Eigen::Infinity>() == 0.0);
    CHECK(a.distance == b.distance);
  }
}

TEST_CASE("translated projection is the shifted projection") {
  const ConeSpec wedge = ConeSpec::polyhedral_halfspaces(wedge_normals());
  Rng rng(33);
  for (int i = 0; i < 300; ++i) {
    const Vector y = 2.0 * rng.normal_vector(2);
    const Vector v = 3.0 * rng.normal_vector(2);
    const Vector got = translate_project(y, wedge, v);
    const Vector expect = y + project(wedge, v - y).point;
    CHECK((got - expect).lpNorm<Eigen::Infinity>() == 0.0);

    // variational characterization against sampled members of y + C
    const Vector member = y + project(wedge, 3.0 * rng.normal_vector(2)).point;
    CHECK((v - got).dot(member - got) <= 1e-9);
  }
}

TEST_CASE("product projection passes the head block through unchanged") {
  const ConeSpec wedge = ConeSpec::polyhedral_halfspaces(wedge_normals());
  Rng rng(34);
  for (int i = 0; i < 300; ++i) {
    const Vector x = 2.0 * rng.normal_vector(2);
    const Vector u = 2.0 * rng.normal_vector(2);
    const Point z = project_product(x, u, wedge);
    CHECK((z.x - x).lpNorm<Eigen::Infinity>() == 0.0);
    CHECK((z.u - project(wedge, u).point).lpNorm<Eigen::Infinity>() == 0.0);
  }
}

TEST_CASE("projection rejects mismatched sizes and oversized systems") {
  CHECK_THROWS_AS(project(ConeSpec::orthant(3), vec2(1, 1)), std::invalid_argument);
  CHECK_THROWS_WITH_AS(project_polyhedral(Matrix::Identity(21, 21), Vector::Zero(21)),
                       "polyhedral projection limited to 20 halfspaces", std::invalid_argument);
  CHECK_THROWS_WITH_AS(project_generated(Matrix::Identity(21, 21), Vector::Zero(21)),
                       "generated-cone projection limited to 20 generators", std::invalid_argument);
}

TEST_CASE("projections are idempotent and nonexpansive") {
  std::vector<ConeSpec> specs;
  specs.push_back(ConeSpec::second_order(4));
  specs.push_back(ConeSpec::polyhedral_halfspaces(wedge_normals()));
  specs.push_back(ConeSpec::product(2, ConeSpec::orthant(2)));
  Rng rng(35);
  for (const ConeSpec& c : specs) {
    for (int i = 0; i < 300; ++i) {
      const Vector v = 2.0 * rng.normal_vector(c.dim());
      const Vector w = 2.0 * rng.normal_vector(c.dim());
      const Vector pv = project(c, v).point;
      const Vector pw = project(c, w).point;
      CHECK(c.contains(pv));
      CHECK((project(c, pv).point - pv).lpNorm<Eigen::Infinity>() <= 1e-9);
      CHECK((pv - pw).norm() <= (v - w).norm() + 1e-9);
    }
  }
}

TEST_CASE("three-halfspace cone projection satisfies optimality against samples") {
  Matrix n(3, 3);
  n << 1, 0, -0.2, -1, 1, -0.3, 0, -1, -0.1;
  Rng rng(36);
  for (int i = 0; i < 200; ++i) {
    const Vector v = 2.0 * rng.normal_vector(3);
    const ProjectionResult r = project_polyhedral(n, v);
    CHECK((n * r.point).maxCoeff() <= 1e-9);
    for (int k = 0; k < 50; ++k) {
      const Vector c = project_polyhedral(n, 3.0 * rng.normal_vector(3)).point;
      CHECK((v - r.point).dot(c - r.point) <= 1e-9);
    }
  }
}

}  // namespace
}  // namespace elcp
