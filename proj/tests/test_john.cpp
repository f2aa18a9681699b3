#include <doctest.h>

#include <cmath>
#include <vector>

#include "captor/errors.hpp"
#include "captor/geometry.hpp"
#include "captor/john.hpp"
#include "captor/rng.hpp"

using namespace captor;
using geometry::AxisVector;
using geometry::Body;

TEST_CASE("enclosing ellipsoid of the cube is the circumscribed ball") {
  const Body cube = Body::unit_cube(3);
  const auto* poly = cube.as<geometry::VPolytope>();
  const auto res = john::mvee(poly->vertices, 1e-9);
  const double r = std::sqrt(3.0) / 2.0;
  for (int i = 0; i < 3; ++i) {
    CHECK(res.semi_axes[i] == doctest::Approx(r).epsilon(1e-7));
    CHECK(res.center[std::size_t(i)] == doctest::Approx(0.0).epsilon(1e-9));
  }
  CHECK(res.gap <= 1e-9);
}

TEST_CASE("enclosing ellipsoid of a box stretches by sqrt(2) per axis") {
  // vertices (+-1, +-2): MVEE semi-axes (2 sqrt 2, sqrt 2)
  std::vector<std::vector<double>> pts;
  for (double sx : {-1.0, 1.0})
    for (double sy : {-2.0, 2.0}) pts.push_back({sx, sy});
  const auto res = john::mvee(pts, 1e-9);
  CHECK(res.semi_axes[0] == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-7));
  CHECK(res.semi_axes[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-7));
}

TEST_CASE("every input point satisfies the ellipsoid inequality") {
  montecarlo::RngStream rng(99, 1);
  for (int trial = 0; trial < 5; ++trial) {
    const int d = 3 + (trial % 2);
    std::vector<std::vector<double>> pts(
        static_cast<std::size_t>(d + 6 + trial),
        std::vector<double>(static_cast<std::size_t>(d), 0.0));
    for (auto& p : pts)
      for (double& x : p) x = 2.0 * rng.next_double() - 1.0;
    const auto res = john::mvee(pts, 1e-8);
    for (const auto& p : pts) {
      double s = 0.0;
      for (int i = 0; i < d; ++i) {
        double mx = 0.0;
        for (int k = 0; k < d; ++k)
          mx += res.shape[std::size_t(i) * d + k] *
                (p[std::size_t(k)] - res.center[std::size_t(k)]);
        s += (p[std::size_t(i)] - res.center[std::size_t(i)]) * mx;
      }
      CHECK(s <= 1.0 + 1e-6);
    }
  }
}

TEST_CASE("duplicated points do not disturb the solution") {
  const Body cube = Body::unit_cube(3);
  auto pts = cube.as<geometry::VPolytope>()->vertices;
  pts.push_back(pts.front());
  pts.push_back(pts.front());
  const auto res = john::mvee(pts, 1e-8);
  CHECK(res.semi_axes[0] ==
        doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-6));
}

TEST_CASE("sandwich axes: exact cases and the polytope route") {
  const auto [inner_b, outer_b] = john::sandwich_axes(Body::ball(3, 2.0));
  CHECK(inner_b == outer_b);
  CHECK(inner_b[0] == doctest::Approx(2.0));

  const auto [inner_e, outer_e] =
      john::sandwich_axes(Body::ellipsoid(AxisVector{3.0, 2.0, 1.0}));
  CHECK(inner_e == outer_e);
  CHECK(outer_e == AxisVector{3.0, 2.0, 1.0});

  const auto [inner_c, outer_c] = john::sandwich_axes(Body::unit_cube(3));
  for (int i = 0; i < 3; ++i)
    CHECK(inner_c[i] == doctest::Approx(outer_c[i] / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(
      john::sandwich_axes(Body::disjoint_union(
          {Body::ball(1.0, {0.0, 0.0, 0.0}),
           Body::ball(1.0, {2.0, 0.0, 0.0})})),
      GeometryError);
}

TEST_CASE("mvee input validation") {
  CHECK_THROWS_AS(john::mvee({}, 1e-7), GeometryError);
  // fewer than d+1 points cannot span the space
  std::vector<std::vector<double>> flat = {{0.0, 0.0, 0.0},
                                           {1.0, 0.0, 0.0},
                                           {0.0, 1.0, 0.0}};
  CHECK_THROWS_AS(john::mvee(flat, 1e-7), GeometryError);
  CHECK_THROWS_AS(john::mvee({{1.0}, {2.0}}, 0.0), GeometryError);
}
