#include <doctest.h>

#include <cmath>
#include <vector>

#include "captor/errors.hpp"
#include "captor/geometry.hpp"

using namespace captor;
using geometry::AxisVector;
using geometry::Body;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("axis vectors sort descending and compare by multiset") {
  AxisVector a{1.0, 3.0, 2.0};
  CHECK(a[0] == 3.0);
  CHECK(a[2] == 1.0);
  CHECK(a.aspect_ratio() == doctest::Approx(3.0));
  CHECK(a.product() == doctest::Approx(6.0));
  CHECK(a == AxisVector{3.0, 1.0, 2.0});
  CHECK_THROWS_AS(AxisVector({1.0, 0.0}), GeometryError);
  CHECK_THROWS_AS(AxisVector({1.0, -2.0}), GeometryError);
}

TEST_CASE("ball constants at d=3 match the classical values") {
  const auto bc = geometry::ball_constants(3);
  CHECK(bc.omega == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
  CHECK(bc.tau == doctest::Approx(4.0 * kPi / 45.0).epsilon(1e-14));
  CHECK(bc.kappa == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  CHECK_THROWS_AS(geometry::ball_constants(2), GeometryError);
}

TEST_CASE("volumes of the basic shapes") {
  CHECK(geometry::volume(Body::ball(3, 2.0)) ==
        doctest::Approx(32.0 * kPi / 3.0).epsilon(1e-13));
  CHECK(geometry::volume(Body::ellipsoid(AxisVector{2.0, 1.0, 0.5})) ==
        doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-13));
  CHECK(geometry::volume(Body::unit_cube(4)) == doctest::Approx(1.0));
  const Body pair = Body::disjoint_union(
      {Body::ball(1.0, {0.0, 0.0, 0.0}), Body::ball(1.0, {2.0, 0.0, 0.0})});
  CHECK(geometry::volume(pair) ==
        doctest::Approx(8.0 * kPi / 3.0).epsilon(1e-13));
}

TEST_CASE("diameter and inradius") {
  CHECK(geometry::diameter(Body::ellipsoid(AxisVector{3.0, 1.0, 1.0})) ==
        doctest::Approx(6.0));
  CHECK(geometry::inradius(Body::ellipsoid(AxisVector{3.0, 1.0, 0.25})) ==
        doctest::Approx(0.25));
  // Chebyshev radius of the unit cube
  CHECK(geometry::inradius(Body::unit_cube(3)) ==
        doctest::Approx(0.5).epsilon(1e-9));
  const Body pair = Body::disjoint_union(
      {Body::ball(1.0, {0.0, 0.0, 0.0}), Body::ball(1.0, {2.0, 0.0, 0.0})});
  CHECK_THROWS_AS(geometry::diameter(pair), GeometryError);
}

TEST_CASE("disjoint unions reject overlapping parts") {
  // centers 1.5 apart, radii 1: open balls overlap
  CHECK_THROWS_AS(
      Body::disjoint_union({Body::ball(1.0, {0.0, 0.0, 0.0}),
                            Body::ball(1.0, {1.5, 0.0, 0.0})}),
      GeometryError);
  // exact tangency is allowed (open sets are still disjoint)
  CHECK_NOTHROW(Body::disjoint_union({Body::ball(1.0, {0.0, 0.0, 0.0}),
                                      Body::ball(1.0, {2.0, 0.0, 0.0})}));
  CHECK_THROWS_AS(Body::disjoint_union({Body::ball(3, 1.0)}), GeometryError);
}

TEST_CASE("unit cube vertex set") {
  const Body cube = Body::unit_cube(3);
  const auto* poly = cube.as<geometry::VPolytope>();
  REQUIRE(poly != nullptr);
  CHECK(poly->vertices.size() == 8);
  for (const auto& v : poly->vertices)
    for (double x : v) CHECK(std::abs(x) == doctest::Approx(0.5));
}

TEST_CASE("JSON round trip preserves shape and parameters") {
  const Body e = Body::ellipsoid(AxisVector{2.0, 1.0, 0.5}, {1.0, 0.0, -1.0});
  const Body back = geometry::body_from_json(geometry::to_json(e));
  const auto* orig = e.as<geometry::Ellipsoid>();
  const auto* got = back.as<geometry::Ellipsoid>();
  REQUIRE(got != nullptr);
  CHECK(got->axes == orig->axes);
  CHECK(got->center == orig->center);

  const Body cube = Body::unit_cube(4);
  const Body cube2 = geometry::body_from_json(geometry::to_json(cube));
  CHECK(geometry::volume(cube2) == doctest::Approx(1.0));
  CHECK(cube2.dim() == 4);

  CHECK_THROWS_AS(geometry::body_from_json("{\"kind\": \"triangle\"}"),
                  GeometryError);
  CHECK_THROWS_AS(geometry::body_from_json("not json"), GeometryError);
}

TEST_CASE("bounding boxes cover unions part by part") {
  const Body pair = Body::disjoint_union(
      {Body::ball(1.0, {0.0, 0.0, 0.0}), Body::ball(0.5, {3.0, 0.0, 0.0})});
  const auto box = geometry::bounding_box(pair);
  CHECK(box.lo[0] == doctest::Approx(-1.0));
  CHECK(box.hi[0] == doctest::Approx(3.5));
  CHECK(box.lo[1] == doctest::Approx(-1.0));
  CHECK(box.hi[1] == doctest::Approx(1.0));
}
