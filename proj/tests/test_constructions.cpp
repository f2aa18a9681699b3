#include <doctest.h>

#include <cmath>
#include <vector>

#include "captor/constructions.hpp"
#include "captor/errors.hpp"
#include "captor/exact.hpp"
#include "captor/geometry.hpp"

using namespace captor;
using constructions::BoundKind;
using constructions::Family;
using geometry::AxisVector;
using geometry::Body;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("slab-plus-ball family") {
  // the construction always carries total measure 1
  for (double eps : {0.2, 0.05, 1e-3}) {
    const auto fp = constructions::pancake(eps, 1.0, 3);
    CHECK(geometry::volume(fp.body) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(fp.bound_kind == BoundKind::lower);
    CHECK(fp.parameter == eps);
  }
  // flat-disc capacity constant at d=3
  CHECK(constructions::pancake_coefficient(3) ==
        doctest::Approx(8.0).epsilon(1e-12));
  // frozen reference points of the lower bound at q=1
  CHECK(constructions::pancake(0.2, 1.0, 3).value ==
        doctest::Approx(0.0499).epsilon(2e-3));
  CHECK(constructions::pancake(0.1, 1.0, 3).value ==
        doctest::Approx(0.0706).epsilon(2e-3));
  CHECK(constructions::pancake(0.05, 1.0, 3).value ==
        doctest::Approx(0.0999).epsilon(2e-3));
  // the bound eventually exceeds any fixed level
  CHECK(constructions::pancake(1e-4, 1.0, 3).value > 2.0);
  CHECK_THROWS_AS(constructions::pancake(0.0, 1.0, 3), GeometryError);
  CHECK_THROWS_AS(constructions::pancake(0.5, 1.0, 2), GeometryError);
}

TEST_CASE("tangent ball packing") {
  const double cap_cube = 8.3;
  const auto one = constructions::ball_packing(1, 1.0, 3, cap_cube);
  CHECK(one.bound_kind == BoundKind::upper);
  // N = 1 is a single inscribed ball
  CHECK(one.body.as<geometry::Ball>() != nullptr);

  const auto two = constructions::ball_packing(2, 1.0, 3, cap_cube);
  CHECK(geometry::volume(two.body) ==
        doctest::Approx(constructions::ball_packing_measure(3))
            .epsilon(1e-12));
  CHECK(constructions::ball_packing_torsion(2, 3) ==
        doctest::Approx(std::pow(2.0, -5) * 0.25 * 4.0 * kPi / 45.0)
            .epsilon(1e-12));

  // bound obeys an exact 2^{-2q} halving law
  for (double q : {0.5, 1.0, 2.0}) {
    const double r =
        constructions::ball_packing(4, q, 3, cap_cube).value /
        constructions::ball_packing(2, q, 3, cap_cube).value;
    CHECK(r == doctest::Approx(std::pow(2.0, -2.0 * q)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(constructions::ball_packing(0, 1.0, 3, cap_cube),
                  GeometryError);
  CHECK_THROWS_AS(constructions::ball_packing(2, 1.0, 3, 0.0),
                  GeometryError);
  // refuse to materialize absurd unions
  CHECK_THROWS_AS(constructions::ball_packing(100, 1.0, 3, cap_cube),
                  GeometryError);
}

TEST_CASE("needle family matches direct evaluation and its asymptote") {
  const auto fp = constructions::prolate_family(0.01, 0.5, 3);
  CHECK(fp.bound_kind == BoundKind::exact);
  const double direct =
      exact::g_q_ellipsoid(AxisVector{1.0, 0.01, 0.01}, 0.5).g_q;
  CHECK(fp.value == doctest::Approx(direct).epsilon(1e-12));

  // exact/asymptote ratio at eps = 1e-6, q = 1/2 (frozen reference)
  const double ratio = constructions::prolate_family(1e-6, 0.5, 3).value /
                       constructions::prolate_asymptote(1e-6, 0.5, 3);
  CHECK(ratio == doctest::Approx(0.9522).epsilon(1e-3));

  // asymptote pieces at d = 3: capacity 4 pi / log(1/eps)
  const double eps = 1e-8;
  const double cap_needle = 4.0 * kPi / std::log(1.0 / eps);
  const double tor = exact::ellipsoid_torsion(AxisVector{1.0, eps, eps});
  const double vol = 4.0 * kPi / 3.0 * eps * eps;
  const double manual =
      exact::g_q(cap_needle, tor, vol, 0.5, 3).g_q;
  CHECK(constructions::prolate_asymptote(eps, 0.5, 3) ==
        doctest::Approx(manual).epsilon(1e-10));
}

TEST_CASE("pancake-at-fixed-volume family and its vanishing window") {
  const auto fp = constructions::oblate_family(0.1, 0.5, 3);
  CHECK(fp.bound_kind == BoundKind::exact);
  // axes (a, a, 0.1) with a^2 * 0.1 = 1
  const double a1 = std::pow(0.1, -0.5);
  const double direct =
      exact::g_q_ellipsoid(AxisVector{a1, a1, 0.1}, 0.5).g_q;
  CHECK(fp.value == doctest::Approx(direct).epsilon(1e-12));

  // closed-form coefficient at a_d = 1, d = 3, q = 1/2 (frozen reference)
  CHECK(constructions::oblate_bound(1.0, 0.5, 3) ==
        doctest::Approx(2.1627).epsilon(1e-4));
  // exact value sits below the bound along the family
  for (double ad : {0.5, 0.1, 0.01}) {
    CHECK(constructions::oblate_family(ad, 0.5, 3).value <=
          constructions::oblate_bound(ad, 0.5, 3) * (1.0 + 1e-12));
  }
  CHECK(constructions::oblate_bound_vanishes(0.5, 3));
  CHECK(constructions::oblate_bound_vanishes(1.0, 3));
  CHECK(!constructions::oblate_bound_vanishes(0.25, 3));  // critical exponent
  CHECK(!constructions::oblate_bound_vanishes(0.1, 3));
}

TEST_CASE("simultaneous collapse of several axes") {
  // k >= 3 settles to a positive plateau instead of degenerating
  const double v3 = constructions::multi_collapse_family(3, 1e-3, 5).value;
  const double v4 = constructions::multi_collapse_family(3, 1e-4, 5).value;
  CHECK(v3 > 0.0);
  CHECK(v4 > 0.0);
  CHECK(std::abs(v4 / v3 - 1.0) < 0.1);
  CHECK_THROWS_AS(constructions::multi_collapse_family(5, 0.1, 5),
                  GeometryError);
  CHECK_THROWS_AS(constructions::multi_collapse_family(1, 0.1, 3),
                  GeometryError);
}

TEST_CASE("sweeps produce the advertised columns in grid order") {
  constructions::SweepOptions opt;
  opt.q = 0.5;
  const std::vector<double> grid = {1e-1, 1e-2, 1e-3};
  const auto rows = constructions::sweep(Family::prolate, grid, opt);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].parameter == grid[i]);
    REQUIRE(rows[i].exact.has_value());
    REQUIRE(rows[i].asymptote.has_value());
    REQUIRE(rows[i].ratio.has_value());
  }
  // the direction of the collapse: values increase as eps drops
  CHECK(*rows[1].exact > *rows[0].exact);
  CHECK(*rows[2].exact > *rows[1].exact);

  constructions::SweepOptions pk;
  pk.cube_capacity = 8.3;
  const auto prows =
      constructions::sweep(Family::ball_packing, {1.0, 2.0, 4.0}, pk);
  REQUIRE(prows.size() == 3);
  CHECK(prows[0].bound.has_value());
  CHECK(!prows[0].exact.has_value());  // unions have no exact evaluation
  CHECK(prows[1].bound_kind == BoundKind::upper);
}

TEST_CASE("sweep stops once quadrature degrades instead of emitting junk") {
  constructions::SweepOptions opt;
  opt.q = 0.5;
  opt.exact_rel_error_stop = 1e-10;
  opt.quadrature = exact::QuadratureConfig{1e-12, 40};
  const std::vector<double> grid = {1e-1, 1e-3, 1e-6, 1e-9, 1e-12};
  const auto rows = constructions::sweep(Family::prolate, grid, opt);
  CHECK(rows.size() < grid.size());
}
