#include <doctest.h>

#include <cmath>

#include "captor/errors.hpp"
#include "captor/exact.hpp"
#include "captor/geometry.hpp"
#include "captor/verify.hpp"

using namespace captor;
using geometry::AxisVector;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("axis integral reduces to 2/(d-2) on the unit ball") {
  for (int d = 3; d <= 6; ++d) {
    const AxisVector ones(std::vector<double>(std::size_t(d), 1.0));
    CHECK(exact::capacity_integral(ones) ==
          doctest::Approx(2.0 / (d - 2)).epsilon(1e-11));
  }
}

TEST_CASE("reference values at axes (2,1,1)") {
  const AxisVector a{2.0, 1.0, 1.0};
  CHECK(exact::capacity_integral(a) ==
        doctest::Approx(1.520691992601893).epsilon(1e-12));
  CHECK(exact::ellipsoid_capacity(a) ==
        doctest::Approx(16.527174043782797).epsilon(1e-11));
  CHECK(exact::ellipsoid_torsion(a) ==
        doctest::Approx(32.0 * kPi / 135.0).epsilon(1e-14));
}

TEST_CASE("quadrature agrees with the symmetric-integral duplication oracle") {
  // two independent routes to the same integral
  for (const auto& axes : {AxisVector{2.0, 1.0, 1.0},
                           AxisVector{5.0, 2.0, 0.3},
                           AxisVector{1.0, 0.9, 0.8}}) {
    const double viaq = exact::capacity_integral(axes);
    const double viarf = 2.0 * verify::carlson_rf(axes[0] * axes[0],
                                                  axes[1] * axes[1],
                                                  axes[2] * axes[2]);
    CHECK(viaq == doctest::Approx(viarf).epsilon(1e-11));
  }
}

TEST_CASE("duplication oracle special values") {
  CHECK(verify::carlson_rf(1.0, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(verify::carlson_rf(4.0, 4.0, 4.0) == doctest::Approx(0.5));
  // complete elliptic case: R_F(0, 1, 1) = pi/2
  CHECK(verify::carlson_rf(0.0, 1.0, 1.0) ==
        doctest::Approx(kPi / 2.0).epsilon(1e-13));
}

TEST_CASE("scaling laws") {
  const AxisVector a{1.7, 1.1, 0.6};
  const AxisVector b = a.scaled(2.5);
  CHECK(exact::ellipsoid_capacity(b) ==
        doctest::Approx(2.5 * exact::ellipsoid_capacity(a)).epsilon(1e-10));
  CHECK(exact::ellipsoid_torsion(b) ==
        doctest::Approx(std::pow(2.5, 5) * exact::ellipsoid_torsion(a))
            .epsilon(1e-13));
  // the functional is scale invariant
  const double g1 = exact::g_q_ellipsoid(a, 1.3).g_q;
  const double g2 = exact::g_q_ellipsoid(b, 1.3).g_q;
  CHECK(g1 == doctest::Approx(g2).epsilon(1e-10));
}

TEST_CASE("ball values of the functional") {
  CHECK(exact::g_q_ball(3, 1.0) == doctest::Approx(0.2).epsilon(1e-13));
  CHECK(exact::g_q_ball(3, 0.0) ==
        doctest::Approx(7.795554179441509).epsilon(1e-12));
  CHECK(exact::g_q_ball(3, -1.0) == doctest::Approx(303.853).epsilon(1e-5));
  // evaluating the ellipsoid at unit axes reproduces them
  const AxisVector ones{1.0, 1.0, 1.0};
  CHECK(exact::g_q_ellipsoid(ones, 1.0).g_q ==
        doctest::Approx(0.2).epsilon(1e-11));
}

TEST_CASE("comparison ratios are normalized at the ball and ordered") {
  const AxisVector ones{1.0, 1.0, 1.0};
  CHECK(exact::saint_venant_ratio(ones) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(exact::isocapacitary_ratio(ones) ==
        doctest::Approx(1.0).epsilon(1e-11));
  const AxisVector a{2.0, 1.0, 1.0};
  CHECK(exact::saint_venant_ratio(a) < 1.0);
  CHECK(exact::isocapacitary_ratio(a) > 1.0);
}

TEST_CASE("quadrature failure carries its best value") {
  const AxisVector extreme{1.0, 1.0, 1e-9};
  try {
    exact::capacity_integral(extreme, exact::QuadratureConfig{1e-15, 16});
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.value() > 0.0);
    CHECK(e.achieved_rel_error() > 1e-15);
  }
}

TEST_CASE("planar pieces") {
  CHECK(exact::ellipse_logcap(2.0, 1.0) == doctest::Approx(1.5));
  CHECK_THROWS_AS(exact::ellipse_logcap(1.0, 2.0), GeometryError);
  // H_q(B_1) = 8^{-q} pi^{-(q+1/2)}
  for (double q : {0.0, 0.5, 1.0, 2.0})
    CHECK(exact::h_q_ball(q) ==
          doctest::Approx(std::pow(8.0, -q) * std::pow(kPi, -(q + 0.5)))
              .epsilon(1e-13));
  CHECK(exact::h_q_ellipse(1.0, 1.0, 0.7) ==
        doctest::Approx(exact::h_q_ball(0.7)).epsilon(1e-13));
  // rigidity of the ellipse has the classical closed form
  CHECK(exact::ellipsoid_torsion(AxisVector{2.0, 1.0}) ==
        doctest::Approx(kPi * 8.0 / (4.0 * 5.0)).epsilon(1e-13));
}

TEST_CASE("capacity requires at least three dimensions") {
  CHECK_THROWS_AS(exact::ellipsoid_capacity(AxisVector{2.0, 1.0}),
                  GeometryError);
  CHECK_THROWS_AS(exact::g_q_ball(2, 1.0), GeometryError);
}
