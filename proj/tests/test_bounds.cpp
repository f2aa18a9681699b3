#include <doctest.h>

#include <cmath>
#include <string>

#include "captor/bounds.hpp"
#include "captor/errors.hpp"
#include "captor/exact.hpp"
#include "captor/geometry.hpp"

using namespace captor;
using bounds::LogValue;
using geometry::AxisVector;
using geometry::Body;

TEST_CASE("log-carried numbers render and combine") {
  const LogValue v = LogValue::from_value(8.0);
  CHECK(v.log10() == doctest::Approx(std::log10(8.0)).epsilon(1e-14));
  CHECK(v.str() == "8");
  const LogValue huge = LogValue::from_log(2187.0);
  CHECK(std::isinf(huge.value()));
  CHECK(huge.str().substr(0, 8) == "log10 = ");
  const LogValue w = v * v;
  CHECK(w.value() == doctest::Approx(64.0).epsilon(1e-13));
  CHECK((v / v).log() == doctest::Approx(0.0));
  CHECK(v.pow(2.0).value() == doctest::Approx(64.0).epsilon(1e-13));
  CHECK_THROWS_AS(LogValue::from_value(0.0), GeometryError);
  CHECK_THROWS_AS(LogValue::from_value(-1.0), GeometryError);
}

TEST_CASE("bound coefficients engage on the right windows") {
  const auto t2 = bounds::theorem_constants(3, 2.0);
  CHECK(t2.q_critical == doctest::Approx(0.25));
  REQUIRE(t2.sup_coeff.has_value());
  // 2^{5/2} 3^{13}
  CHECK(t2.sup_coeff->value() ==
        doctest::Approx(std::pow(2.0, 2.5) * std::pow(3.0, 13))
            .epsilon(1e-12));
  CHECK(t2.sup_diam_ratio.has_value());
  CHECK(!t2.inf_coeff.has_value());
  CHECK(!t2.inf_diam_ratio.has_value());
  CHECK(!t2.sup_diam_ratio_d3q1.has_value());

  const auto t1 = bounds::theorem_constants(3, 1.0);
  CHECK(t1.sup_coeff.has_value());
  CHECK(!t1.sup_diam_ratio.has_value());  // open window q > 1
  REQUIRE(t1.sup_diam_ratio_d3q1.has_value());
  CHECK(t1.sup_diam_ratio_d3q1->log() ==
        doctest::Approx(std::log(2.0) + 8.0 * std::log(3.0) + 2187.0)
            .epsilon(1e-14));

  const auto tq = bounds::theorem_constants(3, 0.25);
  REQUIRE(tq.inf_coeff.has_value());
  CHECK(tq.inf_coeff->value() ==
        doctest::Approx(0.004690343738590078).epsilon(1e-13));
  CHECK(!tq.inf_diam_ratio.has_value());  // open window q < q_critical
  CHECK(!tq.sup_coeff.has_value());

  const auto tsmall = bounds::theorem_constants(3, 0.1);
  CHECK(tsmall.inf_coeff.has_value());
  CHECK(tsmall.inf_diam_ratio.has_value());
}

TEST_CASE("axis integral bracket") {
  for (const auto& a : {AxisVector{2.0, 1.0, 1.0},
                        AxisVector{10.0, 3.0, 0.2},
                        AxisVector{5.0, 4.0, 3.0, 2.0}}) {
    const double v = exact::capacity_integral(a);
    CHECK(bounds::capacity_integral_lower(a) <= v * (1.0 + 1e-12));
    CHECK(v <= bounds::capacity_integral_upper(a) * (1.0 + 1e-12));
  }
}

TEST_CASE("elementary log inequalities hold across (0,1)") {
  for (double x : {1e-8, 1e-4, 0.01, 0.3, 0.5, 0.9, 0.999}) {
    for (int d : {3, 4, 7}) {
      const auto chk = bounds::elementary_log_inequalities(x, d);
      CHECK(chk.holds1);
      CHECK(chk.holds2);
      CHECK(chk.lhs1 <= chk.rhs1);
      CHECK(chk.lhs2 <= chk.rhs2);
    }
  }
}

TEST_CASE("sandwich interval is degenerate on ellipsoids") {
  const auto sw = bounds::sandwich_g_q(Body::ball(3, 1.0), 1.0);
  CHECK(sw.lower == doctest::Approx(0.2).epsilon(1e-11));
  CHECK(sw.upper == doctest::Approx(0.2).epsilon(1e-11));
  const auto se =
      bounds::sandwich_g_q(Body::ellipsoid(AxisVector{2.0, 1.0, 1.0}), 0.5);
  CHECK(se.lower == doctest::Approx(se.upper).epsilon(1e-11));
}

TEST_CASE("sandwich interval on the cube") {
  const Body cube = Body::unit_cube(3);
  for (double q : {1.0, -0.5}) {
    const auto sw = bounds::sandwich_g_q(cube, q);
    CHECK(sw.lower > 0.0);
    CHECK(sw.lower < sw.upper);
    // inner ellipsoid is the outer shrunk by d
    for (int i = 0; i < 3; ++i)
      CHECK(sw.inner_axes[i] ==
            doctest::Approx(sw.outer_axes[i] / 3.0).epsilon(1e-12));
    // the ball value must sit below any admissible body's value... only for
    // q where the ball minimizes; at q=1 the cube's interval lies above it
    if (q == 1.0) CHECK(sw.upper >= exact::g_q_ball(3, 1.0));
  }
  CHECK_THROWS_AS(
      bounds::sandwich_g_q(
          Body::disjoint_union({Body::ball(1.0, {0.0, 0.0, 0.0}),
                                Body::ball(1.0, {2.0, 0.0, 0.0})}),
          1.0),
      GeometryError);
}

TEST_CASE("planar constants and envelope") {
  const auto pc = bounds::planar_constants(0.5);
  CHECK(pc.sup_bound.has_value());
  CHECK(pc.inf_bound.has_value());
  CHECK(!pc.sup_diam_ratio.has_value());  // open at q = 1/2
  CHECK(!pc.inf_diam_ratio.has_value());

  const auto p1 = bounds::planar_constants(1.0);
  REQUIRE(p1.sup_diam_ratio.has_value());
  CHECK(p1.sup_diam_ratio->value() ==
        doctest::Approx(std::pow(2.0, 14.0)).epsilon(1e-12));

  for (double q : {0.0, 0.5, 1.0}) {
    const double hb = exact::h_q_ball(q);
    const auto env = bounds::h_q_envelope(1.0, 1.0, q);
    CHECK(env.first ==
          doctest::Approx(std::pow(2.0, -2.0 * (1.0 + 2.0 * q)) * hb)
              .epsilon(1e-12));
    CHECK(env.second ==
          doctest::Approx(std::pow(2.0, 1.0 + 5.0 * q) * hb).epsilon(1e-12));
  }
  // a couple of eccentric ellipses stay inside their envelope
  for (double ratio : {2.0, 10.0, 100.0}) {
    const double h = exact::h_q_ellipse(ratio, 1.0, 1.0);
    const auto env = bounds::h_q_envelope(ratio, 1.0, 1.0);
    CHECK(env.first <= h);
    CHECK(h <= env.second);
  }
}
