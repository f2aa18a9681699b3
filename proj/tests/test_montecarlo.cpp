#include <doctest.h>

#include <cmath>

#include "captor/errors.hpp"
#include "captor/exact.hpp"
#include "captor/geometry.hpp"
#include "captor/montecarlo.hpp"

using namespace captor;
using geometry::AxisVector;
using geometry::Body;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

montecarlo::WosConfig small_config() {
  montecarlo::WosConfig cfg;
  cfg.walkers = 20000;
  cfg.seed = 42;
  return cfg;
}
}  // namespace

TEST_CASE("same seed reproduces estimates bit for bit") {
  const Body ball = Body::ball(3, 1.0);
  auto cfg = small_config();
  cfg.walkers = 2000;
  const auto t1 = montecarlo::wos_torsion(ball, cfg);
  const auto t2 = montecarlo::wos_torsion(ball, cfg);
  CHECK(t1.value == t2.value);
  CHECK(t1.std_error == t2.std_error);
  const auto c1 = montecarlo::wos_capacity(ball, cfg);
  const auto c2 = montecarlo::wos_capacity(ball, cfg);
  CHECK(c1.value == c2.value);

  cfg.seed = 43;
  const auto t3 = montecarlo::wos_torsion(ball, cfg);
  CHECK(t3.value != t1.value);
}

TEST_CASE("thread count does not change the result") {
  const Body e = Body::ellipsoid(AxisVector{2.0, 1.0, 1.0});
  auto cfg = small_config();
  cfg.walkers = 12000;
  cfg.threads = 1;
  const auto a = montecarlo::wos_torsion(e, cfg);
  cfg.threads = 4;
  const auto b = montecarlo::wos_torsion(e, cfg);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  cfg.threads = 3;
  const auto c = montecarlo::wos_capacity(e, cfg);
  cfg.threads = 1;
  const auto d = montecarlo::wos_capacity(e, cfg);
  CHECK(c.value == d.value);
}

TEST_CASE("ball torsion estimate brackets the closed form") {
  const auto est = montecarlo::wos_torsion(Body::ball(3, 1.0), small_config());
  const double target = 4.0 * kPi / 45.0;
  CHECK(est.std_error > 0.0);
  CHECK(std::abs(est.value - target) <= 5.0 * est.std_error + 0.02 * target);
  CHECK(est.walkers == 20000);
  CHECK(est.truncated_fraction == 0.0);
}

TEST_CASE("ball capacity estimate brackets the closed form") {
  const auto est =
      montecarlo::wos_capacity(Body::ball(3, 1.0), small_config());
  const double target = 4.0 * kPi;
  CHECK(std::abs(est.value - target) <= 5.0 * est.std_error + 0.02 * target);
}

TEST_CASE("torsion is additive over disjoint unions") {
  const Body pair = Body::disjoint_union(
      {Body::ball(1.0, {0.0, 0.0, 0.0}), Body::ball(1.0, {2.0, 0.0, 0.0})});
  const auto est = montecarlo::wos_torsion(pair, small_config());
  const double target = 2.0 * 4.0 * kPi / 45.0;
  CHECK(std::abs(est.value - target) <= 5.0 * est.std_error + 0.03 * target);
}

TEST_CASE("functional estimate combines the two factors") {
  const auto est =
      montecarlo::g_q_monte_carlo(Body::ball(3, 1.0), 1.0, small_config());
  CHECK(est.volume == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-12));
  CHECK(std::abs(est.value - 0.2) <= 5.0 * est.std_error + 0.01);
  // delta-method error is positive and smaller than the sum of parts
  CHECK(est.std_error > 0.0);
}

TEST_CASE("estimates carry their shell bias note") {
  auto cfg = small_config();
  cfg.walkers = 500;
  cfg.shell_eps = 1e-2;
  const auto est = montecarlo::wos_torsion(Body::ball(3, 1.0), cfg);
  CHECK(est.shell_eps == 1e-2);
  CHECK(!est.bias_note.empty());
}

TEST_CASE("configuration validation") {
  const Body ball = Body::ball(3, 1.0);
  montecarlo::WosConfig cfg;
  cfg.walkers = 0;
  CHECK_THROWS_AS(montecarlo::wos_torsion(ball, cfg), GeometryError);
  cfg = montecarlo::WosConfig{};
  cfg.escape_factor = 1.9;
  CHECK_THROWS_AS(montecarlo::wos_capacity(ball, cfg), GeometryError);
  cfg = montecarlo::WosConfig{};
  cfg.start_factor = 1.0;
  CHECK_THROWS_AS(montecarlo::wos_capacity(ball, cfg), GeometryError);
  // probabilistic capacity needs d >= 3
  CHECK_THROWS_AS(
      montecarlo::wos_capacity(Body::ellipsoid(AxisVector{2.0, 1.0}),
                               montecarlo::WosConfig{}),
      GeometryError);
}

TEST_CASE("capacity of a scaled ball follows the power law") {
  auto cfg = small_config();
  const auto est = montecarlo::wos_capacity(Body::ball(3, 2.0), cfg);
  const double target = 4.0 * kPi * 2.0;  // kappa r^{d-2}
  CHECK(std::abs(est.value - target) <= 5.0 * est.std_error + 0.02 * target);
}
