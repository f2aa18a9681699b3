#include "captor/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "captor/bounds.hpp"
#include "captor/constructions.hpp"
#include "captor/exact.hpp"
#include "captor/geometry.hpp"
#include "captor/hull.hpp"
#include "captor/john.hpp"
#include "captor/linalg.hpp"
#include "captor/montecarlo.hpp"
#include "captor/optimize.hpp"
#include "captor/rng.hpp"

namespace captor::verify {

using geometry::AxisVector;
using geometry::Body;
using montecarlo::RngStream;

double carlson_rf(double x, double y, double z) {
  // Duplication iteration with the degree-5 tail (Carlson 1995).
  double xm = x, ym = y, zm = z;
  double a = (x + y + z) / 3.0;
  const double a0 = a;
  double q = std::pow(3.0 * 2.5e-17, -1.0 / 6.0) *
             std::max({std::abs(a - x), std::abs(a - y), std::abs(a - z)});
  double f = 1.0;
  while (q * f > std::abs(a)) {
    const double sx = std::sqrt(xm), sy = std::sqrt(ym), sz = std::sqrt(zm);
    const double lam = sx * sy + sy * sz + sz * sx;
    xm = 0.25 * (xm + lam);
    ym = 0.25 * (ym + lam);
    zm = 0.25 * (zm + lam);
    a = 0.25 * (a + lam);
    f *= 0.25;
  }
  const double dx = (a0 - x) * f / a;
  const double dy = (a0 - y) * f / a;
  const double dz = -dx - dy;
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 + e2 * (e2 / 24.0 - e3 * 3.0 / 44.0 - 0.1) + e3 / 14.0) /
         std::sqrt(a);
}

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string strf(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return std::string(buf);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 =
      std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
  }
};

struct Check {
  bool ok = true;
  std::string detail;  // first failure, or the pass summary

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

CriterionResult run_criterion(int index, const char* name, double budget_s,
                              const std::function<Check()>& body) {
  CriterionResult r;
  r.index = index;
  r.name = name;
  Timer t;
  try {
    Check c = body();
    r.seconds = t.elapsed();
    r.passed = c.ok && r.seconds < budget_s;
    r.detail = std::move(c.detail);
    if (c.ok && r.seconds >= budget_s)
      r.detail = strf("exceeded the %.0f s budget", budget_s);
  } catch (const std::exception& e) {
    r.seconds = t.elapsed();
    r.passed = false;
    r.detail = strf("exception: %s", e.what());
  }
  return r;
}

AxisVector log_uniform_axes(RngStream& rng, int d) {
  std::vector<double> a(static_cast<std::size_t>(d));
  for (double& v : a)
    v = std::exp(std::log(0.1) + rng.next_double() * std::log(100.0));
  return AxisVector(std::move(a));
}

// 1. closed forms at the ball across dimensions
Check criterion_ball_identities() {
  Check c;
  double worst_integral = 0.0, worst_cap = 0.0;
  for (int d = 3; d <= 10; ++d) {
    const AxisVector ones(std::vector<double>(std::size_t(d), 1.0));
    const auto bc = geometry::ball_constants(d);
    const double target = 2.0 / double(d - 2);
    const double integral = exact::capacity_integral(ones);
    const double rel_i = std::abs(integral - target) / target;
    worst_integral = std::max(worst_integral, rel_i);
    c.require(rel_i <= 1e-10,
              strf("axis integral at d=%d off by rel %.3g", d, rel_i));

    const double cap = exact::ellipsoid_capacity(ones);
    const double rel_c = std::abs(cap - bc.kappa) / bc.kappa;
    worst_cap = std::max(worst_cap, rel_c);
    c.require(rel_c <= 1e-9,
              strf("unit capacity at d=%d off by rel %.3g", d, rel_c));

    c.require(exact::ellipsoid_torsion(ones) == bc.tau,
              strf("unit torsion not bit-exact at d=%d", d));
  }
  if (c.ok)
    c.detail = strf(
        "d=3..10: axis integral rel <= %.2g, capacity rel <= %.2g, "
        "torsion bit-exact",
        worst_integral, worst_cap);
  return c;
}

// 2. quadrature against the symmetric elliptic integral oracle
Check criterion_elliptic_oracle(std::uint64_t seed) {
  Check c;
  RngStream rng(seed, 201);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    std::vector<double> v(3);
    for (double& x : v) x = 0.1 + 9.9 * rng.next_double();
    const AxisVector a(std::move(v));
    const double integral = exact::capacity_integral(a);
    const double oracle =
        2.0 * carlson_rf(a[0] * a[0], a[1] * a[1], a[2] * a[2]);
    const double rel = std::abs(integral - oracle) / integral;
    worst = std::max(worst, rel);
    c.require(rel <= 1e-10,
              strf("draw %d: quadrature vs duplication rel %.3g", i, rel));
  }
  if (c.ok) c.detail = strf("100 axis draws, worst rel gap %.2g", worst);
  return c;
}

// 3. spheroid capacity against its closed form
Check criterion_spheroid_closed_form() {
  Check c;
  double worst = 0.0;
  for (const double a : {1.5, 2.0, 5.0, 50.0}) {
    const double cap = exact::ellipsoid_capacity(AxisVector{a, 1.0, 1.0});
    const double f = std::sqrt(a * a - 1.0);
    const double closed = 8.0 * kPi * f / std::log((a + f) / (a - f));
    const double rel = std::abs(cap - closed) / closed;
    worst = std::max(worst, rel);
    c.require(rel <= 1e-9, strf("a=%g: rel %.3g", a, rel));
  }
  if (c.ok) c.detail = strf("a in {1.5,2,5,50}, worst rel %.2g", worst);
  return c;
}

// 4. inequality suite on random ellipsoids
Check criterion_inequality_suite(std::uint64_t seed) {
  Check c;
  RngStream rng(seed, 401);
  int violations = 0;
  std::string first;
  auto violate = [&](const std::string& what) {
    if (violations++ == 0) first = what;
  };

  for (int i = 0; i < 1000; ++i) {
    const int d = 3 + int(i % 3);
    const AxisVector a = log_uniform_axes(rng, d);
    const auto bc = geometry::ball_constants(d);
    const double integral = exact::capacity_integral(a);

    if (!(exact::saint_venant_ratio(a) <= 1.0 + 1e-12))
      violate(strf("rigidity ratio > 1 at i=%d", i));
    if (!(exact::isocapacitary_ratio(a) >= 1.0 - 1e-12))
      violate(strf("capacity ratio < 1 at i=%d", i));
    if (!(bounds::capacity_integral_lower(a) <= integral * (1.0 + 1e-12)))
      violate(strf("integral lower bracket at i=%d", i));
    if (!(integral <= bounds::capacity_integral_upper(a) * (1.0 + 1e-12)))
      violate(strf("integral upper bracket at i=%d", i));

    const double cap = 2.0 * bc.kappa / double(d - 2) / integral;
    const double tor = exact::ellipsoid_torsion(a);
    const double vol = bc.omega * a.product();
    for (const double q : {0.0, -0.5, -2.0}) {
      const double g = exact::g_q(cap, tor, vol, q, d).g_q;
      if (!(g >= exact::g_q_ball(d, q) * (1.0 - 1e-10)))
        violate(strf("ball minimality q=%g, i=%d", q, i));
    }
    for (const double q : {1.0, 1.5, 2.0}) {
      const double g = exact::g_q(cap, tor, vol, q, d).g_q;
      const auto tc = bounds::theorem_constants(d, q);
      const double log_bound =
          tc.sup_coeff->log() + std::log(exact::g_q_ball(d, q));
      if (!(std::log(g) <= log_bound + 1e-10))
        violate(strf("sup bound q=%g, i=%d", q, i));
    }
    for (const double q : {0.1, 0.25}) {
      const double g = exact::g_q(cap, tor, vol, q, d).g_q;
      const auto tc = bounds::theorem_constants(d, q);
      const double log_bound =
          tc.inf_coeff->log() + std::log(exact::g_q_ball(d, q));
      if (!(std::log(g) >= log_bound - 1e-10))
        violate(strf("inf bound q=%g, i=%d", q, i));
    }
  }
  c.require(violations == 0,
            strf("%d violations; first: %s", violations, first.c_str()));
  if (c.ok)
    c.detail =
        "1000 ellipsoids (d in {3,4,5}): rigidity/capacity ratios, integral "
        "brackets, ball minimality, sup/inf bounds all hold";
  return c;
}

// 5. collapse families drive the functional in the proven directions
Check criterion_family_directions() {
  Check c;

  double prev = -1e308;
  double needle_last = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const double eps = std::pow(10.0, -k);
    const double v = constructions::prolate_family(eps, 0.5, 3).value;
    c.require(v > prev, strf("needle value not increasing at eps=1e-%d", k));
    prev = v;
    needle_last = v;
  }
  const double ratio =
      needle_last / constructions::prolate_asymptote(1e-6, 0.5, 3);
  c.require(std::abs(ratio - 1.0) <= 0.10,
            strf("needle exact/asymptote ratio %.4f at eps=1e-6", ratio));

  prev = 1e308;
  double flat_last = 0.0;
  for (int k = 1; k <= 5; ++k) {
    const double v =
        constructions::oblate_family(std::pow(10.0, -k), 0.5, 3).value;
    c.require(v < prev, strf("flat-collapse value not decreasing at 1e-%d", k));
    prev = v;
    flat_last = v;
  }
  c.require(flat_last < 0.01 * exact::g_q_ball(3, 0.5),
            strf("flat-collapse tail %.4g not under 1%% of ball", flat_last));

  const double slab = constructions::pancake(1e-4, 1.0, 3).value;
  c.require(slab > 10.0 * exact::g_q_ball(3, 1.0),
            strf("slab-plus-ball bound %.4g not above 10x ball", slab));

  double worst_law = 0.0;
  for (const double q : {0.5, 1.0, 2.0}) {
    for (const long long n : {1LL, 2LL, 4LL}) {
      const double b1 = constructions::ball_packing(n, q, 3, 8.3).value;
      const double b2 = constructions::ball_packing(2 * n, q, 3, 8.3).value;
      const double target = std::pow(2.0, -2.0 * q);
      const double rel = std::abs(b2 / b1 - target) / target;
      worst_law = std::max(worst_law, rel);
      c.require(rel <= 1e-12,
                strf("packing power law q=%g n=%lld rel %.3g", q, n, rel));
    }
  }
  if (c.ok)
    c.detail = strf(
        "needle ratio %.4f, flat tail %.3g, slab bound %.4g, "
        "packing law rel <= %.2g",
        ratio, flat_last, slab, worst_law);
  return c;
}

// 6. walk-on-spheres estimators against closed forms
Check criterion_wos_oracles(std::uint64_t seed, long long walkers) {
  Check c;
  montecarlo::WosConfig cfg;
  cfg.walkers = walkers;
  cfg.seed = seed;
  cfg.shell_eps = 1e-3;
  cfg.threads = 1;
  const auto bc = geometry::ball_constants(3);

  Timer t1;
  const auto tor = montecarlo::wos_torsion(Body::ball(3, 1.0), cfg);
  const double sec1 = t1.elapsed();
  const double rel_t = std::abs(tor.value - bc.tau) / bc.tau;
  c.require(rel_t <= 0.02, strf("ball rigidity rel %.4f", rel_t));
  c.require(sec1 < 30.0, strf("ball rigidity took %.1f s", sec1));

  Timer t2;
  const auto cap = montecarlo::wos_capacity(Body::ball(3, 1.0), cfg);
  const double sec2 = t2.elapsed();
  const double rel_c = std::abs(cap.value - bc.kappa) / bc.kappa;
  c.require(rel_c <= 0.02, strf("ball capacity rel %.4f", rel_c));
  c.require(sec2 < 30.0, strf("ball capacity took %.1f s", sec2));

  Timer t3;
  const AxisVector e211{2.0, 1.0, 1.0};
  const double cap_exact = exact::ellipsoid_capacity(e211);
  const auto cap_e = montecarlo::wos_capacity(Body::ellipsoid(e211), cfg);
  const double sec3 = t3.elapsed();
  const double rel_e = std::abs(cap_e.value - cap_exact) / cap_exact;
  c.require(rel_e <= 0.03, strf("ellipsoid capacity rel %.4f", rel_e));
  c.require(sec3 < 30.0, strf("ellipsoid capacity took %.1f s", sec3));

  if (c.ok)
    c.detail = strf(
        "rigidity rel %.4f, ball capacity rel %.4f, ellipsoid capacity "
        "rel %.4f (%lld walkers each)",
        rel_t, rel_c, rel_e, walkers);
  return c;
}

// 7. enclosing-ellipsoid machinery and the certified interval
Check criterion_sandwich(std::uint64_t seed, long long walkers) {
  Check c;

  const Body cube = Body::unit_cube(3);
  const auto& cube_pts = cube.as<geometry::VPolytope>()->vertices;
  const auto mv = john::mvee(cube_pts, 1e-9);
  const double target = std::sqrt(3.0) / 2.0;
  double worst_axis = 0.0;
  for (int i = 0; i < 3; ++i)
    worst_axis = std::max(worst_axis, std::abs(mv.semi_axes[i] - target));
  c.require(worst_axis <= 1e-6,
            strf("cube enclosing ellipsoid axes off by %.3g", worst_axis));

  int bad = 0;
  std::string first;
  auto violate = [&](const std::string& what) {
    if (bad++ == 0) first = what;
  };
  for (int i = 0; i < 50; ++i) {
    const int d = 3 + (i % 2);
    RngStream rng(seed, 700 + std::uint64_t(i));
    const int m = d + 4 + (i % 8);
    std::vector<std::vector<double>> pts(
        static_cast<std::size_t>(m),
        std::vector<double>(static_cast<std::size_t>(d), 0.0));
    for (auto& p : pts)
      for (double& x : p) x = 2.0 * rng.next_double() - 1.0;
    try {
      const auto res = john::mvee(pts, 1e-7);
      for (const auto& p : pts) {
        double s = 0.0;
        for (int r = 0; r < d; ++r) {
          double mx = 0.0;
          for (int k = 0; k < d; ++k)
            mx += res.shape[std::size_t(r) * d + k] *
                  (p[std::size_t(k)] - res.center[std::size_t(k)]);
          s += (p[std::size_t(r)] - res.center[std::size_t(r)]) * mx;
        }
        if (!(s <= 1.0 + 1e-6)) violate(strf("point outside at i=%d", i));
      }
      // shrink by d about the center must land inside the hull
      const geometry::ConvexHull hull(pts);
      std::vector<double> evals;
      std::vector<double> evecs;
      linalg::jacobi_eigen(d, res.shape, evals, &evecs);
      std::vector<double> u(static_cast<std::size_t>(d)), x(static_cast<std::size_t>(d));
      for (int s2 = 0; s2 < 20; ++s2) {
        rng.fill_unit_vector(u);
        const double radius = std::pow(rng.next_double(), 1.0 / d);
        for (int r = 0; r < d; ++r) {
          double acc = 0.0;
          for (int k = 0; k < d; ++k)
            acc += evecs[std::size_t(r) * d + k] /
                   std::sqrt(evals[std::size_t(k)]) * radius *
                   u[std::size_t(k)];
          x[std::size_t(r)] = res.center[std::size_t(r)] + acc / d;
        }
        if (!hull.contains(x, 1e-7))
          violate(strf("shrunk sample escaped hull at i=%d", i));
      }
    } catch (const std::exception& e) {
      violate(strf("i=%d: %s", i, e.what()));
    }
  }
  c.require(bad == 0, strf("%d failures; first: %s", bad, first.c_str()));

  const auto sw = bounds::sandwich_g_q(cube, 1.0);
  montecarlo::WosConfig cfg;
  cfg.walkers = walkers;
  cfg.seed = seed;
  cfg.threads = 1;
  const auto mc = montecarlo::g_q_monte_carlo(cube, 1.0, cfg);
  c.require(sw.lower - 3.0 * mc.std_error <= mc.value &&
                mc.value <= sw.upper + 3.0 * mc.std_error,
            strf("interval [%.4g, %.4g] misses estimate %.4g +- %.2g",
                 sw.lower, sw.upper, mc.value, mc.std_error));
  if (c.ok)
    c.detail = strf(
        "cube axes off %.2g, 50 polytopes contained both ways, cube "
        "interval [%.4g, %.4g] holds estimate %.4g",
        worst_axis, sw.lower, sw.upper, mc.value);
  return c;
}

// 8. extremal search regimes
Check criterion_search_regimes() {
  Check c;
  using optimize::Direction;

  const auto r1 =
      optimize::optimize_ellipsoid(-1.0, 3, Direction::minimize);
  c.require(!r1.degenerated, "q=-1 minimize ran into the wall");
  c.require(r1.best_axes.aspect_ratio() <= 1.0 + 1e-3,
            strf("q=-1 minimum aspect %.6f", r1.best_axes.aspect_ratio()));
  const double ball_val = exact::g_q_ball(3, -1.0);
  c.require(std::abs(r1.best_value - ball_val) <= 1e-8,
            strf("q=-1 minimum off the ball value by %.3g",
                 std::abs(r1.best_value - ball_val)));

  const auto r2 = optimize::optimize_ellipsoid(2.0, 3, Direction::maximize);
  c.require(!r2.degenerated, "q=2 maximize ran into the wall");
  const auto tc = bounds::theorem_constants(3, 2.0);
  const double log_bound =
      tc.sup_coeff->log() + std::log(exact::g_q_ball(3, 2.0));
  c.require(std::log(r2.best_value) <= log_bound + 1e-10,
            strf("q=2 maximum %.6g above its bound", r2.best_value));
  const auto chk = optimize::check_extremal_diam_ratio(r2);
  c.require(chk.applicable && chk.within,
            strf("q=2 aspect certificate failed (log ratio %.3g vs %.3g)",
                 chk.log_ratio, chk.log_bound));

  const auto r3 = optimize::optimize_ellipsoid(0.5, 3, Direction::maximize);
  c.require(r3.degenerated, "q=1/2 maximize failed to reach the wall");
  const auto r4 = optimize::optimize_ellipsoid(0.5, 3, Direction::minimize);
  c.require(r4.degenerated, "q=1/2 minimize failed to reach the wall");

  if (c.ok)
    c.detail = strf(
        "ball minimum within %.2g, bounded maximum %.6g under its bound, "
        "both q=1/2 directions degenerate",
        std::abs(r1.best_value - ball_val), r2.best_value);
  return c;
}

// 9. planar functional: closed form, envelopes, degeneration directions
Check criterion_planar_suite(std::uint64_t seed) {
  Check c;
  using optimize::Direction;

  double worst_ball = 0.0;
  for (const double q : {0.0, 0.5, 1.0}) {
    const double closed = std::pow(8.0, -q) * std::pow(kPi, -(q + 0.5));
    const double rel = std::abs(exact::h_q_ball(q) - closed) / closed;
    worst_ball = std::max(worst_ball, rel);
    c.require(rel <= 1e-12, strf("disc value q=%g rel %.3g", q, rel));
  }

  RngStream rng(seed, 901);
  int bad = 0;
  std::string first;
  for (int i = 0; i < 500; ++i) {
    double a1 = std::exp(std::log(0.1) + rng.next_double() * std::log(100.0));
    double a2 = std::exp(std::log(0.1) + rng.next_double() * std::log(100.0));
    if (a2 > a1) std::swap(a1, a2);
    for (const double q : {0.0, 0.5, 1.0}) {
      const auto env = bounds::h_q_envelope(a1, a2, q);
      const double h = exact::h_q_ellipse(a1, a2, q);
      if (!(env.first * (1.0 - 1e-9) <= h &&
            h <= env.second * (1.0 + 1e-9))) {
        if (bad++ == 0)
          first = strf("envelope miss i=%d q=%g (%.3g vs [%.3g, %.3g])", i,
                       q, h, env.first, env.second);
      }
    }
  }
  c.require(bad == 0, strf("%d envelope misses; first: %s", bad,
                           first.c_str()));

  const auto up = optimize::optimize_ellipse_planar(0.25, Direction::maximize);
  c.require(up.degenerated, "planar q=1/4 maximize failed to degenerate");
  const auto dn = optimize::optimize_ellipse_planar(1.0, Direction::minimize);
  c.require(dn.degenerated, "planar q=1 minimize failed to degenerate");

  if (c.ok)
    c.detail = strf(
        "disc closed form rel <= %.2g, 500 ellipses inside the envelopes, "
        "both planar degeneration directions reproduced",
        worst_ball);
  return c;
}

const std::vector<std::string>& provenance_for(int index) {
  static const std::vector<std::vector<std::string>> table = {
      {},                                  // 0 unused
      {"exact", "quadrature"},             // 1
      {"quadrature"},                      // 2
      {"exact", "quadrature"},             // 3
      {"exact", "quadrature", "bound"},    // 4
      {"exact", "quadrature", "bound"},    // 5
      {"monte-carlo", "exact"},            // 6
      {"bound", "monte-carlo"},            // 7
      {"quadrature", "bound"},             // 8
      {"exact", "bound"},                  // 9
      {"exact"},                           // 10
  };
  return table[std::size_t(index)];
}

std::string build_manifest(const VerifyOptions& opt,
                           const std::vector<CriterionResult>& results,
                           bool all_passed) {
  nlohmann::json j;
  j["artifact"] = {{"name", "captor"}, {"version", kVersion}};
  j["command"] = "verify";
  j["options"] = {{"seed", opt.seed}, {"walkers", opt.walkers}};
  // deliberately constant: manifests must be byte-stable across runs
  j["timestamp"] = "";
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    arr.push_back({{"index", r.index},
                   {"name", r.name},
                   {"passed", r.passed},
                   {"detail", r.detail},
                   {"provenance", provenance_for(r.index)}});
  }
  j["criteria"] = std::move(arr);
  j["all_passed"] = all_passed;
  return j.dump(2) + "\n";
}

}  // namespace

VerifyRun run_acceptance(const VerifyOptions& opt) {
  VerifyRun run;
  auto add = [&](CriterionResult r) { run.results.push_back(std::move(r)); };

  add(run_criterion(1, "ball-identities", 1.0,
                    [&] { return criterion_ball_identities(); }));
  add(run_criterion(2, "elliptic-integral-oracle", 5.0,
                    [&] { return criterion_elliptic_oracle(opt.seed); }));
  add(run_criterion(3, "spheroid-capacity-closed-form", 1e9,
                    [&] { return criterion_spheroid_closed_form(); }));
  add(run_criterion(4, "ellipsoid-inequality-suite", 60.0,
                    [&] { return criterion_inequality_suite(opt.seed); }));
  add(run_criterion(5, "collapse-family-directions", 1e9,
                    [&] { return criterion_family_directions(); }));
  add(run_criterion(6, "walk-on-spheres-oracles", 120.0, [&] {
    return criterion_wos_oracles(opt.seed, opt.walkers);
  }));
  add(run_criterion(7, "enclosing-ellipsoid-sandwich", 1e9, [&] {
    return criterion_sandwich(opt.seed, opt.walkers);
  }));
  add(run_criterion(8, "extremal-search-regimes", 300.0,
                    [&] { return criterion_search_regimes(); }));
  add(run_criterion(9, "planar-suite", 10.0,
                    [&] { return criterion_planar_suite(opt.seed); }));

  run.all_passed =
      std::all_of(run.results.begin(), run.results.end(),
                  [](const CriterionResult& r) { return r.passed; });
  run.manifest = build_manifest(opt, run.results, run.all_passed);
  return run;
}

VerifyRun run_acceptance_with_determinism(const VerifyOptions& opt) {
  VerifyRun first = run_acceptance(opt);
  Timer t;
  const VerifyRun second = run_acceptance(opt);

  CriterionResult c10;
  c10.index = 10;
  c10.name = "manifest-determinism";
  c10.seconds = t.elapsed();
  c10.passed = first.manifest == second.manifest;
  c10.detail =
      c10.passed
          ? strf("two runs, identical %zu-byte manifests",
                 first.manifest.size())
          : "manifests differ between identical runs";
  first.results.push_back(std::move(c10));
  first.all_passed =
      std::all_of(first.results.begin(), first.results.end(),
                  [](const CriterionResult& r) { return r.passed; });
  first.manifest = build_manifest(opt, first.results, first.all_passed);
  return first;
}

}  // namespace captor::verify
