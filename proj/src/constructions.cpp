#include "captor/constructions.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "captor/errors.hpp"
#include "captor/exact.hpp"

namespace captor::constructions {

using geometry::AxisVector;
using geometry::Body;
using captor::GeometryError;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double measure_exponent(double q, int d) {
  return 1.0 + q + 2.0 * (q - 1.0) / d;
}

double pancake_bound_value(double eps, double q, int d) {
  const auto bc = geometry::ball_constants(d);
  const double r = std::pow(1.0 / (2.0 * bc.omega), 1.0 / d);
  const double t_ball = bc.tau * std::pow(r, d + 2.0);
  // (2 omega eps)^{(d-2)/(1-d)} is L^{d-2}, the flat-disc capacity scale
  return pancake_coefficient(d) * std::pow(t_ball, q) *
         std::pow(2.0 * bc.omega * eps, double(d - 2) / (1.0 - d));
}

double packing_bound_value(double n, double q, int d, double cube_capacity) {
  const auto bc = geometry::ball_constants(d);
  return std::pow(2.0, d - 2) *
         std::pow(bc.omega, -measure_exponent(q, d)) * cube_capacity *
         std::pow(bc.tau, q) * std::pow(n, -2.0 * q);
}

AxisVector prolate_axes(double eps, int d) {
  std::vector<double> a(std::size_t(d), eps);
  a[0] = 1.0;
  return AxisVector(std::move(a));
}

AxisVector oblate_axes(double a_d, int d) {
  std::vector<double> a(std::size_t(d),
                        std::pow(a_d, -1.0 / double(d - 1)));
  a[std::size_t(d) - 1] = a_d;
  return AxisVector(std::move(a));
}

AxisVector multi_collapse_axes(int k, double eps, int d) {
  std::vector<double> a(std::size_t(d), 1.0);
  for (int i = d - k; i < d; ++i) a[std::size_t(i)] = eps;
  return AxisVector(std::move(a));
}

}  // namespace

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::exact: return "exact";
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::asymptotic: return "asymptotic";
  }
  return "?";
}

double pancake_coefficient(int d) {
  if (d < 3) throw GeometryError("pancake family needs d >= 3");
  const double logc = std::log(4.0) + 0.5 * (d - 1) * std::log(kPi) +
                      std::lgamma(0.5 * (d - 1)) - std::lgamma(0.5 * d) -
                      std::lgamma(0.5 * (d - 2));
  return std::exp(logc);
}

FamilyPoint pancake(double eps, double q, int d) {
  if (!(eps > 0.0 && eps < 1.0))
    throw GeometryError("pancake: eps must lie in (0, 1)");
  if (d < 3) throw GeometryError("pancake family needs d >= 3");
  if (!(q >= 0.0))
    throw GeometryError("pancake: the bound direction needs q >= 0");
  const auto bc = geometry::ball_constants(d);
  const double big = std::pow(2.0 * bc.omega * eps, 1.0 / (1.0 - d));

  std::vector<double> axes(std::size_t(d), big);
  axes[std::size_t(d) - 1] = eps;
  Body slab = Body::ellipsoid(AxisVector(std::move(axes)));

  // companion ball of measure 1/2, stacked clear of the slab along the
  // short direction
  const double r = std::pow(1.0 / (2.0 * bc.omega), 1.0 / d);
  const double short_axis = slab.as<geometry::Ellipsoid>()->axes.smallest();
  std::vector<double> center(std::size_t(d), 0.0);
  center[std::size_t(d) - 1] = short_axis + 1.5 * r;
  Body ball = Body::ball(r, std::move(center));

  std::vector<Body> parts;
  parts.push_back(std::move(slab));
  parts.push_back(std::move(ball));
  return {eps, Body::disjoint_union(std::move(parts)),
          pancake_bound_value(eps, q, d), BoundKind::lower};
}

double ball_packing_torsion(long long n, int d) {
  if (n < 1) throw GeometryError("ball_packing: n must be positive");
  if (d < 3) throw GeometryError("ball_packing needs d >= 3");
  const auto bc = geometry::ball_constants(d);
  // n^d balls of radius 1/(2n): n^d tau (2n)^{-(d+2)}
  return bc.tau * std::pow(2.0, -(d + 2.0)) / double(n * n);
}

double ball_packing_measure(int d) {
  if (d < 3) throw GeometryError("ball_packing needs d >= 3");
  return geometry::unit_ball_volume(d) * std::pow(2.0, -d);
}

FamilyPoint ball_packing(long long n, double q, int d, double cube_capacity) {
  if (n < 1) throw GeometryError("ball_packing: n must be positive");
  if (d < 3) throw GeometryError("ball_packing needs d >= 3");
  if (!(cube_capacity > 0.0))
    throw GeometryError("ball_packing: cube capacity must be positive");
  double count = std::pow(double(n), d);
  if (count > 8192.0)
    throw GeometryError("ball_packing: more than 8192 balls requested");

  const double radius = 0.5 / double(n);
  std::vector<Body> balls;
  balls.reserve(std::size_t(count));
  std::vector<long long> idx(std::size_t(d), 0);
  for (;;) {
    std::vector<double> center(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      center[std::size_t(i)] = double(2 * idx[std::size_t(i)] + 1) * radius;
    balls.push_back(Body::ball(radius, std::move(center)));
    int carry = 0;
    while (carry < d && ++idx[std::size_t(carry)] == n) {
      idx[std::size_t(carry)] = 0;
      ++carry;
    }
    if (carry == d) break;
  }
  Body body = balls.size() == 1 ? std::move(balls.front())
                                : Body::disjoint_union(std::move(balls));
  return {double(n), std::move(body),
          packing_bound_value(double(n), q, d, cube_capacity),
          BoundKind::upper};
}

FamilyPoint prolate_family(double eps, double q, int d,
                           const exact::QuadratureConfig& cfg) {
  if (!(eps > 0.0 && eps <= 1.0))
    throw GeometryError("prolate_family: eps must lie in (0, 1]");
  if (d < 3) throw GeometryError("prolate_family needs d >= 3");
  AxisVector a = prolate_axes(eps, d);
  const double value = exact::g_q_ellipsoid(a, q, cfg).g_q;
  return {eps, Body::ellipsoid(std::move(a)), value, BoundKind::exact};
}

double prolate_asymptote(double eps, double q, int d) {
  if (!(eps > 0.0 && eps < 1.0))
    throw GeometryError("prolate_asymptote: eps must lie in (0, 1)");
  if (d < 3) throw GeometryError("prolate_asymptote needs d >= 3");
  const auto bc = geometry::ball_constants(d);
  // Needle capacity: the d = 3 needle decays only logarithmically; for
  // d > 3 it scales like eps^{d-3} with an explicit Gamma-ratio constant.
  double cap;
  if (d == 3) {
    cap = 4.0 * kPi / std::log(1.0 / eps);
  } else {
    cap = 2.0 * std::pow(kPi, 0.5 * d) * (d - 3) /
          std::tgamma(0.5 * d) * std::pow(eps, d - 3.0);
  }
  // torsion of the needle in closed form, measure exactly
  const double torsion = bc.omega / (d + 2.0) * std::pow(eps, d + 1.0) /
                         (d - 1.0 + eps * eps);
  const double measure = bc.omega * std::pow(eps, d - 1.0);
  return cap * std::pow(torsion, q) *
         std::pow(measure, -measure_exponent(q, d));
}

FamilyPoint oblate_family(double a_d, double q, int d,
                          const exact::QuadratureConfig& cfg) {
  if (!(a_d > 0.0 && a_d <= 1.0))
    throw GeometryError("oblate_family: a_d must lie in (0, 1]");
  if (d < 3) throw GeometryError("oblate_family needs d >= 3");
  AxisVector a = oblate_axes(a_d, d);
  const double value = exact::g_q_ellipsoid(a, q, cfg).g_q;
  return {a_d, Body::ellipsoid(std::move(a)), value, BoundKind::exact};
}

double oblate_bound(double a_d, double q, int d) {
  if (!(a_d > 0.0 && a_d <= 1.0))
    throw GeometryError("oblate_bound: a_d must lie in (0, 1]");
  if (d < 3) throw GeometryError("oblate_bound needs d >= 3");
  if (!(q >= 0.0))
    throw GeometryError("oblate_bound: the bound direction needs q >= 0");
  const auto bc = geometry::ball_constants(d);
  // cap <= kappa a_1^{d-2} (enclosing ball) and T <= omega a_d^2/(d+2)
  const double coeff =
      bc.kappa * std::pow(bc.omega, -(1.0 + 2.0 * (q - 1.0) / d)) *
      std::pow(d + 2.0, -q);
  return coeff *
         std::pow(a_d, 2.0 * q - double(d - 2) / double(d - 1));
}

bool oblate_bound_vanishes(double q, int d) {
  return q > double(d - 2) / (2.0 * double(d - 1));
}

FamilyPoint multi_collapse_family(int k, double eps, int d,
                                  const exact::QuadratureConfig& cfg) {
  if (d <= 3) throw GeometryError("multi_collapse_family needs d > 3");
  if (k < 1 || k > d - 1)
    throw GeometryError("multi_collapse_family: k must lie in [1, d-1]");
  if (!(eps > 0.0 && eps <= 1.0))
    throw GeometryError("multi_collapse_family: eps must lie in (0, 1]");
  AxisVector a = multi_collapse_axes(k, eps, d);
  const double value = exact::g_q_ellipsoid(a, 1.0, cfg).g_q;
  return {eps, Body::ellipsoid(std::move(a)), value, BoundKind::exact};
}

std::vector<SweepRow> sweep(Family family,
                            const std::vector<double>& parameters,
                            const SweepOptions& opt) {
  std::vector<SweepRow> rows;
  rows.reserve(parameters.size());
  if (family == Family::multi_collapse) {
    if (opt.d <= 3) throw GeometryError("multi_collapse sweep needs d > 3");
    if (opt.k < 1 || opt.k > opt.d - 1)
      throw GeometryError("multi_collapse sweep: k must lie in [1, d-1]");
  }

  // Exact G_q with the quadrature error surfaced, so the sweep can stop
  // cleanly once the axis integral degrades.
  auto exact_value = [&](const AxisVector& a, double q,
                         double* rel_error) -> double {
    const auto detail = exact::capacity_integral_detail(a, opt.quadrature);
    *rel_error = detail.value != 0.0
                     ? std::abs(detail.error_estimate / detail.value)
                     : 1.0;
    const auto bc = geometry::ball_constants(a.dim());
    const double cap = 2.0 * bc.kappa / double(a.dim() - 2) / detail.value;
    const double torsion = exact::ellipsoid_torsion(a);
    const double measure = bc.omega * a.product();
    return exact::g_q(cap, torsion, measure, q, a.dim()).g_q;
  };

  for (const double p : parameters) {
    SweepRow row;
    row.parameter = p;
    bool stop = false;
    switch (family) {
      case Family::pancake:
        row.bound = pancake_bound_value(p, opt.q, opt.d);
        row.bound_kind = BoundKind::lower;
        break;
      case Family::ball_packing:
        row.bound =
            packing_bound_value(p, opt.q, opt.d, opt.cube_capacity);
        row.bound_kind = BoundKind::upper;
        break;
      case Family::prolate: {
        row.bound_kind = BoundKind::asymptotic;
        row.asymptote = prolate_asymptote(p, opt.q, opt.d);
        double rel = 0.0;
        try {
          row.exact = exact_value(prolate_axes(p, opt.d), opt.q, &rel);
        } catch (const QuadratureError&) {
          stop = true;
          break;
        }
        if (rel > opt.exact_rel_error_stop) {
          stop = true;
          break;
        }
        row.ratio = *row.exact / *row.asymptote;
        break;
      }
      case Family::oblate: {
        row.bound_kind = BoundKind::upper;
        row.bound = oblate_bound(p, opt.q, opt.d);
        double rel = 0.0;
        try {
          row.exact = exact_value(oblate_axes(p, opt.d), opt.q, &rel);
        } catch (const QuadratureError&) {
          stop = true;
          break;
        }
        if (rel > opt.exact_rel_error_stop) {
          stop = true;
          break;
        }
        row.ratio = *row.exact / *row.bound;
        break;
      }
      case Family::multi_collapse: {
        row.bound_kind = BoundKind::exact;
        double rel = 0.0;
        try {
          row.exact =
              exact_value(multi_collapse_axes(opt.k, p, opt.d), 1.0, &rel);
        } catch (const QuadratureError&) {
          stop = true;
          break;
        }
        if (rel > opt.exact_rel_error_stop) stop = true;
        break;
      }
    }
    if (stop) break;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace captor::constructions
