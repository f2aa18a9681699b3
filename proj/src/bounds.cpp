#include "captor/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "captor/john.hpp"

namespace captor::bounds {

using captor::GeometryError;

LogValue LogValue::from_log(double natural_log) {
  if (!std::isfinite(natural_log))
    throw GeometryError("LogValue: log must be finite");
  return LogValue(natural_log);
}

LogValue LogValue::from_value(double v) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw GeometryError("LogValue: value must be positive and finite");
  return LogValue(std::log(v));
}

double LogValue::value() const { return std::exp(ln_); }

std::string LogValue::str() const {
  char buf[64];
  if (std::fabs(log10()) < 15.0) {
    std::snprintf(buf, sizeof buf, "%.12g", value());
  } else {
    std::snprintf(buf, sizeof buf, "log10 = %.12g", log10());
  }
  return buf;
}

LogValue LogValue::operator*(const LogValue& o) const {
  return LogValue(ln_ + o.ln_);
}

LogValue LogValue::operator/(const LogValue& o) const {
  return LogValue(ln_ - o.ln_);
}

LogValue LogValue::pow(double e) const { return LogValue(ln_ * e); }

namespace {

const double kLn2 = std::log(2.0);

}  // namespace

TheoremConstants theorem_constants(int d, double q) {
  if (d < 3) throw GeometryError("theorem_constants: d must be >= 3");
  if (!std::isfinite(q)) throw GeometryError("theorem_constants: q not finite");
  TheoremConstants tc;
  tc.d = d;
  tc.q = q;
  tc.q_critical = (d - 2.0) / (2.0 * (d - 1.0));
  const double ld = std::log(double(d));
  if (q >= 1.0) {
    const double ln_sup = 0.5 * (d + 2) * kLn2 +
                          (3.0 * q - 2.0 + d * (q + 1.0)) * ld -
                          std::log(double(d - 2));
    tc.sup_coeff = LogValue::from_log(ln_sup);
    if (q > 1.0)
      tc.sup_diam_ratio = LogValue::from_log(
          std::log(2.0 * d) + ln_sup * d / (2.0 * (q - 1.0)));
  }
  if (d == 3 && q == 1.0)
    tc.sup_diam_ratio_d3q1 =
        LogValue::from_log(kLn2 + 8.0 * std::log(3.0) + 2187.0);
  if (q > 0.0 && q <= tc.q_critical) {
    const double ln_inv = kLn2 + (d + (d + 2.0) * q) * ld;  // log of 2 d^{...}
    tc.inf_coeff = LogValue::from_log(-ln_inv);
    if (q < tc.q_critical) {
      const double expo =
          d * (d - 1.0) / (d - 2.0 - 2.0 * q * (d - 1.0));
      tc.inf_diam_ratio = LogValue::from_log(std::log(2.0 * d) + expo * ln_inv);
    }
  }
  return tc;
}

double capacity_integral_lower(const AxisVector& a) {
  const int d = a.dim();
  if (d < 3) throw GeometryError("capacity_integral_lower: d must be >= 3");
  return std::exp(-0.5 * d * kLn2) * a.smallest() * a.smallest() / a.product();
}

double capacity_integral_upper(const AxisVector& a) {
  const int d = a.dim();
  if (d < 3) throw GeometryError("capacity_integral_upper: d must be >= 3");
  double prod = 1.0;  // empty product for d = 3 is 1
  for (int i = 0; i + 2 < d; ++i) prod *= a[i];
  return 4.0 / prod * std::log(M_E * a[d - 3] / a[d - 2]);
}

LogInequalityCheck elementary_log_inequalities(double x, int d) {
  if (!(x > 0.0 && x < 1.0))
    throw GeometryError("elementary_log_inequalities: x must be in (0,1)");
  if (d < 3) throw GeometryError("elementary_log_inequalities: d must be >= 3");
  LogInequalityCheck c;
  const double log_inv = std::log(1.0 / x);
  c.lhs1 = log_inv / (1.0 - x);
  c.rhs1 = 1.0 + log_inv;  // log(e/x)
  c.holds1 = c.lhs1 <= c.rhs1;
  c.lhs2 = std::pow(x, 1.0 / (d - 1.0)) * (1.0 + log_inv);
  c.rhs2 = d - 1.0;
  c.holds2 = c.lhs2 <= c.rhs2;
  return c;
}

namespace {

Sandwich sandwich_from_axes(const AxisVector& inner, const AxisVector& outer,
                            double volume, double q,
                            const QuadratureConfig& cfg) {
  const int d = inner.dim();
  const double e = 1.0 + q + 2.0 * (q - 1.0) / d;
  const double log_v = std::log(volume);
  const double log_cap_in =
      std::log(exact::ellipsoid_capacity(inner, cfg));
  const double log_cap_out =
      std::log(exact::ellipsoid_capacity(outer, cfg));
  const double log_t_in = std::log(exact::ellipsoid_torsion(inner));
  const double log_t_out = std::log(exact::ellipsoid_torsion(outer));
  // torsion enters as T^q: for q < 0 the larger torsion gives the smaller
  // factor, so the roles swap
  const double lo_t = q >= 0.0 ? log_t_in : log_t_out;
  const double hi_t = q >= 0.0 ? log_t_out : log_t_in;
  Sandwich s{std::exp(log_cap_in + q * lo_t - e * log_v),
             std::exp(log_cap_out + q * hi_t - e * log_v), inner, outer};
  return s;
}

}  // namespace

Sandwich sandwich_g_q(const Body& body, double q, const QuadratureConfig& cfg,
                      double mvee_tol) {
  const int d = body.dim();
  if (d < 3) throw GeometryError("sandwich_g_q: d must be >= 3");
  if (body.as<geometry::DisjointUnion>())
    throw GeometryError("sandwich_g_q: body must be convex");
  if (const auto* e = body.as<geometry::Ellipsoid>()) {
    const double v = exact::g_q_ellipsoid(e->axes, q, cfg).g_q;
    return {v, v, e->axes, e->axes};
  }
  if (const auto* ball = body.as<geometry::Ball>()) {
    const AxisVector a(std::vector<double>(d, ball->radius));
    const double v = exact::g_q_ellipsoid(a, q, cfg).g_q;
    return {v, v, a, a};
  }
  const auto* poly = body.as<geometry::VPolytope>();
  const auto [inner, outer] = john::sandwich_axes(poly->vertices, mvee_tol);
  return sandwich_from_axes(inner, outer, geometry::volume(body), q, cfg);
}

PlanarConstants planar_constants(double q) {
  if (!std::isfinite(q)) throw GeometryError("planar_constants: q not finite");
  PlanarConstants pc;
  pc.q = q;
  const double ln_h_ball = std::log(exact::h_q_ball(q));
  if (q >= 0.5) {
    pc.sup_bound = LogValue::from_log((1.0 + 5.0 * q) * kLn2 + ln_h_ball);
    if (q > 0.5)
      pc.sup_diam_ratio =
          LogValue::from_log(14.0 * q * kLn2 - std::log(2.0 * q - 1.0));
  }
  if (q <= 0.5) {
    pc.inf_bound = LogValue::from_log(-2.0 * (1.0 + 2.0 * q) * kLn2 + ln_h_ball);
    if (q < 0.5)
      pc.inf_diam_ratio =
          LogValue::from_log(2.0 * (3.0 + 2.0 * q) / (1.0 - 2.0 * q) * kLn2);
  }
  return pc;
}

std::pair<double, double> h_q_envelope(double a1, double a2, double q) {
  if (!(a1 >= a2 && a2 > 0.0))
    throw GeometryError("h_q_envelope: need a1 >= a2 > 0");
  if (!(q >= 0.0))
    throw GeometryError("h_q_envelope: derivation requires q >= 0");
  const double scale = exact::h_q_ball(q);
  const double shape = std::pow(a2 / a1, q - 0.5);
  const double lower = std::exp(-2.0 * (1.0 + 2.0 * q) * kLn2) * scale * shape;
  const double upper = std::exp((1.0 + 5.0 * q) * kLn2) * scale * shape;
  return {lower, upper};
}

}  // namespace captor::bounds
