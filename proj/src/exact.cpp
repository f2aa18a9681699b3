#include "captor/exact.hpp"

#include <cmath>

namespace captor::exact {

using captor::GeometryError;

QuadratureResult capacity_integral_detail(const AxisVector& a,
                                          const QuadratureConfig& cfg) {
  const int d = a.dim();
  if (d < 3) throw GeometryError("capacity_integral: d must be >= 3");
  const double ad = a.smallest();
  const double ad2 = ad * ad;
  // aspect ratios beyond ~1e6 square to ~1e12 inside the product; switch to
  // log accumulation before that loses digits
  const bool log_path = a.aspect_ratio() > 1e6;
  const std::vector<double>& ax = a.values();
  auto integrand = [&](double w) -> double {
    const double w2 = w * w;
    const double c = ad2 * (1.0 - w2);
    if (log_path) {
      double ls = 0.0;
      for (double ai : ax) ls += std::log(ai * ai * w2 + c);
      return 2.0 * ad2 * std::exp((d - 3) * std::log(w) - 0.5 * ls);
    }
    double prod = 1.0;
    for (double ai : ax) prod *= ai * ai * w2 + c;
    double wpow = 1.0;
    for (int k = 0; k < d - 3; ++k) wpow *= w;
    return 2.0 * ad2 * wpow / std::sqrt(prod);
  };
  return integrate_adaptive(integrand, 0.0, 1.0, cfg);
}

double capacity_integral(const AxisVector& a, const QuadratureConfig& cfg) {
  return capacity_integral_detail(a, cfg).value;
}

double ellipsoid_capacity(const AxisVector& a, const QuadratureConfig& cfg) {
  const int d = a.dim();
  if (d < 3) throw GeometryError("ellipsoid_capacity: d must be >= 3");
  return 2.0 * geometry::unit_ball_capacity(d) / (d - 2) /
         capacity_integral(a, cfg);
}

double ellipsoid_torsion(const AxisVector& a) {
  const int d = a.dim();
  return geometry::unit_ball_volume(d) * a.product() /
         (static_cast<double>(d + 2) * a.sum_inverse_squares());
}

double torsion_function_value(const AxisVector& a,
                              const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != a.dim())
    throw GeometryError("torsion_function_value: dimension mismatch");
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += x[i] * x[i] / (a[i] * a[i]);
  if (s >= 1.0) return 0.0;
  return (1.0 - s) / (2.0 * a.sum_inverse_squares());
}

namespace {
double measure_exponent(double q, int d) {
  return 1.0 + q + 2.0 * (q - 1.0) / d;
}
}  // namespace

FunctionalValue g_q(double cap, double torsion, double measure, double q,
                    int d) {
  if (d < 3) throw GeometryError("g_q: d must be >= 3");
  if (!(cap > 0.0 && torsion > 0.0 && measure > 0.0))
    throw GeometryError("g_q: cap, torsion, measure must be positive");
  // log assembly: the sweeps push torsion to 1e-30 and below, where direct
  // pow() under/overflows long before the quotient does
  const double lg = std::log(cap) + q * std::log(torsion) -
                    measure_exponent(q, d) * std::log(measure);
  return {cap, torsion, measure, q, std::exp(lg)};
}

FunctionalValue g_q_ellipsoid(const AxisVector& a, double q,
                              const QuadratureConfig& cfg) {
  const int d = a.dim();
  if (d < 3) throw GeometryError("g_q_ellipsoid: d must be >= 3");
  const geometry::BallConstants bc = geometry::ball_constants(d);
  const double integral = capacity_integral(a, cfg);
  // all in logs; see g_q
  double log_axes = 0.0;
  for (double ai : a.values()) log_axes += std::log(ai);
  const double log_cap =
      std::log(2.0 * bc.kappa / (d - 2)) - std::log(integral);
  const double log_t = std::log(bc.omega) - std::log(double(d + 2)) +
                       log_axes - std::log(a.sum_inverse_squares());
  const double log_v = std::log(bc.omega) + log_axes;
  const double lg = log_cap + q * log_t - measure_exponent(q, d) * log_v;
  return {std::exp(log_cap), std::exp(log_t), std::exp(log_v), q,
          std::exp(lg)};
}

double g_q_ball(int d, double q) {
  const geometry::BallConstants bc = geometry::ball_constants(d);
  return bc.kappa * std::pow(bc.tau, q) /
         std::pow(bc.omega, measure_exponent(q, d));
}

double saint_venant_ratio(const AxisVector& a) {
  const int d = a.dim();
  const geometry::BallConstants bc = geometry::ball_constants(d);
  const double vol = bc.omega * a.product();
  const double t_ball_same_vol =
      bc.tau * std::pow(vol / bc.omega, (d + 2.0) / d);
  return ellipsoid_torsion(a) / t_ball_same_vol;
}

double isocapacitary_ratio(const AxisVector& a, const QuadratureConfig& cfg) {
  const int d = a.dim();
  const geometry::BallConstants bc = geometry::ball_constants(d);
  const double vol = bc.omega * a.product();
  const double cap_ball_same_vol =
      bc.kappa * std::pow(vol / bc.omega, (d - 2.0) / d);
  return ellipsoid_capacity(a, cfg) / cap_ball_same_vol;
}

double ellipse_logcap(double a1, double a2) {
  if (!(a1 >= a2 && a2 > 0.0))
    throw GeometryError("ellipse_logcap: need a1 >= a2 > 0");
  return 0.5 * (a1 + a2);
}

double h_q(double cap, double torsion, double area, double q) {
  if (!(cap > 0.0 && torsion > 0.0 && area > 0.0))
    throw GeometryError("h_q: cap, torsion, area must be positive");
  return std::exp(std::log(cap) + q * std::log(torsion) -
                  0.5 * (1.0 + 4.0 * q) * std::log(area));
}

double h_q_ellipse(double a1, double a2, double q) {
  const double cap = ellipse_logcap(a1, a2);
  const double t = ellipsoid_torsion(AxisVector{a1, a2});
  const double area = geometry::unit_ball_volume(2) * a1 * a2;
  return h_q(cap, t, area, q);
}

double h_q_ball(double q) {
  return h_q(1.0, geometry::unit_ball_torsion(2), geometry::unit_ball_volume(2),
             q);
}

}  // namespace captor::exact
