#pragma once

// Closed-form bound coefficients around the capacity-torsion functionals,
// the elementary log inequality toolkit, and certified G_q intervals for
// convex bodies via the enclosing-ellipsoid sandwich.

#include <optional>
#include <string>
#include <utility>

#include "captor/exact.hpp"
#include "captor/geometry.hpp"

namespace captor::bounds {

using exact::QuadratureConfig;
using geometry::AxisVector;
using geometry::Body;

// A positive number carried as its natural log. The degenerate-regime
// constants reach e^{2187}, far past double range, so arithmetic and
// rendering happen in log form throughout.
class LogValue {
 public:
  static LogValue from_log(double natural_log);
  static LogValue from_value(double v);  // v > 0

  double log() const { return ln_; }
  double log10() const { return ln_ / 2.302585092994046; }
  double value() const;  // +inf if out of double range

  // "%.12g" when the value fits in double range, else "log10 = ...".
  std::string str() const;

  LogValue operator*(const LogValue& o) const;
  LogValue operator/(const LogValue& o) const;
  LogValue pow(double e) const;

 private:
  explicit LogValue(double ln) : ln_(ln) {}
  double ln_;
};

// The dimensionless coefficients of the convex sup/inf bounds and the
// diameter-ratio certificates of non-degenerate extremisers. Fields are
// empty outside their validity windows rather than NaN.
struct TheoremConstants {
  int d;
  double q;
  double q_critical;  // (d-2) / (2(d-1))
  std::optional<LogValue> sup_coeff;           // q >= 1:
  // 2^{(d+2)/2} d^{3q-2+d(q+1)} / (d-2), multiplies G_q(B_1)
  std::optional<LogValue> sup_diam_ratio;      // q > 1: 2d (sup_coeff)^{d/(2(q-1))}
  std::optional<LogValue> sup_diam_ratio_d3q1; // d=3, q=1: 2 * 3^8 * e^{3^7}
  std::optional<LogValue> inf_coeff;           // 0 < q <= q_c:
  // 1 / (2 d^{d+(d+2)q}), multiplies G_q(B_1)
  std::optional<LogValue> inf_diam_ratio;      // 0 < q < q_c:
  // 2d (2 d^{d+(d+2)q})^{d(d-1)/(d-2-2q(d-1))}
};

TheoremConstants theorem_constants(int d, double q);

// Closed-form bracket of the axis integral (a sorted descending, d >= 3):
//   lower = 2^{-d/2} a_d^2 / prod_i a_i
//   upper = 4 (prod_{i<=d-2} a_i)^{-1} log(e a_{d-2} / a_{d-1})
double capacity_integral_lower(const AxisVector& a);
double capacity_integral_upper(const AxisVector& a);

struct LogInequalityCheck {
  double lhs1, rhs1;  // (1-x)^{-1} log(1/x)  vs  log(e/x)
  bool holds1;
  double lhs2, rhs2;  // x^{1/(d-1)} log(e/x)  vs  d-1
  bool holds2;
};

// Self-check of the two elementary inequalities the upper-bound proof rests
// on; expected to hold for every x in (0,1), d >= 3.
LogInequalityCheck elementary_log_inequalities(double x, int d);

struct Sandwich {
  double lower;
  double upper;
  AxisVector inner_axes;
  AxisVector outer_axes;
};

// Certified G_q interval for a convex body: enclosing ellipsoid E from the
// MVEE of the vertices, inner ellipsoid E/d, exact body volume. Capacity and
// torsion are monotone under inclusion, so for q < 0 the torsion factors
// swap sides. Ellipsoid and ball inputs return the exact degenerate
// interval.
Sandwich sandwich_g_q(const Body& body, double q,
                      const QuadratureConfig& cfg = {}, double mvee_tol = 1e-7);

// Planar analogues: bound coefficients around H_q.
struct PlanarConstants {
  double q;
  std::optional<LogValue> sup_bound;       // q >= 1/2: 2^{1+5q} H_q(B_1)
  std::optional<LogValue> sup_diam_ratio;  // q > 1/2: 2^{14q} / (2q-1)
  std::optional<LogValue> inf_bound;       // q <= 1/2: 2^{-2(1+2q)} H_q(B_1)
  std::optional<LogValue> inf_diam_ratio;  // q < 1/2: 2^{2(3+2q)/(1-2q)}
};

PlanarConstants planar_constants(double q);

// (lower, upper) envelope for H_q of a convex body whose John ellipse has
// axes (a1, a2): both are H_q(B_1)-scale times (a2/a1)^{q-1/2}, with factors
// 2^{-2(1+2q)} and 2^{1+5q}. Requires q >= 0.
std::pair<double, double> h_q_envelope(double a1, double a2, double q);

}  // namespace captor::bounds
