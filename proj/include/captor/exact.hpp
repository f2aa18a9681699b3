#pragma once

// Closed-form capacity, torsion and the scale-invariant capacity-torsion
// functionals on ellipsoids. Everything here is deterministic; the only
// numerical step is one well-conditioned 1-d quadrature per capacity.

#include <vector>

#include "captor/geometry.hpp"
#include "captor/quadrature.hpp"

namespace captor::exact {

using geometry::AxisVector;

// The axis integral  integral_0^inf prod_i (a_i^2 + t)^{-1/2} dt  (d >= 3).
// Substituting t = a_d^2 (1 - w^2) / w^2 maps it to [0, 1] with integrand
//   2 a_d^2 w^{d-3} prod_i (a_i^2 w^2 + a_d^2 (1 - w^2))^{-1/2},
// smooth for every d >= 3 (a polynomial when all axes coincide). For very
// eccentric axes the product is evaluated in logs.
double capacity_integral(const AxisVector& a, const QuadratureConfig& cfg = {});
QuadratureResult capacity_integral_detail(const AxisVector& a,
                                          const QuadratureConfig& cfg = {});

// Newtonian capacity of the closed ellipsoid, 2 kappa_d / (d-2) divided by
// the axis integral. Requires d >= 3.
double ellipsoid_capacity(const AxisVector& a, const QuadratureConfig& cfg = {});

// Torsional rigidity  |B_1| prod_i a_i / ((d+2) sum_i a_i^{-2}),  d >= 2.
double ellipsoid_torsion(const AxisVector& a);

// The torsion function of the ellipsoid at x:
//   u(x) = (1 - sum_i x_i^2/a_i^2) / (2 sum_i a_i^{-2}),
// clamped to 0 outside.
double torsion_function_value(const AxisVector& a, const std::vector<double>& x);

struct FunctionalValue {
  double cap;
  double torsion;
  double measure;
  double q;
  double g_q;  // cap * torsion^q / measure^{1 + q + 2(q-1)/d}
};

// Assemble G_q from already-known ingredients (d >= 3, all inputs > 0).
FunctionalValue g_q(double cap, double torsion, double measure, double q,
                    int d);

FunctionalValue g_q_ellipsoid(const AxisVector& a, double q,
                              const QuadratureConfig& cfg = {});

// G_q of the unit ball, kappa_d tau_d^q / omega_d^{1 + q + 2(q-1)/d}.
double g_q_ball(int d, double q);

// T(E) / (tau_d |E| diam^2 / (omega_d 4)) style comparisons:
// saint_venant_ratio = T(E(a)) / (tau_d (|E|/omega_d)^{(d+2)/d}) <= 1,
// isocapacitary_ratio = cap(E(a)) / (kappa_d (|E|/omega_d)^{(d-2)/d}) >= 1.
double saint_venant_ratio(const AxisVector& a);
double isocapacitary_ratio(const AxisVector& a,
                           const QuadratureConfig& cfg = {});

// Planar (d = 2) pieces: logarithmic capacity of the closed ellipse,
// cap(E(a1,a2)) = (a1 + a2)/2, and the planar functional
//   H_q = cap * T^q / |area|^{(1+4q)/2}.
double ellipse_logcap(double a1, double a2);
double h_q(double cap, double torsion, double area, double q);
double h_q_ellipse(double a1, double a2, double q);
double h_q_ball(double q);  // tau_2^q / omega_2^{(1+4q)/2}

}  // namespace captor::exact
