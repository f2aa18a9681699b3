#pragma once

// Explicit shape families that drive the extremal regimes: a thin slab glued
// to a half-measure ball, a cube packed with tangent balls, and collapsing
// ellipsoids (needle, pancake, several axes at once), each paired with its
// closed-form bound or asymptote.

#include <optional>
#include <vector>

#include "captor/geometry.hpp"
#include "captor/quadrature.hpp"

namespace captor::constructions {

enum class BoundKind { exact, lower, upper, asymptotic };

const char* bound_kind_name(BoundKind k);

struct FamilyPoint {
  double parameter;      // collapse parameter eps, or the grid count N
  geometry::Body body;
  double value;          // G_q itself, or the stated bound on it
  BoundKind bound_kind;  // exact only when body is an ellipsoid or ball
};

// Disjoint union of a slab-like ellipsoid E(L,...,L,eps) with |E| = 1/2,
// L = (2 omega_d eps)^{1/(1-d)}, and a ball of measure 1/2. The returned
// value is the lower bound C(d) T(ball)^q L^{d-2}, which blows up as
// eps -> 0 for every q >= 0. C(3) = 8 (capacity of a flat disc of unit
// radius).
FamilyPoint pancake(double eps, double q, int d);
double pancake_coefficient(int d);

// N^d tangent open balls of radius 1/(2N) centered on the unit-cube grid.
// Exact rigidity 2^{-d-2} N^{-2} tau_d and measure omega_d 2^{-d}; the value
// is the upper bound (2^{d-2} / omega_d^{1+q+2(q-1)/d}) cube_capacity tau_d^q
// N^{-2q}, vanishing as N -> infinity for q > 0. cube_capacity is an
// externally supplied estimate of the capacity of the closed unit cube.
FamilyPoint ball_packing(long long n, double q, int d, double cube_capacity);
double ball_packing_torsion(long long n, int d);
double ball_packing_measure(int d);

// Needle E(1, eps, ..., eps). prolate_family evaluates G_q exactly;
// prolate_asymptote assembles the small-eps asymptote from the classical
// needle capacity (4 pi / log(1/eps) at d = 3, otherwise proportional to
// eps^{d-3}), the exact torsion, and the measure.
FamilyPoint prolate_family(double eps, double q, int d,
                           const exact::QuadratureConfig& cfg = {});
double prolate_asymptote(double eps, double q, int d);

// Pancake at fixed volume: E(a_1, ..., a_1, a_d) with a_1^{d-1} a_d = 1.
// oblate_family evaluates G_q exactly; oblate_bound is the closed-form
// upper bound proportional to a_d^{2q - (d-2)/(d-1)}, which vanishes as
// a_d -> 0 exactly when q exceeds the critical exponent (d-2)/(2(d-1)).
FamilyPoint oblate_family(double a_d, double q, int d,
                          const exact::QuadratureConfig& cfg = {});
double oblate_bound(double a_d, double q, int d);
bool oblate_bound_vanishes(double q, int d);

// k of the d axes collapse together: E(1,...,1,eps,...,eps) with k tail
// axes. Exact G_1; for k >= 3 the values approach a positive limit as
// eps -> 0 instead of degenerating.
FamilyPoint multi_collapse_family(int k, double eps, int d,
                                  const exact::QuadratureConfig& cfg = {});

enum class Family { pancake, ball_packing, prolate, oblate, multi_collapse };

struct SweepRow {
  double parameter;
  std::optional<double> exact;
  std::optional<double> bound;
  BoundKind bound_kind = BoundKind::exact;
  std::optional<double> asymptote;
  std::optional<double> ratio;  // exact / asymptote, else exact / bound
};

struct SweepOptions {
  double q = 1.0;
  int d = 3;
  int k = 3;                   // multi_collapse only
  double cube_capacity = 0.0;  // ball_packing only
  // Rows stop once the capacity quadrature cannot reach this relative
  // error; extreme aspect ratios degrade before they produce garbage.
  double exact_rel_error_stop = 1e-8;
  exact::QuadratureConfig quadrature{1e-10, 2000};
};

std::vector<SweepRow> sweep(Family family,
                            const std::vector<double>& parameters,
                            const SweepOptions& opt);

}  // namespace captor::constructions
