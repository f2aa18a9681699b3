#pragma once

// Derivative-free search for extremal ellipsoids of the capacity-torsion
// functionals under scale invariance. The gauge is removed exactly by
// working in zero-sum log-axis coordinates, so every iterate has unit axis
// product. Degenerate regimes are detected by an aspect-ratio wall instead
// of chasing unbounded axes.

#include <cstdint>
#include <vector>

#include "captor/geometry.hpp"
#include "captor/quadrature.hpp"

namespace captor::optimize {

using geometry::AxisVector;

enum class Direction { maximize, minimize };

const char* direction_name(Direction dir);

struct TracePoint {
  int start;  // multi-start index that produced this improvement
  AxisVector axes;
  double value;
};

struct RegimeReport {
  double q = 0.0;
  int d = 0;
  Direction direction = Direction::maximize;
  AxisVector best_axes{1.0, 1.0};  // axis product normalized to 1
  double best_value = 0.0;
  bool degenerated = false;  // best iterate crossed the aspect-ratio wall
  double wall = 0.0;
  std::vector<TracePoint> trace;  // improvements, merged by start index
};

struct OptimizeConfig {
  int random_starts = 8;  // in addition to the ball and two collapse-ray starts
  std::uint64_t seed = 12345;
  double value_tol = 1e-10;
  double axis_tol = 1e-6;
  int max_iterations = 4000;  // per start, restarts included
  exact::QuadratureConfig quadrature{1e-12, 4000};
};

// Nelder-Mead over the (d-1)-dimensional zero-sum log-axis space,
// multi-start: the ball, fixed-seed random directions on a radius ladder
// reaching most of the way to the wall, and the two canonical collapse rays
// (needle and pancake) near it. The eccentric starts matter: the ball can be
// locally optimal with the true escape beyond a dip in the landscape. A run
// stops and flags degeneration once its best accepted iterate reaches aspect
// ratio >= wall; quadrature failure across a whole simplex counts as a wall
// hit.
RegimeReport optimize_ellipsoid(double q, int d, Direction direction,
                                double wall = 1e4,
                                const OptimizeConfig& cfg = {});

// Planar counterpart: one-dimensional search over the ellipse axis ratio in
// [1, wall], coarse log grid then golden-section refinement. No quadrature
// is involved; the ellipse capacity is closed-form.
RegimeReport optimize_ellipse_planar(double q, Direction direction,
                                     double wall = 1e4,
                                     const OptimizeConfig& cfg = {});

struct DiamRatioCheck {
  bool applicable = false;  // a diameter-ratio certificate exists for (d, q)
  bool within = false;
  double log_ratio = 0.0;  // log of best-axes aspect ratio
  double log_bound = 0.0;  // log of the certificate constant
};

// Compares the aspect ratio of a non-degenerate extremal report against the
// closed-form diameter/inradius certificate for its regime; the comparison
// happens in log space because the constants overflow doubles.
DiamRatioCheck check_extremal_diam_ratio(const RegimeReport& report);

}  // namespace captor::optimize
