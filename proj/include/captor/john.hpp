#pragma once

// Minimum-volume enclosing ellipsoid of a point set and the derived
// inner/outer sandwich: MVEE contains the hull, MVEE shrunk by d about its
// center lies inside it.

#include <utility>
#include <vector>

#include "captor/geometry.hpp"

namespace captor::john {

using geometry::AxisVector;
using geometry::Body;

struct MveeResult {
  std::vector<double> center;
  std::vector<double> shape;  // row-major d x d SPD M: (x-c)^T M (x-c) <= 1
  AxisVector semi_axes;       // 1/sqrt(eigenvalues of M), descending
  int iterations;
  double gap;  // achieved relative optimality gap
};

// Khachiyan multiplicative-weights iteration on the lifted (homogeneous)
// formulation, with Wolfe-Atwood drop steps. tol in (0, 1e-2].
MveeResult mvee(const std::vector<std::vector<double>>& points,
                double tol = 1e-7, int max_iterations = 1000000);

// (inner, outer) = (mvee semi-axes / d, mvee semi-axes). Center and
// orientation are dropped: the functionals downstream are invariant under
// rigid motions.
std::pair<AxisVector, AxisVector> sandwich_axes(
    const std::vector<std::vector<double>>& points, double tol = 1e-7);

// Body-level overload: ellipsoids and balls are their own exact sandwich,
// polytopes go through mvee. Unions are rejected.
std::pair<AxisVector, AxisVector> sandwich_axes(const Body& body,
                                                double tol = 1e-7);

}  // namespace captor::john
