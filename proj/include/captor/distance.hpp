#pragma once

// Point-to-boundary distance queries backing the walk-on-spheres walkers.
// Balls and ellipsoids are analytic; polytopes use facet planes from the
// hull (interior) and point-triangle distances (exterior, d = 3); unions
// take the minimum over parts.

#include <memory>
#include <span>
#include <vector>

#include "captor/geometry.hpp"

namespace captor::montecarlo {

using geometry::AxisVector;
using geometry::Body;

// Unsigned distance from p to the ellipsoid surface {sum x_i^2/a_i^2 = 1},
// valid on both sides, via safeguarded Newton on the projection parameter.
// Relative accuracy ~1e-12.
double ellipsoid_surface_distance(const AxisVector& a,
                                  std::span<const double> p);

// Prepared distance oracle for one body.
class DistanceQuery {
 public:
  explicit DistanceQuery(const Body& body);
  ~DistanceQuery();
  DistanceQuery(DistanceQuery&&) noexcept;
  DistanceQuery& operator=(DistanceQuery&&) noexcept;

  int dim() const;
  // open-set membership
  bool inside(std::span<const double> x) const;
  // distance to the boundary from an interior point (0 if outside)
  double boundary_distance_inside(std::span<const double> x) const;
  // distance to the closure from an exterior point (0 if inside)
  double distance_to_set(std::span<const double> x) const;
  // radius of the smallest origin-centered sphere containing the body
  double enclosing_radius() const;
  const geometry::Aabb& box() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace captor::montecarlo
