#pragma once

// Incremental (beneath-beyond) convex hull with simplicial facets. Sized for
// the inputs that occur here: a few hundred points, 2 <= d <= 6 or so.

#include <vector>

namespace captor::geometry {

struct HullFacet {
  std::vector<int> vertices;   // d point indices
  std::vector<double> normal;  // outward unit normal
  double offset;               // x inside  =>  normal . x <= offset
};

class ConvexHull {
 public:
  // Throws GeometryError if the points do not affinely span R^d.
  explicit ConvexHull(const std::vector<std::vector<double>>& points);

  int dim() const { return d_; }
  const std::vector<HullFacet>& facets() const { return facets_; }
  const std::vector<std::vector<double>>& points() const { return pts_; }

  double volume() const;
  bool contains(const std::vector<double>& x, double tol) const;

  // Chebyshev ball: center of the largest inscribed ball and its radius,
  // solved as a small LP (max r s.t. n_i.x + r <= b_i).
  struct ChebyshevBall {
    std::vector<double> center;
    double radius;
  };
  ChebyshevBall chebyshev() const;

 private:
  int d_;
  std::vector<std::vector<double>> pts_;
  std::vector<HullFacet> facets_;
  std::vector<double> interior_;  // strictly interior reference point
  double scale_;                  // coordinate magnitude, for tolerances
};

}  // namespace captor::geometry
