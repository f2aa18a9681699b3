#pragma once

// Bodies in R^d and the dimension-indexed unit-ball constants. Ellipsoids are
// axis-aligned and described by their semi-axes; general convex bodies enter
// as vertex sets (VPolytope); disjoint unions cover the packing examples.

#include <string>
#include <variant>
#include <vector>

#include "captor/errors.hpp"

namespace captor::geometry {

// |B_1| for d >= 2.
double unit_ball_volume(int d);
// Torsional rigidity of B_1, |B_1| / (d(d+2)), for d >= 2.
double unit_ball_torsion(int d);
// Newtonian capacity of the closed unit ball, 4 pi^{d/2} / Gamma((d-2)/2).
// Requires d >= 3.
double unit_ball_capacity(int d);

struct BallConstants {
  int d;
  double omega;  // |B_1|
  double tau;    // torsion of B_1
  double kappa;  // capacity of closed B_1
};

// All three constants at once; requires d >= 3 since kappa is included.
BallConstants ball_constants(int d);

// Semi-axes a_1 >= a_2 >= ... >= a_d > 0. Construction sorts descending, so
// two inputs that differ by a permutation compare equal.
class AxisVector {
 public:
  explicit AxisVector(std::vector<double> axes);
  AxisVector(std::initializer_list<double> axes);

  int dim() const { return static_cast<int>(a_.size()); }
  double operator[](int i) const { return a_[i]; }
  const std::vector<double>& values() const { return a_; }
  double largest() const { return a_.front(); }
  double smallest() const { return a_.back(); }
  double aspect_ratio() const { return a_.front() / a_.back(); }
  double product() const;
  double sum_inverse_squares() const;
  AxisVector scaled(double t) const;

  bool operator==(const AxisVector& o) const { return a_ == o.a_; }

 private:
  std::vector<double> a_;
};

struct Ball {
  double radius;
  std::vector<double> center;  // size d
};

struct Ellipsoid {
  AxisVector axes;
  std::vector<double> center;  // size d
};

struct VPolytope {
  std::vector<std::vector<double>> vertices;
};

class Body;

struct DisjointUnion {
  std::vector<Body> parts;
};

class Body {
 public:
  using Shape = std::variant<Ball, Ellipsoid, VPolytope, DisjointUnion>;

  static Body ball(int d, double radius);
  static Body ball(double radius, std::vector<double> center);
  static Body ellipsoid(AxisVector axes);
  static Body ellipsoid(AxisVector axes, std::vector<double> center);
  static Body vpolytope(std::vector<std::vector<double>> vertices);
  static Body disjoint_union(std::vector<Body> parts);
  // [-1/2, 1/2]^d as a vertex set.
  static Body unit_cube(int d);

  int dim() const;
  const Shape& shape() const { return shape_; }
  template <class T>
  const T* as() const {
    return std::get_if<T>(&shape_);
  }

 private:
  explicit Body(Shape s) : shape_(std::move(s)) {}
  Shape shape_;
};

double volume(const Body& b);
double diameter(const Body& b);  // rejects unions

// Largest inscribed ball radius. Exact for balls and ellipsoids; for
// polytopes it is the Chebyshev radius via LP, supported for d <= 4.
// Unions are rejected.
double inradius(const Body& b);

struct Interval {
  double lower;
  double upper;
};

// Certified inradius interval, degenerate for the exact cases. For polytopes
// in d > 4 falls back to the enclosing-ellipsoid sandwich [a_d / d, a_d].
Interval inradius_bounds(const Body& b);

Body scale(const Body& b, double t);

struct Aabb {
  std::vector<double> lo;
  std::vector<double> hi;
};

Aabb bounding_box(const Body& b);

// JSON round trip. indent < 0 means compact.
std::string to_json(const Body& b, int indent = -1);
Body body_from_json(const std::string& text);

}  // namespace captor::geometry
