#include "captor/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "captor/hull.hpp"
#include "captor/john.hpp"

namespace captor::geometry {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw GeometryError(msg);
}

}  // namespace

double unit_ball_volume(int d) {
  require(d >= 2, "unit_ball_volume: d must be >= 2");
  return std::exp(0.5 * d * std::log(M_PI) - std::lgamma(0.5 * d + 1.0));
}

double unit_ball_torsion(int d) {
  require(d >= 2, "unit_ball_torsion: d must be >= 2");
  return unit_ball_volume(d) /
         (static_cast<double>(d) * static_cast<double>(d + 2));
}

double unit_ball_capacity(int d) {
  require(d >= 3, "unit_ball_capacity: d must be >= 3");
  return std::exp(std::log(4.0) + 0.5 * d * std::log(M_PI) -
                  std::lgamma(0.5 * (d - 2)));
}

BallConstants ball_constants(int d) {
  require(d >= 3, "ball_constants: d must be >= 3");
  return {d, unit_ball_volume(d), unit_ball_torsion(d),
          unit_ball_capacity(d)};
}

AxisVector::AxisVector(std::vector<double> axes) : a_(std::move(axes)) {
  require(a_.size() >= 2, "AxisVector: need at least 2 axes");
  for (double v : a_)
    require(std::isfinite(v) && v > 0.0, "AxisVector: axes must be positive");
  std::sort(a_.begin(), a_.end(), std::greater<double>());
}

AxisVector::AxisVector(std::initializer_list<double> axes)
    : AxisVector(std::vector<double>(axes)) {}

double AxisVector::product() const {
  double p = 1.0;
  for (double v : a_) p *= v;
  return p;
}

double AxisVector::sum_inverse_squares() const {
  double s = 0.0;
  for (double v : a_) s += 1.0 / (v * v);
  return s;
}

AxisVector AxisVector::scaled(double t) const {
  require(t > 0.0, "AxisVector::scaled: factor must be positive");
  std::vector<double> b = a_;
  for (double& v : b) v *= t;
  return AxisVector(std::move(b));
}

namespace {

int shape_dim(const Body::Shape& s) {
  if (const auto* b = std::get_if<Ball>(&s))
    return static_cast<int>(b->center.size());
  if (const auto* e = std::get_if<Ellipsoid>(&s)) return e->axes.dim();
  if (const auto* p = std::get_if<VPolytope>(&s))
    return static_cast<int>(p->vertices.front().size());
  return std::get<DisjointUnion>(s).parts.front().dim();
}

// Rank of the affine span of a point set via modified Gram-Schmidt on the
// edge vectors from points[0].
int affine_rank(const std::vector<std::vector<double>>& pts, double tol) {
  const int d = static_cast<int>(pts[0].size());
  std::vector<std::vector<double>> basis;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<double> v(d);
    for (int k = 0; k < d; ++k) v[k] = pts[i][k] - pts[0][k];
    for (const auto& b : basis) {
      double dot = 0.0;
      for (int k = 0; k < d; ++k) dot += v[k] * b[k];
      for (int k = 0; k < d; ++k) v[k] -= dot * b[k];
    }
    double norm = 0.0;
    for (int k = 0; k < d; ++k) norm += v[k] * v[k];
    norm = std::sqrt(norm);
    if (norm > tol) {
      for (int k = 0; k < d; ++k) v[k] /= norm;
      basis.push_back(std::move(v));
      if (static_cast<int>(basis.size()) == d) break;
    }
  }
  return static_cast<int>(basis.size());
}

}  // namespace

Body Body::ball(int d, double radius) {
  require(d >= 2, "ball: d must be >= 2");
  return ball(radius, std::vector<double>(d, 0.0));
}

Body Body::ball(double radius, std::vector<double> center) {
  require(std::isfinite(radius) && radius > 0.0,
          "ball: radius must be positive");
  require(center.size() >= 2, "ball: center must have dimension >= 2");
  return Body(Ball{radius, std::move(center)});
}

Body Body::ellipsoid(AxisVector axes) {
  std::vector<double> c(axes.dim(), 0.0);
  return ellipsoid(std::move(axes), std::move(c));
}

Body Body::ellipsoid(AxisVector axes, std::vector<double> center) {
  require(static_cast<int>(center.size()) == axes.dim(),
          "ellipsoid: center dimension mismatch");
  return Body(Ellipsoid{std::move(axes), std::move(center)});
}

Body Body::vpolytope(std::vector<std::vector<double>> vertices) {
  require(!vertices.empty(), "vpolytope: no vertices");
  const size_t d = vertices.front().size();
  require(d >= 2, "vpolytope: dimension must be >= 2");
  require(vertices.size() >= d + 1, "vpolytope: need at least d+1 vertices");
  double scale = 0.0;
  for (const auto& v : vertices) {
    require(v.size() == d, "vpolytope: inconsistent vertex dimensions");
    for (double x : v) {
      require(std::isfinite(x), "vpolytope: vertex coordinates must be finite");
      scale = std::max(scale, std::fabs(x));
    }
  }
  require(affine_rank(vertices, 1e-12 * (scale + 1.0)) ==
              static_cast<int>(d),
          "vpolytope: vertices do not affinely span R^d");
  return Body(VPolytope{std::move(vertices)});
}

namespace {

bool boxes_overlap(const Aabb& a, const Aabb& b, double tol) {
  for (size_t k = 0; k < a.lo.size(); ++k)
    if (a.hi[k] <= b.lo[k] + tol || b.hi[k] <= a.lo[k] + tol) return false;
  return true;
}

}  // namespace

Body Body::disjoint_union(std::vector<Body> parts) {
  require(parts.size() >= 2, "disjoint_union: need at least 2 parts");
  const int d = parts.front().dim();
  for (const auto& p : parts)
    require(p.dim() == d, "disjoint_union: mixed dimensions");
  // Disjointness: ball pairs get the exact center-distance test (touching
  // allowed); other pairs must have non-overlapping bounding boxes.
  std::vector<Aabb> boxes;
  boxes.reserve(parts.size());
  for (const auto& p : parts) boxes.push_back(bounding_box(p));
  for (size_t i = 0; i < parts.size(); ++i) {
    for (size_t j = i + 1; j < parts.size(); ++j) {
      const auto* bi = parts[i].as<Ball>();
      const auto* bj = parts[j].as<Ball>();
      if (bi && bj) {
        double dist2 = 0.0;
        for (int k = 0; k < d; ++k) {
          const double dx = bi->center[k] - bj->center[k];
          dist2 += dx * dx;
        }
        const double rr = bi->radius + bj->radius;
        require(dist2 >= rr * rr * (1.0 - 1e-12),
                "disjoint_union: balls overlap");
      } else {
        require(!boxes_overlap(boxes[i], boxes[j], 0.0),
                "disjoint_union: parts overlap");
      }
    }
  }
  return Body(DisjointUnion{std::move(parts)});
}

Body Body::unit_cube(int d) {
  require(d >= 2 && d <= 20, "unit_cube: d out of range");
  std::vector<std::vector<double>> verts;
  verts.reserve(size_t(1) << d);
  for (long long mask = 0; mask < (1LL << d); ++mask) {
    std::vector<double> v(d);
    for (int k = 0; k < d; ++k) v[k] = (mask >> k & 1) ? 0.5 : -0.5;
    verts.push_back(std::move(v));
  }
  return vpolytope(std::move(verts));
}

int Body::dim() const { return shape_dim(shape_); }

double volume(const Body& b) {
  const int d = b.dim();
  if (const auto* ball = b.as<Ball>())
    return unit_ball_volume(d) * std::pow(ball->radius, d);
  if (const auto* e = b.as<Ellipsoid>())
    return unit_ball_volume(d) * e->axes.product();
  if (const auto* p = b.as<VPolytope>()) return ConvexHull(p->vertices).volume();
  const auto& u = *b.as<DisjointUnion>();
  double v = 0.0;
  for (const auto& part : u.parts) v += volume(part);
  return v;
}

double diameter(const Body& b) {
  if (const auto* ball = b.as<Ball>()) return 2.0 * ball->radius;
  if (const auto* e = b.as<Ellipsoid>()) return 2.0 * e->axes.largest();
  if (const auto* p = b.as<VPolytope>()) {
    double best = 0.0;
    for (size_t i = 0; i < p->vertices.size(); ++i) {
      for (size_t j = i + 1; j < p->vertices.size(); ++j) {
        double s = 0.0;
        for (size_t k = 0; k < p->vertices[i].size(); ++k) {
          const double dx = p->vertices[i][k] - p->vertices[j][k];
          s += dx * dx;
        }
        best = std::max(best, s);
      }
    }
    return std::sqrt(best);
  }
  throw GeometryError("diameter: not defined for disjoint unions here");
}

double inradius(const Body& b) {
  if (const auto* ball = b.as<Ball>()) return ball->radius;
  if (const auto* e = b.as<Ellipsoid>()) return e->axes.smallest();
  if (const auto* p = b.as<VPolytope>()) {
    if (b.dim() > 4)
      throw GeometryError(
          "inradius: polytope LP supported for d <= 4, use inradius_bounds");
    return ConvexHull(p->vertices).chebyshev().radius;
  }
  throw GeometryError("inradius: not defined for disjoint unions");
}

Interval inradius_bounds(const Body& b) {
  if (b.as<Ball>() || b.as<Ellipsoid>() ||
      (b.as<VPolytope>() && b.dim() <= 4)) {
    const double r = inradius(b);
    return {r, r};
  }
  if (const auto* p = b.as<VPolytope>()) {
    // John sandwich E/d subset K subset E gives a_d/d <= inradius <= a_d
    const auto [inner, outer] = john::sandwich_axes(p->vertices, 1e-7);
    return {inner.smallest(), outer.smallest()};
  }
  throw GeometryError("inradius_bounds: not defined for disjoint unions");
}

Body scale(const Body& b, double t) {
  if (!(std::isfinite(t) && t > 0.0))
    throw GeometryError("scale: factor must be positive");
  if (const auto* ball = b.as<Ball>()) {
    std::vector<double> c = ball->center;
    for (double& x : c) x *= t;
    return Body::ball(ball->radius * t, std::move(c));
  }
  if (const auto* e = b.as<Ellipsoid>()) {
    std::vector<double> c = e->center;
    for (double& x : c) x *= t;
    return Body::ellipsoid(e->axes.scaled(t), std::move(c));
  }
  if (const auto* p = b.as<VPolytope>()) {
    auto verts = p->vertices;
    for (auto& v : verts)
      for (double& x : v) x *= t;
    return Body::vpolytope(std::move(verts));
  }
  const auto& u = *b.as<DisjointUnion>();
  std::vector<Body> parts;
  parts.reserve(u.parts.size());
  for (const auto& part : u.parts) parts.push_back(scale(part, t));
  return Body::disjoint_union(std::move(parts));
}

Aabb bounding_box(const Body& b) {
  const int d = b.dim();
  Aabb box{std::vector<double>(d), std::vector<double>(d)};
  if (const auto* ball = b.as<Ball>()) {
    for (int k = 0; k < d; ++k) {
      box.lo[k] = ball->center[k] - ball->radius;
      box.hi[k] = ball->center[k] + ball->radius;
    }
    return box;
  }
  if (const auto* e = b.as<Ellipsoid>()) {
    for (int k = 0; k < d; ++k) {
      box.lo[k] = e->center[k] - e->axes[k];
      box.hi[k] = e->center[k] + e->axes[k];
    }
    return box;
  }
  if (const auto* p = b.as<VPolytope>()) {
    box.lo.assign(d, std::numeric_limits<double>::infinity());
    box.hi.assign(d, -std::numeric_limits<double>::infinity());
    for (const auto& v : p->vertices) {
      for (int k = 0; k < d; ++k) {
        box.lo[k] = std::min(box.lo[k], v[k]);
        box.hi[k] = std::max(box.hi[k], v[k]);
      }
    }
    return box;
  }
  const auto& u = *b.as<DisjointUnion>();
  box = bounding_box(u.parts.front());
  for (size_t i = 1; i < u.parts.size(); ++i) {
    const Aabb pb = bounding_box(u.parts[i]);
    for (int k = 0; k < d; ++k) {
      box.lo[k] = std::min(box.lo[k], pb.lo[k]);
      box.hi[k] = std::max(box.hi[k], pb.hi[k]);
    }
  }
  return box;
}

namespace {

using nlohmann::json;

bool is_zero(const std::vector<double>& v) {
  for (double x : v)
    if (x != 0.0) return false;
  return true;
}

json shape_to_json(const Body& b) {
  json j;
  if (const auto* ball = b.as<Ball>()) {
    j["kind"] = "ball";
    j["radius"] = ball->radius;
    if (!is_zero(ball->center)) j["center"] = ball->center;
    else j["d"] = b.dim();
    return j;
  }
  if (const auto* e = b.as<Ellipsoid>()) {
    j["kind"] = "ellipsoid";
    j["axes"] = e->axes.values();
    if (!is_zero(e->center)) j["center"] = e->center;
    return j;
  }
  if (const auto* p = b.as<VPolytope>()) {
    j["kind"] = "vpolytope";
    j["vertices"] = p->vertices;
    return j;
  }
  j["kind"] = "union";
  json parts = json::array();
  for (const auto& part : b.as<DisjointUnion>()->parts)
    parts.push_back(shape_to_json(part));
  j["parts"] = std::move(parts);
  return j;
}

Body shape_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw GeometryError("body JSON: expected object with \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "ball") {
    const double r = j.at("radius").get<double>();
    if (j.contains("center"))
      return Body::ball(r, j.at("center").get<std::vector<double>>());
    return Body::ball(j.value("d", 3), r);
  }
  if (kind == "ellipsoid") {
    AxisVector axes(j.at("axes").get<std::vector<double>>());
    if (j.contains("center"))
      return Body::ellipsoid(std::move(axes),
                             j.at("center").get<std::vector<double>>());
    return Body::ellipsoid(std::move(axes));
  }
  if (kind == "vpolytope")
    return Body::vpolytope(
        j.at("vertices").get<std::vector<std::vector<double>>>());
  if (kind == "union") {
    std::vector<Body> parts;
    for (const auto& pj : j.at("parts")) parts.push_back(shape_from_json(pj));
    return Body::disjoint_union(std::move(parts));
  }
  throw GeometryError("body JSON: unknown kind \"" + kind + "\"");
}

}  // namespace

std::string to_json(const Body& b, int indent) {
  return shape_to_json(b).dump(indent);
}

Body body_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GeometryError(std::string("body JSON: ") + e.what());
  }
  try {
    return shape_from_json(j);
  } catch (const json::exception& e) {
    throw GeometryError(std::string("body JSON: ") + e.what());
  }
}

}  // namespace captor::geometry
