#include "captor/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "captor/hull.hpp"

namespace captor::montecarlo {

using captor::GeometryError;

namespace {

// F(lambda) = sum_i a_i^2 p_i^2 / (a_i^2 + lambda)^2, strictly decreasing
// where defined; the boundary projection of p is x_i = a_i^2 p_i/(a_i^2+l)
// at the root F = 1, and |x - p|^2 = sum (p_i lambda / (a_i^2+lambda))^2.
struct ProjectionFn {
  const std::vector<double>& a;
  std::span<const double> p;

  double eval(double lambda, double* deriv = nullptr) const {
    double f = 0.0, df = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
      const double ai2 = a[i] * a[i];
      const double den = ai2 + lambda;
      const double t = a[i] * p[i] / den;
      f += t * t;
      df += t * t / den;
    }
    if (deriv) *deriv = -2.0 * df;
    return f;
  }

  double distance_at(double lambda) const {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
      const double t = p[i] * lambda / (a[i] * a[i] + lambda);
      s += t * t;
    }
    return std::sqrt(s);
  }
};

// Safeguarded Newton for F(lambda) = 1 on a bracket where F is decreasing
// and F(lo) >= 1 >= F(hi).
double solve_projection(const ProjectionFn& fn, double lo, double hi) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    double df;
    const double f = fn.eval(x, &df);
    if (f >= 1.0)
      lo = x;
    else
      hi = x;
    double step = (f - 1.0) / df;
    double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::fabs(next - x) <= 1e-15 * (std::fabs(x) + 1e-300) ||
        std::fabs(f - 1.0) < 1e-14)
      return next;
    x = next;
  }
  return x;
}

// ax sorted descending; p relative to the ellipsoid center
double surface_distance_impl(const std::vector<double>& ax,
                             std::span<const double> p) {
  const int d = static_cast<int>(ax.size());
  const ProjectionFn fn{ax, p};
  double s = 0.0, scale2 = 0.0;
  for (int i = 0; i < d; ++i) {
    const double t = p[i] / ax[i];
    s += t * t;
    scale2 += ax[i] * ax[i] * p[i] * p[i];
  }
  if (s == 1.0) return 0.0;
  if (s > 1.0) {
    // exterior root in (0, |a.p|]: F(|a.p|) <= 1 always
    const double hi = std::sqrt(scale2);
    return fn.distance_at(solve_projection(fn, 0.0, hi));
  }
  // interior: the root sits in (-a_d^2, 0) unless the components along the
  // smallest axes vanish, in which case the nearest point leaves the
  // lambda branch (pole case)
  const double amin = ax.back();
  const double amin2 = amin * amin;
  const double lo = -amin2 * (1.0 - 1e-12);
  if (fn.eval(lo) >= 1.0) return fn.distance_at(solve_projection(fn, lo, 0.0));
  // pole: x_i = a_i^2 p_i/(a_i^2 - a_d^2) on the larger axes, remaining
  // budget goes to the smallest-axis block
  double g = 0.0, dist2 = 0.0;
  for (int i = 0; i < d; ++i) {
    const double ai2 = ax[i] * ax[i];
    if (ai2 > amin2 * (1.0 + 1e-12)) {
      const double xi = ai2 * p[i] / (ai2 - amin2);
      g += (xi / ax[i]) * (xi / ax[i]);
      dist2 += (xi - p[i]) * (xi - p[i]);
    } else {
      dist2 += p[i] * p[i];  // ~0 here, else the lambda branch would apply
    }
  }
  dist2 += amin2 * std::max(0.0, 1.0 - g);
  return std::sqrt(dist2);
}

}  // namespace

double ellipsoid_surface_distance(const AxisVector& a,
                                  std::span<const double> p) {
  if (static_cast<int>(p.size()) != a.dim())
    throw GeometryError("ellipsoid_surface_distance: dimension mismatch");
  return surface_distance_impl(a.values(), p);
}

namespace {

struct PartQuery {
  enum Kind { kBall, kEllipsoid, kPolytope } kind;
  std::vector<double> center;  // ball/ellipsoid
  double radius = 0.0;
  std::vector<double> axes;  // ellipsoid, descending
  std::unique_ptr<geometry::ConvexHull> hull;

  int dim() const {
    if (kind == kPolytope) return hull->dim();
    return static_cast<int>(center.size());
  }

  bool inside(std::span<const double> x) const {
    switch (kind) {
      case kBall: {
        double s = 0.0;
        for (size_t k = 0; k < center.size(); ++k) {
          const double dx = x[k] - center[k];
          s += dx * dx;
        }
        return s < radius * radius;
      }
      case kEllipsoid: {
        double s = 0.0;
        for (size_t k = 0; k < center.size(); ++k) {
          const double t = (x[k] - center[k]) / axes[k];
          s += t * t;
        }
        return s < 1.0;
      }
      case kPolytope: {
        for (const auto& f : hull->facets()) {
          double s = 0.0;
          for (size_t k = 0; k < f.normal.size(); ++k) s += f.normal[k] * x[k];
          if (s >= f.offset) return false;
        }
        return true;
      }
    }
    return false;
  }

  double boundary_distance_inside(std::span<const double> x) const {
    switch (kind) {
      case kBall: {
        double s = 0.0;
        for (size_t k = 0; k < center.size(); ++k) {
          const double dx = x[k] - center[k];
          s += dx * dx;
        }
        return radius - std::sqrt(s);
      }
      case kEllipsoid: {
        std::vector<double> rel(center.size());
        for (size_t k = 0; k < center.size(); ++k) rel[k] = x[k] - center[k];
        return surface_distance_impl(axes, rel);
      }
      case kPolytope: {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& f : hull->facets()) {
          double s = 0.0;
          for (size_t k = 0; k < f.normal.size(); ++k) s += f.normal[k] * x[k];
          best = std::min(best, f.offset - s);
        }
        return best;
      }
    }
    return 0.0;
  }

  double distance_to_set(std::span<const double> x) const;
};

// closest point on a triangle, Ericson, Real-Time Collision Detection 5.1.5
double point_triangle_dist2(const double* p, const double* a, const double* b,
                            const double* c) {
  double ab[3], ac[3], ap[3];
  for (int k = 0; k < 3; ++k) {
    ab[k] = b[k] - a[k];
    ac[k] = c[k] - a[k];
    ap[k] = p[k] - a[k];
  }
  auto dot3 = [](const double* u, const double* v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
  };
  auto dist2_to = [&](const double* base, const double* e1, double t1,
                      const double* e2, double t2) {
    double s = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double q = base[k] + (e1 ? t1 * e1[k] : 0.0) +
                       (e2 ? t2 * e2[k] : 0.0) - p[k];
      s += q * q;
    }
    return s;
  };
  const double d1 = dot3(ab, ap), d2 = dot3(ac, ap);
  if (d1 <= 0.0 && d2 <= 0.0) return dist2_to(a, nullptr, 0, nullptr, 0);
  double bp[3], cp[3];
  for (int k = 0; k < 3; ++k) bp[k] = p[k] - b[k];
  const double d3 = dot3(ab, bp), d4 = dot3(ac, bp);
  if (d3 >= 0.0 && d4 <= d3) return dist2_to(b, nullptr, 0, nullptr, 0);
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0)
    return dist2_to(a, ab, d1 / (d1 - d3), nullptr, 0);
  for (int k = 0; k < 3; ++k) cp[k] = p[k] - c[k];
  const double d5 = dot3(ab, cp), d6 = dot3(ac, cp);
  if (d6 >= 0.0 && d5 <= d6) return dist2_to(c, nullptr, 0, nullptr, 0);
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0)
    return dist2_to(a, ac, d2 / (d2 - d6), nullptr, 0);
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && d4 - d3 >= 0.0 && d5 - d6 >= 0.0) {
    double bc[3];
    for (int k = 0; k < 3; ++k) bc[k] = c[k] - b[k];
    return dist2_to(b, bc, (d4 - d3) / ((d4 - d3) + (d5 - d6)), nullptr, 0);
  }
  const double denom = 1.0 / (va + vb + vc);
  return dist2_to(a, ab, vb * denom, ac, vc * denom);
}

double PartQuery::distance_to_set(std::span<const double> x) const {
  switch (kind) {
    case kBall: {
      double s = 0.0;
      for (size_t k = 0; k < center.size(); ++k) {
        const double dx = x[k] - center[k];
        s += dx * dx;
      }
      return std::max(0.0, std::sqrt(s) - radius);
    }
    case kEllipsoid: {
      std::vector<double> rel(center.size());
      double s = 0.0;
      for (size_t k = 0; k < center.size(); ++k) {
        rel[k] = x[k] - center[k];
        const double t = rel[k] / axes[k];
        s += t * t;
      }
      if (s <= 1.0) return 0.0;
      return surface_distance_impl(axes, rel);
    }
    case kPolytope: {
      if (hull->dim() != 3)
        throw GeometryError(
            "distance_to_set: exterior polytope query implemented for d=3");
      if (inside(x)) return 0.0;
      double best = std::numeric_limits<double>::infinity();
      const auto& pts = hull->points();
      for (const auto& f : hull->facets()) {
        const double d2 = point_triangle_dist2(
            x.data(), pts[f.vertices[0]].data(), pts[f.vertices[1]].data(),
            pts[f.vertices[2]].data());
        best = std::min(best, d2);
      }
      return std::sqrt(best);
    }
  }
  return 0.0;
}

PartQuery make_part(const Body& b) {
  PartQuery pq;
  if (const auto* ball = b.as<geometry::Ball>()) {
    pq.kind = PartQuery::kBall;
    pq.center = ball->center;
    pq.radius = ball->radius;
    return pq;
  }
  if (const auto* e = b.as<geometry::Ellipsoid>()) {
    pq.kind = PartQuery::kEllipsoid;
    pq.center = e->center;
    pq.axes = e->axes.values();
    return pq;
  }
  if (const auto* p = b.as<geometry::VPolytope>()) {
    pq.kind = PartQuery::kPolytope;
    pq.hull = std::make_unique<geometry::ConvexHull>(p->vertices);
    return pq;
  }
  throw GeometryError("distance query: nested unions not supported");
}

}  // namespace

struct DistanceQuery::Impl {
  int d;
  std::vector<PartQuery> parts;
  geometry::Aabb box;
  double enclosing_radius;
};

DistanceQuery::DistanceQuery(const Body& body)
    : impl_(std::make_unique<Impl>()) {
  impl_->d = body.dim();
  if (const auto* u = body.as<geometry::DisjointUnion>()) {
    for (const auto& part : u->parts) impl_->parts.push_back(make_part(part));
  } else {
    impl_->parts.push_back(make_part(body));
  }
  impl_->box = geometry::bounding_box(body);
  double r2 = 0.0;
  for (int k = 0; k < impl_->d; ++k)
    r2 += std::max(impl_->box.lo[k] * impl_->box.lo[k],
                   impl_->box.hi[k] * impl_->box.hi[k]);
  impl_->enclosing_radius = std::sqrt(r2);
}

DistanceQuery::~DistanceQuery() = default;
DistanceQuery::DistanceQuery(DistanceQuery&&) noexcept = default;
DistanceQuery& DistanceQuery::operator=(DistanceQuery&&) noexcept = default;

int DistanceQuery::dim() const { return impl_->d; }

bool DistanceQuery::inside(std::span<const double> x) const {
  for (const auto& p : impl_->parts)
    if (p.inside(x)) return true;
  return false;
}

double DistanceQuery::boundary_distance_inside(std::span<const double> x) const {
  // parts are disjoint, so the inmost part's own boundary is the nearest
  // piece of the union boundary
  for (const auto& p : impl_->parts)
    if (p.inside(x)) return p.boundary_distance_inside(x);
  return 0.0;
}

double DistanceQuery::distance_to_set(std::span<const double> x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : impl_->parts)
    best = std::min(best, p.distance_to_set(x));
  return best;
}

double DistanceQuery::enclosing_radius() const {
  return impl_->enclosing_radius;
}

const geometry::Aabb& DistanceQuery::box() const { return impl_->box; }

}  // namespace captor::montecarlo
