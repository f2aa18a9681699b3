#include "captor/hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "captor/errors.hpp"
#include "captor/linalg.hpp"

namespace captor::geometry {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// Hyperplane through d points: unit normal by cofactor expansion of the
// (d-1) x d edge matrix, oriented so that `inside` satisfies n.x < offset.
bool facet_plane(const std::vector<std::vector<double>>& pts,
                 const std::vector<int>& verts,
                 const std::vector<double>& inside, std::vector<double>& n,
                 double& offset) {
  const int d = static_cast<int>(pts[0].size());
  std::vector<double> edges((d - 1) * d);
  for (int i = 1; i < d; ++i)
    for (int k = 0; k < d; ++k)
      edges[(i - 1) * d + k] = pts[verts[i]][k] - pts[verts[0]][k];
  n.assign(d, 0.0);
  std::vector<double> minor((d - 1) * (d - 1));
  double sign = 1.0;
  for (int k = 0; k < d; ++k) {
    for (int r = 0; r < d - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < d; ++c) {
        if (c == k) continue;
        minor[r * (d - 1) + cc++] = edges[r * d + c];
      }
    }
    n[k] = sign * linalg::determinant(d - 1, minor);
    sign = -sign;
  }
  const double norm = std::sqrt(dot(n, n));
  if (!(norm > 0.0)) return false;
  for (double& x : n) x /= norm;
  offset = dot(n, pts[verts[0]]);
  if (dot(n, inside) > offset) {
    for (double& x : n) x = -x;
    offset = -offset;
  }
  return true;
}

// Dense tableau simplex, minimize c.z subject to A z <= b, z >= 0, b >= 0.
// Sized for a few hundred constraints. Returns optimal z.
std::vector<double> simplex_lp(const std::vector<std::vector<double>>& A,
                               const std::vector<double>& b,
                               const std::vector<double>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  const int cols = n + m + 1;
  std::vector<std::vector<double>> T(m + 1, std::vector<double>(cols, 0.0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1.0;
    T[i][cols - 1] = b[i];
    basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) T[m][j] = c[j];

  const double eps = 1e-11;
  for (int iter = 0;; ++iter) {
    if (iter > 20000)
      throw ConvergenceError("simplex_lp: iteration limit");
    int enter = -1;
    if (iter < 5000) {
      double best = -eps;
      for (int j = 0; j < n + m; ++j)
        if (T[m][j] < best) {
          best = T[m][j];
          enter = j;
        }
    } else {
      // Bland's rule, guards against cycling on degenerate vertices
      for (int j = 0; j < n + m; ++j)
        if (T[m][j] < -eps) {
          enter = j;
          break;
        }
    }
    if (enter < 0) break;
    int leave = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] > eps) {
        const double ratio = T[i][cols - 1] / T[i][enter];
        if (leave < 0 || ratio < best_ratio - 1e-15 ||
            (std::fabs(ratio - best_ratio) <= 1e-15 &&
             basis[i] < basis[leave])) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) throw ConvergenceError("simplex_lp: unbounded");
    const double piv = T[leave][enter];
    for (int j = 0; j < cols; ++j) T[leave][j] /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double f = T[i][enter];
      if (f == 0.0) continue;
      for (int j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  std::vector<double> z(n, 0.0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) z[basis[i]] = T[i][cols - 1];
  return z;
}

}  // namespace

ConvexHull::ConvexHull(const std::vector<std::vector<double>>& points)
    : pts_(points) {
  if (points.empty()) throw GeometryError("hull: no points");
  d_ = static_cast<int>(points[0].size());
  if (d_ < 2) throw GeometryError("hull: dimension must be >= 2");
  const size_t n = points.size();
  if (n < size_t(d_) + 1) throw GeometryError("hull: need at least d+1 points");
  scale_ = 0.0;
  for (const auto& p : points) {
    if (p.size() != size_t(d_))
      throw GeometryError("hull: inconsistent point dimensions");
    for (double x : p) scale_ = std::max(scale_, std::fabs(x));
  }
  const double tol = 1e-10 * (scale_ + 1.0);

  // Initial simplex: greedily take the point farthest from the affine span
  // of those picked so far (distance via Gram-Schmidt residual).
  std::vector<int> simplex;
  simplex.push_back(0);
  std::vector<std::vector<double>> basis;
  while (simplex.size() < size_t(d_) + 1) {
    int best = -1;
    double best_norm = tol;
    std::vector<double> best_dir;
    for (size_t i = 0; i < n; ++i) {
      std::vector<double> v(d_);
      for (int k = 0; k < d_; ++k) v[k] = points[i][k] - points[simplex[0]][k];
      for (const auto& bvec : basis) {
        const double c = dot(v, bvec);
        for (int k = 0; k < d_; ++k) v[k] -= c * bvec[k];
      }
      const double norm = std::sqrt(dot(v, v));
      if (norm > best_norm) {
        best_norm = norm;
        best = static_cast<int>(i);
        best_dir = std::move(v);
      }
    }
    if (best < 0)
      throw GeometryError("hull: points do not affinely span R^d");
    for (double& x : best_dir) x /= best_norm;
    basis.push_back(std::move(best_dir));
    simplex.push_back(best);
  }

  interior_.assign(d_, 0.0);
  for (int idx : simplex)
    for (int k = 0; k < d_; ++k) interior_[k] += points[idx][k] / (d_ + 1.0);

  // facets of the initial simplex: drop one vertex at a time
  for (int drop = 0; drop <= d_; ++drop) {
    HullFacet f;
    for (int i = 0; i <= d_; ++i)
      if (i != drop) f.vertices.push_back(simplex[i]);
    if (!facet_plane(pts_, f.vertices, interior_, f.normal, f.offset))
      throw GeometryError("hull: degenerate initial simplex");
    facets_.push_back(std::move(f));
  }

  const double eps_vis = 1e-9 * (scale_ + 1.0);
  std::vector<char> used(n, 0);
  for (int idx : simplex) used[idx] = 1;
  for (size_t p = 0; p < n; ++p) {
    if (used[p]) continue;
    std::vector<char> visible(facets_.size(), 0);
    bool any = false;
    for (size_t f = 0; f < facets_.size(); ++f) {
      if (dot(facets_[f].normal, points[p]) > facets_[f].offset + eps_vis) {
        visible[f] = 1;
        any = true;
      }
    }
    if (!any) continue;  // inside (or on) the current hull

    // Horizon ridges: (d-1)-subsets of visible facets seen exactly once
    // among the visible set. Each closed-hull ridge joins two facets, so a
    // count of one means the neighbor is hidden.
    std::map<std::vector<int>, int> ridge_count;
    for (size_t f = 0; f < facets_.size(); ++f) {
      if (!visible[f]) continue;
      for (int drop = 0; drop < d_; ++drop) {
        std::vector<int> ridge;
        for (int i = 0; i < d_; ++i)
          if (i != drop) ridge.push_back(facets_[f].vertices[i]);
        std::sort(ridge.begin(), ridge.end());
        ridge_count[ridge] += 1;
      }
    }
    std::vector<HullFacet> next;
    for (size_t f = 0; f < facets_.size(); ++f)
      if (!visible[f]) next.push_back(std::move(facets_[f]));
    for (const auto& [ridge, count] : ridge_count) {
      if (count != 1) continue;
      HullFacet f;
      f.vertices = ridge;
      f.vertices.push_back(static_cast<int>(p));
      if (!facet_plane(pts_, f.vertices, interior_, f.normal, f.offset))
        continue;  // sliver ridge, no volume and no outward face
      next.push_back(std::move(f));
    }
    facets_ = std::move(next);
  }
}

double ConvexHull::volume() const {
  // sum of simplex volumes coned from the interior point
  double vol = 0.0;
  std::vector<double> mat(d_ * d_);
  double factorial = 1.0;
  for (int k = 2; k <= d_; ++k) factorial *= k;
  for (const auto& f : facets_) {
    for (int i = 0; i < d_; ++i)
      for (int k = 0; k < d_; ++k)
        mat[i * d_ + k] = pts_[f.vertices[i]][k] - interior_[k];
    vol += std::fabs(linalg::determinant(d_, mat)) / factorial;
  }
  return vol;
}

bool ConvexHull::contains(const std::vector<double>& x, double tol) const {
  for (const auto& f : facets_)
    if (dot(f.normal, x) > f.offset + tol) return false;
  return true;
}

ConvexHull::ChebyshevBall ConvexHull::chebyshev() const {
  // max r  s.t.  n_i.(x0 + y) + r <= offset_i  with unit normals; shift to
  // the interior point so the slack basis is feasible, split y = y+ - y-.
  const int m = static_cast<int>(facets_.size());
  std::vector<std::vector<double>> A(m, std::vector<double>(2 * d_ + 1));
  std::vector<double> b(m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < d_; ++k) {
      A[i][k] = facets_[i].normal[k];
      A[i][d_ + k] = -facets_[i].normal[k];
    }
    A[i][2 * d_] = 1.0;
    b[i] = facets_[i].offset - dot(facets_[i].normal, interior_);
  }
  std::vector<double> c(2 * d_ + 1, 0.0);
  c[2 * d_] = -1.0;  // minimize -r
  const std::vector<double> z = simplex_lp(A, b, c);
  ChebyshevBall ball;
  ball.center.resize(d_);
  for (int k = 0; k < d_; ++k)
    ball.center[k] = interior_[k] + z[k] - z[d_ + k];
  ball.radius = z[2 * d_];
  return ball;
}

}  // namespace captor::geometry
