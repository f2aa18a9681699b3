#include "captor/john.hpp"

#include <cmath>

#include "captor/errors.hpp"
#include "captor/linalg.hpp"

namespace captor::john {

using captor::GeometryError;

MveeResult mvee(const std::vector<std::vector<double>>& points, double tol,
                int max_iterations) {
  if (!(tol > 0.0 && tol <= 1e-2))
    throw GeometryError("mvee: tol must be in (0, 1e-2]");
  const int n = static_cast<int>(points.size());
  if (n == 0) throw GeometryError("mvee: no points");
  const int d = static_cast<int>(points[0].size());
  if (d < 2) throw GeometryError("mvee: dimension must be >= 2");
  if (n < d + 1) throw GeometryError("mvee: need at least d+1 points");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != d)
      throw GeometryError("mvee: inconsistent point dimensions");

  // Khachiyan's weights on lifted points q_i = (p_i, 1). At the optimum
  // every support point has q^T Lambda^{-1} q = d+1; an add step pushes the
  // worst outlier weight up, a Wolfe-Atwood drop step removes weight from
  // interior points, which is what makes tol ~ 1e-7 reachable.
  const int m = d + 1;
  std::vector<double> u(n, 1.0 / n);
  std::vector<double> lambda(m * m), lower(m * m), q(m), z(m);
  std::vector<double> w(n);
  int iter = 0;
  double gap = 0.0;
  for (;; ++iter) {
    if (iter >= max_iterations)
      throw ConvergenceError("mvee: iteration cap reached");
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) lambda[r * m + c] = 0.0;
    for (int i = 0; i < n; ++i) {
      if (u[i] == 0.0) continue;
      for (int r = 0; r < m; ++r) {
        const double qr = r < d ? points[i][r] : 1.0;
        for (int c = r; c < m; ++c) {
          const double qc = c < d ? points[i][c] : 1.0;
          lambda[r * m + c] += u[i] * qr * qc;
        }
      }
    }
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < r; ++c) lambda[r * m + c] = lambda[c * m + r];
    if (!linalg::cholesky(m, lambda.data(), lower.data()))
      throw GeometryError("mvee: points do not affinely span R^d");
    for (int i = 0; i < n; ++i) {
      for (int r = 0; r < d; ++r) q[r] = points[i][r];
      q[d] = 1.0;
      linalg::cholesky_solve(m, lower.data(), q.data(), z.data());
      double s = 0.0;
      for (int r = 0; r < m; ++r) s += q[r] * z[r];
      w[i] = s;
    }
    int i_add = 0, i_drop = -1;
    for (int i = 1; i < n; ++i)
      if (w[i] > w[i_add]) i_add = i;
    for (int i = 0; i < n; ++i)
      if (u[i] > 0.0 && (i_drop < 0 || w[i] < w[i_drop])) i_drop = i;
    const double k_hi = w[i_add];
    const double k_lo = w[i_drop];
    gap = std::max(k_hi / m - 1.0, 1.0 - k_lo / m);
    if (k_hi <= (1.0 + tol) * m && k_lo >= (1.0 - tol) * m) break;
    if (k_hi - m >= m - k_lo) {
      const double beta = (k_hi - m) / (m * (k_hi - 1.0));
      for (double& ui : u) ui *= 1.0 - beta;
      u[i_add] += beta;
    } else {
      double beta = (k_lo - m) / (m * (k_lo - 1.0));  // negative
      const double beta_min = -u[i_drop] / (1.0 - u[i_drop]);
      if (beta < beta_min) beta = beta_min;
      for (double& ui : u) ui *= 1.0 - beta;
      u[i_drop] += beta;
      if (u[i_drop] < 1e-18) u[i_drop] = 0.0;
    }
  }

  std::vector<double> center(d, 0.0);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < d; ++r) center[r] += u[i] * points[i][r];
  // scatter about the weighted center
  std::vector<double> sigma(d * d, 0.0);
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0.0) continue;
    for (int r = 0; r < d; ++r)
      for (int c = r; c < d; ++c)
        sigma[r * d + c] += u[i] * (points[i][r] - center[r]) *
                            (points[i][c] - center[c]);
  }
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < r; ++c) sigma[r * d + c] = sigma[c * d + r];
  std::vector<double> sig_lower(d * d);
  if (!linalg::cholesky(d, sigma.data(), sig_lower.data()))
    throw GeometryError("mvee: degenerate scatter matrix");
  // normalize so the farthest point in the Sigma metric sits on the
  // boundary; guarantees containment of every input point
  double k_max = 0.0;
  std::vector<double> diff(d), sol(d);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < d; ++r) diff[r] = points[i][r] - center[r];
    linalg::cholesky_solve(d, sig_lower.data(), diff.data(), sol.data());
    double s = 0.0;
    for (int r = 0; r < d; ++r) s += diff[r] * sol[r];
    if (s > k_max) k_max = s;
  }
  // M = Sigma^{-1} / k_max: invert via d solves against unit vectors
  std::vector<double> shape(d * d, 0.0);
  std::vector<double> e(d, 0.0), col(d);
  for (int c = 0; c < d; ++c) {
    e.assign(d, 0.0);
    e[c] = 1.0;
    linalg::cholesky_solve(d, sig_lower.data(), e.data(), col.data());
    for (int r = 0; r < d; ++r) shape[r * d + c] = col[r] / k_max;
  }
  // symmetrize away the solve round-off
  for (int r = 0; r < d; ++r)
    for (int c = r + 1; c < d; ++c) {
      const double s = 0.5 * (shape[r * d + c] + shape[c * d + r]);
      shape[r * d + c] = s;
      shape[c * d + r] = s;
    }
  std::vector<double> eig;
  linalg::jacobi_eigen(d, shape, eig);
  std::vector<double> axes(d);
  for (int k = 0; k < d; ++k) {
    if (!(eig[k] > 0.0)) throw ConvergenceError("mvee: shape not SPD");
    axes[k] = 1.0 / std::sqrt(eig[k]);
  }
  return MveeResult{std::move(center), std::move(shape),
                    AxisVector(std::move(axes)), iter, gap};
}

std::pair<AxisVector, AxisVector> sandwich_axes(
    const std::vector<std::vector<double>>& points, double tol) {
  const MveeResult r = mvee(points, tol);
  const int d = static_cast<int>(points[0].size());
  return {r.semi_axes.scaled(1.0 / d), r.semi_axes};
}

std::pair<AxisVector, AxisVector> sandwich_axes(const Body& body, double tol) {
  if (const auto* e = body.as<geometry::Ellipsoid>())
    return {e->axes, e->axes};
  if (const auto* b = body.as<geometry::Ball>()) {
    const AxisVector a(std::vector<double>(body.dim(), b->radius));
    return {a, a};
  }
  if (const auto* p = body.as<geometry::VPolytope>())
    return sandwich_axes(p->vertices, tol);
  throw GeometryError("sandwich_axes: disjoint unions are not convex");
}

}  // namespace captor::john
