#include "captor/linalg.hpp"

#include <cmath>
#include <cstdlib>

namespace captor::linalg {

bool cholesky(int n, const double* a, double* lower) {
  for (int i = 0; i < n * n; ++i) lower[i] = 0.0;
  for (int j = 0; j < n; ++j) {
    double diag = a[j * n + j];
    for (int k = 0; k < j; ++k) diag -= lower[j * n + k] * lower[j * n + k];
    if (!(diag > 0.0)) return false;
    const double ljj = std::sqrt(diag);
    lower[j * n + j] = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = a[i * n + j];
      for (int k = 0; k < j; ++k) s -= lower[i * n + k] * lower[j * n + k];
      lower[i * n + j] = s / ljj;
    }
  }
  return true;
}

void cholesky_solve(int n, const double* lower, const double* b, double* x) {
  // forward substitution L y = b, then back substitution L^T x = y
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= lower[i * n + k] * x[k];
    x[i] = s / lower[i * n + i];
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    for (int k = i + 1; k < n; ++k) s -= lower[k * n + i] * x[k];
    x[i] = s / lower[i * n + i];
  }
}

namespace {

// LU with partial pivoting, in place. Returns 0 on singular, else +-1 (the
// sign of the permutation). pivots[] receives the row order.
int lu_factor(int n, std::vector<double>& a, std::vector<int>& pivots) {
  pivots.resize(n);
  int sign = 1;
  for (int i = 0; i < n; ++i) pivots[i] = i;
  for (int col = 0; col < n; ++col) {
    int best = col;
    double mag = std::fabs(a[col * n + col]);
    for (int r = col + 1; r < n; ++r) {
      const double m = std::fabs(a[r * n + col]);
      if (m > mag) {
        mag = m;
        best = r;
      }
    }
    if (mag == 0.0) return 0;
    if (best != col) {
      for (int k = 0; k < n; ++k) std::swap(a[best * n + k], a[col * n + k]);
      std::swap(pivots[best], pivots[col]);
      sign = -sign;
    }
    const double inv = 1.0 / a[col * n + col];
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] * inv;
      a[r * n + col] = f;
      for (int k = col + 1; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
    }
  }
  return sign;
}

}  // namespace

bool solve(int n, std::vector<double> a, std::vector<double> b,
           std::vector<double>& x) {
  std::vector<int> pivots;
  if (lu_factor(n, a, pivots) == 0) return false;
  x.resize(n);
  for (int i = 0; i < n; ++i) x[i] = b[pivots[i]];
  for (int i = 1; i < n; ++i)
    for (int k = 0; k < i; ++k) x[i] -= a[i * n + k] * x[k];
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) x[i] -= a[i * n + k] * x[k];
    x[i] /= a[i * n + i];
  }
  return true;
}

double determinant(int n, std::vector<double> a) {
  std::vector<int> pivots;
  const int sign = lu_factor(n, a, pivots);
  if (sign == 0) return 0.0;
  double det = sign;
  for (int i = 0; i < n; ++i) det *= a[i * n + i];
  return det;
}

void jacobi_eigen(int n, std::vector<double> a, std::vector<double>& values,
                  std::vector<double>* eigenvectors) {
  std::vector<double> v;
  if (eigenvectors) {
    v.assign(n * n, 0.0);
    for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    double norm = 0.0;
    for (int i = 0; i < n * n; ++i) norm += a[i] * a[i];
    if (off <= 1e-30 * (norm + 1e-300)) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        // smaller-angle root of t^2 + 2 theta t - 1 = 0
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        if (eigenvectors) {
          for (int k = 0; k < n; ++k) {
            const double vkp = v[k * n + p], vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  values.resize(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = 0; i < n; ++i) values[i] = a[i * n + i];
  // selection sort ascending, moving eigenvector columns along
  for (int i = 0; i < n; ++i) {
    int m = i;
    for (int k = i + 1; k < n; ++k)
      if (values[k] < values[m]) m = k;
    if (m != i) {
      std::swap(values[i], values[m]);
      std::swap(order[i], order[m]);
    }
  }
  if (eigenvectors) {
    eigenvectors->assign(n * n, 0.0);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        (*eigenvectors)[i * n + k] = v[i * n + order[k]];
  }
}

}  // namespace captor::linalg
