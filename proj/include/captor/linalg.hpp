#pragma once

// Dense helpers for the tiny symmetric systems that show up here (MVEE shape
// matrices, hull facet normals): order is (d+1) <= 11, so plain O(n^3) code
// with no blocking is the right tool.

#include <vector>

namespace captor::linalg {

// Cholesky factorization A = L L^T of a symmetric matrix given row-major.
// Returns false if A is not (numerically) positive definite.
bool cholesky(int n, const double* a, double* lower);

// Solve L L^T x = b given the Cholesky factor.
void cholesky_solve(int n, const double* lower, const double* b, double* x);

// Solve A x = b by LU with partial pivoting. Returns false if singular.
bool solve(int n, std::vector<double> a, std::vector<double> b,
           std::vector<double>& x);

// Determinant via LU with partial pivoting.
double determinant(int n, std::vector<double> a);

// Eigenvalues (ascending) of a symmetric matrix by cyclic Jacobi rotations.
// If eigenvectors is non-null it receives the orthogonal matrix column-wise:
// eigenvectors[i*n+k] is component i of the eigenvector for eigenvalue k.
void jacobi_eigen(int n, std::vector<double> a, std::vector<double>& values,
                  std::vector<double>* eigenvectors = nullptr);

}  // namespace captor::linalg
