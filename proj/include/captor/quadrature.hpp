#pragma once

#include <functional>

namespace captor::exact {

struct QuadratureConfig {
  double rel_tol = 1e-11;     // in (0, 1e-4]
  int max_subdivisions = 2000;
};

struct QuadratureResult {
  double value;
  double error_estimate;  // absolute
  int subdivisions;
  bool converged;
};

// Globally adaptive Gauss-Kronrod 7/15 on the finite interval [a, b],
// QUADPACK-style error estimates, worst-interval-first refinement.
// Throws QuadratureError if the tolerance cannot be met.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    const QuadratureConfig& cfg = {});

}  // namespace captor::exact
