#pragma once

#include <stdexcept>
#include <string>

namespace captor {

// Bad dimensions, malformed bodies, out-of-domain arguments.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
// Carries the best value reached and the relative error actually achieved.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double value, double achieved)
      : std::runtime_error(what), value_(value), achieved_(achieved) {}
  double value() const noexcept { return value_; }
  double achieved_rel_error() const noexcept { return achieved_; }

 private:
  double value_;
  double achieved_;
};

// Iterative solver (MVEE, root finder) failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace captor
