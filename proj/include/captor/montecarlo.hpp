#pragma once

#include <cstdint>
#include <string>

#include "captor/geometry.hpp"

namespace captor::montecarlo {

using geometry::Body;

struct WosConfig {
  long long walkers = 100000;
  // Absorption shell width (absolute). 0 selects 1e-3 x enclosing radius.
  double shell_eps = 0.0;
  // Start sphere radius for capacity runs, as a multiple of the enclosing
  // radius. Must be >= 1.5 so the sphere clears the body.
  double start_factor = 2.0;
  // Survival-coin radius as a multiple of the enclosing radius. Must exceed
  // start_factor; a walker past this radius either dies or re-enters the
  // start sphere through the exterior hitting kernel. Never a hard cutoff.
  double escape_factor = 4.0;
  std::uint64_t seed = 1;
  // Guard against pathological walks; exceeding it counts the walker as
  // truncated and is reported, not hidden.
  long long max_steps = 1000000;
  int threads = 1;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  long long walkers = 0;
  double shell_eps = 0.0;
  double truncated_fraction = 0.0;
  std::string bias_note;
};

// Torsional rigidity via walk-on-spheres: T = |Omega| x E[score] where a
// walker started uniformly in the body accumulates r_k^2 / (2d) per jump of
// radius r_k until it reaches the absorption shell.
Estimate wos_torsion(const Body& body, const WosConfig& config = {});

// Newtonian capacity (d >= 3) via exterior walk-on-spheres:
// cap = kappa_d R^{d-2} x P(hit body | start uniform on sphere of radius R).
Estimate wos_capacity(const Body& body, const WosConfig& config = {});

struct GqEstimate {
  Estimate capacity;
  Estimate torsion;
  double volume = 0.0;
  double q = 0.0;
  double value = 0.0;
  double std_error = 0.0;  // delta method from the two factors
};

GqEstimate g_q_monte_carlo(const Body& body, double q,
                           const WosConfig& config = {});

}  // namespace captor::montecarlo
