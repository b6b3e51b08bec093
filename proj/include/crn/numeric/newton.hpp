#pragma once

// Damped Newton iteration for positive zeros of a mass-action vector field,
// in logarithmic coordinates x = exp(u).

#include <span>
#include <vector>

#include "crn/core/mass_action.hpp"

namespace crn {

struct NewtonOptions {
  double residual_tol = 1e-10;
  int max_iterations = 100;
  int max_halvings = 40;
  double log_bound = 40.0;  ///< iterates leaving |u_i| <= log_bound fail
};

struct NewtonResult {
  bool converged = false;
  std::vector<double> x;
  double residual = 0.0;
  int iterations = 0;
};

/// max_i |f_i(x)| / max(1, sum of |terms| in equation i).
double scaled_residual(const MassActionSystem& sys, std::span<const double> x);

NewtonResult damped_newton(const MassActionSystem& sys, std::vector<double> x0, const NewtonOptions& options);

}  // namespace crn
