#include "crn/numeric/newton.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace crn {

namespace {

struct Evaluation {
  std::vector<double> f;
  std::vector<double> scale;
  double sup = 0.0;    // scaled residual, infinity norm
  double merit = 0.0;  // squared 2-norm of f; the Newton step descends on it
};

Evaluation evaluate(const MassActionSystem& sys, std::span<const double> x) {
  const std::size_t s = sys.species_count();
  Evaluation e{std::vector<double>(s), std::vector<double>(s)};
  sys.evaluate(x, e.f);
  sys.term_magnitude(x, e.scale);
  for (std::size_t i = 0; i < s; ++i) {
    const double r = std::abs(e.f[i]) / std::max(1.0, e.scale[i]);
    e.sup = std::max(e.sup, r);
    e.merit += e.f[i] * e.f[i];
  }
  if (!std::isfinite(e.merit)) e.sup = e.merit = INFINITY;
  return e;
}

}  // namespace

double scaled_residual(const MassActionSystem& sys, std::span<const double> x) { return evaluate(sys, x).sup; }

NewtonResult damped_newton(const MassActionSystem& sys, std::vector<double> x0, const NewtonOptions& options) {
  const std::size_t s = sys.species_count();
  NewtonResult out;
  std::vector<double> u(s);
  for (std::size_t i = 0; i < s; ++i) u[i] = std::log(x0[i]);
  std::vector<double> x = std::move(x0);
  Evaluation cur = evaluate(sys, x);
  std::vector<double> jac(s * s);
  Eigen::MatrixXd J(s, s);
  Eigen::VectorXd rhs(s);
  std::vector<double> trial_u(s);
  std::vector<double> trial_x(s);

  for (int it = 0; it < options.max_iterations && cur.sup >= options.residual_tol; ++it) {
    out.iterations = it + 1;
    // d f / d u_j = (d f / d x_j) x_j
    sys.jacobian(x, jac);
    for (std::size_t i = 0; i < s; ++i) {
      rhs(static_cast<Eigen::Index>(i)) = -cur.f[i];
      for (std::size_t j = 0; j < s; ++j)
        J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = jac[i * s + j] * x[j];
    }
    const Eigen::VectorXd step = J.colPivHouseholderQr().solve(rhs);
    if (!step.allFinite()) break;

    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h <= options.max_halvings; ++h, t *= 0.5) {
      bool inside = true;
      for (std::size_t i = 0; i < s; ++i) {
        trial_u[i] = u[i] + t * step(static_cast<Eigen::Index>(i));
        if (std::abs(trial_u[i]) > options.log_bound) inside = false;
        trial_x[i] = std::exp(trial_u[i]);
      }
      if (!inside) continue;
      Evaluation next = evaluate(sys, trial_x);
      if (next.merit < cur.merit) {
        u = trial_u;
        x = trial_x;
        cur = std::move(next);
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }

  out.converged = cur.sup < options.residual_tol;
  out.residual = cur.sup;
  out.x = std::move(x);
  return out;
}

}  // namespace crn
