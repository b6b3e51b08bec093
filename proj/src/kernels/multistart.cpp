#include "crn/kernels/multistart.hpp"

#include <omp.h>

namespace crn {

std::vector<NewtonResult> multistart_serial(const MassActionSystem& sys, const std::vector<std::vector<double>>& starts,
                                            const NewtonOptions& options) {
  std::vector<NewtonResult> out;
  out.reserve(starts.size());
  for (const auto& x0 : starts) out.push_back(damped_newton(sys, x0, options));
  return out;
}

std::vector<NewtonResult> multistart_parallel(const MassActionSystem& sys,
                                              const std::vector<std::vector<double>>& starts,
                                              const NewtonOptions& options, int threads) {
  std::vector<NewtonResult> out(starts.size());
  const auto n = static_cast<std::ptrdiff_t>(starts.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = damped_newton(sys, starts[i], options);
  return out;
}

}  // namespace crn
