#pragma once

// Independent Newton runs from many starting points. Both versions return
// one result per start, in start order.

#include <vector>

#include "crn/numeric/newton.hpp"

namespace crn {

std::vector<NewtonResult> multistart_serial(const MassActionSystem& sys, const std::vector<std::vector<double>>& starts,
                                            const NewtonOptions& options);

/// threads <= 0 uses the OpenMP default.
std::vector<NewtonResult> multistart_parallel(const MassActionSystem& sys,
                                              const std::vector<std::vector<double>>& starts,
                                              const NewtonOptions& options, int threads = 0);

}  // namespace crn
