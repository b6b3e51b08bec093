#include "crn/kernels/minor_scan.hpp"

#include <omp.h>

#include <algorithm>

#include "crn/core/combinatorics.hpp"
#include "crn/core/exact.hpp"

namespace crn {

MinorProblem make_minor_problem(std::size_t species, std::size_t reactions, std::size_t rank,
                                std::vector<std::int64_t> gamma, std::vector<std::int64_t> reactant) {
  MinorProblem p;
  p.species = species;
  p.reactions = reactions;
  p.rank = rank;
  p.gamma = std::move(gamma);
  p.reactant = std::move(reactant);
  p.species_sets = all_combinations(species, rank);
  p.reaction_sets = all_combinations(reactions, rank);
  return p;
}

int minor_product_sign(const MinorProblem& p, std::size_t flat) {
  const auto [I, J] = p.sets(flat);
  const std::size_t k = p.rank;
  std::vector<std::int64_t> a(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i * k + j] = p.gamma[I[i] * p.reactions + J[j]];
  const int sa = determinant_sign(a, k);
  if (sa == 0) return 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i * k + j] = p.reactant[J[i] * p.species + I[j]];
  return sa * determinant_sign(a, k);
}

namespace {

// Folds one product into the scan; true once a conflict is recorded.
bool absorb(MinorScan& scan, std::size_t flat, int sign) {
  scan.checked = flat + 1;
  if (sign == 0) return false;
  if (!scan.first) {
    scan.first = flat;
    scan.first_sign = sign;
    return false;
  }
  if (sign != scan.first_sign) {
    scan.conflict = flat;
    return true;
  }
  return false;
}

}  // namespace

MinorScan scan_minors_serial(const MinorProblem& p) {
  MinorScan scan;
  for (std::size_t f = 0; f < p.size(); ++f)
    if (absorb(scan, f, minor_product_sign(p, f))) break;
  return scan;
}

MinorScan scan_minors_parallel(const MinorProblem& p, int threads, std::size_t block) {
  MinorScan scan;
  const int team = threads > 0 ? threads : omp_get_max_threads();
  std::vector<int> signs(block);
  for (std::size_t start = 0; start < p.size(); start += block) {
    const std::size_t len = std::min(block, p.size() - start);
    const auto n = static_cast<std::ptrdiff_t>(len);
#pragma omp parallel for schedule(static) num_threads(team)
    for (std::ptrdiff_t i = 0; i < n; ++i) signs[static_cast<std::size_t>(i)] = minor_product_sign(p, start + static_cast<std::size_t>(i));
    for (std::size_t i = 0; i < len; ++i)
      if (absorb(scan, start + i, signs[i])) return scan;
  }
  return scan;
}

}  // namespace crn
