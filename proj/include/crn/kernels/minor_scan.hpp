#pragma once

// Scan of the minor products det(Gamma_IJ) det(M_JI) over all rank-sized
// index sets, in lexicographic (I, J) order, on int64 entries.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace crn {

struct MinorProblem {
  std::size_t species = 0;
  std::size_t reactions = 0;
  std::size_t rank = 0;
  std::vector<std::int64_t> gamma;     ///< species x reactions, row-major
  std::vector<std::int64_t> reactant;  ///< reactions x species, row-major
  std::vector<std::vector<std::size_t>> species_sets;
  std::vector<std::vector<std::size_t>> reaction_sets;

  std::size_t size() const { return species_sets.size() * reaction_sets.size(); }
  /// (I, J) for a flat index I * |reaction sets| + J.
  std::pair<const std::vector<std::size_t>&, const std::vector<std::size_t>&> sets(std::size_t flat) const {
    return {species_sets[flat / reaction_sets.size()], reaction_sets[flat % reaction_sets.size()]};
  }
};

/// Builds the index sets; entries are copied as given.
MinorProblem make_minor_problem(std::size_t species, std::size_t reactions, std::size_t rank,
                                std::vector<std::int64_t> gamma, std::vector<std::int64_t> reactant);

int minor_product_sign(const MinorProblem& p, std::size_t flat);

struct MinorScan {
  std::optional<std::size_t> first;     ///< first nonzero product
  int first_sign = 0;
  std::optional<std::size_t> conflict;  ///< first product of opposite sign
  std::size_t checked = 0;              ///< products examined up to the stop
};

MinorScan scan_minors_serial(const MinorProblem& p);
/// Same result as the serial scan; blocks are evaluated in parallel and
/// merged in order. threads <= 0 uses the OpenMP default.
MinorScan scan_minors_parallel(const MinorProblem& p, int threads = 0, std::size_t block = 4096);

}  // namespace crn
