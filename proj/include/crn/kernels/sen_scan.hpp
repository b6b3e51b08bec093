#pragma once

// OpenMP scans over square embedded networks. Work is split by species
// subset; results match the serial for_each_sen order exactly.

#include <cstddef>
#include <functional>
#include <optional>

#include "crn/embedding/sen.hpp"

namespace crn {

using SenPredicate = std::function<bool(const SquareEmbeddedNetwork&)>;

/// First SEN of size k (in for_each_sen order) satisfying `accept`.
/// threads <= 0 uses the OpenMP default. `accept` must be thread-safe.
std::optional<SquareEmbeddedNetwork> find_first_sen(const ReactionNetwork& net, std::size_t k,
                                                    const SenPredicate& accept, int threads = 0);

/// Number of SENs of size k satisfying `accept`.
std::size_t count_sens(const ReactionNetwork& net, std::size_t k, const SenPredicate& accept, int threads = 0);

}  // namespace crn
