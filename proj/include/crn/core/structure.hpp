#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crn/core/exact.hpp"
#include "crn/core/network.hpp"

namespace crn {

struct StoichData {
  IntMatrix complexes;  ///< Y, p x s
  IntMatrix gamma;      ///< s x r, column k = product_k - reactant_k
  IntMatrix reactant;   ///< M, r x s, row k = reactant_k
  std::size_t rank = 0; ///< dim S = rank(gamma)
};

StoichData stoich(const ReactionNetwork& net);

/// Column of the stoichiometric matrix for one reaction, as integers.
std::vector<Integer> reaction_vector(const Reaction& r, std::size_t species_count);

/// Exact dimension of the span of the given reaction vectors.
std::size_t stoichiometric_rank(const ReactionNetwork& net);

/// Complex indices grouped by undirected connectivity; classes are ordered by
/// their smallest complex index and each class is sorted.
std::vector<std::vector<std::size_t>> linkage_classes(const ReactionNetwork& net);

struct TerminalClasses {
  /// For each linkage class, the terminal strongly connected components
  /// (complex indices, sorted).
  std::vector<std::vector<std::vector<std::size_t>>> per_linkage_class;
  bool unique_per_class = true;
};

TerminalClasses terminal_strong_linkage_classes(const ReactionNetwork& net);

/// All strongly connected components of the complex graph.
std::vector<std::vector<std::size_t>> strong_components(const ReactionNetwork& net);

bool is_weakly_reversible(const ReactionNetwork& net);

struct DeficiencyReport {
  std::size_t complexes = 0;
  std::size_t linkage_classes = 0;
  std::size_t rank = 0;
  /// False when some linkage class has more than one terminal strong linkage
  /// class; `value` and `per_class` are then unset.
  bool applicable = false;
  std::optional<long> value;
  std::vector<long> per_class;
};

DeficiencyReport deficiency(const ReactionNetwork& net);

/// The subnetwork formed by the reactions inside one linkage class.
ReactionNetwork linkage_class_network(const ReactionNetwork& net, const std::vector<std::size_t>& complexes);

}  // namespace crn
