#pragma once

// Square embedded networks (k reactions restricted to k species), their
// orientation, and the structural filters used to prune them.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crn/core/network.hpp"

namespace crn {

struct SquareEmbeddedNetwork {
  std::vector<std::size_t> host_reactions;  ///< ascending host indices
  std::vector<SpeciesIndex> kept_species;   ///< ascending host indices
  /// Restricted reactions, species renumbered 0..k-1 in kept_species order.
  std::vector<Reaction> reactions;
  int orientation = 0;

  std::size_t size() const { return kept_species.size(); }
  /// The SEN as a standalone network with the host's species names.
  ReactionNetwork network(const ReactionNetwork& host) const;
};

/// sign(det[y_1..y_k] * det[y_1 - y'_1 .. y_k - y'_k]) for k reactions over
/// species 0..k-1; columns in the given order.
int orientation(std::span<const Reaction> reactions, std::size_t k);
/// Throws std::invalid_argument unless the network is square.
int orientation(const ReactionNetwork& square);

/// Restriction of the chosen reactions to the chosen species, provided it
/// yields k nontrivial, pairwise distinct reactions in which every kept
/// species occurs; both index lists must be ascending.
std::optional<SquareEmbeddedNetwork> make_sen(const ReactionNetwork& net, std::span<const std::size_t> reactions,
                                              std::span<const SpeciesIndex> species);

/// Visits every SEN of size k: species subsets in lexicographic order, then
/// reaction subsets in lexicographic order. The visitor returns false to stop.
void for_each_sen(const ReactionNetwork& net, std::size_t k,
                  const std::function<bool(const SquareEmbeddedNetwork&)>& visit);
std::vector<SquareEmbeddedNetwork> enumerate_sens(const ReactionNetwork& net, std::size_t k);
/// The inner loop of for_each_sen for one species subset; false if stopped.
bool for_each_sen_on_species(const ReactionNetwork& net, std::span<const SpeciesIndex> species,
                             const std::function<bool(const SquareEmbeddedNetwork&)>& visit);

/// Sum of reactant and product coefficients of a species over non-flow
/// reactions, a reversible pair contributing once.
Coefficient total_molecularity(std::span<const Reaction> reactions, SpeciesIndex species);
Coefficient total_molecularity(const ReactionNetwork& net, SpeciesIndex species);

enum class RelevanceFailure {
  flow_like_reaction,   ///< inflow, outflow, 0 -> y, or aX -> bX with b <= a
  reversible_pair,
  too_few_complexes,    ///< some species in fewer than two reactant/product positions
  not_in_reactant,      ///< some species in no reactant complex
  low_molecularity,     ///< every species has total molecularity below 3
};

std::string to_string(RelevanceFailure f);

struct Relevance {
  bool relevant = false;
  std::optional<RelevanceFailure> violated;  ///< first failed condition
};

Relevance relevance(std::span<const Reaction> reactions, std::size_t species_count);
Relevance is_relevant(const ReactionNetwork& net);

}  // namespace crn
