#pragma once

// Restriction, removal and flow bookkeeping on networks, plus containment
// search ("is N embedded in G?").

#include <optional>
#include <set>
#include <vector>

#include "crn/core/network.hpp"

namespace crn {

/// Zeroes the coefficients of species outside `kept`, then drops trivial
/// reactions and later duplicates.
std::vector<Reaction> restrict_reactions(const std::vector<Reaction>& reactions, const std::vector<bool>& kept);

struct RemovalSpec {
  std::set<std::size_t> reactions_removed;
  std::set<SpeciesIndex> species_removed;
};

/// Removes the reactions, restricts the rest to the remaining species and
/// drops species that no longer occur.
ReactionNetwork embedded_network(const ReactionNetwork& net, const RemovalSpec& spec);

bool is_inflow(const Reaction& r);   ///< 0 -> X
bool is_outflow(const Reaction& r);  ///< X -> 0
inline bool is_flow(const Reaction& r) { return is_inflow(r) || is_outflow(r); }

ReactionNetwork non_flow_subnetwork(const ReactionNetwork& net);
/// Adds 0 <-> X for every species (existing flows are not repeated).
ReactionNetwork fully_open_extension(const ReactionNetwork& net);
bool is_cfstr(const ReactionNetwork& net);
bool is_fully_open(const ReactionNetwork& net);

/// Contracts C' -> X -> C'' into C' -> C'' for each listed species X, which
/// must occur only as the complex X itself. Throws NetworkError otherwise.
ReactionNetwork remove_intermediates(const ReactionNetwork& net, const std::set<SpeciesIndex>& intermediates);
bool is_intermediate(const ReactionNetwork& net, SpeciesIndex species);

struct EmbeddingWitness {
  std::vector<SpeciesIndex> species_map;   ///< pattern species -> host species
  std::vector<std::size_t> reaction_map;   ///< pattern reaction -> host reaction
};

struct EmbeddingOptions {
  bool match_names = false;  ///< require equal species names instead of any injection
};

/// Lexicographically least species injection under which every pattern
/// reaction is the restriction of some host reaction.
std::optional<EmbeddingWitness> find_embedding(const ReactionNetwork& pattern, const ReactionNetwork& host,
                                               const EmbeddingOptions& options = {});

bool verify_embedding(const ReactionNetwork& pattern, const ReactionNetwork& host, const EmbeddingWitness& witness);

}  // namespace crn
