#include "crn/embedding/sen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "crn/core/combinatorics.hpp"
#include "crn/core/exact.hpp"
#include "crn/embedding/embedding.hpp"

namespace crn {

ReactionNetwork SquareEmbeddedNetwork::network(const ReactionNetwork& host) const {
  std::vector<std::string> names;
  for (SpeciesIndex i : kept_species) names.push_back(host.species_name(i));
  return {std::move(names), reactions};
}

int orientation(std::span<const Reaction> reactions, std::size_t k) {
  if (reactions.size() != k) throw std::invalid_argument("orientation needs a square network");
  if (k == 0) return 1;
  std::vector<std::int64_t> y(k * k);
  std::vector<std::int64_t> d(k * k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const Coefficient a = reactions[j].reactant.coeff(i);
      y[i * k + j] = a;
      d[i * k + j] = a - reactions[j].product.coeff(i);
    }
  }
  const int sy = determinant_sign(y, k);
  if (sy == 0) return 0;
  return sy * determinant_sign(d, k);
}

int orientation(const ReactionNetwork& square) {
  if (square.species_count() != square.reaction_count()) throw std::invalid_argument("network is not square");
  return orientation(square.reactions(), square.species_count());
}

namespace {

// Restriction of host reaction r to `species` (ascending), renumbered.
Reaction restrict_renumbered(const Reaction& r, std::span<const SpeciesIndex> species) {
  Reaction out;
  for (std::size_t i = 0; i < species.size(); ++i) {
    out.reactant.set(i, r.reactant.coeff(species[i]));
    out.product.set(i, r.product.coeff(species[i]));
  }
  return out;
}

std::optional<SquareEmbeddedNetwork> assemble(std::span<const std::size_t> host_reactions,
                                              std::span<const SpeciesIndex> species,
                                              const std::vector<Reaction>& restricted_by_host) {
  const std::size_t k = species.size();
  SquareEmbeddedNetwork sen;
  sen.kept_species.assign(species.begin(), species.end());
  sen.host_reactions.assign(host_reactions.begin(), host_reactions.end());
  std::vector<bool> covered(k, false);
  for (std::size_t j = 0; j < host_reactions.size(); ++j) {
    const Reaction& r = restricted_by_host[host_reactions[j]];
    if (r.trivial()) return std::nullopt;
    for (std::size_t q = 0; q < j; ++q)
      if (sen.reactions[q] == r) return std::nullopt;
    for (const Complex* c : {&r.reactant, &r.product})
      for (const auto& [i, _] : c->terms()) covered[i] = true;
    sen.reactions.push_back(r);
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) return std::nullopt;
  sen.orientation = orientation(sen.reactions, k);
  return sen;
}

}  // namespace

std::optional<SquareEmbeddedNetwork> make_sen(const ReactionNetwork& net, std::span<const std::size_t> reactions,
                                              std::span<const SpeciesIndex> species) {
  if (reactions.size() != species.size()) return std::nullopt;
  if (!std::is_sorted(reactions.begin(), reactions.end()) || !std::is_sorted(species.begin(), species.end()))
    throw std::invalid_argument("SEN indices must be ascending");
  std::vector<Reaction> restricted(net.reaction_count());
  for (std::size_t k : reactions) restricted.at(k) = restrict_renumbered(net.reaction(k), species);
  return assemble(reactions, species, restricted);
}

bool for_each_sen_on_species(const ReactionNetwork& net, std::span<const SpeciesIndex> species,
                             const std::function<bool(const SquareEmbeddedNetwork&)>& visit) {
  const std::size_t k = species.size();
  const std::size_t r = net.reaction_count();
  std::vector<Reaction> restricted(r);
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < r; ++j) {
    restricted[j] = restrict_renumbered(net.reaction(j), species);
    if (!restricted[j].trivial()) candidates.push_back(j);
  }
  if (k == 0 || candidates.size() < k) return true;
  auto pick = first_combination(k);
  std::vector<std::size_t> chosen(k);
  do {
    for (std::size_t q = 0; q < k; ++q) chosen[q] = candidates[pick[q]];
    if (auto sen = assemble(chosen, species, restricted))
      if (!visit(*sen)) return false;
  } while (next_combination(pick, candidates.size()));
  return true;
}

void for_each_sen(const ReactionNetwork& net, std::size_t k,
                  const std::function<bool(const SquareEmbeddedNetwork&)>& visit) {
  const std::size_t s = net.species_count();
  if (k == 0 || k > s || k > net.reaction_count()) return;
  auto species = first_combination(k);
  do {
    if (!for_each_sen_on_species(net, species, visit)) return;
  } while (next_combination(species, s));
}

std::vector<SquareEmbeddedNetwork> enumerate_sens(const ReactionNetwork& net, std::size_t k) {
  std::vector<SquareEmbeddedNetwork> out;
  for_each_sen(net, k, [&](const SquareEmbeddedNetwork& sen) {
    out.push_back(sen);
    return true;
  });
  return out;
}

Coefficient total_molecularity(std::span<const Reaction> reactions, SpeciesIndex species) {
  std::set<Reaction> counted;
  Coefficient total = 0;
  for (const auto& r : reactions) {
    if (is_flow(r)) continue;
    if (counted.contains(r.reversed())) continue;
    counted.insert(r);
    total += r.reactant.coeff(species) + r.product.coeff(species);
  }
  return total;
}

Coefficient total_molecularity(const ReactionNetwork& net, SpeciesIndex species) {
  return total_molecularity(net.reactions(), species);
}

std::string to_string(RelevanceFailure f) {
  switch (f) {
    case RelevanceFailure::flow_like_reaction: return "contains an inflow, outflow or generalized flow reaction";
    case RelevanceFailure::reversible_pair: return "contains a reversible pair";
    case RelevanceFailure::too_few_complexes: return "a species occurs in fewer than two complex positions";
    case RelevanceFailure::not_in_reactant: return "a species occurs in no reactant complex";
    case RelevanceFailure::low_molecularity: return "no species has total molecularity at least 3";
  }
  return "unknown";
}

namespace {

bool flow_like(const Reaction& r) {
  if (r.reactant.is_zero()) return true;
  if (r.reactant.terms().size() != 1) return false;
  const auto [x, a] = *r.reactant.terms().begin();
  if (r.product.is_zero()) return true;
  if (r.product.terms().size() != 1) return false;
  const auto [y, b] = *r.product.terms().begin();
  return x == y && b <= a;
}

}  // namespace

Relevance relevance(std::span<const Reaction> reactions, std::size_t species_count) {
  auto fail = [](RelevanceFailure f) { return Relevance{false, f}; };
  std::set<Reaction> seen;
  for (const auto& r : reactions)
    if (flow_like(r)) return fail(RelevanceFailure::flow_like_reaction);
  for (const auto& r : reactions) {
    if (seen.contains(r.reversed())) return fail(RelevanceFailure::reversible_pair);
    seen.insert(r);
  }
  // Complexes are counted by position (reactant or product of a reaction),
  // so 2A in B -> 2A -> 2B counts twice.
  std::vector<std::size_t> holders(species_count, 0);
  std::vector<bool> in_reactant(species_count, false);
  for (const auto& r : reactions) {
    for (const auto& [i, _] : r.reactant.terms()) {
      ++holders.at(i);
      in_reactant[i] = true;
    }
    for (const auto& [i, _] : r.product.terms()) ++holders.at(i);
  }
  for (std::size_t i = 0; i < species_count; ++i)
    if (holders[i] < 2) return fail(RelevanceFailure::too_few_complexes);
  for (std::size_t i = 0; i < species_count; ++i)
    if (!in_reactant[i]) return fail(RelevanceFailure::not_in_reactant);
  for (std::size_t i = 0; i < species_count; ++i)
    if (total_molecularity(reactions, i) >= 3) return {true, std::nullopt};
  return fail(RelevanceFailure::low_molecularity);
}

Relevance is_relevant(const ReactionNetwork& net) { return relevance(net.reactions(), net.species_count()); }

}  // namespace crn
