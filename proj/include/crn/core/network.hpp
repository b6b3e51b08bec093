#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crn {

using SpeciesIndex = std::size_t;
using Coefficient = std::int64_t;

/// Largest stoichiometric coefficient accepted anywhere in the toolkit.
inline constexpr Coefficient kMaxCoefficient = 0x7fffffff;

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A nonnegative integer combination of species, stored sparsely.
/// The zero complex is the empty map.
class Complex {
 public:
  Complex() = default;
  explicit Complex(std::map<SpeciesIndex, Coefficient> terms);

  static Complex zero() { return {}; }
  static Complex single(SpeciesIndex species, Coefficient coeff = 1);

  Coefficient coeff(SpeciesIndex species) const;
  void set(SpeciesIndex species, Coefficient coeff);
  void add(SpeciesIndex species, Coefficient coeff);

  const std::map<SpeciesIndex, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient molecularity() const;
  Coefficient max_coefficient() const;
  bool involves(SpeciesIndex species) const { return terms_.contains(species); }

  /// Coefficients of species outside `kept` set to zero.
  Complex restricted(const std::vector<bool>& kept) const;
  /// Species indices rewritten through `map` (entries must be valid).
  Complex renamed(const std::vector<SpeciesIndex>& map) const;

  std::vector<Coefficient> dense(std::size_t species_count) const;

  auto operator<=>(const Complex&) const = default;
  bool operator==(const Complex&) const = default;

 private:
  std::map<SpeciesIndex, Coefficient> terms_;
};

struct Reaction {
  Complex reactant;
  Complex product;

  bool trivial() const { return reactant == product; }
  Reaction reversed() const { return {product, reactant}; }

  auto operator<=>(const Reaction&) const = default;
  bool operator==(const Reaction&) const = default;
};

/// Species, with complexes derived from an ordered list of directed reactions.
/// Immutable after construction.
class ReactionNetwork {
 public:
  ReactionNetwork() = default;

  /// Validates the invariants: unique well-formed names, indices in range,
  /// nontrivial pairwise distinct reactions, every species used.
  ReactionNetwork(std::vector<std::string> species, std::vector<Reaction> reactions);

  /// Drops trivial and duplicate reactions (first occurrence kept) and species
  /// that no longer occur, reindexing the survivors in their original order.
  static ReactionNetwork compacted(const std::vector<std::string>& species, const std::vector<Reaction>& reactions);

  std::size_t species_count() const { return species_.size(); }
  std::size_t reaction_count() const { return reactions_.size(); }
  std::size_t complex_count() const { return complexes_.size(); }

  const std::vector<std::string>& species() const { return species_; }
  const std::string& species_name(SpeciesIndex i) const { return species_.at(i); }
  std::optional<SpeciesIndex> find_species(std::string_view name) const;

  const std::vector<Reaction>& reactions() const { return reactions_; }
  const Reaction& reaction(std::size_t k) const { return reactions_.at(k); }
  std::optional<std::size_t> find_reaction(const Reaction& r) const;

  /// Distinct complexes in order of first appearance (reactant before product).
  const std::vector<Complex>& complexes() const { return complexes_; }
  std::size_t source_complex(std::size_t reaction) const { return source_.at(reaction); }
  std::size_t target_complex(std::size_t reaction) const { return target_.at(reaction); }

  /// Index of the reverse reaction, if present.
  std::optional<std::size_t> reverse_of(std::size_t reaction) const;

  Coefficient max_coefficient() const;

  /// Reactions expressed by species name, sorted; equal networks have equal keys.
  std::vector<std::pair<std::vector<std::pair<std::string, Coefficient>>,
                        std::vector<std::pair<std::string, Coefficient>>>>
  canonical_key() const;

  /// Order-insensitive on reactions, species matched by name.
  bool operator==(const ReactionNetwork& other) const;

 private:
  std::vector<std::string> species_;
  std::vector<Reaction> reactions_;
  std::vector<Complex> complexes_;
  std::vector<std::size_t> source_;
  std::vector<std::size_t> target_;
};

bool is_valid_species_name(std::string_view name);

/// Assembles a network from species names, assigning indices by first use.
class NetworkBuilder {
 public:
  using Terms = std::vector<std::pair<std::string, Coefficient>>;

  SpeciesIndex species(const std::string& name);
  NetworkBuilder& reaction(const Terms& reactant, const Terms& product);
  NetworkBuilder& reversible(const Terms& left, const Terms& right);
  ReactionNetwork build() const;

 private:
  Complex complex(const Terms& terms);

  std::vector<std::string> names_;
  std::map<std::string, SpeciesIndex, std::less<>> index_;
  std::vector<Reaction> reactions_;
};

}  // namespace crn
