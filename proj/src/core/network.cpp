#include "crn/core/network.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace crn {

Complex::Complex(std::map<SpeciesIndex, Coefficient> terms) {
  for (const auto& [species, coeff] : terms) set(species, coeff);
}

Complex Complex::single(SpeciesIndex species, Coefficient coeff) {
  Complex c;
  c.set(species, coeff);
  return c;
}

Coefficient Complex::coeff(SpeciesIndex species) const {
  auto it = terms_.find(species);
  return it == terms_.end() ? 0 : it->second;
}

void Complex::set(SpeciesIndex species, Coefficient coeff) {
  if (coeff < 0 || coeff > kMaxCoefficient) throw NetworkError("stoichiometric coefficient out of range");
  if (coeff == 0)
    terms_.erase(species);
  else
    terms_[species] = coeff;
}

void Complex::add(SpeciesIndex species, Coefficient coeff) {
  const Coefficient total = this->coeff(species) + coeff;
  if (total > kMaxCoefficient) throw NetworkError("stoichiometric coefficient overflow");
  set(species, total);
}

Coefficient Complex::molecularity() const {
  Coefficient total = 0;
  for (const auto& [_, c] : terms_) total += c;
  return total;
}

Coefficient Complex::max_coefficient() const {
  Coefficient best = 0;
  for (const auto& [_, c] : terms_) best = std::max(best, c);
  return best;
}

Complex Complex::restricted(const std::vector<bool>& kept) const {
  Complex out;
  for (const auto& [species, c] : terms_)
    if (species < kept.size() && kept[species]) out.terms_.emplace(species, c);
  return out;
}

Complex Complex::renamed(const std::vector<SpeciesIndex>& map) const {
  Complex out;
  for (const auto& [species, c] : terms_) out.terms_.emplace(map.at(species), c);
  return out;
}

std::vector<Coefficient> Complex::dense(std::size_t species_count) const {
  std::vector<Coefficient> out(species_count, 0);
  for (const auto& [species, c] : terms_) out.at(species) = c;
  return out;
}

bool is_valid_species_name(std::string_view name) {
  if (name.empty() || name == "0") return false;
  if (std::isdigit(static_cast<unsigned char>(name.front()))) return false;
  for (char ch : name) {
    if (std::isspace(static_cast<unsigned char>(ch))) return false;
    if (ch == '+' || ch == '#' || ch == '<' || ch == '>' || ch == '-' || ch == ',') return false;
  }
  return true;
}

ReactionNetwork::ReactionNetwork(std::vector<std::string> species, std::vector<Reaction> reactions)
    : species_(std::move(species)), reactions_(std::move(reactions)) {
  std::set<std::string, std::less<>> names;
  for (const auto& name : species_) {
    if (!is_valid_species_name(name)) throw NetworkError("invalid species name '" + name + "'");
    if (!names.insert(name).second) throw NetworkError("duplicate species name '" + name + "'");
  }
  std::vector<bool> used(species_.size(), false);
  std::set<Reaction> seen;
  std::map<Complex, std::size_t> complex_index;
  auto intern = [&](const Complex& c) {
    auto [it, inserted] = complex_index.emplace(c, complexes_.size());
    if (inserted) complexes_.push_back(c);
    return it->second;
  };
  for (const auto& r : reactions_) {
    for (const Complex* c : {&r.reactant, &r.product}) {
      for (const auto& [s, coeff] : c->terms()) {
        if (s >= species_.size()) throw NetworkError("reaction refers to an unknown species index");
        used[s] = true;
      }
    }
    if (r.trivial()) throw NetworkError("trivial reaction (reactant equals product)");
    if (!seen.insert(r).second) throw NetworkError("duplicate reaction");
    source_.push_back(intern(r.reactant));
    target_.push_back(intern(r.product));
  }
  for (std::size_t i = 0; i < species_.size(); ++i)
    if (!used[i]) throw NetworkError("species '" + species_[i] + "' occurs in no reaction");
}

ReactionNetwork ReactionNetwork::compacted(const std::vector<std::string>& species,
                                           const std::vector<Reaction>& reactions) {
  std::vector<Reaction> kept;
  std::set<Reaction> seen;
  std::vector<bool> used(species.size(), false);
  for (const auto& r : reactions) {
    if (r.trivial() || !seen.insert(r).second) continue;
    kept.push_back(r);
    for (const Complex* c : {&r.reactant, &r.product})
      for (const auto& [s, _] : c->terms()) used.at(s) = true;
  }
  std::vector<SpeciesIndex> remap(species.size(), 0);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < species.size(); ++i) {
    if (!used[i]) continue;
    remap[i] = names.size();
    names.push_back(species[i]);
  }
  for (auto& r : kept) r = {r.reactant.renamed(remap), r.product.renamed(remap)};
  return {std::move(names), std::move(kept)};
}

std::optional<SpeciesIndex> ReactionNetwork::find_species(std::string_view name) const {
  for (std::size_t i = 0; i < species_.size(); ++i)
    if (species_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> ReactionNetwork::find_reaction(const Reaction& r) const {
  for (std::size_t k = 0; k < reactions_.size(); ++k)
    if (reactions_[k] == r) return k;
  return std::nullopt;
}

std::optional<std::size_t> ReactionNetwork::reverse_of(std::size_t reaction) const {
  const std::size_t src = source_.at(reaction);
  const std::size_t dst = target_.at(reaction);
  for (std::size_t k = 0; k < reactions_.size(); ++k)
    if (source_[k] == dst && target_[k] == src) return k;
  return std::nullopt;
}

Coefficient ReactionNetwork::max_coefficient() const {
  Coefficient best = 0;
  for (const auto& c : complexes_) best = std::max(best, c.max_coefficient());
  return best;
}

std::vector<std::pair<std::vector<std::pair<std::string, Coefficient>>,
                      std::vector<std::pair<std::string, Coefficient>>>>
ReactionNetwork::canonical_key() const {
  auto named = [&](const Complex& c) {
    std::vector<std::pair<std::string, Coefficient>> out;
    for (const auto& [s, coeff] : c.terms()) out.emplace_back(species_[s], coeff);
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<std::pair<std::vector<std::pair<std::string, Coefficient>>,
                        std::vector<std::pair<std::string, Coefficient>>>>
      key;
  for (const auto& r : reactions_) key.emplace_back(named(r.reactant), named(r.product));
  std::sort(key.begin(), key.end());
  return key;
}

bool ReactionNetwork::operator==(const ReactionNetwork& other) const {
  if (species_count() != other.species_count() || reaction_count() != other.reaction_count()) return false;
  std::set<std::string> a(species_.begin(), species_.end());
  std::set<std::string> b(other.species_.begin(), other.species_.end());
  return a == b && canonical_key() == other.canonical_key();
}

SpeciesIndex NetworkBuilder::species(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  if (!is_valid_species_name(name)) throw NetworkError("invalid species name '" + name + "'");
  index_.emplace(name, names_.size());
  names_.push_back(name);
  return names_.size() - 1;
}

Complex NetworkBuilder::complex(const Terms& terms) {
  Complex c;
  for (const auto& [name, coeff] : terms) {
    if (coeff < 1) throw NetworkError("coefficients must be positive");
    c.add(species(name), coeff);
  }
  return c;
}

NetworkBuilder& NetworkBuilder::reaction(const Terms& reactant, const Terms& product) {
  Complex a = complex(reactant);
  Complex b = complex(product);
  reactions_.push_back({std::move(a), std::move(b)});
  return *this;
}

NetworkBuilder& NetworkBuilder::reversible(const Terms& left, const Terms& right) {
  reaction(left, right);
  reaction(right, left);
  return *this;
}

ReactionNetwork NetworkBuilder::build() const { return {names_, reactions_}; }

}  // namespace crn
