#include "crn/embedding/embedding.hpp"

#include <algorithm>

namespace crn {

std::vector<Reaction> restrict_reactions(const std::vector<Reaction>& reactions, const std::vector<bool>& kept) {
  std::vector<Reaction> out;
  std::set<Reaction> seen;
  for (const auto& r : reactions) {
    Reaction restricted{r.reactant.restricted(kept), r.product.restricted(kept)};
    if (restricted.trivial() || !seen.insert(restricted).second) continue;
    out.push_back(std::move(restricted));
  }
  return out;
}

ReactionNetwork embedded_network(const ReactionNetwork& net, const RemovalSpec& spec) {
  std::vector<bool> kept(net.species_count(), true);
  for (SpeciesIndex i : spec.species_removed) kept.at(i) = false;
  std::vector<Reaction> remaining;
  for (std::size_t k = 0; k < net.reaction_count(); ++k)
    if (!spec.reactions_removed.contains(k)) remaining.push_back(net.reaction(k));
  return ReactionNetwork::compacted(net.species(), restrict_reactions(remaining, kept));
}

namespace {

bool is_single_unit(const Complex& c) { return c.terms().size() == 1 && c.terms().begin()->second == 1; }

}  // namespace

bool is_inflow(const Reaction& r) { return r.reactant.is_zero() && is_single_unit(r.product); }
bool is_outflow(const Reaction& r) { return r.product.is_zero() && is_single_unit(r.reactant); }

ReactionNetwork non_flow_subnetwork(const ReactionNetwork& net) {
  std::vector<Reaction> kept;
  for (const auto& r : net.reactions())
    if (!is_flow(r)) kept.push_back(r);
  return ReactionNetwork::compacted(net.species(), kept);
}

ReactionNetwork fully_open_extension(const ReactionNetwork& net) {
  std::vector<Reaction> reactions = net.reactions();
  std::set<Reaction> present(reactions.begin(), reactions.end());
  for (SpeciesIndex i = 0; i < net.species_count(); ++i) {
    const Reaction in{Complex::zero(), Complex::single(i)};
    const Reaction out{Complex::single(i), Complex::zero()};
    if (!present.contains(in)) reactions.push_back(in);
    if (!present.contains(out)) reactions.push_back(out);
  }
  return {net.species(), std::move(reactions)};
}

bool is_cfstr(const ReactionNetwork& net) {
  std::vector<bool> out(net.species_count(), false);
  for (const auto& r : net.reactions())
    if (is_outflow(r)) out[r.reactant.terms().begin()->first] = true;
  return std::all_of(out.begin(), out.end(), [](bool b) { return b; });
}

bool is_fully_open(const ReactionNetwork& net) {
  std::vector<bool> in(net.species_count(), false);
  for (const auto& r : net.reactions())
    if (is_inflow(r)) in[r.product.terms().begin()->first] = true;
  return is_cfstr(net) && std::all_of(in.begin(), in.end(), [](bool b) { return b; });
}

bool is_intermediate(const ReactionNetwork& net, SpeciesIndex species) {
  const Complex self = Complex::single(species);
  bool found = false;
  for (const auto& c : net.complexes()) {
    if (c == self)
      found = true;
    else if (c.involves(species))
      return false;
  }
  return found;
}

ReactionNetwork remove_intermediates(const ReactionNetwork& net, const std::set<SpeciesIndex>& intermediates) {
  for (SpeciesIndex x : intermediates)
    if (x >= net.species_count() || !is_intermediate(net, x))
      throw NetworkError("species is not an intermediate");
  std::vector<Reaction> reactions = net.reactions();
  for (SpeciesIndex x : intermediates) {
    const Complex self = Complex::single(x);
    std::vector<Complex> successors;
    for (const auto& r : reactions)
      if (r.reactant == self) successors.push_back(r.product);
    std::vector<Reaction> next;
    for (const auto& r : reactions) {
      if (r.reactant == self) continue;
      if (r.product != self) {
        next.push_back(r);
        continue;
      }
      for (const auto& c : successors) next.push_back({r.reactant, c});
    }
    reactions = std::move(next);
  }
  return ReactionNetwork::compacted(net.species(), reactions);
}

namespace {

bool agrees_on_assigned(const Complex& pattern, const Complex& host, const std::vector<SpeciesIndex>& map,
                        std::size_t assigned) {
  for (std::size_t p = 0; p < assigned; ++p)
    if (pattern.coeff(p) != host.coeff(map[p])) return false;
  return true;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const ReactionNetwork& pattern, const ReactionNetwork& host, const EmbeddingOptions& options)
      : pattern_(pattern), host_(host), options_(options), map_(pattern.species_count()),
        used_(host.species_count(), false) {
    // Single-species compatibility: each pattern reaction touching p must
    // have a host reaction with matching coefficients of q on both sides.
    const std::size_t ps = pattern.species_count();
    const std::size_t hs = host.species_count();
    allowed_.assign(ps, std::vector<bool>(hs, true));
    for (std::size_t p = 0; p < ps; ++p) {
      for (std::size_t q = 0; q < hs; ++q) {
        if (options.match_names && pattern.species_name(p) != host.species_name(q)) {
          allowed_[p][q] = false;
          continue;
        }
        for (const auto& pr : pattern.reactions()) {
          const bool ok = std::any_of(host.reactions().begin(), host.reactions().end(), [&](const Reaction& hr) {
            return hr.reactant.coeff(q) == pr.reactant.coeff(p) && hr.product.coeff(q) == pr.product.coeff(p);
          });
          if (!ok) {
            allowed_[p][q] = false;
            break;
          }
        }
      }
    }
  }

  std::optional<EmbeddingWitness> run() {
    if (pattern_.species_count() > host_.species_count()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    EmbeddingWitness w;
    w.species_map = map_;
    w.reaction_map = realizers(pattern_.species_count());
    return w;
  }

 private:
  // Least host reaction index realizing each pattern reaction on the first
  // `assigned` species, or empty when some pattern reaction has none.
  std::vector<std::size_t> realizers(std::size_t assigned) const {
    // With a complete injection, agreement on every pattern species is
    // exactly equality after restriction to the image.
    std::vector<std::size_t> out;
    for (const auto& pr : pattern_.reactions()) {
      bool found = false;
      for (std::size_t k = 0; k < host_.reaction_count() && !found; ++k) {
        const auto& hr = host_.reaction(k);
        if (!agrees_on_assigned(pr.reactant, hr.reactant, map_, assigned)) continue;
        if (!agrees_on_assigned(pr.product, hr.product, map_, assigned)) continue;
        out.push_back(k);
        found = true;
      }
      if (!found) return {};
    }
    return out;
  }

  bool extend(std::size_t p) {
    if (p == pattern_.species_count()) return pattern_.reaction_count() == 0 || !realizers(p).empty();
    for (std::size_t q = 0; q < host_.species_count(); ++q) {
      if (used_[q] || !allowed_[p][q]) continue;
      map_[p] = q;
      used_[q] = true;
      if (pattern_.reaction_count() == 0 || !realizers(p + 1).empty()) {
        if (extend(p + 1)) return true;
      }
      used_[q] = false;
    }
    return false;
  }

  const ReactionNetwork& pattern_;
  const ReactionNetwork& host_;
  EmbeddingOptions options_;
  std::vector<SpeciesIndex> map_;
  std::vector<bool> used_;
  std::vector<std::vector<bool>> allowed_;
};

}  // namespace

std::optional<EmbeddingWitness> find_embedding(const ReactionNetwork& pattern, const ReactionNetwork& host,
                                               const EmbeddingOptions& options) {
  return EmbeddingSearch(pattern, host, options).run();
}

bool verify_embedding(const ReactionNetwork& pattern, const ReactionNetwork& host, const EmbeddingWitness& w) {
  if (w.species_map.size() != pattern.species_count() || w.reaction_map.size() != pattern.reaction_count())
    return false;
  std::vector<bool> image(host.species_count(), false);
  std::vector<SpeciesIndex> inverse(host.species_count(), 0);
  for (std::size_t p = 0; p < w.species_map.size(); ++p) {
    const SpeciesIndex q = w.species_map[p];
    if (q >= host.species_count() || image[q]) return false;
    image[q] = true;
    inverse[q] = p;
  }
  for (std::size_t k = 0; k < pattern.reaction_count(); ++k) {
    if (w.reaction_map[k] >= host.reaction_count()) return false;
    const auto& hr = host.reaction(w.reaction_map[k]);
    const Reaction restricted{hr.reactant.restricted(image).renamed(inverse), hr.product.restricted(image).renamed(inverse)};
    if (restricted != pattern.reaction(k)) return false;
  }
  return true;
}

}  // namespace crn
