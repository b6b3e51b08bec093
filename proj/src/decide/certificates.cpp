#include "crn/core/mass_action.hpp"
#include "crn/core/structure.hpp"
#include "crn/decide/decide.hpp"
#include "crn/decide/lp.hpp"
#include "crn/families/families.hpp"
#include "crn/kernels/sen_scan.hpp"

namespace crn {

namespace {

// eta >= 1, sum eta_i (y_i - y'_i) >= 1 componentwise, minimizing sum eta.
LinearProgram det_opt_program(std::span<const Reaction> reactions, std::size_t species) {
  const std::size_t k = reactions.size();
  LinearProgram lp(k);
  for (std::size_t i = 0; i < k; ++i) lp.at_least(i, Rational(1));
  for (std::size_t j = 0; j < species; ++j) {
    std::vector<Rational> row(k);
    for (std::size_t i = 0; i < k; ++i)
      row[i] = Rational(reactions[i].reactant.coeff(j) - reactions[i].product.coeff(j));
    lp.add(std::move(row), Sense::ge, Rational(1));
  }
  lp.minimize = std::vector<Rational>(k, Rational(1));
  return lp;
}

std::vector<Rational> combination(std::span<const Reaction> reactions, std::size_t species,
                                  const std::vector<Rational>& eta) {
  std::vector<Rational> out(species, Rational(0));
  for (std::size_t i = 0; i < reactions.size(); ++i)
    for (std::size_t j = 0; j < species; ++j)
      out[j] += eta[i] * Rational(reactions[i].reactant.coeff(j) - reactions[i].product.coeff(j));
  return out;
}

std::vector<std::size_t> non_flow_indices(const ReactionNetwork& net) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < net.reaction_count(); ++k)
    if (!is_flow(net.reaction(k))) out.push_back(k);
  return out;
}

}  // namespace

std::optional<DetOptCertificate> determinant_optimization(const ReactionNetwork& net, int threads) {
  if (!is_cfstr(net)) throw PreconditionError("determinant optimization requires an outflow for every species");
  const auto core = non_flow_subnetwork(net);
  const std::size_t s = net.species_count();
  if (core.species_count() != s) return std::nullopt;
  const auto sen = find_first_sen(
      core, s,
      [&](const SquareEmbeddedNetwork& c) {
        return c.orientation < 0 && solve(det_opt_program(c.reactions, s)).feasible;
      },
      threads);
  if (!sen) return std::nullopt;
  DetOptCertificate cert;
  cert.sen = *sen;
  const auto index = non_flow_indices(net);
  for (std::size_t k : sen->host_reactions) cert.host_reactions.push_back(index[k]);
  cert.eta = solve(det_opt_program(sen->reactions, s)).witness;
  cert.combination = combination(sen->reactions, s, cert.eta);
  return cert;
}

bool verify_det_opt(const ReactionNetwork& net, const DetOptCertificate& cert) {
  const std::size_t s = net.species_count();
  if (cert.host_reactions.size() != s || cert.eta.size() != s) return false;
  std::vector<Reaction> reactions;
  for (std::size_t k : cert.host_reactions) {
    if (k >= net.reaction_count() || is_flow(net.reaction(k))) return false;
    reactions.push_back(net.reaction(k));
  }
  if (orientation(reactions, s) >= 0) return false;
  for (const auto& e : cert.eta)
    if (e <= 0) return false;
  const auto c = combination(reactions, s, cert.eta);
  if (c != cert.combination) return false;
  return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v > 0; });
}

std::optional<std::vector<Rational>> positive_dependence_witness(const ReactionNetwork& net) {
  const auto sd = stoich(net);
  const std::size_t r = net.reaction_count();
  LinearProgram lp(r);
  for (std::size_t k = 0; k < r; ++k) lp.at_least(k, Rational(1));
  for (std::size_t i = 0; i < sd.gamma.rows(); ++i) {
    std::vector<Rational> row(r);
    for (std::size_t k = 0; k < r; ++k) row[k] = Rational(sd.gamma(i, k));
    lp.add(std::move(row), Sense::eq, Rational(0));
  }
  auto res = solve(lp);
  if (!res.feasible) return std::nullopt;
  return res.witness;
}

bool positive_dependence(const ReactionNetwork& net) { return positive_dependence_witness(net).has_value(); }

bool subnetwork_lift_obstruction(const ReactionNetwork& host, const ReactionNetwork& sub) {
  std::vector<SpeciesIndex> to_host;
  for (const auto& name : sub.species()) {
    const auto i = host.find_species(name);
    if (!i) throw NetworkError("species " + name + " is not in the host network");
    to_host.push_back(*i);
  }
  std::vector<bool> in_sub(host.reaction_count(), false);
  for (const auto& r : sub.reactions()) {
    const auto k = host.find_reaction({r.reactant.renamed(to_host), r.product.renamed(to_host)});
    if (!k) throw NetworkError("a reaction of the subnetwork is not in the host network");
    in_sub[*k] = true;
  }

  const std::size_t s = host.species_count();
  std::vector<std::vector<Integer>> sub_vectors;
  std::vector<std::vector<Integer>> extra;
  for (std::size_t k = 0; k < host.reaction_count(); ++k)
    (in_sub[k] ? sub_vectors : extra).push_back(reaction_vector(host.reaction(k), s));

  auto span_rank = [&](const std::vector<std::vector<Integer>>& cols) {
    IntMatrix m(s, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < s; ++i) m(i, j) = cols[j][i];
    return cols.empty() ? std::size_t{0} : rank(m);
  };
  if (span_rank(sub_vectors) == stoichiometric_rank(host)) return false;

  // sum alpha_t v_t - sum beta_j w_j = 0 with alpha >= 1, beta free.
  const std::size_t q = extra.size();
  LinearProgram lp(q + sub_vectors.size());
  for (std::size_t j = q; j < lp.vars(); ++j) lp.free[j] = true;
  for (std::size_t t = 0; t < q; ++t) lp.at_least(t, Rational(1));
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<Rational> row(lp.vars());
    for (std::size_t t = 0; t < q; ++t) row[t] = Rational(extra[t][i]);
    for (std::size_t j = 0; j < sub_vectors.size(); ++j) row[q + j] = -Rational(sub_vectors[j][i]);
    lp.add(std::move(row), Sense::eq, Rational(0));
  }
  return !solve(lp).feasible;
}

OneReactionSums one_reaction_sums(const std::vector<Coefficient>& a, const std::vector<Coefficient>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("coefficient vectors differ in length");
  OneReactionSums out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) out.forward += a[i];
    if (a[i] > b[i]) out.backward += b[i];
  }
  return out;
}

bool classify_one_nonflow_fully_open(const std::vector<Coefficient>& a, const std::vector<Coefficient>& b,
                                     bool reversible) {
  if (a == b) throw std::invalid_argument("reactant and product complexes coincide");
  const auto sums = one_reaction_sums(a, b);
  return sums.forward > 1 || (reversible && sums.backward > 1);
}

std::optional<OneReactionShape> one_reaction_shape(const ReactionNetwork& net) {
  if (!is_fully_open(net)) return std::nullopt;
  const auto idx = non_flow_indices(net);
  const std::size_t s = net.species_count();
  auto dense = [&](const Complex& c) {
    const auto d = c.dense(s);
    return std::vector<Coefficient>(d.begin(), d.end());
  };
  if (idx.size() == 1) return OneReactionShape{dense(net.reaction(idx[0]).reactant), dense(net.reaction(idx[0]).product), false};
  if (idx.size() == 2 && net.reverse_of(idx[0]) == idx[1])
    return OneReactionShape{dense(net.reaction(idx[0]).reactant), dense(net.reaction(idx[0]).product), true};
  return std::nullopt;
}

std::vector<std::pair<std::string, ReactionNetwork>> atom_database(Coefficient max_coefficient) {
  std::vector<std::pair<std::string, ReactionNetwork>> db;
  for (int i = 1; i <= kAtomCount; ++i) db.emplace_back("atom" + std::to_string(i), atoms()[static_cast<std::size_t>(i - 1)]);
  const int top = static_cast<int>(std::min<Coefficient>(max_coefficient, 64));
  for (int m = 2; m <= top; ++m)
    for (int n = m + 1; n <= top; ++n) {
      const auto spec = FamilySpec::of(Family::G, m, n);
      db.emplace_back(spec.label(), generate(spec));
    }
  for (int m = 2; m <= top; ++m)
    for (int n = 2; n <= top; ++n) {
      const auto spec = FamilySpec::of(Family::H, m, n);
      db.emplace_back(spec.label(), generate(spec));
    }
  return db;
}

std::vector<AtomMatch> all_atom_matches(const ReactionNetwork& net) {
  std::vector<AtomMatch> out;
  for (auto& [name, pattern] : atom_database(net.max_coefficient()))
    if (auto w = find_embedding(pattern, net)) out.push_back({name, pattern, std::move(*w)});
  return out;
}

std::optional<AtomMatch> atom_db_search(const ReactionNetwork& net) {
  for (auto& [name, pattern] : atom_database(net.max_coefficient()))
    if (auto w = find_embedding(pattern, net)) return AtomMatch{name, pattern, std::move(*w)};
  return std::nullopt;
}

}  // namespace crn
