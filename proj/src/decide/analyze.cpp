#include "crn/core/format.hpp"
#include "crn/core/structure.hpp"
#include "crn/decide/decide.hpp"
#include "crn/numeric/witness.hpp"

namespace crn {

namespace {

nlohmann::json rationals(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string describe(const MinorProduct& p) {
  auto list = [](const std::vector<std::size_t>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "}";
  };
  return "I=" + list(p.species) + " J=" + list(p.reactions) + (p.sign > 0 ? " (+)" : " (-)");
}

nlohmann::json sen_json(const ReactionNetwork& host, const SquareEmbeddedNetwork& sen) {
  nlohmann::json species = nlohmann::json::array();
  for (auto i : sen.kept_species) species.push_back(host.species_name(i));
  nlohmann::json reactions = nlohmann::json::array();
  const auto n = sen.network(host);
  for (const auto& r : sen.reactions) {
    std::vector<SpeciesIndex> map;
    for (auto i : sen.kept_species) map.push_back(*n.find_species(host.species_name(i)));
    reactions.push_back(render_reaction(n, {r.reactant.renamed(map), r.product.renamed(map)}));
  }
  return {{"species", species}, {"reactions", reactions}, {"orientation", sen.orientation}};
}

Verdict conclude(Status status, Certificate cert, std::vector<std::string> notes) {
  Verdict v;
  v.status = status;
  v.certificate = std::move(cert);
  v.notes = std::move(notes);
  return v;
}

}  // namespace

Verdict analyze(const ReactionNetwork& net, const AnalyzeOptions& options) {
  std::vector<std::string> notes;
  const bool fully_open = is_fully_open(net);
  const bool cfstr = is_cfstr(net);

  if (const auto alpha = positive_dependence_witness(net); !alpha) {
    notes.push_back("reaction vectors are not positively dependent: no positive steady states");
    return conclude(Status::no_positive_steady_states, {"positive-dependence-failure", nlohmann::json::object()}, notes);
  }
  notes.push_back("reaction vectors are positively dependent");

  for (auto stage : {check_deficiency_zero, check_deficiency_one}) {
    auto res = stage(net);
    if (res.verdict) {
      res.verdict->notes.insert(res.verdict->notes.begin(), notes.begin(), notes.end());
      return *res.verdict;
    }
    notes.push_back(res.reason);
  }

  if (cfstr) {
    const auto inj = cfstr_injectivity(net, options.threads);
    if (inj.injective())
      return conclude(Status::not_multistationary, {"injectivity-cfstr", {{"relevant_negative_sen", nullptr}}}, [&] {
        notes.push_back("every relevant square embedded network of the non-flow part is nonnegatively oriented");
        return notes;
      }());
    const auto core = non_flow_subnetwork(net);
    const auto listed = sen_json(core, *inj.negative_sen);
    std::string sen;
    for (const auto& r : listed["reactions"]) sen += (sen.empty() ? "" : "; ") + r.get<std::string>();
    notes.push_back("injectivity fails: negatively oriented relevant SEN {" + sen + "}");
  } else {
    MinorOptions mo = options.minors;
    mo.threads = options.threads;
    const auto inj = injectivity_minors(net, mo);
    if (inj.injective())
      return conclude(Status::not_multistationary,
                      {"injectivity-minors", {{"products_checked", inj.products_checked}}}, [&] {
                        notes.push_back("all nonzero minor products share one sign");
                        return notes;
                      }());
    if (inj.outcome == Injectivity::degenerate)
      notes.push_back("injectivity criterion degenerate: every minor product is zero (treated as failing)");
    else
      notes.push_back("injectivity fails: minor products " + describe(inj.conflict->first) + " and " +
                      describe(inj.conflict->second) + " differ in sign");
  }

  if (const auto shape = one_reaction_shape(net)) {
    const auto sums = one_reaction_sums(shape->a, shape->b);
    const bool multi = classify_one_nonflow_fully_open(shape->a, shape->b, shape->reversible);
    const nlohmann::json data = {{"forward_sum", sums.forward},
                                 {"backward_sum", sums.backward},
                                 {"reversible", shape->reversible}};
    if (multi) return conclude(Status::multistationary, {"one-reaction-formula", data}, notes);
    if (options.one_reaction_precludes) return conclude(Status::not_multistationary, {"one-reaction-formula", data}, notes);
    notes.push_back("one-reaction classification: sums " + std::to_string(sums.forward) + ", " +
                    std::to_string(sums.backward) + " do not exceed 1 (not used to preclude)");
  }

  if (cfstr) {
    if (const auto cert = determinant_optimization(net, options.threads)) {
      const auto core = non_flow_subnetwork(net);
      const nlohmann::json data = {{"sen", sen_json(core, cert->sen)},
                                   {"reactions", cert->host_reactions},
                                   {"eta", rationals(cert->eta)},
                                   {"combination", rationals(cert->combination)}};
      if (fully_open) return conclude(Status::multistationary, {"det-opt", data}, notes);
      notes.push_back("determinant optimization certifies the fully open extension, not this network: " + data.dump());
    } else {
      notes.push_back("determinant optimization: no certificate");
    }
  } else {
    notes.push_back("determinant optimization: not a CFSTR");
  }

  if (const auto match = atom_db_search(net)) {
    nlohmann::json map = nlohmann::json::object();
    for (std::size_t i = 0; i < match->witness.species_map.size(); ++i)
      map[match->pattern.species_name(i)] = net.species_name(match->witness.species_map[i]);
    const nlohmann::json data = {{"atom", match->atom},
                                 {"species_map", map},
                                 {"reaction_map", match->witness.reaction_map}};
    if (fully_open) return conclude(Status::multistationary, {"atom-embedding", data}, notes);
    notes.push_back("atom " + match->atom + " is embedded, which certifies the fully open extension only");
  } else {
    notes.push_back("atom search: no known atom is embedded");
  }

  if (options.numeric) {
    if (!fully_open) {
      notes.push_back("numeric witness search skipped: network is not fully open");
    } else {
      RateSearchOptions ro;
      ro.budget = options.budget;
      ro.seed = options.seed;
      ro.witness.threads = options.threads;
      if (const auto found = rate_search(net, ro)) {
        const nlohmann::json data = {{"samples", found->samples}, {"witness", to_json(found->witness)}};
        return conclude(Status::multistationary, {"numeric-witness", data}, notes);
      }
      notes.push_back("numeric witness search: no two nondegenerate steady states in " + std::to_string(options.budget) +
                      " rate samples");
    }
  }

  Verdict v;
  v.notes = std::move(notes);
  return v;
}

}  // namespace crn
