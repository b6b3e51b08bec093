#include <sstream>

#include "crn/core/structure.hpp"
#include "crn/decide/decide.hpp"

namespace crn {

std::string to_string(Status s) {
  switch (s) {
    case Status::multistationary: return "MULTISTATIONARY";
    case Status::not_multistationary: return "NOT_MULTISTATIONARY";
    case Status::no_positive_steady_states: return "NO_POSITIVE_STEADY_STATES";
    case Status::inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string to_string(Injectivity i) {
  switch (i) {
    case Injectivity::injective: return "injective";
    case Injectivity::not_injective: return "not-injective";
    case Injectivity::degenerate: return "degenerate";
  }
  return "degenerate";
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json out;
  out["status"] = to_string(v.status);
  if (v.certificate)
    out["certificate"] = {{"kind", v.certificate->kind}, {"data", v.certificate->data}};
  else
    out["certificate"] = nullptr;
  out["notes"] = v.notes;
  return out;
}

namespace {

std::string join(const std::vector<long>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << "]";
  return out.str();
}

}  // namespace

StageResult check_deficiency_zero(const ReactionNetwork& net) {
  const auto d = deficiency(net);
  if (!d.applicable) return {std::nullopt, "deficiency formula not applicable (a linkage class has several terminal strong linkage classes)"};
  if (*d.value != 0) return {std::nullopt, "deficiency is " + std::to_string(*d.value) + ", not 0"};
  Verdict v;
  const bool wr = is_weakly_reversible(net);
  v.certificate = Certificate{"deficiency-zero", {{"deficiency", 0}, {"weakly_reversible", wr}}};
  if (wr) {
    v.status = Status::not_multistationary;
    v.notes.push_back("deficiency zero and weakly reversible: exactly one positive steady state in each compatibility class, locally asymptotically stable");
  } else {
    v.status = Status::no_positive_steady_states;
    v.notes.push_back("deficiency zero and not weakly reversible: no positive steady states for any rate constants");
  }
  return {v, ""};
}

StageResult check_deficiency_one(const ReactionNetwork& net) {
  const auto d = deficiency(net);
  if (!d.applicable) return {std::nullopt, "deficiency one theorem: some linkage class has more than one terminal strong linkage class"};
  long sum = 0;
  for (std::size_t i = 0; i < d.per_class.size(); ++i) {
    if (d.per_class[i] > 1)
      return {std::nullopt, "deficiency one theorem: linkage class " + std::to_string(i) + " has deficiency " +
                                std::to_string(d.per_class[i]) + " > 1"};
    sum += d.per_class[i];
  }
  if (sum != *d.value)
    return {std::nullopt, "deficiency one theorem: per-class deficiencies " + join(d.per_class) + " sum to " +
                              std::to_string(sum) + ", not " + std::to_string(*d.value)};
  Verdict v;
  v.status = Status::not_multistationary;
  v.certificate = Certificate{"deficiency-one", {{"deficiency", *d.value}, {"per_class", d.per_class}}};
  return {v, ""};
}

}  // namespace crn
