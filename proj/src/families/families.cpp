#include "crn/families/families.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "crn/core/format.hpp"
#include "crn/embedding/embedding.hpp"

namespace crn {

// Generated from data/atoms at configure time.
extern const char* const kAtomSources[kAtomCount];

std::string to_string(Family f) {
  switch (f) {
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::Gbar: return "Gbar";
    case Family::K: return "K";
    case Family::atom: return "atom";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "g") return Family::G;
  if (lower == "h") return Family::H;
  if (lower == "gbar") return Family::Gbar;
  if (lower == "k") return Family::K;
  if (lower == "atom") return Family::atom;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::string FamilySpec::label() const {
  if (family == Family::atom) return "atom" + std::to_string(atom);
  return to_string(family) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

void validate(const FamilySpec& spec) {
  auto fail = [&](const std::string& why) { throw std::invalid_argument(spec.label() + ": " + why); };
  switch (spec.family) {
    case Family::G:
    case Family::Gbar:
      if (spec.m < 1 || spec.n < 1) fail("m and n must be positive");
      if (spec.m == spec.n) fail("m and n must differ");
      break;
    case Family::H:
      if (spec.m < 1 || spec.n < 1) fail("m and n must be positive");
      if (spec.m == 1 && spec.n == 1) fail("A + B -> A + B is trivial");
      break;
    case Family::K:
      if (spec.n < 2) fail("order n must be at least 2");
      if (spec.m < 1) fail("production factor m must be positive");
      break;
    case Family::atom:
      if (spec.atom < 1 || spec.atom > kAtomCount) fail("atom index must be in 1..11");
      break;
  }
}

namespace {

NetworkBuilder::Terms times(Coefficient c, const std::string& species) {
  return {{species, c}};
}

}  // namespace

ReactionNetwork generate(const FamilySpec& spec) {
  validate(spec);
  NetworkBuilder b;
  switch (spec.family) {
    case Family::G:
      b.reversible({}, times(1, "A"));
      b.reaction(times(spec.m, "A"), times(spec.n, "A"));
      break;
    case Family::Gbar:
      b.reversible({}, times(1, "A"));
      b.reversible(times(spec.m, "A"), times(spec.n, "A"));
      break;
    case Family::H:
      b.reversible({}, times(1, "A"));
      b.reversible({}, times(1, "B"));
      b.reaction({{"A", 1}, {"B", 1}}, {{"A", spec.m}, {"B", spec.n}});
      break;
    case Family::K: {
      auto x = [](int i) { return "X" + std::to_string(i); };
      b.species(x(1));
      for (int i = 2; i <= spec.n; ++i) b.species(x(i));
      b.reaction(times(1, x(1)), times(spec.m, x(spec.n)));
      for (int i = 1; i < spec.n; ++i) b.reaction({{x(i), 1}, {x(i + 1), 1}}, {});
      break;
    }
    case Family::atom:
      return atoms()[static_cast<std::size_t>(spec.atom - 1)];
  }
  return b.build();
}

const std::string& atom_text(int i) {
  static const std::vector<std::string> texts(kAtomSources, kAtomSources + kAtomCount);
  if (i < 1 || i > kAtomCount) throw std::invalid_argument("atom index must be in 1..11");
  return texts[static_cast<std::size_t>(i - 1)];
}

const std::vector<ReactionNetwork>& atoms() {
  static const std::vector<ReactionNetwork> nets = [] {
    std::vector<ReactionNetwork> out;
    for (int i = 1; i <= kAtomCount; ++i) out.push_back(parse_network(atom_text(i)));
    return out;
  }();
  return nets;
}

ReactionNetwork one_reaction_fully_open(std::span<const Coefficient> a, std::span<const Coefficient> b,
                                        bool reversible) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("coefficient vectors must have equal positive length");
  if (std::equal(a.begin(), a.end(), b.begin())) throw std::invalid_argument("reactant equals product");
  std::vector<std::string> names;
  std::vector<Reaction> reactions;
  Complex lhs;
  Complex rhs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || b[i] < 0) throw std::invalid_argument("coefficients must be nonnegative");
    names.push_back("X" + std::to_string(i + 1));
    reactions.push_back({Complex::zero(), Complex::single(i)});
    reactions.push_back({Complex::single(i), Complex::zero()});
    if (a[i] > 0) lhs.set(i, a[i]);
    if (b[i] > 0) rhs.set(i, b[i]);
  }
  const Reaction r{lhs, rhs};
  if (is_flow(r) || (reversible && is_flow(r.reversed())))
    throw std::invalid_argument("the reaction coincides with a flow reaction");
  reactions.push_back(r);
  if (reversible) reactions.push_back(r.reversed());
  return ReactionNetwork(std::move(names), std::move(reactions));
}

std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes: return "yes";
    case Truth::no: return "no";
    case Truth::unknown: return "unknown";
  }
  return "unknown";
}

ExpectedVerdict expected_verdict(const FamilySpec& spec) {
  validate(spec);
  auto truth = [](bool v) { return v ? Truth::yes : Truth::no; };
  ExpectedVerdict v;
  const int m = spec.m;
  const int n = spec.n;
  switch (spec.family) {
    case Family::G:
      v.multistationary = truth(n > m && m > 1);
      v.source = "one-species family: multistationary iff n > m > 1";
      break;
    case Family::H:
      v.multistationary = truth(m > 1 && n > 1);
      v.source = "two-species family: multistationary iff m > 1 and n > 1";
      break;
    case Family::Gbar:
      v.multistationary = truth(m > 1 && n > 1);
      v.multistable = truth(m > 1 && n > 1);
      v.source = "reversible one-species family: multistable iff m > 1 and n > 1";
      break;
    case Family::K:
      v.multistationary = truth(m > 1 && n % 2 == 1);
      v.nondegeneracy_conjectural = m > 1 && n % 2 == 1;
      v.source = "sequestration network: fully open extension multistationary iff m > 1 and n odd";
      break;
    case Family::atom:
      v.multistationary = Truth::yes;
      v.source = "two-reaction bimolecular atom";
      break;
  }
  return v;
}

}  // namespace crn
