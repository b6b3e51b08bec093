// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crn/core/format.hpp"
#include "crn/core/structure.hpp"
#include "crn/decide/decide.hpp"
#include "crn/embedding/sen.hpp"
#include "crn/families/families.hpp"
#include "crn/numeric/one_species.hpp"
#include "crn/numeric/witness.hpp"
#include "support/random_networks.hpp"

using namespace crn;

namespace {

// Everything the soundness sweep looks at.
struct Touched {
  ReactionNetwork net;
  std::size_t witness_states = 0;  // nondegenerate states found (numerically or by exact counting)
};

std::vector<Touched> touched;

void touch(const ReactionNetwork& net, std::size_t states = 0) { touched.push_back({net, states}); }

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_++ < 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  int failures() const { return failures_; }

  std::string line(double seconds) const {
    std::ostringstream out;
    out << (failures_ == 0 ? "PASS" : "FAIL") << "  " << name_ << "  [" << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed";
    if (!notes_.empty()) out << ", " << notes_;
    out << ", " << std::fixed;
    out.precision(1);
    out << seconds << " s]";
    if (failures_) out << "  " << detail_;
    return out.str();
  }

 private:
  std::string name_;
  int checks_ = 0;
  int failures_ = 0;
  std::string detail_;
  std::string notes_;
};

std::string str(const ReactionNetwork& net) {
  std::string s = render_network(net);
  for (auto& c : s)
    if (c == '\n') c = '|';
  return s;
}

AnalyzeOptions symbolic() {
  AnalyzeOptions o;
  o.numeric = false;
  return o;
}

Rational log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return exact_rational(std::round(std::pow(10.0, u(rng)) * 1e4) / 1e4 + 1e-4);
}

void intro_regressions(Criterion& c) {
  const auto n1 = parse_network("B <-> 0\n0 <-> A\n3 A + B -> 2 A + 2 B");
  const auto d1 = deficiency(n1);
  c.expect(d1.applicable && d1.value == 1, "intro 1 deficiency");
  c.expect(d1.per_class == std::vector<long>{0, 0}, "intro 1 per-class deficiencies");
  c.expect(!injectivity_minors(n1).injective() && !cfstr_injectivity(n1).injective(), "intro 1 injectivity");
  c.expect(analyze(n1, symbolic()).status == Status::inconclusive, "intro 1 verdict");
  touch(n1);

  const auto n2 = parse_network("0 <-> A\n0 <-> B\n0 <-> C\n2 A <-> A + B\nA + C <-> B + C");
  const auto d2 = deficiency(n2);
  c.expect(d2.applicable && d2.value == 2, "intro 2 deficiency");
  c.expect(!injectivity_minors(n2).injective() && !cfstr_injectivity(n2).injective(), "intro 2 injectivity");
  c.expect(all_atom_matches(n2).empty(), "intro 2 atom search");
  touch(n2);

  const auto n3 = parse_network("0 <-> A\n0 <-> B\n0 <-> C\n2 A <-> A + B\nA + B <-> B + C");
  const auto v3 = analyze(n3, symbolic());
  c.expect(v3.status == Status::multistationary, "intro 3 verdict");
  c.expect(v3.certificate && v3.certificate->kind == "atom-embedding", "intro 3 certificate kind");
  touch(n3);
}

void one_reaction(Criterion& c) {
  std::mt19937_64 rng(2);
  int classified = 0;
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      if (m == n) continue;
      const bool multi = classify_one_nonflow_fully_open({m}, {n}, false);
      const auto poly = [&](const std::vector<Rational>& r) { return family_polynomial(PolyFamily::G, m, n, r); };
      std::size_t best = 0;
      for (int draw = 0; draw < 1000; ++draw) {
        const std::vector<Rational> r{log_uniform(rng, -2, 2), log_uniform(rng, -2, 2), log_uniform(rng, -2, 2)};
        best = std::max(best, positive_root_count(poly(r)).distinct);
      }
      if (n > m && m > 1) best = std::max(best, positive_root_count(poly(two_root_rates(m, n))).distinct);
      const std::string tag = "G(" + std::to_string(m) + "," + std::to_string(n) + ")";
      if (multi)
        c.expect(best >= 2, tag + " classified multistationary but at most " + std::to_string(best) + " roots");
      else
        c.expect(best <= 1, tag + " classified not multistationary but " + std::to_string(best) + " roots");
      classified += multi;
      touch(generate(FamilySpec::of(Family::G, m, n)), best);
    }
  c.note(std::to_string(classified) + "/30 multistationary");
}

void sequestration(Criterion& c) {
  for (int n = 2; n <= 8; ++n)
    for (int m = 1; m <= 4; ++m) {
      const long value = 1 + (n % 2 == 1 ? 1 : -1) * (-m);
      const int expected = value > 0 ? 1 : (value < 0 ? -1 : 0);
      c.expect(orientation(generate(FamilySpec::of(Family::K, m, n))) == expected,
               "orientation of K(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 4; ++m) {
      const auto net = generate(FamilySpec::of(Family::K, m, n));
      std::size_t proper = 0;
      for (std::size_t k = 1; k < net.species_count(); ++k)
        for_each_sen(net, k, [&](const SquareEmbeddedNetwork& sen) {
          proper += relevance(sen.reactions, sen.size()).relevant;
          return true;
        });
      c.expect(proper == 0, "proper relevant SEN in K(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  for (int n = 2; n <= 6; n += 2)
    for (int m = 1; m <= 3; ++m) {
      const auto net = fully_open_extension(generate(FamilySpec::of(Family::K, m, n)));
      c.expect(analyze(net, symbolic()).status == Status::not_multistationary,
               "verdict for open K(" + std::to_string(m) + "," + std::to_string(n) + ")");
      touch(net);
    }
  for (int n = 3; n <= 7; n += 2)
    for (int m = 2; m <= 3; ++m) {
      const auto net = fully_open_extension(generate(FamilySpec::of(Family::K, m, n)));
      const std::string tag = "open K(" + std::to_string(m) + "," + std::to_string(n) + ")";
      const auto cert = determinant_optimization(net);
      touch(net);
      c.expect(cert.has_value(), "no det-opt certificate for " + tag);
      if (!cert) continue;
      std::vector<Rational> eta(static_cast<std::size_t>(n), Rational(1));
      eta.back() = m + 1;
      c.expect(cert->eta == eta, "eta for " + tag);
      auto given = *cert;
      given.eta = eta;
      c.expect(verify_det_opt(net, given), "exact re-evaluation for " + tag);
    }
}

void atoms_suite(Criterion& c) {
  std::size_t most = 0;
  int index = 0;
  for (const auto& net : atoms()) {
    const std::string tag = "atom" + std::to_string(++index);
    const auto inj = cfstr_injectivity(net);
    c.expect(!inj.injective() && inj.negative_sen.has_value(), tag + " passes injectivity");
    c.expect(!injectivity_minors(net).injective(), tag + " passes the minor condition");
    RateSearchOptions ro;
    ro.seed = 0;
    ro.budget = 10000;
    const auto found = rate_search(net, ro);
    c.expect(found.has_value(), tag + ": no rates with two nondegenerate states");
    if (found) most = std::max(most, found->samples);
    touch(net, found ? found->witness.nondegenerate_count() : 0);
  }
  c.note("at most " + std::to_string(most) + " samples");
}

void multistability(Criterion& c) {
  for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 4}}) {
    const std::string tag = "Gbar(" + std::to_string(m) + "," + std::to_string(n) + ")";
    const auto inst = multistable_parameters(m, n);
    c.expect(inst.has_value(), tag + ": perturbation found nothing");
    if (!inst) continue;
    c.expect(inst->counts.total == 3 && inst->counts.stable == 2,
             tag + ": " + std::to_string(inst->counts.total) + " roots, " + std::to_string(inst->counts.stable) +
                 " stable");
    touch(generate(FamilySpec::of(Family::Gbar, m, n)), inst->counts.total);
  }
}

void equivalences(Criterion& c) {
  std::mt19937_64 rng(6);
  int failing = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto net = test::random_network(rng, 4, 4, 2);
    const bool minors = injectivity_minors(net).injective();
    c.expect(minors == injectivity_signvectors(net).injective(), "minors vs sign vectors on " + str(net));
    failing += !minors;
    touch(net);
  }
  int negative = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto net = test::random_cfstr(rng, 4, 4, 2);
    const bool by_sen = cfstr_injectivity(net).injective();
    c.expect(by_sen == injectivity_minors(net).injective(), "CFSTR route vs minors on " + str(net));
    negative += !by_sen;
    touch(net);
  }
  c.note(std::to_string(failing) + "/200 and " + std::to_string(negative) + "/100 non-injective");
}

void embedding_properties(Criterion& c) {
  std::mt19937_64 rng(7);
  int compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = test::random_network(rng, 4, 6, 2);
    const auto spec = test::random_removal(rng, g);
    const auto n = embedded_network(g, spec);
    c.expect(stoichiometric_rank(n) <= stoichiometric_rank(g), "rank grew on " + str(g));
    if (n.reaction_count() > 0) {
      const auto w = find_embedding(n, g);
      c.expect(w && verify_embedding(n, g, *w), "embedding not recovered in " + str(g));
      touch(n);
    }
    std::uniform_int_distribution<std::size_t> pick(0, g.reaction_count() - 1);
    const auto single = embedded_network(g, {{pick(rng)}, {}});
    const auto dg = deficiency(g);
    const auto dn = deficiency(single);
    if (dg.applicable && dn.applicable) {
      ++compared;
      c.expect(dn.value == dg.value || dn.value == *dg.value - 1, "deficiency jump on " + str(g));
    }
    touch(g);
  }
  c.note(std::to_string(compared) + " deficiency comparisons");
}

// Random reversible reactions plus all flows, kept when weakly reversible with deficiency zero.
ReactionNetwork random_deficiency_zero(std::mt19937_64& rng) {
  for (;;) {
    const auto core = test::random_network(rng, 3, 3, 2);
    std::vector<Reaction> reactions;
    for (const auto& r : core.reactions()) {
      reactions.push_back(r);
      reactions.push_back({r.product, r.reactant});
    }
    auto net = fully_open_extension(ReactionNetwork::compacted(core.species(), reactions));
    const auto d = deficiency(net);
    if (is_weakly_reversible(net) && d.applicable && d.value == 0 && net.reaction_count() > 2 * net.species_count())
      return net;
  }
}

void deficiency_zero(Criterion& c) {
  std::mt19937_64 rng(8);
  std::vector<ReactionNetwork> nets{parse_network("0 <-> A\n0 <-> B\nA <-> B")};
  while (nets.size() < 51) nets.push_back(random_deficiency_zero(rng));
  std::size_t runs = 0;
  for (const auto& net : nets) {
    c.expect(analyze(net, symbolic()).status == Status::not_multistationary, "verdict on " + str(net));
    std::size_t most = 0;
    for (int draw = 0; draw < 20; ++draw) {
      std::vector<Rational> kappa;
      for (std::size_t k = 0; k < net.reaction_count(); ++k) kappa.push_back(log_uniform(rng, -3, 3));
      const auto w = witness_search(net, kappa);
      ++runs;
      c.expect(w.states.size() == 1, std::to_string(w.states.size()) + " states on " + str(net));
      most = std::max(most, w.nondegenerate_count());
    }
    touch(net, most);
  }
  c.note(std::to_string(nets.size()) + " networks, " + std::to_string(runs) + " witness runs");
}

void soundness(Criterion& c) {
  std::size_t multi = 0;
  std::size_t precluded = 0;
  for (const auto& t : touched) {
    const auto v = analyze(t.net, symbolic());
    if (v.status == Status::not_multistationary) {
      ++precluded;
      c.expect(t.witness_states < 2, "precluded despite a two-state witness: " + str(t.net));
    }
    if (v.status == Status::multistationary) {
      ++multi;
      c.expect(!injectivity_minors(t.net).injective(), "certified despite injectivity: " + str(t.net));
      if (is_cfstr(t.net)) c.expect(!cfstr_injectivity(t.net).injective(), "certified despite injectivity: " + str(t.net));
    }
  }
  c.note(std::to_string(touched.size()) + " networks, " + std::to_string(multi) + " multistationary, " +
         std::to_string(precluded) + " precluded");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"1 intro regressions", intro_regressions},
      {"2 one-reaction classification vs exact root counts", one_reaction},
      {"3 sequestration suite", sequestration},
      {"4 eleven atoms", atoms_suite},
      {"5 multistability of Gbar(2,3), Gbar(3,4)", multistability},
      {"6 injectivity formulation equivalences", equivalences},
      {"7 embedding properties", embedding_properties},
      {"8 deficiency-zero uniqueness", deficiency_zero},
      {"9 soundness across all touched networks", soundness},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Criterion c(name);
    const auto start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::puts(c.line(seconds).c_str());
    std::fflush(stdout);
    failed += c.failures() > 0;
  }
  return failed == 0 ? 0 : 1;
}
