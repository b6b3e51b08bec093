#include <doctest.h>

#include <random>

#include "crn/core/format.hpp"
#include "crn/core/mass_action.hpp"
#include "crn/core/structure.hpp"
#include "crn/decide/decide.hpp"
#include "crn/decide/lp.hpp"
#include "crn/families/families.hpp"
#include "crn/kernels/minor_scan.hpp"
#include "support/random_networks.hpp"

using namespace crn;

namespace {

const char* kIntro1 = "0 <-> A\n0 <-> B\n3 A + B -> 2 A + 2 B";
const char* kIntro2 = "0 <-> A\n0 <-> B\n0 <-> C\n2 A <-> A + B\nA + C <-> B + C";
const char* kIntro3 = "0 <-> A\n0 <-> B\n0 <-> C\n2 A <-> A + B\nA + B <-> B + C";

ReactionNetwork k_open(int m, int n) { return fully_open_extension(generate(FamilySpec::of(Family::K, m, n))); }

std::vector<Rational> ints(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Solves a 3x3 system by Cramer's rule; nullopt when singular.
std::optional<std::vector<Rational>> cramer(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  RatMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = a[i][j];
  const Rational d = determinant(m);
  if (d == 0) return std::nullopt;
  std::vector<Rational> x(3);
  for (std::size_t c = 0; c < 3; ++c) {
    RatMatrix mc = m;
    for (std::size_t i = 0; i < 3; ++i) mc(i, c) = b[i];
    x[c] = determinant(mc) / d;
  }
  return x;
}

}  // namespace

TEST_CASE("exact LP examples") {
  LinearProgram lp(2);
  lp.add(ints({1, 1}), Sense::eq, Rational(3)).add(ints({1, -1}), Sense::ge, Rational(1));
  auto res = solve(lp);
  REQUIRE(res.feasible);
  CHECK(satisfies(lp, res.witness));

  LinearProgram bad(1);
  bad.at_least(0, Rational(2)).add(ints({1}), Sense::le, Rational(1));
  CHECK(!solve(bad).feasible);

  // x free, x <= -1: feasible only with the sign split.
  LinearProgram neg(1);
  neg.free[0] = true;
  neg.add(ints({1}), Sense::le, Rational(-1));
  res = solve(neg);
  REQUIRE(res.feasible);
  CHECK(res.witness[0] <= -1);

  LinearProgram opt(2);
  opt.at_least(0, Rational(1)).at_least(1, Rational(1)).add(ints({1, -3}), Sense::ge, Rational(1));
  opt.minimize = ints({1, 1});
  res = solve(opt);
  REQUIRE(res.feasible);
  CHECK(res.witness == ints({4, 1}));
  CHECK(*res.objective == 5);

  LinearProgram unbounded(1);
  unbounded.free[0] = true;
  unbounded.minimize = ints({1});
  CHECK(solve(unbounded).unbounded);

  // Redundant equality rows.
  LinearProgram red(2);
  red.add(ints({1, 1}), Sense::eq, Rational(2)).add(ints({2, 2}), Sense::eq, Rational(4));
  res = solve(red);
  REQUIRE(res.feasible);
  CHECK(satisfies(red, res.witness));
}

TEST_CASE("LP answers agree with vertex enumeration") {
  // Random systems in a box |x_i| <= 5: nonempty iff some vertex is feasible,
  // and a linear objective attains its minimum at a vertex.
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> count(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    LinearProgram lp(3);
    lp.free.assign(3, true);
    for (std::size_t i = 0; i < 3; ++i) {
      auto row = ints({0, 0, 0});
      row[i] = 1;
      lp.add(row, Sense::le, Rational(5));
      lp.add(row, Sense::ge, Rational(-5));
    }
    const int extra = count(rng);
    for (int k = 0; k < extra; ++k) {
      const auto row = ints({coef(rng), coef(rng), coef(rng)});
      const int which = coef(rng);
      lp.add(row, which < -1 ? Sense::eq : (which < 1 ? Sense::ge : Sense::le), Rational(coef(rng) * 2));
    }
    lp.minimize = ints({coef(rng), coef(rng), coef(rng)});

    std::optional<Rational> best;
    const std::size_t m = lp.rows.size();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        for (std::size_t c = b + 1; c < m; ++c) {
          const auto x = cramer({lp.rows[a], lp.rows[b], lp.rows[c]}, {lp.rhs[a], lp.rhs[b], lp.rhs[c]});
          if (!x || !satisfies(lp, *x)) continue;
          Rational v(0);
          for (std::size_t i = 0; i < 3; ++i) v += (*lp.minimize)[i] * (*x)[i];
          if (!best || v < *best) best = v;
        }
    const auto res = solve(lp);
    CHECK(res.feasible == best.has_value());
    if (res.feasible && best) {
      CHECK(satisfies(lp, res.witness));
      CHECK(*res.objective == *best);
    }
  }
}

TEST_CASE("deficiency theorems") {
  auto zero = check_deficiency_zero(parse_network("A <-> B"));
  REQUIRE(zero.verdict);
  CHECK(zero.verdict->status == Status::not_multistationary);
  CHECK(zero.verdict->certificate->kind == "deficiency-zero");
  zero = check_deficiency_zero(parse_network("A -> B"));
  REQUIRE(zero.verdict);
  CHECK(zero.verdict->status == Status::no_positive_steady_states);
  CHECK(!check_deficiency_zero(parse_network(kIntro1)).verdict);

  const auto one = check_deficiency_one(parse_network(kIntro1));
  CHECK(!one.verdict);
  CHECK(one.reason.find("sum to 0, not 1") != std::string::npos);
  CHECK(check_deficiency_one(parse_network("A <-> B")).verdict->status == Status::not_multistationary);
  // Two classes: {0, A} with deficiency 0 and {B, 2B, 3B} with deficiency 1.
  const auto two = check_deficiency_one(parse_network("0 <-> A\nB -> 2 B\n2 B -> 3 B\n3 B -> B"));
  REQUIRE(two.verdict);
  CHECK(two.verdict->status == Status::not_multistationary);
  CHECK(two.verdict->certificate->data["per_class"] == std::vector<long>{0, 1});
  // Sharing a direction breaks the sum: deficiency 2, classes (0, 1).
  CHECK(!check_deficiency_one(parse_network("0 <-> A\n2 A -> 3 A\n3 A -> 4 A\n4 A -> 2 A")).verdict);
}

TEST_CASE("injectivity examples") {
  const auto intro2 = parse_network(kIntro2);
  const auto res = injectivity_minors(intro2);
  CHECK(res.outcome == Injectivity::not_injective);
  REQUIRE(res.conflict);
  CHECK(res.conflict->first.sign == -res.conflict->second.sign);
  CHECK(injectivity_signvectors(intro2, 10).outcome == Injectivity::not_injective);
  CHECK(cfstr_injectivity(intro2).outcome == Injectivity::not_injective);

  CHECK(injectivity_minors(parse_network("A <-> B")).outcome == Injectivity::injective);
  CHECK(injectivity_signvectors(parse_network("A <-> B")).outcome == Injectivity::injective);
  CHECK(injectivity_minors(parse_network("A -> B")).outcome == Injectivity::injective);
  CHECK(injectivity_minors(parse_network("0 -> A")).outcome == Injectivity::degenerate);
  CHECK(injectivity_signvectors(parse_network("0 -> A")).outcome == Injectivity::not_injective);
  CHECK(injectivity_minors(parse_network(kIntro1)).outcome == Injectivity::not_injective);

  CHECK(injectivity_signvectors(k_open(2, 2), 6).outcome == Injectivity::injective);
  CHECK(cfstr_injectivity(k_open(2, 2)).outcome == Injectivity::injective);
  CHECK_THROWS_AS(injectivity_signvectors(k_open(2, 3)), LimitError);
  CHECK_THROWS_AS(cfstr_injectivity(parse_network("A -> B")), PreconditionError);
  MinorOptions tiny;
  tiny.max_products = 3;
  CHECK_THROWS_AS(injectivity_minors(intro2, tiny), LimitError);
}

TEST_CASE("CFSTR injectivity on sequestration networks") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 3; ++m) {
      const auto res = cfstr_injectivity(k_open(m, n));
      const bool negative = m >= 2 && n % 2 == 1;
      CHECK_MESSAGE(res.injective() == !negative, "m=", m, " n=", n);
      if (negative) {
        REQUIRE(res.negative_sen);
        CHECK(res.negative_sen->size() == static_cast<std::size_t>(n));
      }
    }
}

TEST_CASE("minor scans: parallel int64 kernel matches the bigint reference") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 300; ++trial) {
    const auto net = test::random_network(rng, 5, 7, 3);
    const auto ref = injectivity_minors_reference(net);
    for (bool parallel : {false, true}) {
      MinorOptions o;
      o.parallel = parallel;
      o.threads = 3;
      const auto got = injectivity_minors(net, o);
      CHECK(got.outcome == ref.outcome);
      CHECK(got.products_checked == ref.products_checked);
      if (ref.conflict) {
        REQUIRE(got.conflict);
        CHECK(got.conflict->first.species == ref.conflict->first.species);
        CHECK(got.conflict->first.reactions == ref.conflict->first.reactions);
        CHECK(got.conflict->second.reactions == ref.conflict->second.reactions);
      }
    }
  }
  // Block boundaries do not change the answer.
  const auto sd = stoich(k_open(2, 5));
  auto flat = [](const IntMatrix& m) {
    std::vector<std::int64_t> v;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j).get_si());
    return v;
  };
  const auto p = make_minor_problem(5, sd.gamma.cols(), sd.rank, flat(sd.gamma), flat(sd.reactant));
  const auto serial = scan_minors_serial(p);
  for (std::size_t block : {1u, 7u, 100u}) {
    const auto par = scan_minors_parallel(p, 2, block);
    CHECK(par.conflict == serial.conflict);
    CHECK(par.checked == serial.checked);
  }
}

TEST_CASE("minor and sign-vector formulations agree") {
  std::mt19937_64 rng(97);
  int non_injective = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto net = test::random_network(rng, 4, 4, 2);
    const bool minors = injectivity_minors(net).injective();
    const bool signs = injectivity_signvectors(net).injective();
    CHECK_MESSAGE(minors == signs, render_network(net));
    non_injective += !minors;
  }
  CHECK(non_injective > 20);
}

TEST_CASE("CFSTR formulations agree") {
  std::mt19937_64 rng(101);
  int negative = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto net = test::random_cfstr(rng, 4, 4, 2);
    const bool by_sen = cfstr_injectivity(net).injective();
    CHECK_MESSAGE(by_sen == injectivity_minors(net).injective(), render_network(net));
    // All s-square SENs of the whole network nonnegatively oriented.
    bool square_ok = true;
    for_each_sen(net, net.species_count(), [&](const SquareEmbeddedNetwork& sen) {
      square_ok = sen.orientation >= 0;
      return square_ok;
    });
    CHECK(by_sen == square_ok);
    // Every SEN of the non-flow part, relevant or not.
    const auto core = non_flow_subnetwork(net);
    bool core_ok = true;
    for (std::size_t k = 1; k <= core.species_count() && core_ok; ++k)
      for_each_sen(core, k, [&](const SquareEmbeddedNetwork& sen) {
        core_ok = sen.orientation >= 0;
        return core_ok;
      });
    CHECK(by_sen == core_ok);
    if (net.species_count() <= 3 && net.reaction_count() <= 7) CHECK(by_sen == injectivity_signvectors(net, 7).injective());
    negative += !by_sen;
    if (by_sen) CHECK(!determinant_optimization(net));
  }
  CHECK(negative > 10);
}

TEST_CASE("atoms fail every injectivity formulation") {
  for (const auto& net : atoms()) {
    CHECK(!cfstr_injectivity(net).injective());
    CHECK(!injectivity_minors(net).injective());
    CHECK(!injectivity_minors_reference(net).injective());
    if (net.reaction_count() <= 7) CHECK(!injectivity_signvectors(net, 7).injective());
  }
}

TEST_CASE("determinant optimization") {
  for (int n = 3; n <= 7; n += 2)
    for (int m = 2; m <= 3; ++m) {
      const auto net = k_open(m, n);
      const auto cert = determinant_optimization(net);
      REQUIRE(cert);
      std::vector<Rational> expected(static_cast<std::size_t>(n), Rational(1));
      expected.back() = m + 1;
      CHECK(cert->eta == expected);
      CHECK(verify_det_opt(net, *cert));
      auto tampered = *cert;
      tampered.eta.back() = m;
      tampered.combination.back() -= 1;
      CHECK(!verify_det_opt(net, tampered));
    }
  for (int n = 2; n <= 6; n += 2) CHECK(!determinant_optimization(k_open(2, n)));
  CHECK(!determinant_optimization(k_open(1, 3)));
}

TEST_CASE("positive dependence and lift obstructions") {
  const auto ab = positive_dependence_witness(parse_network("A <-> B"));
  REQUIRE(ab);
  CHECK(*ab == ints({1, 1}));
  CHECK(!positive_dependence(parse_network("A -> B")));
  CHECK(positive_dependence(generate(FamilySpec::of(Family::G, 2, 3))));

  const auto sub = parse_network("A <-> B");
  CHECK(!subnetwork_lift_obstruction(sub, sub));
  CHECK(subnetwork_lift_obstruction(parse_network("A <-> B\n0 -> C"), sub));
  CHECK(!subnetwork_lift_obstruction(parse_network("A <-> B\n0 -> C\nC -> 0"), sub));
  CHECK_THROWS_AS(subnetwork_lift_obstruction(sub, parse_network("A -> C")), NetworkError);

  // An obstruction rules out positive steady states, hence positive dependence.
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const auto host = test::random_network(rng, 4, 6, 2);
    std::vector<Reaction> kept;
    for (std::size_t k = 0; k < host.reaction_count(); ++k)
      if (k % 2 == 0) kept.push_back(host.reaction(k));
    const auto sub = ReactionNetwork::compacted(host.species(), kept);
    if (subnetwork_lift_obstruction(host, sub)) CHECK(!positive_dependence(host));
  }
}

TEST_CASE("one-reaction classification") {
  CHECK(classify_one_nonflow_fully_open({2}, {3}, false));
  CHECK(classify_one_nonflow_fully_open({1, 1}, {2, 3}, false));
  CHECK(!classify_one_nonflow_fully_open({1}, {2}, false));
  CHECK(!classify_one_nonflow_fully_open({3}, {2}, false));
  CHECK(classify_one_nonflow_fully_open({3}, {2}, true));
  CHECK(!classify_one_nonflow_fully_open({3, 1}, {2, 2}, false));
  CHECK_THROWS(classify_one_nonflow_fully_open({1}, {1}, false));

  const auto shape = one_reaction_shape(parse_network(kIntro1));
  REQUIRE(shape);
  CHECK(shape->a == std::vector<Coefficient>{3, 1});
  CHECK(!shape->reversible);
  CHECK(one_reaction_shape(parse_network("0 <-> A\n2 A <-> 3 A"))->reversible);
  CHECK(!one_reaction_shape(parse_network(kIntro2)));
}

TEST_CASE("classified one-reaction networks contain a database atom") {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> c(0, 3);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t s = 1 + static_cast<std::size_t>(trial % 3);
    std::vector<Coefficient> a(s), b(s);
    for (std::size_t i = 0; i < s; ++i) {
      a[i] = c(rng);
      b[i] = c(rng);
    }
    ReactionNetwork net;
    try {
      net = one_reaction_fully_open(a, b, false);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!classify_one_nonflow_fully_open(a, b, false)) continue;
    ++checked;
    CHECK_MESSAGE(atom_db_search(net), render_network(net));
  }
  CHECK(checked > 50);
}

TEST_CASE("atom search") {
  const auto intro3 = parse_network(kIntro3);
  const auto match = atom_db_search(intro3);
  REQUIRE(match);
  CHECK(match->atom == "atom7");
  CHECK(verify_embedding(match->pattern, intro3, match->witness));
  CHECK(intro3.species_name(match->witness.species_map[0]) == "B");
  CHECK(intro3.species_name(match->witness.species_map[1]) == "A");
  CHECK(!atom_db_search(parse_network(kIntro2)));
  const auto g35 = atom_db_search(generate(FamilySpec::of(Family::G, 3, 5)));
  REQUIRE(g35);
  CHECK(g35->atom == "G(3,5)");
  for (int i = 1; i <= kAtomCount; ++i) CHECK(atom_db_search(atoms()[i - 1])->atom == "atom" + std::to_string(i));
  const auto db = atom_database(2);
  CHECK(db.size() == 11 + 0 + 1);
}

TEST_CASE("analyze examples") {
  const auto intro1 = analyze(parse_network(kIntro1));
  CHECK(intro1.status == Status::inconclusive);
  CHECK(!intro1.certificate);
  CHECK(intro1.notes.size() >= 5);

  const auto k24 = analyze(k_open(2, 4));
  CHECK(k24.status == Status::not_multistationary);
  CHECK(k24.certificate->kind == "injectivity-cfstr");

  const auto k23 = analyze(k_open(2, 3));
  CHECK(k23.status == Status::multistationary);
  CHECK(k23.certificate->kind == "det-opt");
  CHECK(k23.certificate->data["eta"] == std::vector<std::string>{"1", "1", "3"});

  CHECK(analyze(parse_network("A <-> B")).status == Status::not_multistationary);
  CHECK(analyze(parse_network("A -> B")).status == Status::no_positive_steady_states);
  CHECK(analyze(parse_network("A -> B")).certificate->kind == "positive-dependence-failure");
  CHECK(analyze(parse_network(kIntro2)).status == Status::inconclusive);
  const auto intro3 = analyze(parse_network(kIntro3));
  CHECK(intro3.status == Status::multistationary);
  CHECK(intro3.certificate->kind == "atom-embedding");

  const auto g23 = analyze(generate(FamilySpec::of(Family::G, 2, 3)));
  CHECK(g23.status == Status::multistationary);
  CHECK(g23.certificate->kind == "one-reaction-formula");

  AnalyzeOptions precluding;
  precluding.one_reaction_precludes = true;
  CHECK(analyze(parse_network(kIntro1), precluding).status == Status::not_multistationary);

  // Not fully open: certificates for the extension become notes.
  const auto k23_bare = analyze(generate(FamilySpec::of(Family::K, 2, 3)));
  CHECK(k23_bare.status != Status::multistationary);

  const auto j = to_json(k23);
  CHECK(j["status"] == "MULTISTATIONARY");
  CHECK(j["certificate"]["kind"] == "det-opt");
  CHECK(j["notes"].is_array());
  CHECK(to_json(intro1)["certificate"].is_null());
}

TEST_CASE("known multistationary networks are never precluded") {
  std::vector<ReactionNetwork> known;
  for (const auto& a : atoms()) known.push_back(a);
  for (int m = 2; m <= 4; ++m)
    for (int n = m + 1; n <= 5; ++n) {
      known.push_back(generate(FamilySpec::of(Family::G, m, n)));
      known.push_back(generate(FamilySpec::of(Family::Gbar, m, n)));
      known.push_back(generate(FamilySpec::of(Family::Gbar, n, m)));
    }
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n) known.push_back(generate(FamilySpec::of(Family::H, m, n)));
  for (int m = 2; m <= 3; ++m)
    for (int n = 3; n <= 7; n += 2) known.push_back(k_open(m, n));
  for (const auto& net : known) {
    const auto v = analyze(net);
    CHECK_MESSAGE(v.status == Status::multistationary, render_network(net));
  }
}
