#include <doctest.h>

#include <random>

#include "crn/core/format.hpp"
#include "crn/embedding/embedding.hpp"
#include "crn/embedding/sen.hpp"
#include "crn/families/families.hpp"
#include "crn/numeric/one_species.hpp"
#include "crn/numeric/polynomial.hpp"

using namespace crn;

TEST_CASE("generated networks") {
  CHECK(generate(FamilySpec::of(Family::K, 2, 3)) == parse_network("X1 -> 2 X3\nX1 + X2 -> 0\nX2 + X3 -> 0"));
  CHECK(generate(FamilySpec::of(Family::G, 2, 3)) == parse_network("0 <-> A\n2 A -> 3 A"));
  CHECK(generate(FamilySpec::of(Family::Gbar, 2, 3)) == parse_network("0 <-> A\n2 A <-> 3 A"));
  CHECK(generate(FamilySpec::of(Family::H, 2, 3)) == parse_network("0 <-> A\n0 <-> B\nA + B -> 2 A + 3 B"));
  CHECK(generate(FamilySpec::atom_number(1)) == parse_network("0 <-> A\n0 <-> B\nA -> 2 A\nA + B -> 0"));
  const auto k = generate(FamilySpec::of(Family::K, 1, 4));
  CHECK(k.species() == std::vector<std::string>{"X1", "X2", "X3", "X4"});
  CHECK(render_reaction(k, k.reaction(0)) == "X1 -> X4");

  CHECK_THROWS_AS(generate(FamilySpec::of(Family::G, 2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(generate(FamilySpec::of(Family::K, 2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(generate(FamilySpec::of(Family::H, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(generate(FamilySpec::atom_number(12)), std::invalid_argument);
  CHECK(parse_family("gbar") == Family::Gbar);
  CHECK_THROWS(parse_family("Q"));
}

TEST_CASE("atom corpus") {
  REQUIRE(atoms().size() == 11);
  for (int i = 1; i <= kAtomCount; ++i) {
    const auto& net = atoms()[static_cast<std::size_t>(i - 1)];
    CHECK(is_fully_open(net));
    CHECK(net.max_coefficient() <= 2);
    for (const auto& c : net.complexes()) CHECK(c.molecularity() <= 2);
    // Two non-flow reactions, a reversible pair counting once.
    const auto core = non_flow_subnetwork(net);
    std::size_t count = 0;
    for (std::size_t r = 0; r < core.reaction_count(); ++r) {
      const auto rev = core.reverse_of(r);
      if (!rev || *rev > r) ++count;
    }
    CHECK(count == 2);
    CHECK(parse_network(render_network(net)) == net);
  }
  // No atom is embedded in another one.
  for (int i = 0; i < kAtomCount; ++i)
    for (int j = 0; j < kAtomCount; ++j)
      if (i != j) CHECK(!find_embedding(atoms()[i], atoms()[j]));
}

TEST_CASE("sequestration orientation matches the closed form") {
  for (int n = 2; n <= 8; ++n)
    for (int m = 1; m <= 4; ++m) {
      const long value = 1 + (n % 2 == 1 ? 1 : -1) * (-m);  // 1 + (-1)^(n+1) (-m)
      const int expected = value > 0 ? 1 : (value < 0 ? -1 : 0);
      CHECK_MESSAGE(orientation(generate(FamilySpec::of(Family::K, m, n))) == expected, "m=", m, " n=", n);
    }
}

TEST_CASE("sequestration networks have no proper relevant SEN") {
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 3; ++m) {
      const auto net = generate(FamilySpec::of(Family::K, m, n));
      std::size_t proper = 0;
      std::size_t full = 0;
      for (std::size_t k = 1; k <= net.species_count(); ++k)
        for_each_sen(net, k, [&](const SquareEmbeddedNetwork& sen) {
          if (relevance(sen.reactions, sen.size()).relevant) ++(k < net.species_count() ? proper : full);
          return true;
        });
      CHECK(proper == 0);
      // m = 1 caps total molecularity at 2.
      CHECK(full == (m >= 2 ? 1u : 0u));
    }
}

TEST_CASE("one-reaction generator") {
  const std::vector<Coefficient> a{1, 1};
  const std::vector<Coefficient> b{2, 3};
  CHECK(one_reaction_fully_open(a, b, false) == parse_network("0 <-> X1\n0 <-> X2\nX1 + X2 -> 2 X1 + 3 X2"));
  CHECK(one_reaction_fully_open(a, b, true).reaction_count() == 6);
  const std::vector<Coefficient> zero{0};
  const std::vector<Coefficient> one{1};
  CHECK_THROWS(one_reaction_fully_open(zero, one, false));
  CHECK_THROWS(one_reaction_fully_open(one, one, false));
  CHECK_THROWS(one_reaction_fully_open(a, one, false));
}

TEST_CASE("expected verdicts") {
  CHECK(expected_verdict(FamilySpec::of(Family::G, 2, 3)).multistationary == Truth::yes);
  CHECK(expected_verdict(FamilySpec::of(Family::G, 3, 2)).multistationary == Truth::no);
  CHECK(expected_verdict(FamilySpec::of(Family::G, 1, 3)).multistationary == Truth::no);
  CHECK(expected_verdict(FamilySpec::of(Family::H, 2, 2)).multistationary == Truth::yes);
  CHECK(expected_verdict(FamilySpec::of(Family::H, 1, 2)).multistationary == Truth::no);
  CHECK(expected_verdict(FamilySpec::of(Family::K, 2, 4)).multistationary == Truth::no);
  const auto k23 = expected_verdict(FamilySpec::of(Family::K, 2, 3));
  CHECK(k23.multistationary == Truth::yes);
  CHECK(k23.nondegeneracy_conjectural);
  CHECK(expected_verdict(FamilySpec::of(Family::Gbar, 2, 3)).multistable == Truth::yes);
  CHECK(expected_verdict(FamilySpec::of(Family::Gbar, 1, 3)).multistable == Truth::no);
  CHECK(expected_verdict(FamilySpec::atom_number(5)).multistationary == Truth::yes);
}

TEST_CASE("proper embedded networks of G have at most one steady state") {
  // Dropping a reaction of G(m, n) zeroes one of s, l, k in s - l a + (n - m) k a^m.
  std::mt19937_64 rng(79);
  std::uniform_int_distribution<int> num(1, 500);
  for (int m = 2; m <= 5; ++m)
    for (int n = m + 1; n <= 6; ++n)
      for (int zeroed = 0; zeroed < 3; ++zeroed)
        for (int draw = 0; draw < 30; ++draw) {
          std::vector<Rational> rates{Rational(num(rng), 10), Rational(num(rng), 10), Rational(num(rng), 10)};
          rates[static_cast<std::size_t>(zeroed)] = 0;
          std::vector<Rational> c(static_cast<std::size_t>(m) + 1, Rational(0));
          c[0] = rates[0];
          c[1] -= rates[1];
          c[static_cast<std::size_t>(m)] += Rational(n - m) * rates[2];
          const UniPoly p(c);
          if (p.is_zero()) continue;
          CHECK(positive_root_count(p).distinct <= 1);
        }
}
