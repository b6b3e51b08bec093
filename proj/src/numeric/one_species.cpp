#include "crn/numeric/one_species.hpp"

#include <stdexcept>

namespace crn {

UniPoly family_polynomial(PolyFamily family, int m, int n, const std::vector<Rational>& rates) {
  if (m < 1 || n < 0 || m == n) throw std::invalid_argument("family parameters need m >= 1, n >= 0, m != n");
  const std::size_t want = family == PolyFamily::G ? 3 : 4;
  if (rates.size() != want) throw std::invalid_argument("wrong number of rate constants");
  for (std::size_t i = 0; i < 3; ++i)
    if (rates[i] <= 0) throw std::invalid_argument("rate constants must be positive");
  const Rational gap(n - m);
  UniPoly p = UniPoly::monomial(rates[0], 0) + UniPoly::monomial(-rates[1], 1) +
              UniPoly::monomial(gap * rates[2], static_cast<std::size_t>(m));
  if (family == PolyFamily::Gbar) {
    if (rates[3] < 0) throw std::invalid_argument("reverse rate must be nonnegative");
    p = p + UniPoly::monomial(-gap * rates[3], static_cast<std::size_t>(n));
  }
  return p;
}

std::vector<Rational> two_root_rates(int m, int n) {
  if (!(n > m && m > 1)) throw std::invalid_argument("two positive roots need n > m > 1");
  return {Rational((n - m) * (m - 1), 2), Rational(m * (n - m)), Rational(1)};
}

std::optional<MultistableInstance> multistable_parameters(int m, int n, int max_halvings) {
  auto rates = two_root_rates(m, n);
  rates.emplace_back(1);
  for (int j = 1; j <= max_halvings; ++j) {
    rates[3] /= 2;
    const UniPoly p = family_polynomial(PolyFamily::Gbar, m, n, rates);
    const RootCount rc = positive_root_count(p);
    if (rc.distinct == 3 && rc.all_simple) return MultistableInstance{rates, stable_positive_root_count(p), j};
  }
  return std::nullopt;
}

}  // namespace crn
