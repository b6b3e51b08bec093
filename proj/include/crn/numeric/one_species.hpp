#pragma once

// Steady-state polynomials of the one-species fully open families
//   G:    {0 <-> A, mA -> nA}     s - l a + (n-m) k a^m
//   Gbar: {0 <-> A, mA <-> nA}    s - l a + (n-m) k+ a^m - (n-m) k- a^n
// with s the inflow rate and l the outflow rate.

#include <optional>
#include <vector>

#include "crn/numeric/polynomial.hpp"

namespace crn {

enum class PolyFamily { G, Gbar };

/// rates = (s, l, k) for G and (s, l, k+, k-) for Gbar; k- may be zero.
/// Throws std::invalid_argument on invalid parameters.
UniPoly family_polynomial(PolyFamily family, int m, int n, const std::vector<Rational>& rates);

/// Rates (s, l, k) of G_{m,n} with two positive roots when n > m > 1:
/// k = 1 and l = m(n - m) put the minimum of the polynomial at a = 1, and
/// s = (n - m)(m - 1)/2 makes that minimum negative.
std::vector<Rational> two_root_rates(int m, int n);

struct MultistableInstance {
  std::vector<Rational> rates;  ///< (s, l, k+, k-)
  StableRootCount counts;
  int halvings = 0;  ///< k- = 2^-halvings
};

/// Starting from two_root_rates, shrinks k- = 2^-j until the Gbar polynomial
/// has three positive roots. nullopt if none found within max_halvings.
std::optional<MultistableInstance> multistable_parameters(int m, int n, int max_halvings = 64);

}  // namespace crn
