#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "crn/core/exact.hpp"
#include "crn/core/network.hpp"

namespace crn {

/// dx/dt = sum_k kappa_k x^{reactant_k} (product_k - reactant_k), with the
/// rate constants left symbolic: one (monomial, reaction vector) pair per
/// reaction.
class RatePolynomialSystem {
 public:
  struct Term {
    std::vector<Coefficient> exponents;  ///< reactant complex, dense
    std::vector<Integer> direction;      ///< column of the stoichiometric matrix
  };

  explicit RatePolynomialSystem(const ReactionNetwork& net);

  std::size_t species_count() const { return species_; }
  std::size_t reaction_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::size_t species_ = 0;
  std::vector<Term> terms_;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The mass-action vector field at fixed positive rational rates.
/// Monomials are shared across reactions with equal reactant complexes.
class MassActionSystem {
 public:
  MassActionSystem() = default;
  MassActionSystem(const RatePolynomialSystem& symbolic, const std::vector<Rational>& kappa);

  std::size_t species_count() const { return species_; }
  std::size_t monomial_count() const { return monomials_.size(); }
  const std::vector<std::vector<Coefficient>>& monomials() const { return monomials_; }
  /// coefficient(i, m): coefficient of monomial m in the equation of species i.
  const RatMatrix& coefficients() const { return coeffs_; }

  std::vector<Rational> evaluate(const std::vector<Rational>& x) const;
  RatMatrix jacobian(const std::vector<Rational>& x) const;

  // Floating-point versions; x must be positive.
  void evaluate(std::span<const double> x, std::span<double> out) const;
  /// Row-major s x s Jacobian.
  void jacobian(std::span<const double> x, std::span<double> out) const;
  /// Sum over monomials of |coefficient * monomial| per equation; the scale
  /// against which residuals are measured.
  void term_magnitude(std::span<const double> x, std::span<double> out) const;

  /// Human-readable polynomial for species i, e.g. "1 - 3*x0 + x0^2".
  std::string polynomial_string(std::size_t i, const std::vector<std::string>& names) const;

 private:
  std::size_t species_ = 0;
  std::vector<std::vector<Coefficient>> monomials_;
  RatMatrix coeffs_;
  std::vector<double> coeffs_d_;  // row-major s x monomials
};

MassActionSystem mass_action_system(const ReactionNetwork& net, const std::vector<Rational>& kappa);

}  // namespace crn
