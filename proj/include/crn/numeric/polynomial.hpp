#pragma once

// Dense univariate polynomials over the rationals, with Sturm-sequence root
// counting on (0, inf).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "crn/core/exact.hpp"

namespace crn {

class UniPoly {
 public:
  UniPoly() = default;
  /// coeffs[i] multiplies a^i; trailing zeros are trimmed.
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& a) const;
  double operator()(double a) const;
  int sign_at(const Rational& a) const { return sgn((*this)(a)); }
  /// Sign as a -> +inf.
  int sign_at_infinity() const { return is_zero() ? 0 : sgn(leading()); }

  UniPoly derivative() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  bool operator==(const UniPoly& o) const = default;

  /// Quotient and remainder of division by a nonzero polynomial.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  /// Positive multiple with coprime integer coefficients.
  UniPoly primitive() const;
  /// Divides out the largest power of a.
  UniPoly without_zero_roots() const;

  std::string to_string(const std::string& var = "a") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// p, p', -rem(p, p'), ... with each term replaced by its primitive part.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

struct RootCount {
  std::size_t distinct = 0;
  bool all_simple = true;  ///< every positive root has multiplicity one
};

/// Distinct roots in (0, inf). Throws std::invalid_argument for the zero polynomial.
RootCount positive_root_count(const UniPoly& p);

/// Distinct roots in the half-open interval (lo, hi].
std::size_t root_count_between(const std::vector<UniPoly>& sturm, const Rational& lo, const Rational& hi);

struct StableRootCount {
  std::size_t total = 0;
  std::size_t stable = 0;  ///< roots where p' < 0
};

/// Each positive root isolated to a rational interval on which p' keeps one
/// sign. Throws std::domain_error when a positive root is not simple.
StableRootCount stable_positive_root_count(const UniPoly& p);

/// Disjoint intervals (lo, hi], each holding exactly one positive root, on
/// which p' has no root; requires simple positive roots.
std::vector<std::pair<Rational, Rational>> isolate_positive_roots(const UniPoly& p);

}  // namespace crn
