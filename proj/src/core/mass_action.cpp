#include "crn/core/mass_action.hpp"

#include <cmath>
#include <map>

#include "crn/core/structure.hpp"

namespace crn {

RatePolynomialSystem::RatePolynomialSystem(const ReactionNetwork& net) : species_(net.species_count()) {
  for (const auto& r : net.reactions())
    terms_.push_back({r.reactant.dense(species_), reaction_vector(r, species_)});
}

MassActionSystem::MassActionSystem(const RatePolynomialSystem& symbolic, const std::vector<Rational>& kappa)
    : species_(symbolic.species_count()) {
  if (kappa.size() != symbolic.reaction_count())
    throw PreconditionError("rate vector length does not match the number of reactions");
  std::map<std::vector<Coefficient>, std::size_t> index;
  for (const auto& t : symbolic.terms()) {
    if (index.emplace(t.exponents, monomials_.size()).second) monomials_.push_back(t.exponents);
  }
  coeffs_ = RatMatrix(species_, monomials_.size());
  for (std::size_t k = 0; k < symbolic.reaction_count(); ++k) {
    if (kappa[k] <= 0) throw PreconditionError("rate constants must be positive");
    const auto& t = symbolic.terms()[k];
    const std::size_t m = index.at(t.exponents);
    for (std::size_t i = 0; i < species_; ++i)
      if (t.direction[i] != 0) coeffs_(i, m) += kappa[k] * Rational(t.direction[i]);
  }
  coeffs_d_.resize(species_ * monomials_.size());
  for (std::size_t i = 0; i < species_; ++i)
    for (std::size_t m = 0; m < monomials_.size(); ++m) coeffs_d_[i * monomials_.size() + m] = coeffs_(i, m).get_d();
}

namespace {

Rational power(const Rational& base, Coefficient e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  out.canonicalize();
  return out;
}

double power(double base, Coefficient e) {
  double out = 1.0;
  for (; e > 0; e >>= 1, base *= base)
    if (e & 1) out *= base;
  return out;
}

}  // namespace

std::vector<Rational> MassActionSystem::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != species_) throw PreconditionError("state vector length mismatch");
  std::vector<Rational> values(monomials_.size(), Rational(1));
  for (std::size_t m = 0; m < monomials_.size(); ++m)
    for (std::size_t j = 0; j < species_; ++j)
      if (monomials_[m][j] != 0) values[m] *= power(x[j], monomials_[m][j]);
  std::vector<Rational> out(species_, Rational(0));
  for (std::size_t i = 0; i < species_; ++i)
    for (std::size_t m = 0; m < monomials_.size(); ++m)
      if (coeffs_(i, m) != 0) out[i] += coeffs_(i, m) * values[m];
  return out;
}

RatMatrix MassActionSystem::jacobian(const std::vector<Rational>& x) const {
  if (x.size() != species_) throw PreconditionError("state vector length mismatch");
  // d/dx_j of x^e = e_j x^(e - e_j)
  RatMatrix out(species_, species_);
  for (std::size_t m = 0; m < monomials_.size(); ++m) {
    for (std::size_t j = 0; j < species_; ++j) {
      const Coefficient ej = monomials_[m][j];
      if (ej == 0) continue;
      Rational d = Rational(static_cast<long>(ej));
      for (std::size_t q = 0; q < species_; ++q) {
        const Coefficient e = q == j ? ej - 1 : monomials_[m][q];
        if (e != 0) d *= power(x[q], e);
      }
      for (std::size_t i = 0; i < species_; ++i)
        if (coeffs_(i, m) != 0) out(i, j) += coeffs_(i, m) * d;
    }
  }
  return out;
}

void MassActionSystem::evaluate(std::span<const double> x, std::span<double> out) const {
  const std::size_t nm = monomials_.size();
  std::vector<double> values(nm, 1.0);
  for (std::size_t m = 0; m < nm; ++m)
    for (std::size_t j = 0; j < species_; ++j)
      if (monomials_[m][j] != 0) values[m] *= power(x[j], monomials_[m][j]);
  for (std::size_t i = 0; i < species_; ++i) {
    double acc = 0.0;
    for (std::size_t m = 0; m < nm; ++m) acc += coeffs_d_[i * nm + m] * values[m];
    out[i] = acc;
  }
}

void MassActionSystem::jacobian(std::span<const double> x, std::span<double> out) const {
  const std::size_t nm = monomials_.size();
  std::fill(out.begin(), out.end(), 0.0);
  std::vector<double> values(nm, 1.0);
  for (std::size_t m = 0; m < nm; ++m)
    for (std::size_t j = 0; j < species_; ++j)
      if (monomials_[m][j] != 0) values[m] *= power(x[j], monomials_[m][j]);
  for (std::size_t m = 0; m < nm; ++m) {
    for (std::size_t j = 0; j < species_; ++j) {
      const Coefficient ej = monomials_[m][j];
      if (ej == 0) continue;
      // e_j x^e / x_j, computed without dividing to stay exact at small x_j
      double d = static_cast<double>(ej);
      for (std::size_t q = 0; q < species_; ++q) {
        const Coefficient e = q == j ? ej - 1 : monomials_[m][q];
        if (e != 0) d *= power(x[q], e);
      }
      for (std::size_t i = 0; i < species_; ++i) out[i * species_ + j] += coeffs_d_[i * nm + m] * d;
    }
  }
}

void MassActionSystem::term_magnitude(std::span<const double> x, std::span<double> out) const {
  const std::size_t nm = monomials_.size();
  for (std::size_t i = 0; i < species_; ++i) out[i] = 0.0;
  for (std::size_t m = 0; m < nm; ++m) {
    double v = 1.0;
    for (std::size_t j = 0; j < species_; ++j)
      if (monomials_[m][j] != 0) v *= power(x[j], monomials_[m][j]);
    for (std::size_t i = 0; i < species_; ++i) out[i] += std::abs(coeffs_d_[i * nm + m]) * v;
  }
}

std::string MassActionSystem::polynomial_string(std::size_t i, const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t m = 0; m < monomials_.size(); ++m) {
    const Rational& c = coeffs_(i, m);
    if (c == 0) continue;
    std::string mono;
    for (std::size_t j = 0; j < species_; ++j) {
      const Coefficient e = monomials_[m][j];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x_" + names.at(j);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string body;
    if (mono.empty())
      body = to_string(mag);
    else if (mag == 1)
      body = mono;
    else
      body = to_string(mag) + "*" + mono;
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

MassActionSystem mass_action_system(const ReactionNetwork& net, const std::vector<Rational>& kappa) {
  return {RatePolynomialSystem(net), kappa};
}

}  // namespace crn
