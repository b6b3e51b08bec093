#include <algorithm>
#include <functional>

#include "crn/core/combinatorics.hpp"
#include "crn/core/mass_action.hpp"
#include "crn/core/structure.hpp"
#include "crn/decide/decide.hpp"
#include "crn/decide/lp.hpp"
#include "crn/kernels/minor_scan.hpp"
#include "crn/kernels/sen_scan.hpp"

namespace crn {

namespace {

std::vector<std::int64_t> flatten(const IntMatrix& m) {
  std::vector<std::int64_t> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j).get_si());
  return out;
}

MinorProduct product_at(const MinorProblem& p, std::size_t flat, int sign) {
  const auto [I, J] = p.sets(flat);
  return {I, J, sign};
}

InjectivityResult from_scan(const MinorProblem& p, const MinorScan& scan) {
  InjectivityResult out;
  out.products_checked = scan.checked;
  if (scan.conflict) {
    out.outcome = Injectivity::not_injective;
    out.conflict = {product_at(p, *scan.first, scan.first_sign), product_at(p, *scan.conflict, -scan.first_sign)};
  } else {
    out.outcome = scan.first ? Injectivity::injective : Injectivity::degenerate;
  }
  return out;
}

}  // namespace

InjectivityResult injectivity_minors(const ReactionNetwork& net, const MinorOptions& options) {
  const auto sd = stoich(net);
  const std::size_t s = net.species_count();
  const std::size_t r = net.reaction_count();
  const std::uint64_t total = binomial(s, sd.rank) * binomial(r, sd.rank);
  if (total > options.max_products)
    throw LimitError("minor enumeration needs " + std::to_string(total) + " products, limit is " +
                     std::to_string(options.max_products));
  const auto p = make_minor_problem(s, r, sd.rank, flatten(sd.gamma), flatten(sd.reactant));
  return from_scan(p, options.parallel ? scan_minors_parallel(p, options.threads) : scan_minors_serial(p));
}

InjectivityResult injectivity_minors_reference(const ReactionNetwork& net) {
  const auto sd = stoich(net);
  InjectivityResult out;
  std::optional<MinorProduct> first;
  const auto species_sets = all_combinations(net.species_count(), sd.rank);
  const auto reaction_sets = all_combinations(net.reaction_count(), sd.rank);
  for (const auto& I : species_sets)
    for (const auto& J : reaction_sets) {
      ++out.products_checked;
      const int sign = crn::sign(determinant(sd.gamma.submatrix(I, J))) * crn::sign(determinant(sd.reactant.submatrix(J, I)));
      if (sign == 0) continue;
      if (!first) {
        first = MinorProduct{I, J, sign};
      } else if (sign != first->sign) {
        out.outcome = Injectivity::not_injective;
        out.conflict = {*first, MinorProduct{I, J, sign}};
        return out;
      }
    }
  out.outcome = first ? Injectivity::injective : Injectivity::degenerate;
  return out;
}

namespace {

// Every pattern in {-1, 0, 1}^n, in base-3 counting order with digits 0, +, -.
std::vector<std::vector<int>> all_sign_patterns(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> digits(n, 0);
  for (;;) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = digits[i] == 2 ? -1 : digits[i];
    out.push_back(std::move(p));
    std::size_t i = 0;
    while (i < n && ++digits[i] == 3) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Adds "row . x has sign `sign`", scaled so that strict signs read >= 1.
void add_sign(LinearProgram& lp, std::vector<Rational> row, int sign) {
  if (sign > 0)
    lp.add(std::move(row), Sense::ge, Rational(1));
  else if (sign < 0)
    lp.add(std::move(row), Sense::le, Rational(-1));
  else
    lp.add(std::move(row), Sense::eq, Rational(0));
}

std::vector<Rational> unit(std::size_t n, std::size_t i) {
  std::vector<Rational> row(n, Rational(0));
  row[i] = 1;
  return row;
}

LinearProgram free_program(std::size_t n) {
  LinearProgram lp(n);
  lp.free.assign(n, true);
  return lp;
}

// Sign pattern of S = im(Gamma): some u with Gamma u of that pattern.
bool in_image(const IntMatrix& gamma, const std::vector<int>& pattern) {
  LinearProgram lp = free_program(gamma.cols());
  for (std::size_t i = 0; i < gamma.rows(); ++i) {
    std::vector<Rational> row(gamma.cols());
    for (std::size_t j = 0; j < gamma.cols(); ++j) row[j] = Rational(gamma(i, j));
    add_sign(lp, std::move(row), pattern[i]);
  }
  return solve(lp).feasible;
}

// Sign pattern of ker(Gamma).
bool in_kernel(const IntMatrix& gamma, const std::vector<int>& pattern) {
  // A row whose nonzero terms all share one sign cannot sum to zero.
  for (std::size_t i = 0; i < gamma.rows(); ++i) {
    bool pos = false;
    bool neg = false;
    for (std::size_t j = 0; j < gamma.cols(); ++j) {
      const int t = crn::sign(gamma(i, j)) * pattern[j];
      pos = pos || t > 0;
      neg = neg || t < 0;
    }
    if (pos != neg) return false;
  }
  LinearProgram lp = free_program(gamma.cols());
  for (std::size_t i = 0; i < gamma.rows(); ++i) {
    std::vector<Rational> row(gamma.cols());
    for (std::size_t j = 0; j < gamma.cols(); ++j) row[j] = Rational(gamma(i, j));
    lp.add(std::move(row), Sense::eq, Rational(0));
  }
  for (std::size_t j = 0; j < gamma.cols(); ++j) add_sign(lp, unit(gamma.cols(), j), pattern[j]);
  return solve(lp).feasible;
}

// Sign of (M x)_j forced by the pattern of x alone, or 2 when both signs occur.
int forced_sign(const IntMatrix& reactant, std::size_t j, const std::vector<int>& x) {
  bool pos = false;
  bool neg = false;
  for (std::size_t i = 0; i < reactant.cols(); ++i) {
    if (reactant(j, i) == 0 || x[i] == 0) continue;
    (x[i] > 0 ? pos : neg) = true;
  }
  if (pos && neg) return 2;
  return pos ? 1 : (neg ? -1 : 0);
}

}  // namespace

InjectivityResult injectivity_signvectors(const ReactionNetwork& net, std::size_t limit) {
  const std::size_t s = net.species_count();
  const std::size_t r = net.reaction_count();
  if (s > limit || r > limit)
    throw LimitError("sign-vector enumeration limited to " + std::to_string(limit) + " species and reactions");
  const auto sd = stoich(net);

  std::vector<std::vector<int>> image;
  for (auto& p : all_sign_patterns(s))
    if (std::any_of(p.begin(), p.end(), [](int v) { return v != 0; }) && in_image(sd.gamma, p)) image.push_back(p);
  std::vector<std::vector<int>> kernel;
  for (auto& p : all_sign_patterns(r))
    if (in_kernel(sd.gamma, p)) kernel.push_back(p);

  // A common sign vector tau = sign(M x) with x nonzero and sign(x) in sign(S).
  // tau = 0 counts: M x = 0 for such an x already breaks injectivity.
  InjectivityResult out;
  out.outcome = Injectivity::injective;
  for (const auto& xs : image) {
    std::vector<int> forced(r);
    bool any_free = false;
    for (std::size_t j = 0; j < r; ++j) {
      forced[j] = forced_sign(sd.reactant, j, xs);
      any_free = any_free || forced[j] == 2;
    }
    for (const auto& tau : kernel) {
      bool consistent = true;
      for (std::size_t j = 0; j < r && consistent; ++j) consistent = forced[j] == 2 || forced[j] == tau[j];
      if (!consistent) continue;
      bool feasible = !any_free;
      if (any_free) {
        LinearProgram lp = free_program(s);
        for (std::size_t i = 0; i < s; ++i) add_sign(lp, unit(s, i), xs[i]);
        for (std::size_t j = 0; j < r; ++j) {
          std::vector<Rational> row(s);
          for (std::size_t i = 0; i < s; ++i) row[i] = Rational(sd.reactant(j, i));
          add_sign(lp, std::move(row), tau[j]);
        }
        feasible = solve(lp).feasible;
      }
      if (feasible) {
        out.outcome = Injectivity::not_injective;
        out.species_signs = xs;
        out.reaction_signs = tau;
        return out;
      }
    }
  }
  return out;
}

InjectivityResult cfstr_injectivity(const ReactionNetwork& net, int threads) {
  if (!is_cfstr(net)) throw PreconditionError("CFSTR injectivity requires an outflow for every species");
  const auto core = non_flow_subnetwork(net);
  InjectivityResult out;
  out.outcome = Injectivity::injective;
  const SenPredicate negative_relevant = [](const SquareEmbeddedNetwork& sen) {
    return sen.orientation < 0 && relevance(sen.reactions, sen.size()).relevant;
  };
  for (std::size_t k = 1; k <= core.species_count(); ++k) {
    if (auto sen = find_first_sen(core, k, negative_relevant, threads)) {
      out.outcome = Injectivity::not_injective;
      out.negative_sen = std::move(sen);
      return out;
    }
  }
  return out;
}

}  // namespace crn
