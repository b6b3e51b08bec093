#include "crn/numeric/witness.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "crn/embedding/embedding.hpp"
#include "crn/kernels/multistart.hpp"

namespace crn {

std::string to_string(Stability s) {
  switch (s) {
    case Stability::stable: return "stable";
    case Stability::unstable: return "unstable";
    case Stability::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::size_t SteadyStateWitness::nondegenerate_count() const {
  return static_cast<std::size_t>(
      std::count_if(states.begin(), states.end(), [](const SteadyState& s) { return s.nondegenerate; }));
}

std::size_t SteadyStateWitness::stable_count() const {
  return static_cast<std::size_t>(
      std::count_if(states.begin(), states.end(), [](const SteadyState& s) { return s.stability == Stability::stable; }));
}

namespace {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool same_point(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol * std::max(std::abs(a[i]), std::abs(b[i]))) return false;
  return true;
}

void classify(const MassActionSystem& sys, SteadyState& st, const WitnessOptions& options) {
  const std::size_t s = sys.species_count();
  std::vector<Rational> xq;
  for (double v : st.x) xq.push_back(exact_rational(v));

  const auto f = sys.evaluate(xq);
  std::vector<double> scale(s);
  sys.term_magnitude(st.x, scale);
  st.exact_residual = 0.0;
  for (std::size_t i = 0; i < s; ++i)
    st.exact_residual = std::max(st.exact_residual, std::abs(f[i].get_d()) / std::max(1.0, scale[i]));

  st.full_rank = rank(sys.jacobian(xq)) == s;

  std::vector<double> jac(s * s);
  sys.jacobian(st.x, jac);
  Eigen::MatrixXd J(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = jac[i * s + j];
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(J).singularValues();
  st.condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  st.nondegenerate = st.full_rank && st.condition < options.max_condition;

  const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(J, false).eigenvalues();
  st.max_real_part = -INFINITY;
  for (Eigen::Index i = 0; i < ev.size(); ++i) st.max_real_part = std::max(st.max_real_part, ev(i).real());
  if (st.max_real_part < -options.stability_margin)
    st.stability = Stability::stable;
  else if (st.max_real_part > options.stability_margin)
    st.stability = Stability::unstable;
  else
    st.stability = Stability::undetermined;
}

Rational round_significant(double v, int digits) {
  const int e = static_cast<int>(std::floor(std::log10(v))) - (digits - 1);
  const double mantissa = std::round(v / std::pow(10.0, e));
  Rational out(static_cast<long>(mantissa));
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(e)));
  if (e >= 0)
    out *= Rational(p);
  else
    out /= Rational(p);
  return out;
}

class RateSampler {
 public:
  RateSampler(std::size_t reactions, const RateSearchOptions& options)
      : reactions_(reactions), options_(options), rng_(options.seed) {}

  std::vector<Rational> next() {
    std::vector<Rational> kappa;
    for (std::size_t k = 0; k < reactions_; ++k) {
      const double e = options_.log10_min + (options_.log10_max - options_.log10_min) * unit_uniform(rng_);
      kappa.push_back(round_significant(std::pow(10.0, e), options_.significant_digits));
    }
    return kappa;
  }

 private:
  std::size_t reactions_;
  const RateSearchOptions& options_;
  std::mt19937_64 rng_;
};

}  // namespace

std::vector<double> default_grid(std::size_t s) {
  // (lowest exponent, highest exponent, points per decade)
  struct Spec {
    int lo, hi, per_decade;
  };
  const Spec spec = s <= 1 ? Spec{-10, 10, 8} : s == 2 ? Spec{-5, 5, 2} : s == 3 ? Spec{-4, 4, 1} : Spec{-2, 2, 1};
  std::vector<double> grid;
  for (int i = spec.lo * spec.per_decade; i <= spec.hi * spec.per_decade; ++i)
    grid.push_back(std::pow(10.0, static_cast<double>(i) / spec.per_decade));
  return grid;
}

std::vector<std::vector<double>> start_points(std::size_t s, const WitnessOptions& options) {
  std::vector<std::vector<double>> starts;
  const std::vector<double> grid = options.grid.empty() ? default_grid(s) : options.grid;
  const std::size_t g = grid.size();
  double total = std::pow(static_cast<double>(g), static_cast<double>(s));
  if (g > 0 && total <= static_cast<double>(options.max_starts)) {
    std::vector<std::size_t> idx(s, 0);
    for (;;) {
      std::vector<double> x(s);
      for (std::size_t i = 0; i < s; ++i) x[i] = grid[idx[i]];
      starts.push_back(std::move(x));
      std::size_t i = 0;
      while (i < s && ++idx[i] == g) idx[i++] = 0;
      if (i == s) break;
    }
    return starts;
  }
  const auto [lo, hi] = std::minmax_element(grid.begin(), grid.end());
  const double a = std::log10(*lo);
  const double b = std::log10(*hi);
  std::mt19937_64 rng(options.seed);
  for (std::size_t k = 0; k < options.max_starts; ++k) {
    std::vector<double> x(s);
    for (auto& v : x) v = std::pow(10.0, a + (b - a) * unit_uniform(rng));
    starts.push_back(std::move(x));
  }
  return starts;
}

SteadyStateWitness witness_search(const ReactionNetwork& net, const std::vector<Rational>& kappa,
                                  const WitnessOptions& options) {
  if (!is_fully_open(net)) throw PreconditionError("witness search requires a fully open network");
  const MassActionSystem sys = mass_action_system(net, kappa);
  SteadyStateWitness w;
  w.kappa = kappa;
  const auto starts = start_points(net.species_count(), options);
  w.starts = starts.size();
  const auto results = options.parallel ? multistart_parallel(sys, starts, options.newton, options.threads)
                                        : multistart_serial(sys, starts, options.newton);
  for (const auto& r : results) {
    if (!r.converged) continue;
    ++w.converged;
    const bool seen = std::any_of(w.states.begin(), w.states.end(),
                                  [&](const SteadyState& st) { return same_point(st.x, r.x, options.dedup_tol); });
    if (seen) continue;
    SteadyState st;
    st.x = r.x;
    st.residual = r.residual;
    w.states.push_back(std::move(st));
  }
  for (auto& st : w.states) classify(sys, st, options);
  std::sort(w.states.begin(), w.states.end(), [](const SteadyState& a, const SteadyState& b) { return a.x < b.x; });
  return w;
}

std::vector<std::vector<Rational>> sample_rates(std::size_t reactions, std::size_t count,
                                                const RateSearchOptions& options) {
  RateSampler sampler(reactions, options);
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next());
  return out;
}

std::optional<RateSearchResult> rate_search(const ReactionNetwork& net, const RateSearchOptions& options) {
  if (!is_fully_open(net)) throw PreconditionError("rate search requires a fully open network");
  RateSampler sampler(net.reaction_count(), options);
  for (std::size_t i = 0; i < options.budget; ++i) {
    auto kappa = sampler.next();
    auto w = witness_search(net, kappa, options.witness);
    if (w.nondegenerate_count() >= 2) return RateSearchResult{std::move(kappa), std::move(w), i + 1};
  }
  return std::nullopt;
}

nlohmann::json to_json(const SteadyStateWitness& w) {
  nlohmann::json kappa = nlohmann::json::array();
  for (const auto& k : w.kappa) kappa.push_back(to_string(k));
  nlohmann::json states = nlohmann::json::array();
  nlohmann::json flags = nlohmann::json::array();
  nlohmann::json residuals = nlohmann::json::array();
  for (const auto& st : w.states) {
    states.push_back(st.x);
    flags.push_back({{"nondegenerate", st.nondegenerate},
                     {"full_rank", st.full_rank},
                     {"condition", st.condition},
                     {"stability", to_string(st.stability)},
                     {"max_real_part", st.max_real_part}});
    residuals.push_back({{"float", st.residual}, {"exact", st.exact_residual}});
  }
  return {{"kappa", kappa},
          {"states", states},
          {"flags", flags},
          {"residuals", residuals},
          {"starts", w.starts},
          {"converged", w.converged}};
}

}  // namespace crn
