#pragma once

// Numerical search for multiple positive steady states of fully open
// networks, where the stoichiometric subspace is all of R^s.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crn/core/network.hpp"
#include "crn/numeric/newton.hpp"

namespace crn {

enum class Stability { stable, unstable, undetermined };
std::string to_string(Stability s);

struct SteadyState {
  std::vector<double> x;
  double residual = 0.0;        ///< scaled residual in floating point
  double exact_residual = 0.0;  ///< same, from exact evaluation at the rationalized point
  bool full_rank = false;       ///< exact Jacobian rank equals s
  double condition = 0.0;       ///< 2-norm condition number of the Jacobian
  bool nondegenerate = false;   ///< full rank and condition below the limit
  double max_real_part = 0.0;   ///< largest eigenvalue real part
  Stability stability = Stability::undetermined;
};

struct SteadyStateWitness {
  std::vector<Rational> kappa;
  std::vector<SteadyState> states;  ///< sorted lexicographically
  std::size_t starts = 0;
  std::size_t converged = 0;

  std::size_t nondegenerate_count() const;
  std::size_t stable_count() const;
};

struct WitnessOptions {
  /// Per-coordinate start values; empty selects default_grid(s).
  std::vector<double> grid;
  std::size_t max_starts = 3125;  ///< above this the grid is replaced by random log-uniform starts
  std::uint64_t seed = 0;         ///< for the random starts
  double dedup_tol = 1e-6;        ///< componentwise relative distance
  double stability_margin = 1e-9;
  double max_condition = 1e12;
  NewtonOptions newton;
  int threads = 0;
  bool parallel = true;  ///< false runs the serial reference multistart
};

/// Throws PreconditionError unless the network is fully open.
SteadyStateWitness witness_search(const ReactionNetwork& net, const std::vector<Rational>& kappa,
                                  const WitnessOptions& options = {});

/// Log-spaced start values: 10^-2..10^2 in decade steps for s >= 4, widening
/// and refining for fewer species (s = 1: 10^-10..10^10 in eighth decades).
std::vector<double> default_grid(std::size_t s);

/// Starting points used by witness_search for s species.
std::vector<std::vector<double>> start_points(std::size_t s, const WitnessOptions& options);

struct RateSearchOptions {
  std::size_t budget = 10000;
  std::uint64_t seed = 0;
  double log10_min = -3.0;
  double log10_max = 3.0;
  int significant_digits = 4;  ///< sampled rates are rounded to exact decimals
  WitnessOptions witness;
};

struct RateSearchResult {
  std::vector<Rational> kappa;
  SteadyStateWitness witness;
  std::size_t samples = 0;  ///< samples drawn, including the successful one
};

/// i-th rate vector drawn by rate_search (deterministic in seed).
std::vector<std::vector<Rational>> sample_rates(std::size_t reactions, std::size_t count, const RateSearchOptions& options);

/// First sampled rate vector whose witness has at least two nondegenerate states.
std::optional<RateSearchResult> rate_search(const ReactionNetwork& net, const RateSearchOptions& options = {});

nlohmann::json to_json(const SteadyStateWitness& w);

}  // namespace crn
