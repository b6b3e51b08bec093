#pragma once

// Symbolic decision procedures for multistationarity and the pipeline that
// combines them into a verdict with a certificate.

#include <nlohmann/json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crn/core/exact.hpp"
#include "crn/core/network.hpp"
#include "crn/embedding/embedding.hpp"
#include "crn/embedding/sen.hpp"

namespace crn {

/// An enumeration would exceed a configured size limit.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status { multistationary, not_multistationary, no_positive_steady_states, inconclusive };
std::string to_string(Status s);

struct Certificate {
  std::string kind;
  nlohmann::json data = nlohmann::json::object();
};

struct Verdict {
  Status status = Status::inconclusive;
  std::optional<Certificate> certificate;
  std::vector<std::string> notes;
};

nlohmann::json to_json(const Verdict& v);

/// Outcome of a single criterion: a verdict when the criterion applies,
/// otherwise the reason it does not.
struct StageResult {
  std::optional<Verdict> verdict;
  std::string reason;
};

StageResult check_deficiency_zero(const ReactionNetwork& net);
StageResult check_deficiency_one(const ReactionNetwork& net);

// ---------------------------------------------------------------------------
// Injectivity

enum class Injectivity { injective, not_injective, degenerate };
std::string to_string(Injectivity i);

struct MinorProduct {
  std::vector<SpeciesIndex> species;   ///< I
  std::vector<std::size_t> reactions;  ///< J
  int sign = 0;                        ///< sign of det(Gamma_IJ) det(M_JI)
};

struct InjectivityResult {
  Injectivity outcome = Injectivity::degenerate;
  /// Minor route: first nonzero product and the first one of opposite sign.
  std::optional<std::pair<MinorProduct, MinorProduct>> conflict;
  std::size_t products_checked = 0;
  /// Sign-vector route: the common sign vector and the species sign pattern
  /// realizing it (entries -1, 0, 1).
  std::vector<int> reaction_signs;
  std::vector<int> species_signs;
  /// CFSTR route: a negatively oriented relevant SEN of the non-flow part,
  /// with host indices into the non-flow subnetwork.
  std::optional<SquareEmbeddedNetwork> negative_sen;

  bool injective() const { return outcome == Injectivity::injective; }
};

struct MinorOptions {
  std::size_t max_products = 50'000'000;  ///< LimitError beyond this
  int threads = 0;
  bool parallel = true;
};

/// Products det(Gamma_IJ) det(M_JI) over |I| = |J| = rank, in lexicographic
/// (I, J) order, stopping at the first sign conflict.
InjectivityResult injectivity_minors(const ReactionNetwork& net, const MinorOptions& options = {});
/// Arbitrary-precision serial reference for injectivity_minors.
InjectivityResult injectivity_minors_reference(const ReactionNetwork& net);

/// Brute force over sign vectors; throws LimitError when s or r exceeds limit.
InjectivityResult injectivity_signvectors(const ReactionNetwork& net, std::size_t limit = 5);

/// Relevant SENs of the non-flow subnetwork; throws PreconditionError unless CFSTR.
InjectivityResult cfstr_injectivity(const ReactionNetwork& net, int threads = 0);

// ---------------------------------------------------------------------------
// Certificates and obstructions

struct DetOptCertificate {
  SquareEmbeddedNetwork sen;                ///< over the non-flow subnetwork
  std::vector<std::size_t> host_reactions;  ///< the SEN's reactions as indices into net
  std::vector<Rational> eta;
  std::vector<Rational> combination;  ///< sum eta_i (y_i - y'_i)
};

/// Size-s negatively oriented SEN of the non-flow part admitting eta > 0 with
/// sum eta_i (y_i - y'_i) > 0; eta minimizes sum eta subject to eta >= 1 and
/// the combination >= 1. Throws PreconditionError unless CFSTR.
std::optional<DetOptCertificate> determinant_optimization(const ReactionNetwork& net, int threads = 0);
/// Exact re-check of a certificate against the network.
bool verify_det_opt(const ReactionNetwork& net, const DetOptCertificate& cert);

/// alpha >= 1 with Gamma alpha = 0, when one exists.
std::optional<std::vector<Rational>> positive_dependence_witness(const ReactionNetwork& net);
bool positive_dependence(const ReactionNetwork& net);

/// True when host provably has no positive steady states because its extra
/// reactions cannot combine positively into the subspace of sub. Species and
/// reactions are matched by name; throws NetworkError if sub is not a
/// subnetwork of host.
bool subnetwork_lift_obstruction(const ReactionNetwork& host, const ReactionNetwork& sub);

struct OneReactionSums {
  Coefficient forward = 0;   ///< sum of a_i over i with b_i > a_i
  Coefficient backward = 0;  ///< sum of b_i over i with a_i > b_i
};
OneReactionSums one_reaction_sums(const std::vector<Coefficient>& a, const std::vector<Coefficient>& b);
/// Fully open network with the single non-flow reaction a -> b (or a <-> b).
bool classify_one_nonflow_fully_open(const std::vector<Coefficient>& a, const std::vector<Coefficient>& b,
                                     bool reversible);

struct OneReactionShape {
  std::vector<Coefficient> a;
  std::vector<Coefficient> b;
  bool reversible = false;
};
/// Fully open with exactly one non-flow reaction or reversible pair.
std::optional<OneReactionShape> one_reaction_shape(const ReactionNetwork& net);

struct AtomMatch {
  std::string atom;  ///< "atom7", "G(2,3)", "H(2,2)"
  ReactionNetwork pattern;
  EmbeddingWitness witness;
};

/// Database order: the eleven two-reaction atoms, then fully open G(m, n)
/// with n > m > 1, then H(m, n) with m, n > 1, parameters bounded by the
/// largest coefficient of net.
std::vector<std::pair<std::string, ReactionNetwork>> atom_database(Coefficient max_coefficient);
std::optional<AtomMatch> atom_db_search(const ReactionNetwork& net);
std::vector<AtomMatch> all_atom_matches(const ReactionNetwork& net);

// ---------------------------------------------------------------------------
// Pipeline

struct AnalyzeOptions {
  bool numeric = false;
  std::size_t budget = 200;  ///< rate samples for the numeric stage
  unsigned long long seed = 0;
  int threads = 0;
  /// Let a negative one-reaction classification preclude multistationarity.
  bool one_reaction_precludes = false;
  MinorOptions minors;
};

Verdict analyze(const ReactionNetwork& net, const AnalyzeOptions& options = {});

}  // namespace crn
