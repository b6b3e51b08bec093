#pragma once

// Named network families: one-species G, Gbar; two-species H; sequestration
// networks K; the eleven two-reaction bimolecular atoms.

#include <span>
#include <string>
#include <vector>

#include "crn/core/network.hpp"

namespace crn {

enum class Family { G, H, Gbar, K, atom };

std::string to_string(Family f);
/// Accepts "G", "H", "Gbar", "K", "atom" (case-insensitive).
Family parse_family(const std::string& name);

inline constexpr int kAtomCount = 11;

struct FamilySpec {
  Family family = Family::G;
  int m = 0;
  int n = 0;
  int atom = 0;  ///< 1..kAtomCount, only for Family::atom

  static FamilySpec of(Family f, int m, int n) { return {f, m, n, 0}; }
  static FamilySpec atom_number(int i) { return {Family::atom, 0, 0, i}; }
  std::string label() const;
};

/// Throws std::invalid_argument when the parameters are out of range.
void validate(const FamilySpec& spec);

/// G: {0 <-> A, mA -> nA}; H: {0 <-> A, 0 <-> B, A + B -> mA + nB};
/// Gbar: {0 <-> A, mA <-> nA}; K: X1 -> m Xn, X_i + X_{i+1} -> 0 (no flows).
ReactionNetwork generate(const FamilySpec& spec);

/// Canonical text of an atom as shipped in data/atoms.
const std::string& atom_text(int i);
const std::vector<ReactionNetwork>& atoms();

/// 0 <-> X_i for every species plus a -> b (or a <-> b); species X1..Xn.
ReactionNetwork one_reaction_fully_open(std::span<const Coefficient> a, std::span<const Coefficient> b,
                                        bool reversible);

enum class Truth { yes, no, unknown };
std::string to_string(Truth t);

struct ExpectedVerdict {
  Truth multistationary = Truth::unknown;
  Truth multistable = Truth::unknown;
  std::string source;
  /// Multistationary, but nondegeneracy of the steady states is only conjectured.
  bool nondegeneracy_conjectural = false;
};

/// Closed-form answer for the fully open extension of generate(spec).
ExpectedVerdict expected_verdict(const FamilySpec& spec);

}  // namespace crn
