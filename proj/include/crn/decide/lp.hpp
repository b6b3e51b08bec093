#pragma once

// Exact rational linear programming: two-phase dense simplex with Bland's
// rule. Meant for the tiny systems that arise from sign conditions.

#include <cstddef>
#include <optional>
#include <vector>

#include "crn/core/exact.hpp"

namespace crn {

enum class Sense { eq, ge, le };

struct LinearProgram {
  explicit LinearProgram(std::size_t vars = 0) : free(vars, false) {}

  std::size_t vars() const { return free.size(); }
  LinearProgram& add(std::vector<Rational> row, Sense sense, Rational rhs);
  /// x_i >= lo as a row.
  LinearProgram& at_least(std::size_t i, const Rational& lo);

  std::vector<std::vector<Rational>> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;
  std::vector<bool> free;  ///< false: x_i >= 0
  std::optional<std::vector<Rational>> minimize;
};

struct LPFeasibility {
  bool feasible = false;
  bool unbounded = false;  ///< objective unbounded below; witness is feasible
  std::vector<Rational> witness;
  std::optional<Rational> objective;
};

LPFeasibility solve(const LinearProgram& lp);

/// Exact check of every constraint and sign bound.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x);

}  // namespace crn
