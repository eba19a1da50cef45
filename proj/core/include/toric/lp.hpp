#pragma once

// Exact rational linear programming (dense two-phase simplex, Bland's rule).

#include <cstddef>
#include <vector>

#include "toric/integer.hpp"

namespace toric {

enum class Relation { LessEqual, Less, Equal, GreaterEqual, Greater };

struct LpConstraint {
  RationalVector coefficients;
  Rational rhs;
  Relation relation = Relation::LessEqual;
};

struct LinearProgram {
  std::size_t dimension = 0;
  std::vector<LpConstraint> constraints;
  /// Per-variable sign restriction; empty means every variable is free.
  std::vector<bool> nonnegative;

  explicit LinearProgram(std::size_t dim) : dimension(dim) {}

  void add(RationalVector coefficients, Relation relation, Rational rhs);
  void add(const IntVector& coefficients, Relation relation, std::int64_t rhs);
};

struct Feasibility {
  bool feasible = false;
  /// Satisfies every constraint (strict ones strictly) when feasible.
  RationalVector witness;

  explicit operator bool() const noexcept { return feasible; }
};

/// Strict inequalities are decided exactly: each a.x < b becomes
/// a.x + t <= b with 0 <= t <= 1, and the system is feasible iff max t > 0.
Feasibility lp_feasible(const LinearProgram& program);
Feasibility lp_feasible(std::size_t dim, std::vector<LpConstraint> constraints);

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  RationalVector point;
  Rational value;
};

/// Maximizes objective . x. Strict relations are rejected
/// (std::invalid_argument) since the supremum need not be attained.
LpSolution lp_maximize(const LinearProgram& program,
                       const RationalVector& objective);

}  // namespace toric
