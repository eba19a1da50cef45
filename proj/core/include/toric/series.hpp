#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "toric/class_map.hpp"

namespace toric {

/// Finitely supported series in the class variables, truncated by degree:
/// only classes c with theta.degree(c) <= bound are stored, zeros never.
struct GradedSeries {
  GradingFunctional theta;
  std::int64_t bound = 0;
  std::map<PicClass, Integer> terms;

  Integer coefficient(const PicClass& c) const;
};

/// Product of a and b, dropping terms above `bound`.
GradedSeries multiply(const GradedSeries& a, const GradedSeries& b, std::int64_t bound);

/// x -> x^ell: the coefficient of c moves to ell * c. Terms landing above
/// `bound` are dropped.
GradedSeries substitute_power(const GradedSeries& s, std::uint64_t ell, std::int64_t bound);

/// S(x) = prod_i 1 / (1 - x^{L(e_i)}) expanded up to degree `bound`.
/// The coefficient of c is h^0(c).
GradedSeries s_series(const ClassLattice& lat, const GradingFunctional& theta, std::int64_t bound);

/// M(x) = prod_i (1 + x^{L(e_i)} + ... + x^{(ell-1) L(e_i)}), untruncated.
GradedSeries m_polynomial(const ClassLattice& lat, const GradingFunctional& theta, std::uint64_t ell);

struct IdentityRow {
  PicClass cls;
  Integer lhs;
  Integer rhs;
};

struct IdentityReport {
  bool passed = false;
  std::uint64_t ell = 0;
  std::int64_t bound = 0;
  std::optional<PicClass> first_failure;
  /// Every class with a nonzero coefficient on either side, in class order.
  std::vector<IdentityRow> rows;
};

/// Compares S(x) with M(x) * S(x^ell) coefficientwise up to degree `bound`.
IdentityReport verify_identity(const ClassLattice& lat, const GradingFunctional& theta,
                               std::uint64_t ell, std::int64_t bound);

}  // namespace toric
