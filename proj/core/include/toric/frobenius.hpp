#pragma once

#include <cstdint>
#include <map>

#include "toric/class_map.hpp"

namespace toric {

struct FrobeniusOptions {
  /// Upper limit on the number of cube points ell^r enumerated.
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
};

using ClassHistogram = std::map<PicClass, std::uint64_t>;

/// For every class c = L(b), b in {0, ..., ell-1}^r, the number of cube
/// points b mapping to c. Throws BudgetExceeded if ell^r > options.budget.
/// The result does not depend on options.threads.
ClassHistogram cube_class_histogram(const ClassLattice& lat, std::uint64_t ell,
                                    const FrobeniusOptions& options = {});

/// F_ell,* O(D) = sum over E of O(E)^{m(E, D)}.
struct Decomposition {
  std::uint64_t ell = 0;
  PicClass source;
  /// Sorted lexicographically by class coordinates; every value >= 1.
  std::map<PicClass, std::uint64_t> summands;

  std::uint64_t total_multiplicity() const;
  std::uint64_t multiplicity(const PicClass& summand) const;
};

/// Summands E = (D - c) / ell over histogram classes c with D - c divisible
/// by ell, weighted by histogram[c].
Decomposition decompose_from_histogram(const ClassLattice& lat,
                                       const ClassHistogram& histogram,
                                       const PicClass& source, std::uint64_t ell);

Decomposition decompose(const ClassLattice& lat, const PicClass& source,
                        std::uint64_t ell, const FrobeniusOptions& options = {});

/// decompose(D, ell^s), cross-checked against the s-fold composition
/// sum_E m_ell(E, D) * decompose(E, ell^(s-1)). Disagreement throws
/// InternalError.
Decomposition iterated_decompose(const ClassLattice& lat, const PicClass& source,
                                 std::uint64_t ell, unsigned s,
                                 const FrobeniusOptions& options = {});

/// m(E, D) without enumerating the cube: the lattice points b = b0 + (<m, v_i>)
/// of the fiber L^{-1}(D - ell E) inside {0, ..., ell-1}^r, counted in M.
std::uint64_t multiplicity(const ClassLattice& lat, const PicClass& summand,
                           const PicClass& source, std::uint64_t ell);

}  // namespace toric
