#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toric/class_map.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Dimensions of reduced simplicial cohomology over Q in degrees
/// -1, 0, ..., max_k (entry d + 1 holds degree d). The complex consisting of
/// the empty face alone has H^{-1} = 1.
std::vector<std::uint64_t> reduced_cohomology_dims(const SimplicialComplex& complex, int max_k);

struct CohomologyTable {
  TDivisor divisor;
  PicClass cls;
  /// h^0, ..., h^n
  std::vector<std::uint64_t> dims;

  bool is_zero() const;
};

struct OracleOptions {
  /// Sign chambers are indexed by ray subsets; refuse fans with more rays.
  std::size_t max_rays = 20;
};

/// h^k(X, O(D)) by sign chambers: for S a set of rays, the chamber
///   { m in M : <m, v_i> < -a_i exactly for i in S }
/// contributes (#lattice points) * dim H~^{k-1}(complex(S)), where complex(S)
/// is boundary_divisor_complex(fan, S).
///
/// Everything that depends only on the fan (the reduced cohomology of all
/// 2^r complexes and the recession cone of every chamber) is computed once
/// at construction; a query only counts lattice points of the bounded
/// chambers whose complex has cohomology.
class CohomologyOracle {
 public:
  explicit CohomologyOracle(ClassLattice lat, const OracleOptions& options = {});

  const ClassLattice& lattice() const noexcept { return lat_; }

  std::uint64_t hk(const TDivisor& a, std::size_t k) const;
  CohomologyTable table(const TDivisor& a) const;

  /// Lattice points of chamber S for divisor a. Throws
  /// UnboundedContributingChamber if the chamber is unbounded and nonempty.
  std::uint64_t chamber_points(const TDivisor& a, RayMask chamber) const;

  /// H~^{-1..n-1} of complex(S).
  const std::vector<std::uint64_t>& complex_cohomology(RayMask chamber) const {
    return complex_dims_[chamber];
  }
  /// Chambers whose complex has nonzero reduced cohomology in some degree.
  const std::vector<RayMask>& contributing_chambers() const noexcept { return contributing_; }
  bool chamber_bounded(RayMask chamber) const;
  /// The unique chamber containing the character m.
  RayMask chamber_of(const TDivisor& a, const IntVector& m) const;

 private:
  ClassLattice lat_;
  std::vector<std::vector<std::uint64_t>> complex_dims_;
  std::vector<RayMask> contributing_;
  std::vector<bool> bounded_;  // parallel to contributing_
};

std::uint64_t hk_oracle(const ClassLattice& lat, const TDivisor& a, std::size_t k);
CohomologyTable full_table(const ClassLattice& lat, const TDivisor& a);

}  // namespace toric
