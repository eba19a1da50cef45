#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toric/class_map.hpp"
#include "toric/cohomology.hpp"

namespace toric {

/// Supporting half-space normal . y >= offset, normal primitive.
struct Facet {
  IntVector normal;
  std::int64_t offset = 0;
};

/// K = conv{[L_I] : I a ray subset}, L_I = O(-sum_{i in I} D_i).
///
/// K is the zonotope -sum_i [0, w_i] over the ray classes w_i, so every
/// facet normal is orthogonal to rank-1 independent ray classes and every
/// vertex has exactly one extremal subset.
struct KPolytope {
  /// points[I] = [L_I], indexed by ray mask.
  std::vector<PicClass> points;
  /// Extremal subsets, ascending.
  std::vector<RayMask> vertices;
  std::vector<Facet> facets;
  /// Integer bounding box of K.
  IntVector lo;
  IntVector hi;

  bool is_extremal(RayMask subset) const;
  bool contains(const PicClass& y) const;
  /// y / denominator in K.
  bool contains_scaled(const IntVector& y, std::int64_t denominator) const;
  /// Facets containing the point y.
  std::vector<std::size_t> tight_facets(const PicClass& y) const;
};

struct KOptions {
  std::size_t max_rays = 20;
};

/// Vertices are found by exact LP (a distinct class is a vertex iff it is not
/// a convex combination of the other distinct classes).
KPolytope compute_K(const ClassLattice& lat, const KOptions& options = {});

struct BkEntry {
  RayMask subset = 0;
  std::uint64_t dimension = 0;  // h^k(L_I)

  bool operator==(const BkEntry&) const = default;
};

/// sets[k] for k = 0..n, ascending by subset.
struct BkSets {
  std::vector<std::vector<BkEntry>> sets;

  bool operator==(const BkSets&) const = default;
};

/// Extremal I with h^k(L_I) != 0.
BkSets compute_Bk(const CohomologyOracle& oracle, const KPolytope& K);
/// Every I with h^k(L_I) != 0, extremal or not.
BkSets compute_Bk_unrestricted(const CohomologyOracle& oracle);

enum class ConeGenerators { Extremal, All };

/// C_I = [L_I] + cone([L_I] - [L_J]).
struct TranslatedCone {
  RayMask subset = 0;
  PicClass apex;
  /// Nonzero differences, deduplicated and ascending.
  std::vector<IntVector> generators;
};

TranslatedCone translated_cone(const KPolytope& K, RayMask subset, ConeGenerators which);
/// Decided by exact LP over nonnegative generator coefficients.
bool cone_contains(const TranslatedCone& cone, const PicClass& d);
/// For extremal I, C_I is the tangent cone of K at [L_I] reflected through
/// the apex: normal . d <= offset for every facet tight at [L_I].
bool apex_cone_contains(const KPolytope& K, RayMask extremal, const PicClass& d);

/// d in A_k per the cone-union description, via apex_cone_contains.
bool region_membership(const KPolytope& K, const BkSets& bk, const PicClass& d, std::size_t k);
/// Same question answered with cone_contains (LP) on extremal generators.
bool region_membership_lp(const KPolytope& K, const BkSets& bk, const PicClass& d, std::size_t k);

/// y in Star_K([L_I]): y lies in K and every facet tight at y is tight at [L_I].
bool in_star(const KPolytope& K, RayMask extremal, const PicClass& y);

/// (K + d/ell) intersected with the class lattice lies inside K.
bool containment_holds(const KPolytope& K, const PicClass& d, std::uint64_t ell);

struct MultiplicityResult {
  std::uint64_t value = 0;
  /// Level at which the readings stabilized.
  std::uint64_t ell = 0;
  /// mu(D, I) for I in B_k, in B_k order.
  std::vector<std::uint64_t> mu;
};

struct MultiplicityOptions {
  std::uint64_t max_ell = 64;
};

/// h^k(D) = sum over I in B_k of h^k(L_I) * mu(D, I), with mu(D, I) the
/// multiplicity of [L_I] in F_ell,* O(D). ell runs through 2, 4, 8, ... and
/// stops once the mu readings agree on two consecutive levels and the
/// containment condition holds at the later one. Throws NonStabilized past
/// max_ell.
MultiplicityResult hk_via_multiplicities(const ClassLattice& lat, const KPolytope& K, const BkSets& bk,
                                         const PicClass& d, std::size_t k,
                                         const MultiplicityOptions& options = {});

}  // namespace toric
