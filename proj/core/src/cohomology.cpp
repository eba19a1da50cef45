#include "toric/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "toric/errors.hpp"
#include "toric/lattice.hpp"
#include "toric/lp.hpp"
#include "toric/polytope.hpp"

namespace toric {

namespace {

// Rank of the coboundary C^d -> C^{d+1} (faces of size d+1 to size d+2).
std::size_t coboundary_rank(const std::vector<RayMask>& lower, const std::vector<RayMask>& upper) {
  if (lower.empty() || upper.empty()) return 0;
  std::unordered_map<RayMask, std::size_t> column;
  for (std::size_t j = 0; j < lower.size(); ++j) column.emplace(lower[j], j);
  IntMatrix m(upper.size(), lower.size());
  for (std::size_t i = 0; i < upper.size(); ++i) {
    const RayMask face = upper[i];
    long sign = 1;
    // Removing the t-th smallest vertex carries sign (-1)^t.
    for (RayMask rest = face; rest; rest &= rest - 1) {
      const RayMask bit = rest & (~rest + 1);
      auto it = column.find(face & ~bit);
      if (it == column.end()) throw InternalError("simplicial complex is not downward closed");
      m(i, it->second) = sign;
      sign = -sign;
    }
  }
  return matrix_rank(m);
}

}  // namespace

std::vector<std::uint64_t> reduced_cohomology_dims(const SimplicialComplex& complex, int max_k) {
  if (max_k < -1) throw std::invalid_argument("max_k must be at least -1");
  if (!complex.is_downward_closed()) throw std::invalid_argument("complex is not downward closed");
  const auto top = static_cast<std::size_t>(max_k + 2);  // face sizes 0..max_k+1, plus one above
  std::vector<std::vector<RayMask>> by_size(top + 1);
  for (RayMask f : complex.faces) {
    const auto s = static_cast<std::size_t>(std::popcount(f));
    if (s <= top) by_size[s].push_back(f);
  }
  // rank[s]: coboundary from size-s cochains to size-(s+1) cochains
  std::vector<std::size_t> rank(top + 1, 0);
  for (std::size_t s = 0; s < top; ++s) rank[s] = coboundary_rank(by_size[s], by_size[s + 1]);

  std::vector<std::uint64_t> dims;
  for (std::size_t s = 0; s < top; ++s) {
    const std::size_t incoming = s == 0 ? 0 : rank[s - 1];
    dims.push_back(by_size[s].size() - rank[s] - incoming);
  }
  return dims;
}

bool CohomologyTable::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](std::uint64_t d) { return d == 0; });
}

CohomologyOracle::CohomologyOracle(ClassLattice lat, const OracleOptions& options) : lat_(std::move(lat)) {
  const std::size_t r = lat_.ray_count();
  const std::size_t n = lat_.dim();
  if (r > options.max_rays)
    throw BudgetExceeded("cohomology oracle: " + std::to_string(r) + " rays exceeds the limit of " +
                         std::to_string(options.max_rays));
  const RayMask count = RayMask{1} << r;
  complex_dims_.resize(count);
  for (RayMask s = 0; s < count; ++s) {
    complex_dims_[s] = reduced_cohomology_dims(boundary_divisor_complex(lat_.fan(), s), static_cast<int>(n) - 1);
    const auto& d = complex_dims_[s];
    if (std::any_of(d.begin(), d.end(), [](std::uint64_t x) { return x != 0; })) contributing_.push_back(s);
  }

  // Recession cone of chamber S: <y, v_i> <= 0 for i in S, >= 0 otherwise.
  for (RayMask s : contributing_) {
    LinearProgram lp(n);
    for (std::size_t i = 0; i < r; ++i)
      lp.add(lat_.fan().rays[i], (s >> i & 1u) ? Relation::LessEqual : Relation::GreaterEqual, 0);
    bool bounded = true;
    for (std::size_t j = 0; j < n && bounded; ++j)
      for (int sign : {1, -1}) {
        RationalVector objective(n, 0);
        objective[j] = sign;
        if (lp_maximize(lp, objective).status != LpStatus::Optimal) {
          bounded = false;
          break;
        }
      }
    bounded_.push_back(bounded);
  }
}

bool CohomologyOracle::chamber_bounded(RayMask chamber) const {
  auto it = std::lower_bound(contributing_.begin(), contributing_.end(), chamber);
  if (it != contributing_.end() && *it == chamber) return bounded_[static_cast<std::size_t>(it - contributing_.begin())];
  // Non-contributing chambers are not precomputed.
  LinearProgram lp(lat_.dim());
  for (std::size_t i = 0; i < lat_.ray_count(); ++i)
    lp.add(lat_.fan().rays[i], (chamber >> i & 1u) ? Relation::LessEqual : Relation::GreaterEqual, 0);
  for (std::size_t j = 0; j < lat_.dim(); ++j)
    for (int sign : {1, -1}) {
      RationalVector objective(lat_.dim(), 0);
      objective[j] = sign;
      if (lp_maximize(lp, objective).status != LpStatus::Optimal) return false;
    }
  return true;
}

RayMask CohomologyOracle::chamber_of(const TDivisor& a, const IntVector& m) const {
  if (a.size() != lat_.ray_count()) throw DimensionMismatch("divisor length does not match the fan");
  if (m.size() != lat_.dim()) throw DimensionMismatch("character has wrong dimension");
  RayMask s = 0;
  for (std::size_t i = 0; i < lat_.ray_count(); ++i)
    if (dot(m, lat_.fan().rays[i]) < -a.coefficients[i]) s |= RayMask{1} << i;
  return s;
}

std::uint64_t CohomologyOracle::chamber_points(const TDivisor& a, RayMask chamber) const {
  if (a.size() != lat_.ray_count()) throw DimensionMismatch("divisor length does not match the fan");
  const std::size_t r = lat_.ray_count();
  std::vector<LatticeConstraint> constraints;
  constraints.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t bound = checked_mul(a.coefficients[i], -1);
    if (chamber >> i & 1u)
      constraints.push_back({lat_.fan().rays[i], std::nullopt, checked_add(bound, -1)});
    else
      constraints.push_back({lat_.fan().rays[i], bound, std::nullopt});
  }
  if (!chamber_bounded(chamber)) {
    LinearProgram lp(lat_.dim());
    for (const auto& c : constraints) {
      if (c.lower) lp.add(c.normal, Relation::GreaterEqual, *c.lower);
      if (c.upper) lp.add(c.normal, Relation::LessEqual, *c.upper);
    }
    if (lp_feasible(lp))
      throw UnboundedContributingChamber("chamber " + format_mask(chamber, r) + " of divisor " + to_string(a) +
                                         " is unbounded and nonempty");
    return 0;
  }
  return count_lattice_points(constraints, lat_.dim());
}

std::uint64_t CohomologyOracle::hk(const TDivisor& a, std::size_t k) const {
  if (a.size() != lat_.ray_count()) throw DimensionMismatch("divisor length does not match the fan");
  if (k > lat_.dim()) return 0;
  std::uint64_t total = 0;
  for (RayMask s : contributing_) {
    const std::uint64_t dim = complex_dims_[s][k];  // H~^{k-1}
    if (dim == 0) continue;
    const std::uint64_t points = chamber_points(a, s);
    if (points == 0) continue;
    std::uint64_t term = 0;
    if (__builtin_mul_overflow(points, dim, &term) || __builtin_add_overflow(total, term, &total))
      throw std::overflow_error("h^k exceeds 64 bits");
  }
  return total;
}

CohomologyTable CohomologyOracle::table(const TDivisor& a) const {
  CohomologyTable t{a, lat_.divisor_class(a), std::vector<std::uint64_t>(lat_.dim() + 1, 0)};
  for (RayMask s : contributing_) {
    const std::uint64_t points = chamber_points(a, s);
    if (points == 0) continue;
    for (std::size_t k = 0; k <= lat_.dim(); ++k) {
      std::uint64_t term = 0;
      if (__builtin_mul_overflow(points, complex_dims_[s][k], &term) ||
          __builtin_add_overflow(t.dims[k], term, &t.dims[k]))
        throw std::overflow_error("h^k exceeds 64 bits");
    }
  }
  return t;
}

std::uint64_t hk_oracle(const ClassLattice& lat, const TDivisor& a, std::size_t k) {
  return CohomologyOracle(lat).hk(a, k);
}

CohomologyTable full_table(const ClassLattice& lat, const TDivisor& a) {
  return CohomologyOracle(lat).table(a);
}

}  // namespace toric
