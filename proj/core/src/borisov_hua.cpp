#include "toric/borisov_hua.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/errors.hpp"
#include "toric/frobenius.hpp"
#include "toric/lattice.hpp"
#include "toric/lp.hpp"

namespace toric {

namespace {

IntVector primitive(IntVector v) {
  const std::int64_t g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// p is a convex combination of `others`.
bool in_convex_hull(const PicClass& p, const std::vector<PicClass>& others) {
  const std::size_t rho = p.size();
  LinearProgram lp(others.size());
  lp.nonnegative.assign(others.size(), true);
  lp.add(RationalVector(others.size(), 1), Relation::Equal, 1);
  for (std::size_t j = 0; j < rho; ++j) {
    RationalVector row(others.size());
    for (std::size_t q = 0; q < others.size(); ++q) row[q] = others[q].coordinates[j];
    lp.add(std::move(row), Relation::Equal, p.coordinates[j]);
  }
  return lp_feasible(lp).feasible;
}

std::vector<Facet> zonotope_facets(const ClassLattice& lat, const std::vector<PicClass>& vertex_points) {
  const std::size_t rho = lat.rank();
  std::set<IntVector> normals;
  if (rho == 1) {
    normals = {{1}, {-1}};
  } else {
    std::set<IntVector> directions;
    for (const auto& w : lat.ray_classes()) {
      IntVector d = primitive(w.coordinates);
      IntVector neg = (-PicClass{d}).coordinates;
      directions.insert(std::max(d, neg));
    }
    const std::vector<IntVector> dirs(directions.begin(), directions.end());
    const std::size_t m = rho - 1;
    if (dirs.size() >= m) {
      std::vector<std::size_t> pick(m);
      for (std::size_t i = 0; i < m; ++i) pick[i] = i;
      for (;;) {
        std::vector<IntVector> rows;
        for (std::size_t i : pick) rows.push_back(dirs[i]);
        const IntMatrix a = IntMatrix::from_rows(rows, rho);
        if (matrix_rank(a) == m) {
          const auto kernel = kernel_basis(a);
          if (kernel.size() != 1) throw InternalError("facet normal is not unique");
          const IntVector u = primitive(kernel.front());
          normals.insert(u);
          normals.insert((-PicClass{u}).coordinates);
        }
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == dirs.size() - m + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  std::vector<Facet> facets;
  for (const auto& u : normals) {
    std::int64_t h = dot(u, vertex_points.front().coordinates);
    for (const auto& p : vertex_points) h = std::min(h, dot(u, p.coordinates));
    facets.push_back({u, h});
  }
  return facets;
}

template <class Visit>
void for_each_box_point(const IntVector& lo, const IntVector& hi, Visit&& visit) {
  for (std::size_t j = 0; j < lo.size(); ++j)
    if (lo[j] > hi[j]) return;
  IntVector y = lo;
  for (;;) {
    visit(y);
    std::size_t j = 0;
    for (; j < y.size(); ++j) {
      if (y[j] < hi[j]) {
        ++y[j];
        break;
      }
      y[j] = lo[j];
    }
    if (j == y.size()) return;
  }
}

}  // namespace

bool KPolytope::is_extremal(RayMask subset) const {
  return std::binary_search(vertices.begin(), vertices.end(), subset);
}

bool KPolytope::contains(const PicClass& y) const { return contains_scaled(y.coordinates, 1); }

bool KPolytope::contains_scaled(const IntVector& y, std::int64_t denominator) const {
  return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) {
    return dot(f.normal, y) >= checked_mul(f.offset, denominator);
  });
}

std::vector<std::size_t> KPolytope::tight_facets(const PicClass& y) const {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < facets.size(); ++f)
    if (dot(facets[f].normal, y.coordinates) == facets[f].offset) out.push_back(f);
  return out;
}

KPolytope compute_K(const ClassLattice& lat, const KOptions& options) {
  const std::size_t r = lat.ray_count();
  if (r > options.max_rays)
    throw BudgetExceeded("K: " + std::to_string(r) + " rays exceeds the limit of " +
                         std::to_string(options.max_rays));
  KPolytope K;
  const RayMask count = RayMask{1} << r;
  std::map<PicClass, std::vector<RayMask>> by_class;
  K.points.reserve(count);
  for (RayMask s = 0; s < count; ++s) {
    K.points.push_back(lat.divisor_class(negated_boundary(s, r)));
    by_class[K.points.back()].push_back(s);
  }

  std::vector<PicClass> distinct;
  for (const auto& [c, _] : by_class) distinct.push_back(c);
  std::vector<PicClass> vertex_points;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    std::vector<PicClass> others;
    for (std::size_t j = 0; j < distinct.size(); ++j)
      if (j != i) others.push_back(distinct[j]);
    if (!others.empty() && in_convex_hull(distinct[i], others)) continue;
    const auto& subsets = by_class[distinct[i]];
    if (subsets.size() != 1)
      throw InternalError("vertex " + to_string(distinct[i]) + " of K has several subsets");
    K.vertices.push_back(subsets.front());
    vertex_points.push_back(distinct[i]);
  }
  std::sort(K.vertices.begin(), K.vertices.end());

  K.facets = zonotope_facets(lat, vertex_points);
  for (const auto& p : K.points)
    if (!K.contains(p)) throw InternalError("K facet description excludes " + to_string(p));
  for (const auto& v : vertex_points)
    if (K.tight_facets(v).size() < lat.rank())
      throw InternalError("vertex " + to_string(v) + " lies on too few facets");

  K.lo = K.hi = vertex_points.front().coordinates;
  for (const auto& v : vertex_points)
    for (std::size_t j = 0; j < v.size(); ++j) {
      K.lo[j] = std::min(K.lo[j], v.coordinates[j]);
      K.hi[j] = std::max(K.hi[j], v.coordinates[j]);
    }
  return K;
}

BkSets compute_Bk(const CohomologyOracle& oracle, const KPolytope& K) {
  const std::size_t n = oracle.lattice().dim();
  const std::size_t r = oracle.lattice().ray_count();
  BkSets bk{std::vector<std::vector<BkEntry>>(n + 1)};
  for (RayMask s : K.vertices) {
    const auto table = oracle.table(negated_boundary(s, r));
    for (std::size_t k = 0; k <= n; ++k)
      if (table.dims[k] != 0) bk.sets[k].push_back({s, table.dims[k]});
  }
  return bk;
}

BkSets compute_Bk_unrestricted(const CohomologyOracle& oracle) {
  const std::size_t n = oracle.lattice().dim();
  const std::size_t r = oracle.lattice().ray_count();
  BkSets bk{std::vector<std::vector<BkEntry>>(n + 1)};
  for (RayMask s = 0; s < (RayMask{1} << r); ++s) {
    const auto table = oracle.table(negated_boundary(s, r));
    for (std::size_t k = 0; k <= n; ++k)
      if (table.dims[k] != 0) bk.sets[k].push_back({s, table.dims[k]});
  }
  return bk;
}

TranslatedCone translated_cone(const KPolytope& K, RayMask subset, ConeGenerators which) {
  if (subset >= K.points.size()) throw std::out_of_range("translated_cone: subset out of range");
  TranslatedCone cone{subset, K.points[subset], {}};
  std::set<IntVector> gens;
  auto add = [&](RayMask j) {
    PicClass g = cone.apex - K.points[j];
    if (std::any_of(g.coordinates.begin(), g.coordinates.end(), [](std::int64_t x) { return x != 0; }))
      gens.insert(std::move(g.coordinates));
  };
  if (which == ConeGenerators::Extremal) {
    for (RayMask j : K.vertices) add(j);
  } else {
    for (RayMask j = 0; j < K.points.size(); ++j) add(j);
  }
  cone.generators.assign(gens.begin(), gens.end());
  return cone;
}

bool cone_contains(const TranslatedCone& cone, const PicClass& d) {
  if (d.size() != cone.apex.size()) throw DimensionMismatch("cone_contains: class has wrong length");
  const PicClass target = d - cone.apex;
  const std::size_t g = cone.generators.size();
  if (g == 0) return target == PicClass{IntVector(d.size(), 0)};
  LinearProgram lp(g);
  lp.nonnegative.assign(g, true);
  for (std::size_t j = 0; j < d.size(); ++j) {
    RationalVector row(g);
    for (std::size_t q = 0; q < g; ++q) row[q] = cone.generators[q][j];
    lp.add(std::move(row), Relation::Equal, target.coordinates[j]);
  }
  return lp_feasible(lp).feasible;
}

bool apex_cone_contains(const KPolytope& K, RayMask extremal, const PicClass& d) {
  const PicClass& apex = K.points.at(extremal);
  for (std::size_t f : K.tight_facets(apex))
    if (dot(K.facets[f].normal, d.coordinates) > K.facets[f].offset) return false;
  return true;
}

bool region_membership(const KPolytope& K, const BkSets& bk, const PicClass& d, std::size_t k) {
  if (k >= bk.sets.size()) return false;
  return std::any_of(bk.sets[k].begin(), bk.sets[k].end(),
                     [&](const BkEntry& e) { return apex_cone_contains(K, e.subset, d); });
}

bool region_membership_lp(const KPolytope& K, const BkSets& bk, const PicClass& d, std::size_t k) {
  if (k >= bk.sets.size()) return false;
  return std::any_of(bk.sets[k].begin(), bk.sets[k].end(), [&](const BkEntry& e) {
    return cone_contains(translated_cone(K, e.subset, ConeGenerators::Extremal), d);
  });
}

bool in_star(const KPolytope& K, RayMask extremal, const PicClass& y) {
  if (!K.contains(y)) return false;
  const auto at_vertex = K.tight_facets(K.points.at(extremal));
  for (std::size_t f : K.tight_facets(y))
    if (!std::binary_search(at_vertex.begin(), at_vertex.end(), f)) return false;
  return true;
}

bool containment_holds(const KPolytope& K, const PicClass& d, std::uint64_t ell) {
  const auto l = static_cast<std::int64_t>(ell);
  // u.y >= h + u.d/ell with u.d > -ell forces u.y >= h for integer y.
  if (std::all_of(K.facets.begin(), K.facets.end(),
                  [&](const Facet& f) { return dot(f.normal, d.coordinates) > -l; }))
    return true;
  IntVector lo(d.size()), hi(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    lo[j] = ceil_div(checked_add(checked_mul(l, K.lo[j]), d.coordinates[j]), l);
    hi[j] = floor_div(checked_add(checked_mul(l, K.hi[j]), d.coordinates[j]), l);
  }
  bool ok = true;
  for_each_box_point(lo, hi, [&](const IntVector& y) {
    if (!ok) return;
    IntVector shifted(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) shifted[j] = checked_add(checked_mul(l, y[j]), -d.coordinates[j]);
    if (K.contains_scaled(shifted, l) && !K.contains(PicClass{y})) ok = false;
  });
  return ok;
}

MultiplicityResult hk_via_multiplicities(const ClassLattice& lat, const KPolytope& K, const BkSets& bk,
                                         const PicClass& d, std::size_t k,
                                         const MultiplicityOptions& options) {
  if (d.size() != lat.rank()) throw DimensionMismatch("hk_via_multiplicities: class has wrong length");
  MultiplicityResult result;
  if (k >= bk.sets.size() || bk.sets[k].empty()) return result;
  const auto& entries = bk.sets[k];

  std::vector<std::uint64_t> previous;
  for (std::uint64_t ell = 2; ell <= options.max_ell; ell *= 2) {
    std::vector<std::uint64_t> mu;
    mu.reserve(entries.size());
    for (const auto& e : entries) mu.push_back(multiplicity(lat, K.points[e.subset], d, ell));
    if (!previous.empty() && mu == previous && containment_holds(K, d, ell)) {
      result.ell = ell;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        std::uint64_t term = 0;
        if (__builtin_mul_overflow(mu[i], entries[i].dimension, &term) ||
            __builtin_add_overflow(result.value, term, &result.value))
          throw std::overflow_error("h^k exceeds 64 bits");
      }
      result.mu = std::move(mu);
      return result;
    }
    previous = std::move(mu);
  }
  throw NonStabilized("multiplicities for " + to_string(d) + " did not stabilize up to ell = " +
                      std::to_string(options.max_ell));
}

}  // namespace toric
