#pragma once
// Brute-force reference computations. Each one avoids the code path it is
// used to check: no incremental class updates, no vertex boxes, no simplex.

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "toric/class_map.hpp"
#include "toric/cohomology.hpp"
#include "toric/frobenius.hpp"
#include "toric/lattice.hpp"
#include "toric/lp.hpp"
#include "toric/polytope.hpp"

namespace toric::testing {

template <class Visit>
void for_each_in_box(const IntVector& lo, const IntVector& hi, Visit&& visit) {
  for (std::size_t j = 0; j < lo.size(); ++j)
    if (lo[j] > hi[j]) return;
  IntVector p = lo;
  for (;;) {
    visit(p);
    std::size_t j = 0;
    for (; j < p.size(); ++j) {
      if (p[j] < hi[j]) {
        ++p[j];
        break;
      }
      p[j] = lo[j];
    }
    if (j == p.size()) return;
  }
}

inline IntVector filled(std::size_t n, std::int64_t v) { return IntVector(n, v); }

/// Class of b by a full product with the class matrix.
inline PicClass class_of(const ClassLattice& lat, const IntVector& b) {
  PicClass c{IntVector(lat.rank(), 0)};
  for (std::size_t j = 0; j < lat.rank(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += lat.class_matrix()(j, i) * b[i];
    c.coordinates[j] = to_int64(s);
  }
  return c;
}

inline ClassHistogram brute_cube_histogram(const ClassLattice& lat, std::uint64_t ell) {
  ClassHistogram h;
  const auto top = static_cast<std::int64_t>(ell) - 1;
  for_each_in_box(filled(lat.ray_count(), 0), filled(lat.ray_count(), top),
                  [&](const IntVector& b) { ++h[class_of(lat, b)]; });
  return h;
}

/// Nested-loop count over 0 <= b_i <= max{c : theta(c w_i) <= theta(D)}.
inline std::uint64_t brute_h0(const ClassLattice& lat, const GradingFunctional& theta, const PicClass& d) {
  const std::int64_t total = theta.degree(d);
  if (total < 0) return 0;
  IntVector hi(lat.ray_count());
  for (std::size_t i = 0; i < hi.size(); ++i) hi[i] = total / theta.degree(lat.ray_classes()[i]);
  std::uint64_t count = 0;
  for_each_in_box(filled(lat.ray_count(), 0), hi, [&](const IntVector& b) {
    if (class_of(lat, b) == d) ++count;
  });
  return count;
}

/// Fraction-free Gaussian elimination (Bareiss).
inline Integer determinant(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// d_k / d_{k-1} where d_k is the gcd of all k x k minors.
inline std::vector<Integer> elementary_divisors_by_minors(const IntMatrix& a) {
  std::vector<Integer> out;
  Integer previous = 1;
  const std::size_t top = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= top; ++k) {
    Integer g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    auto next = [](std::vector<std::size_t>& c, std::size_t n) {
      std::size_t i = c.size();
      while (i > 0 && c[i - 1] == n - c.size() + i - 1) --i;
      if (i == 0) return false;
      ++c[i - 1];
      for (std::size_t j = i; j < c.size(); ++j) c[j] = c[j - 1] + 1;
      return true;
    };
    for (std::size_t i = 0; i < k; ++i) rows[i] = i;
    do {
      for (std::size_t i = 0; i < k; ++i) cols[i] = i;
      do {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
        Integer d = abs(determinant(m));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      } while (next(cols, a.cols()));
    } while (next(rows, a.rows()));
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

inline bool holds(const LpConstraint& c, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += c.coefficients[i] * x[i];
  switch (c.relation) {
    case Relation::LessEqual: return s <= c.rhs;
    case Relation::Less: return s < c.rhs;
    case Relation::Equal: return s == c.rhs;
    case Relation::GreaterEqual: return s >= c.rhs;
    case Relation::Greater: return s > c.rhs;
  }
  return false;
}

/// Searches the grid (1/denominator) Z^dim within [-range, range]^dim.
inline bool grid_feasible(std::size_t dim, const std::vector<LpConstraint>& constraints, std::int64_t range,
                          std::int64_t denominator) {
  bool found = false;
  for_each_in_box(filled(dim, -range * denominator), filled(dim, range * denominator), [&](const IntVector& p) {
    if (found) return;
    RationalVector x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = make_rational(p[i], denominator);
    bool ok = true;
    for (const auto& c : constraints) ok = ok && holds(c, x);
    found = ok;
  });
  return found;
}

inline std::uint64_t brute_count(std::span<const LatticeConstraint> constraints, const IntVector& lo,
                                 const IntVector& hi) {
  std::uint64_t count = 0;
  for_each_in_box(lo, hi, [&](const IntVector& m) {
    if (satisfies(m, constraints)) ++count;
  });
  return count;
}

/// h^k(O(a)) summed character by character over [-radius, radius]^n: the
/// character m contributes dim H~^{k-1} of the complex on its negative rays.
inline std::uint64_t scan_hk(const ClassLattice& lat, const TDivisor& a, std::size_t k, std::int64_t radius) {
  const std::size_t n = lat.dim();
  std::map<RayMask, std::vector<std::uint64_t>> cache;
  std::uint64_t total = 0;
  for_each_in_box(filled(n, -radius), filled(n, radius), [&](const IntVector& m) {
    RayMask s = 0;
    for (std::size_t i = 0; i < lat.ray_count(); ++i)
      if (dot(m, lat.fan().rays[i]) < -a.coefficients[i]) s |= RayMask{1} << i;
    auto it = cache.find(s);
    if (it == cache.end())
      it = cache.emplace(s, reduced_cohomology_dims(boundary_divisor_complex(lat.fan(), s), static_cast<int>(n) - 1))
               .first;
    total += it->second[k];
  });
  return total;
}

inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Bott's formula for line bundles on P^n.
inline std::uint64_t projective_hk(std::size_t n, std::int64_t d, std::size_t k) {
  const auto nn = static_cast<std::int64_t>(n);
  if (k == 0) return d >= 0 ? binomial(d + nn, nn) : 0;
  if (k == n) return d <= -nn - 1 ? binomial(-d - 1, nn) : 0;
  return 0;
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t size, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  IntVector v(size);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace toric::testing
