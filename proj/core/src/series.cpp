#include "toric/series.hpp"

#include <cassert>
#include <set>

#include "toric/errors.hpp"

namespace toric {

Integer GradedSeries::coefficient(const PicClass& c) const {
  auto it = terms.find(c);
  return it == terms.end() ? Integer(0) : it->second;
}

GradedSeries multiply(const GradedSeries& a, const GradedSeries& b, std::int64_t bound) {
  if (a.theta.weights != b.theta.weights) throw DimensionMismatch("series graded by different functionals");
  GradedSeries out{a.theta, bound, {}};
  for (const auto& [ca, xa] : a.terms) {
    const std::int64_t da = a.theta.degree(ca);
    if (da > bound) continue;
    for (const auto& [cb, xb] : b.terms) {
      const std::int64_t db = b.theta.degree(cb);
      if (da + db > bound) continue;
      PicClass c = ca + cb;
      assert(out.theta.degree(c) == da + db);
      out.terms[c] += xa * xb;
    }
  }
  return out;
}

GradedSeries substitute_power(const GradedSeries& s, std::uint64_t ell, std::int64_t bound) {
  const auto l = static_cast<std::int64_t>(ell);
  GradedSeries out{s.theta, bound, {}};
  for (const auto& [c, x] : s.terms) {
    PicClass scaled = l * c;
    if (s.theta.degree(scaled) <= bound) out.terms.emplace(std::move(scaled), x);
  }
  return out;
}

namespace {

GradedSeries one(const ClassLattice& lat, const GradingFunctional& theta, std::int64_t bound) {
  GradedSeries s{theta, bound, {}};
  if (bound >= 0) s.terms.emplace(lat.zero_class(), 1);
  return s;
}

// 1 + x^w + ... + x^{k w}, truncated at bound.
GradedSeries geometric(const GradingFunctional& theta, const PicClass& w, std::int64_t max_power,
                       std::int64_t bound) {
  GradedSeries s{theta, bound, {}};
  const std::int64_t deg = theta.degree(w);
  if (deg < 1) throw InternalError("ray class of non-positive degree");
  for (std::int64_t k = 0; k <= max_power && k * deg <= bound; ++k) s.terms.emplace(k * w, 1);
  return s;
}

}  // namespace

GradedSeries s_series(const ClassLattice& lat, const GradingFunctional& theta, std::int64_t bound) {
  GradedSeries s = one(lat, theta, bound);
  for (const auto& w : lat.ray_classes()) {
    const std::int64_t deg = theta.degree(w);
    s = multiply(s, geometric(theta, w, bound / deg, bound), bound);
  }
  return s;
}

GradedSeries m_polynomial(const ClassLattice& lat, const GradingFunctional& theta, std::uint64_t ell) {
  if (ell < 2) throw std::invalid_argument("ell must be at least 2");
  const auto top = static_cast<std::int64_t>(ell - 1);
  std::int64_t bound = 0;
  for (const auto& w : lat.ray_classes()) bound = checked_add(bound, checked_mul(top, theta.degree(w)));
  GradedSeries m = one(lat, theta, bound);
  for (const auto& w : lat.ray_classes()) m = multiply(m, geometric(theta, w, top, bound), bound);
  return m;
}

IdentityReport verify_identity(const ClassLattice& lat, const GradingFunctional& theta,
                               std::uint64_t ell, std::int64_t bound) {
  const GradedSeries lhs = s_series(lat, theta, bound);
  const auto l = static_cast<std::int64_t>(ell);
  const GradedSeries stretched = substitute_power(s_series(lat, theta, bound / l), ell, bound);
  const GradedSeries rhs = multiply(m_polynomial(lat, theta, ell), stretched, bound);

  IdentityReport report{true, ell, bound, std::nullopt, {}};
  std::set<PicClass> classes;
  for (const auto& [c, _] : lhs.terms) classes.insert(c);
  for (const auto& [c, _] : rhs.terms) classes.insert(c);
  for (const auto& c : classes) {
    IdentityRow row{c, lhs.coefficient(c), rhs.coefficient(c)};
    if (row.lhs != row.rhs && report.passed) {
      report.passed = false;
      report.first_failure = c;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace toric
