#include "toric/class_map.hpp"

#include <numeric>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/lp.hpp"

namespace toric {

namespace {

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

}  // namespace

PicClass operator+(const PicClass& a, const PicClass& b) {
  if (a.size() != b.size()) throw DimensionMismatch("class length mismatch");
  return {add(a.coordinates, b.coordinates)};
}

PicClass operator-(const PicClass& a) {
  PicClass out = a;
  for (auto& x : out.coordinates) x = checked_mul(x, -1);
  return out;
}

PicClass operator-(const PicClass& a, const PicClass& b) { return a + (-b); }

PicClass operator*(std::int64_t k, const PicClass& a) {
  PicClass out = a;
  for (auto& x : out.coordinates) x = checked_mul(k, x);
  return out;
}

TDivisor operator+(const TDivisor& a, const TDivisor& b) {
  if (a.size() != b.size()) throw DimensionMismatch("divisor length mismatch");
  return {add(a.coefficients, b.coefficients)};
}

TDivisor operator-(const TDivisor& a) {
  TDivisor out = a;
  for (auto& x : out.coefficients) x = checked_mul(x, -1);
  return out;
}

std::string to_string(const PicClass& c) { return format_vector(c.coordinates); }

std::string to_string(const TDivisor& d) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << d.coefficients[i];
  os << ']';
  return os.str();
}

TDivisor negated_boundary(RayMask subset, std::size_t ray_count) {
  TDivisor d{IntVector(ray_count, 0)};
  for (std::size_t i = 0; i < ray_count; ++i)
    if (subset >> i & 1u) d.coefficients[i] = -1;
  return d;
}

ClassLattice::ClassLattice(Fan fan) : fan_(std::move(fan)) {
  require_smooth_complete(fan_);
  const std::size_t r = fan_.ray_count();
  const std::size_t n = fan_.dim;

  character_images_ = IntMatrix::from_rows(fan_.rays, n);
  SnfResult snf = smith_normal_form(character_images_);
  if (snf.rank != n) throw TorsionCokernel("rays do not span the character lattice");
  for (const auto& d : snf.elementary_divisors())
    if (d != 1) throw TorsionCokernel("Pic has torsion (elementary divisor " + d.get_str() + ")");

  rank_ = r - n;
  HnfResult hnf = hermite_normal_form(snf.U.row_block(n, rank_));
  class_matrix_ = hnf.H;
  if (hnf.rank != rank_) throw InternalError("class map is not surjective");

  IntMatrix composite = class_matrix_ * character_images_;
  for (std::size_t i = 0; i < composite.rows(); ++i)
    for (std::size_t j = 0; j < composite.cols(); ++j)
      if (composite(i, j) != 0) throw InternalError("M -> Z^r -> Pic is not zero");

  // Right inverse of the class map: U Q V = [I 0] gives Q (V[:, :rank] U) = I.
  SnfResult qs = smith_normal_form(class_matrix_);
  for (const auto& d : qs.elementary_divisors())
    if (d != 1) throw TorsionCokernel("class map is not onto Z^rank");
  lift_matrix_ = qs.V.col_block(0, rank_) * qs.U;
  if (!(class_matrix_ * lift_matrix_ == IntMatrix::identity(rank_)))
    throw InternalError("lift is not a section of the class map");

  for (std::size_t i = 0; i < r; ++i) ray_classes_.push_back(PicClass{class_matrix_.col_int64(i)});
  for (std::size_t j = 0; j < rank_; ++j) lift_columns_.push_back(lift_matrix_.col_int64(j));
}

PicClass ClassLattice::divisor_class(const TDivisor& d) const {
  if (d.size() != ray_count())
    throw DimensionMismatch("divisor has " + std::to_string(d.size()) + " coefficients, fan has " +
                            std::to_string(ray_count()) + " rays");
  PicClass c{IntVector(rank_, 0)};
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j)
      c.coordinates[j] =
          checked_add(c.coordinates[j], checked_mul(d.coefficients[i], ray_classes_[i].coordinates[j]));
  }
  return c;
}

TDivisor ClassLattice::representative(const PicClass& c) const {
  if (c.size() != rank_)
    throw DimensionMismatch("class has " + std::to_string(c.size()) + " coordinates, Pic has rank " +
                            std::to_string(rank_));
  TDivisor d{IntVector(ray_count(), 0)};
  for (std::size_t j = 0; j < rank_; ++j) {
    if (c.coordinates[j] == 0) continue;
    for (std::size_t i = 0; i < ray_count(); ++i)
      d.coefficients[i] = checked_add(d.coefficients[i], checked_mul(c.coordinates[j], lift_columns_[j][i]));
  }
  return d;
}

TDivisor ClassLattice::character_divisor(const IntVector& m) const {
  if (m.size() != dim()) throw DimensionMismatch("character has wrong dimension");
  TDivisor d{IntVector(ray_count())};
  for (std::size_t i = 0; i < ray_count(); ++i) d.coefficients[i] = dot(m, fan_.rays[i]);
  return d;
}

ClassLattice class_lattice(const Fan& fan) { return ClassLattice(fan); }

PicClass divisor_class(const ClassLattice& lat, const TDivisor& d) { return lat.divisor_class(d); }

std::int64_t GradingFunctional::degree(const PicClass& c) const {
  if (c.size() != weights.size()) throw DimensionMismatch("grading: class length mismatch");
  return dot(weights, c.coordinates);
}

GradingFunctional grading_functional(const ClassLattice& lat) {
  const std::size_t rho = lat.rank();
  LinearProgram lp(rho);
  RationalVector objective(rho, 0);
  for (const auto& w : lat.ray_classes()) {
    lp.add(w.coordinates, Relation::GreaterEqual, 1);
    for (std::size_t j = 0; j < rho; ++j) objective[j] -= w.coordinates[j];
  }
  LpSolution s = lp_maximize(lp, objective);
  if (s.status != LpStatus::Optimal)
    throw EffectiveConeNotPointed("effective cone is not pointed; no positive grading exists");

  Integer scale = 1;
  for (const auto& q : s.point) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  GradingFunctional theta;
  for (const auto& q : s.point) theta.weights.push_back(to_int64(Integer(q.get_num() * (scale / q.get_den()))));
  for (const auto& w : lat.ray_classes())
    if (theta.degree(w) < 1) throw InternalError("grading functional is not positive on a ray");
  return theta;
}

std::uint64_t h0(const ClassLattice& lat, const GradingFunctional& theta, const PicClass& cls) {
  const std::size_t r = lat.ray_count();
  const std::size_t rho = lat.rank();
  if (cls.size() != rho) throw DimensionMismatch("h0: class has wrong length");
  const std::int64_t total = theta.degree(cls);
  if (total < 0) return 0;

  const auto& w = lat.ray_classes();
  IntVector deg(r);
  for (std::size_t i = 0; i < r; ++i) deg[i] = theta.degree(w[i]);

  // remaining[j] = D_j - sum of chosen b_i * w_i
  IntVector remaining = cls.coordinates;
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, std::size_t i, std::int64_t budget) -> void {
    if (i + 1 == r) {
      if (budget % deg[i] != 0) return;
      const std::int64_t b = budget / deg[i];
      for (std::size_t j = 0; j < rho; ++j)
        if (remaining[j] != b * w[i].coordinates[j]) return;
      ++count;
      return;
    }
    const std::int64_t max_b = budget / deg[i];
    for (std::int64_t b = 0; b <= max_b; ++b) {
      self(self, i + 1, budget - b * deg[i]);
      for (std::size_t j = 0; j < rho; ++j) remaining[j] -= w[i].coordinates[j];
    }
    for (std::size_t j = 0; j < rho; ++j) remaining[j] += (max_b + 1) * w[i].coordinates[j];
  };
  dfs(dfs, 0, total);
  return count;
}

std::uint64_t h0(const ClassLattice& lat, const PicClass& cls) {
  return h0(lat, grading_functional(lat), cls);
}

}  // namespace toric
