#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/integer.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Torus-invariant divisor: coefficient i sits on the i-th ray divisor.
struct TDivisor {
  IntVector coefficients;

  std::size_t size() const noexcept { return coefficients.size(); }
  auto operator<=>(const TDivisor&) const = default;
};

/// Divisor class in the chosen basis of Pic.
struct PicClass {
  IntVector coordinates;

  std::size_t size() const noexcept { return coordinates.size(); }
  auto operator<=>(const PicClass&) const = default;
};

PicClass operator+(const PicClass& a, const PicClass& b);
PicClass operator-(const PicClass& a, const PicClass& b);
PicClass operator-(const PicClass& a);
PicClass operator*(std::int64_t k, const PicClass& a);
TDivisor operator+(const TDivisor& a, const TDivisor& b);
TDivisor operator-(const TDivisor& a);

std::string to_string(const PicClass& c);
std::string to_string(const TDivisor& d);

/// The divisor -sum_{i in I} D_i, whose sheaf is the ideal sheaf of D_I.
TDivisor negated_boundary(RayMask subset, std::size_t ray_count);

/// The exact sequence 0 -> M -> Z^r -> Pic -> 0 of a smooth complete fan.
///
/// The Pic basis is the row Hermite normal form of an SNF-derived cokernel
/// projection, which makes it independent of SNF pivoting details. It does
/// not in general put the effective cone in the positive orthant; a
/// GradingFunctional carries positivity instead.
class ClassLattice {
 public:
  /// Throws FanNotSmoothComplete, or TorsionCokernel on internal failure.
  explicit ClassLattice(Fan fan);

  const Fan& fan() const noexcept { return fan_; }
  std::size_t rank() const noexcept { return rank_; }
  std::size_t ray_count() const noexcept { return fan_.ray_count(); }
  std::size_t dim() const noexcept { return fan_.dim; }

  /// rank x r; column i is the class of the i-th ray divisor.
  const IntMatrix& class_matrix() const noexcept { return class_matrix_; }
  /// r x n; row i is the ray v_i, so m maps to (<m, v_i>)_i.
  const IntMatrix& character_images() const noexcept { return character_images_; }
  /// r x rank with class_matrix * lift_matrix = identity.
  const IntMatrix& lift_matrix() const noexcept { return lift_matrix_; }

  const std::vector<PicClass>& ray_classes() const noexcept { return ray_classes_; }

  PicClass divisor_class(const TDivisor& d) const;
  /// A T-divisor of the given class (lift_matrix applied to it).
  TDivisor representative(const PicClass& c) const;
  /// The principal divisor (<m, v_i>)_i of the character m.
  TDivisor character_divisor(const IntVector& m) const;
  PicClass zero_class() const { return PicClass{IntVector(rank_, 0)}; }

 private:
  Fan fan_;
  std::size_t rank_ = 0;
  IntMatrix class_matrix_;
  IntMatrix character_images_;
  IntMatrix lift_matrix_;
  std::vector<PicClass> ray_classes_;
  std::vector<IntVector> lift_columns_;
};

ClassLattice class_lattice(const Fan& fan);
PicClass divisor_class(const ClassLattice& lat, const TDivisor& d);

/// Integer functional that is at least 1 on every ray class.
struct GradingFunctional {
  IntVector weights;

  std::int64_t degree(const PicClass& c) const;
};

/// Solved by exact LP (minimizing the total degree of the ray classes).
/// Throws EffectiveConeNotPointed when no such functional exists.
GradingFunctional grading_functional(const ClassLattice& lat);

/// #{b in Z^r_{>=0} : L(b) = D}, by depth-first search pruned on degree.
std::uint64_t h0(const ClassLattice& lat, const GradingFunctional& theta,
                 const PicClass& cls);
std::uint64_t h0(const ClassLattice& lat, const PicClass& cls);

}  // namespace toric
