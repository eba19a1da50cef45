#pragma once

// Lattice points of small rational polytopes given by integer constraints.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "toric/integer.hpp"

namespace toric {

/// lower <= normal . m <= upper; a missing side is unconstrained.
struct LatticeConstraint {
  IntVector normal;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;
};

struct IntegerBox {
  IntVector lo;
  IntVector hi;

  std::size_t dimension() const noexcept { return lo.size(); }
  /// Number of integer points, saturating at UINT64_MAX.
  std::uint64_t volume() const;
};

/// Bounding box of the polyhedron spanned by its vertices, each vertex found
/// as the exact intersection of `dim` tight constraint hyperplanes.
///
/// Requires a pointed, bounded polyhedron. Returns nullopt when no vertex
/// exists, which for such polyhedra means it is empty.
std::optional<IntegerBox> vertex_bounding_box(
    std::span<const LatticeConstraint> constraints, std::size_t dim);

/// Integer points of `box` satisfying every constraint. The last coordinate
/// is resolved as an interval, so the cost is box^(dim-1).
std::uint64_t count_points(const IntegerBox& box,
                           std::span<const LatticeConstraint> constraints);

void for_each_point(const IntegerBox& box,
                    std::span<const LatticeConstraint> constraints,
                    const std::function<void(const IntVector&)>& visit);

/// Lattice point count of a bounded polyhedron (see vertex_bounding_box).
std::uint64_t count_lattice_points(
    std::span<const LatticeConstraint> constraints, std::size_t dim);

bool satisfies(const IntVector& point,
               std::span<const LatticeConstraint> constraints);

}  // namespace toric
