#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "toric/integer.hpp"

namespace toric {

/// Subsets of rays as bitmasks; bit i stands for ray i.
using RayMask = std::uint64_t;

inline constexpr std::size_t kMaxRays = 63;

/// A rational polyhedral fan given by primitive ray generators and the ray
/// index sets of its maximal cones. Immutable once built by make_fan or
/// parse_fan, both of which enforce:
///   - every ray is nonzero and primitive, no ray repeats;
///   - every ray belongs to some maximal cone;
///   - no maximal cone is contained in another.
struct Fan {
  std::string name;
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  /// Sorted ray indices, cones kept in input order.
  std::vector<std::vector<std::size_t>> max_cones;

  std::size_t ray_count() const noexcept { return rays.size(); }
  RayMask all_rays() const noexcept {
    return rays.size() == 64 ? ~RayMask{0} : (RayMask{1} << rays.size()) - 1;
  }
  std::vector<RayMask> cone_masks() const;

  bool operator==(const Fan&) const = default;
};

/// Builds a Fan, throwing ValidationError when an invariant fails.
Fan make_fan(std::size_t dim, std::vector<IntVector> rays,
             std::vector<std::vector<std::size_t>> max_cones,
             std::string name = {});

/// Text format, see docs/fan_format.md.
Fan parse_fan(std::string_view text);
Fan load_fan(const std::filesystem::path& path);
std::string serialize_fan(const Fan& fan);

struct FanProperties {
  bool is_simplicial = false;
  bool is_smooth = false;
  bool is_complete = false;
  std::size_t dim = 0;
  /// Human-readable reason for the first failed property, empty if none.
  std::string diagnostic;
};

FanProperties validate(const Fan& fan);

/// Throws FanNotSmoothComplete (message "fan not smooth" / "fan not complete")
/// unless the fan is smooth and complete.
void require_smooth_complete(const Fan& fan);

/// Downward-closed family of ray subsets. Always contains the empty face.
struct SimplicialComplex {
  RayMask vertices = 0;
  std::vector<RayMask> faces;  // sorted ascending

  bool contains(RayMask face) const;
  bool is_downward_closed() const;
  std::size_t face_count_of_size(std::size_t size) const;
};

/// Faces are the subsets J of `subset` whose rays span a cone of the fan.
SimplicialComplex boundary_divisor_complex(const Fan& fan, RayMask subset);

std::string format_mask(RayMask mask, std::size_t ray_count);

}  // namespace toric
