#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "toric/catalog.hpp"
#include "toric/errors.hpp"
#include "toric/fan.hpp"

using namespace toric;

namespace {

constexpr const char* kP2 = R"(# projective plane
name: P2
dim: 2
rays:
1 0
0 1
-1 -1
max_cones:
0 1
1 2
0 2
)";

std::string error_of(const std::string& text) {
  try {
    parse_fan(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

Fan permuted(const Fan& fan, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(fan.ray_count());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<IntVector> rays(fan.ray_count());
  for (std::size_t i = 0; i < perm.size(); ++i) rays[perm[i]] = fan.rays[i];
  auto cones = fan.max_cones;
  for (auto& c : cones)
    for (auto& i : c) i = perm[i];
  std::shuffle(cones.begin(), cones.end(), rng);
  return make_fan(fan.dim, rays, cones, fan.name);
}

}  // namespace

TEST_CASE("parsing the P1 and P2 fans") {
  const Fan p1 = parse_fan("dim: 1\nrays:\n1\n-1\nmax_cones:\n0\n1\n");
  CHECK(p1.dim == 1);
  CHECK(p1.ray_count() == 2);

  const Fan p2 = parse_fan(kP2);
  CHECK(p2.name == "P2");
  CHECK(p2.dim == 2);
  CHECK(p2.ray_count() == 3);
  CHECK(p2.max_cones == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}, {0, 2}});
  // Same rays and cones as the catalog P2; cone order is part of the input.
  const Fan catalog = projective_space(2);
  CHECK(p2.rays == catalog.rays);
  auto cones = p2.max_cones, expected = catalog.max_cones;
  std::sort(cones.begin(), cones.end());
  std::sort(expected.begin(), expected.end());
  CHECK(cones == expected);
}

TEST_CASE("validation errors carry the offending line") {
  const std::string non_primitive = "dim: 2\nrays:\n2 0\n0 1\nmax_cones:\n0 1\n";
  CHECK_THROWS_AS(parse_fan(non_primitive), ValidationError);
  CHECK(error_of(non_primitive).find("non-primitive ray") != std::string::npos);
  CHECK(error_of(non_primitive).starts_with("line 3:"));

  CHECK(error_of("dim: 2\nrays:\n1 0\n1 0\nmax_cones:\n0 1\n").find("duplicate ray") != std::string::npos);
  CHECK(error_of("dim: 2\nrays:\n1 0\nmax_cones:\n").find("empty cone list") != std::string::npos);
  CHECK(error_of("dim: 2\nrays:\n0 0\nmax_cones:\n0\n").find("zero ray") != std::string::npos);
  CHECK(error_of("dim: 2\nrays:\n1 0\n0 1\nmax_cones:\n0\n").find("ray 1 is in no maximal cone") !=
        std::string::npos);
  CHECK(error_of("dim: 2\nrays:\n1 0\n0 1\nmax_cones:\n0 1\n0\n").find("contained in cone") != std::string::npos);
  CHECK(error_of("dim: 2\nrays:\n1 0\nmax_cones:\n0 0\n").find("repeats a ray index") != std::string::npos);
  CHECK(error_of("dim: 2\nrays:\n1 0\nmax_cones:\n0 5\n").find("missing ray 5") != std::string::npos);
  CHECK(error_of("dim: 2\nrays:\n1 0 0\nmax_cones:\n0\n").find("coordinates") != std::string::npos);
}

TEST_CASE("malformed text is a parse error") {
  CHECK(error_of("rays:\n1\n").find("before 'dim:'") != std::string::npos);
  CHECK(error_of("dim: 1\nrays:\n1\n-1\n").find("missing 'max_cones:'") != std::string::npos);
  CHECK(error_of("dim: 1\nrays:\n1 x\n").starts_with("line 3: expected an integer"));
  CHECK(error_of("dim: 1\ncolour: red\n").find("unknown key") != std::string::npos);
  CHECK(error_of("dim: 1\nname: late\n").find("'name:' must be the first entry") != std::string::npos);
  CHECK(error_of("1 2\n").find("outside a section") != std::string::npos);
  CHECK_THROWS_AS(load_fan("/nonexistent/fan/file.fan"), ParseError);
}

TEST_CASE("serialize and parse round-trip") {
  for (const auto& entry : builtin_catalog()) {
    CAPTURE(entry.fan.name);
    CHECK(parse_fan(serialize_fan(entry.fan)) == entry.fan);
  }
  const Fan unnamed = make_fan(1, {{1}, {-1}}, {{0}, {1}});
  CHECK(parse_fan(serialize_fan(unnamed)) == unnamed);
}

TEST_CASE("validate flags") {
  const FanProperties p2 = validate(projective_space(2));
  CHECK(p2.is_simplicial);
  CHECK(p2.is_smooth);
  CHECK(p2.is_complete);
  CHECK(p2.dim == 2);

  const FanProperties weighted = validate(make_fan(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(weighted.is_simplicial);
  CHECK_FALSE(weighted.is_smooth);
  CHECK(weighted.is_complete);
  // The cone spanned by (1,0) and (-1,-2) has determinant -2.
  CHECK(weighted.diagnostic == "fan not smooth: cone 2");

  const FanProperties a2 = validate(make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}}));
  CHECK(a2.is_smooth);
  CHECK_FALSE(a2.is_complete);

  // Two quadrants: smooth, but a facet lies in a single cone.
  CHECK_FALSE(validate(make_fan(2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}})).is_complete);
  // Lower-dimensional smooth cones.
  const FanProperties rays_only = validate(make_fan(2, {{1, 0}, {0, 1}}, {{0}, {1}}));
  CHECK(rays_only.is_smooth);
  CHECK_FALSE(rays_only.is_complete);
  // Non-simplicial: a square cone in dimension 3.
  const FanProperties square =
      validate(make_fan(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, {{0, 1, 2, 3}}));
  CHECK_FALSE(square.is_simplicial);
  CHECK_FALSE(square.is_smooth);
}

TEST_CASE("completeness rejects a fan that wraps around twice") {
  // Six cones around the origin whose rays turn through 4 pi: every facet is
  // shared by two cones on opposite sides, yet the plane is covered twice.
  const Fan doubled = make_fan(2, {{1, 0}, {-1, 1}, {0, -1}, {1, 1}, {-1, 0}, {1, -2}},
                               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const FanProperties p = validate(doubled);
  CHECK_FALSE(p.is_complete);
}

TEST_CASE("require_smooth_complete messages") {
  CHECK_NOTHROW(require_smooth_complete(hirzebruch(3)));
  try {
    require_smooth_complete(make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}}));
    FAIL("expected refusal");
  } catch (const FanNotSmoothComplete& e) {
    CHECK(std::string(e.what()).starts_with("fan not complete"));
  }
  try {
    require_smooth_complete(make_fan(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}}));
    FAIL("expected refusal");
  } catch (const FanNotSmoothComplete& e) {
    CHECK(std::string(e.what()).starts_with("fan not smooth"));
  }
}

TEST_CASE("catalog fans are smooth and complete with the expected cone counts") {
  const auto catalog = builtin_catalog();
  REQUIRE(catalog.size() == 7);
  for (const auto& entry : catalog) {
    CAPTURE(entry.fan.name);
    const FanProperties p = validate(entry.fan);
    CHECK(p.is_smooth);
    CHECK(p.is_complete);
    CHECK(entry.fan.max_cones.size() == entry.euler_characteristic);
  }
  CHECK(catalog_entry("dP6").fan.ray_count() == 6);
  CHECK_THROWS_AS(catalog_entry("P9"), std::out_of_range);
}

TEST_CASE("validate does not depend on ray or cone order") {
  std::mt19937_64 rng(3);
  const Fan weighted = make_fan(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}});
  const Fan a2 = make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}});
  std::vector<Fan> fans{weighted, a2};
  for (const auto& e : builtin_catalog()) fans.push_back(e.fan);
  for (const auto& fan : fans)
    for (int t = 0; t < 5; ++t) {
      const FanProperties a = validate(fan), b = validate(permuted(fan, rng));
      CAPTURE(fan.name);
      CHECK(a.is_simplicial == b.is_simplicial);
      CHECK(a.is_smooth == b.is_smooth);
      CHECK(a.is_complete == b.is_complete);
    }
}

TEST_CASE("boundary divisor complexes") {
  const Fan p2 = projective_space(2);
  const SimplicialComplex circle = boundary_divisor_complex(p2, 0b111);
  CHECK(circle.face_count_of_size(0) == 1);
  CHECK(circle.face_count_of_size(1) == 3);
  CHECK(circle.face_count_of_size(2) == 3);
  CHECK(circle.face_count_of_size(3) == 0);

  const SimplicialComplex empty = boundary_divisor_complex(p2, 0);
  CHECK(empty.faces == std::vector<RayMask>{0});

  // One factor of P1xP1: rays 0 and 1 are opposite.
  const SimplicialComplex two_points = boundary_divisor_complex(product_p1_p1(), 0b0011);
  CHECK(two_points.face_count_of_size(1) == 2);
  CHECK(two_points.face_count_of_size(2) == 0);

  for (const auto& entry : builtin_catalog())
    for (RayMask s = 0; s <= entry.fan.all_rays(); ++s) {
      const SimplicialComplex c = boundary_divisor_complex(entry.fan, s);
      CHECK(c.is_downward_closed());
      for (RayMask f : c.faces) CHECK((f & ~s) == 0);
    }
  CHECK(format_mask(0b101, 3) == "{0,2}");
  CHECK(format_mask(0, 3) == "{}");
}
