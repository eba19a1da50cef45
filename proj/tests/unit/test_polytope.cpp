#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/polytope.hpp"

using namespace toric;

TEST_CASE("lattice points of a triangle") {
  // x >= 0, y >= 0, x + y <= 4: 15 points.
  std::vector<LatticeConstraint> tri{{{1, 0}, 0, std::nullopt}, {{0, 1}, 0, std::nullopt}, {{1, 1}, std::nullopt, 4}};
  CHECK(count_lattice_points(tri, 2) == 15);
  const auto box = vertex_bounding_box(tri, 2);
  REQUIRE(box);
  CHECK(box->lo == IntVector{0, 0});
  CHECK(box->hi == IntVector{4, 4});
  CHECK(box->volume() == 25);
  std::size_t visited = 0;
  for_each_point(*box, tri, [&](const IntVector& p) {
    CHECK(satisfies(p, tri));
    ++visited;
  });
  CHECK(visited == 15);
}

TEST_CASE("empty and lattice-free polytopes") {
  std::vector<LatticeConstraint> empty{{{1}, 3, 2}};
  CHECK_FALSE(vertex_bounding_box(empty, 1));
  CHECK(count_lattice_points(empty, 1) == 0);
  // 1 <= 2x <= 1 has the rational point 1/2 only.
  std::vector<LatticeConstraint> thin{{{2}, 1, 1}};
  CHECK(vertex_bounding_box(thin, 1));
  CHECK(count_lattice_points(thin, 1) == 0);
}

TEST_CASE("random bounded polytopes against a box scan") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> coef(-3, 3), off(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    std::vector<LatticeConstraint> cs;
    for (std::size_t j = 0; j < dim; ++j) {
      IntVector e(dim, 0);
      e[j] = 1;
      cs.push_back({e, -6, 6});
    }
    for (int c = 0; c < 3; ++c) {
      IntVector a(dim);
      for (auto& x : a) x = coef(rng);
      const std::int64_t b = off(rng);
      if (rng() % 2) cs.push_back({a, b, std::nullopt});
      else cs.push_back({a, std::nullopt, b});
    }
    CAPTURE(trial);
    CHECK(count_lattice_points(cs, dim) == testing::brute_count(cs, testing::filled(dim, -6), testing::filled(dim, 6)));
  }
}
