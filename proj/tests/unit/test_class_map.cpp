#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/catalog.hpp"
#include "toric/class_map.hpp"
#include "toric/errors.hpp"

using namespace toric;

namespace {

std::vector<PicClass> classes(std::initializer_list<IntVector> list) {
  std::vector<PicClass> out;
  for (const auto& v : list) out.push_back(PicClass{v});
  return out;
}

}  // namespace

TEST_CASE("ray classes of small fans") {
  CHECK(ClassLattice(projective_space(1)).ray_classes() == classes({{1}, {1}}));
  const ClassLattice p2(projective_space(2));
  CHECK(p2.rank() == 1);
  CHECK(p2.ray_classes() == classes({{1}, {1}, {1}}));
  const ClassLattice q(product_p1_p1());
  CHECK(q.rank() == 2);
  CHECK(q.ray_classes() == classes({{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
  CHECK(ClassLattice(hirzebruch(2)).ray_classes() == classes({{1, 0}, {0, 1}, {1, 0}, {2, 1}}));
}

TEST_CASE("class lattice invariants on the catalog") {
  for (const auto& entry : builtin_catalog()) {
    const ClassLattice lat(entry.fan);
    CAPTURE(entry.fan.name);
    CHECK(lat.rank() == lat.ray_count() - lat.dim());
    const IntMatrix composite = lat.class_matrix() * lat.character_images();
    CHECK(composite == IntMatrix(lat.rank(), lat.dim()));
    const auto divisors = testing::elementary_divisors_by_minors(lat.class_matrix());
    CHECK(divisors == std::vector<Integer>(lat.rank(), 1));
    CHECK(lat.class_matrix() * lat.lift_matrix() == IntMatrix::identity(lat.rank()));
    for (std::size_t i = 0; i < lat.ray_count(); ++i) {
      TDivisor e{IntVector(lat.ray_count(), 0)};
      e.coefficients[i] = 1;
      CHECK(lat.divisor_class(e) == lat.ray_classes()[i]);
    }
  }
}

TEST_CASE("divisor_class is linear and kills principal divisors") {
  const ClassLattice p2(projective_space(2));
  CHECK(p2.divisor_class({{1, 0, 0}}) == PicClass{{1}});
  CHECK(p2.divisor_class({{0, 0, 0}}) == PicClass{{0}});
  CHECK(p2.divisor_class({{1, 1, 1}}) == PicClass{{3}});
  CHECK_THROWS_AS(p2.divisor_class({{1, 0}}), DimensionMismatch);
  CHECK_THROWS_AS(p2.representative(PicClass{{1, 0}}), DimensionMismatch);

  std::mt19937_64 rng(17);
  for (const auto& entry : builtin_catalog()) {
    const ClassLattice lat(entry.fan);
    for (int t = 0; t < 20; ++t) {
      const IntVector m = testing::random_vector(rng, lat.dim(), -5, 5);
      CHECK(lat.divisor_class(lat.character_divisor(m)) == lat.zero_class());
      const PicClass c{testing::random_vector(rng, lat.rank(), -7, 7)};
      CHECK(lat.divisor_class(lat.representative(c)) == c);
    }
  }
}

TEST_CASE("non-smooth or incomplete fans are refused") {
  CHECK_THROWS_AS(ClassLattice(make_fan(2, {{1, 0}, {0, 1}}, {{0, 1}})), FanNotSmoothComplete);
  CHECK_THROWS_AS(ClassLattice(make_fan(2, {{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}})),
                  FanNotSmoothComplete);
}

TEST_CASE("grading functionals") {
  CHECK(grading_functional(ClassLattice(projective_space(2))).weights == IntVector{1});
  CHECK(grading_functional(ClassLattice(product_p1_p1())).weights == IntVector{1, 1});
  for (const auto& entry : builtin_catalog()) {
    const ClassLattice lat(entry.fan);
    const GradingFunctional theta = grading_functional(lat);
    CAPTURE(entry.fan.name);
    for (const auto& w : lat.ray_classes()) CHECK(theta.degree(w) >= 1);
  }
  // F2 (and every Hirzebruch surface) admits one.
  const ClassLattice f5(hirzebruch(5));
  for (const auto& w : f5.ray_classes()) CHECK(grading_functional(f5).degree(w) >= 1);
}

TEST_CASE("h0 examples") {
  const ClassLattice p2(projective_space(2));
  CHECK(h0(p2, PicClass{{2}}) == 6);
  CHECK(h0(p2, PicClass{{-1}}) == 0);
  CHECK(h0(p2, PicClass{{0}}) == 1);
  CHECK(h0(ClassLattice(product_p1_p1()), PicClass{{1, 1}}) == 4);
}

TEST_CASE("h0 agrees with a nested-loop box count") {
  for (const auto& entry : builtin_catalog()) {
    const ClassLattice lat(entry.fan);
    const GradingFunctional theta = grading_functional(lat);
    CAPTURE(entry.fan.name);
    const std::int64_t radius = lat.rank() > 2 ? 2 : 4;
    testing::for_each_in_box(testing::filled(lat.rank(), -radius), testing::filled(lat.rank(), radius),
                             [&](const IntVector& c) {
                               const PicClass d{c};
                               if (theta.degree(d) > 6) return;
                               CHECK(h0(lat, theta, d) == testing::brute_h0(lat, theta, d));
                               if (theta.degree(d) < 0) CHECK(h0(lat, theta, d) == 0);
                             });
  }
}

TEST_CASE("h0 depends on the class only") {
  std::mt19937_64 rng(23);
  for (const auto& entry : builtin_catalog()) {
    const ClassLattice lat(entry.fan);
    const GradingFunctional theta = grading_functional(lat);
    for (int t = 0; t < 10; ++t) {
      const TDivisor d{testing::random_vector(rng, lat.ray_count(), 0, 2)};
      const TDivisor shifted = d + lat.character_divisor(testing::random_vector(rng, lat.dim(), -3, 3));
      CHECK(h0(lat, theta, lat.divisor_class(d)) == h0(lat, theta, lat.divisor_class(shifted)));
      CHECK(h0(lat, theta, lat.divisor_class(d)) >= 1);
    }
  }
}

TEST_CASE("formatting and negated boundaries") {
  CHECK(to_string(PicClass{{-1, 2}}) == "(-1,2)");
  CHECK(to_string(TDivisor{{1, 0, -3}}) == "[1 0 -3]");
  CHECK(negated_boundary(0b101, 4) == TDivisor{{-1, 0, -1, 0}});
  CHECK((PicClass{{1, 2}} - PicClass{{3, -1}}) == PicClass{{-2, 3}});
  CHECK(3 * PicClass{{1, -2}} == PicClass{{3, -6}});
}
