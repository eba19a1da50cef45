#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toric/borisov_hua.hpp"
#include "toric/catalog.hpp"
#include "toric/cohomology.hpp"
#include "toric/errors.hpp"
#include "toric/frobenius.hpp"

using namespace toric;

namespace {

struct Setup {
  ClassLattice lat;
  CohomologyOracle oracle;
  KPolytope K;
  BkSets bk;

  explicit Setup(const Fan& fan)
      : lat(fan), oracle(lat), K(compute_K(lat)), bk(compute_Bk(oracle, K)) {}
};

std::vector<RayMask> subsets(const std::vector<BkEntry>& entries) {
  std::vector<RayMask> out;
  for (const auto& e : entries) out.push_back(e.subset);
  return out;
}

PicClass cls(std::initializer_list<std::int64_t> c) { return PicClass{IntVector(c)}; }

}  // namespace

TEST_CASE("K for P1, P2 and P1xP1") {
  const ClassLattice p1(projective_space(1));
  const KPolytope k1 = compute_K(p1);
  CHECK(k1.vertices == std::vector<RayMask>{0b00, 0b11});
  CHECK(k1.lo == IntVector{-2});
  CHECK(k1.hi == IntVector{0});

  const ClassLattice p2(projective_space(2));
  const KPolytope k2 = compute_K(p2);
  CHECK(k2.vertices == std::vector<RayMask>{0b000, 0b111});
  for (std::int64_t d = -3; d <= 0; ++d) CHECK(k2.contains(cls({d})));
  CHECK_FALSE(k2.contains(cls({1})));
  CHECK_FALSE(k2.contains(cls({-4})));
  CHECK(k2.points[0b011] == cls({-2}));
  CHECK_FALSE(k2.is_extremal(0b001));

  const ClassLattice q(product_p1_p1());
  const KPolytope kq = compute_K(q);
  CHECK(kq.vertices.size() == 4);
  CHECK(kq.facets.size() == 4);
  // Rays 0, 1 are the two fibres over one factor, 2, 3 over the other.
  for (RayMask v : kq.vertices) {
    const auto a = v & 0b0011, b = v & 0b1100;
    CHECK((a == 0 || a == 0b0011));
    CHECK((b == 0 || b == 0b1100));
  }
}

TEST_CASE("K is the zonotope of the ray classes") {
  for (const auto& entry : builtin_catalog()) {
    const ClassLattice lat(entry.fan);
    const KPolytope K = compute_K(lat);
    // Every point [L_I] lies in K and every vertex is one of them.
    for (const auto& p : K.points) CHECK(K.contains(p));
    for (RayMask v : K.vertices) {
      std::size_t same = 0;
      for (const auto& p : K.points) same += p == K.points[v];
      CHECK(same == 1);
      CHECK(K.tight_facets(K.points[v]).size() >= lat.rank());
    }
    // Central symmetry about half the anticanonical class.
    PicClass sum = lat.zero_class();
    for (const auto& w : lat.ray_classes()) sum = sum - w;
    for (RayMask v : K.vertices) CHECK(K.is_extremal(lat.fan().all_rays() & ~v));
    CHECK(K.points[lat.fan().all_rays()] == sum);
  }
  const KPolytope d6 = compute_K(ClassLattice(del_pezzo_6()));
  CHECK(d6.vertices.size() == 46);
  CHECK(d6.facets.size() == 22);
}

TEST_CASE("B_k on the catalog") {
  const Setup p2(projective_space(2));
  CHECK(subsets(p2.bk.sets[0]) == std::vector<RayMask>{0});
  CHECK(p2.bk.sets[1].empty());
  CHECK(subsets(p2.bk.sets[2]) == std::vector<RayMask>{0b111});
  CHECK(p2.bk.sets[2][0].dimension == 1);

  const Setup q(product_p1_p1());
  CHECK(subsets(q.bk.sets[1]) == std::vector<RayMask>{0b0011, 0b1100});
  CHECK(subsets(q.bk.sets[2]) == std::vector<RayMask>{0b1111});

  const Setup f1(hirzebruch(1));
  CHECK(subsets(f1.bk.sets[1]) == std::vector<RayMask>{0b0101, 0b1010});

  for (const auto& entry : builtin_catalog()) {
    const Setup s(entry.fan);
    CAPTURE(entry.fan.name);
    CHECK(s.bk == compute_Bk_unrestricted(s.oracle));
    CHECK(subsets(s.bk.sets[0]) == std::vector<RayMask>{0});
    CHECK(subsets(s.bk.sets[s.lat.dim()]) == std::vector<RayMask>{s.lat.fan().all_rays()});
  }
}

TEST_CASE("P2 regions") {
  const Setup p2(projective_space(2));
  CHECK(region_membership(p2.K, p2.bk, cls({5}), 0));
  CHECK(region_membership(p2.K, p2.bk, cls({0}), 0));
  CHECK_FALSE(region_membership(p2.K, p2.bk, cls({-1}), 0));
  CHECK(region_membership(p2.K, p2.bk, cls({-3}), 2));
  CHECK_FALSE(region_membership(p2.K, p2.bk, cls({-2}), 2));
  for (std::int64_t d = -8; d <= 8; ++d) CHECK_FALSE(region_membership(p2.K, p2.bk, cls({d}), 1));
}

TEST_CASE("facet test, LP test and oracle agree") {
  std::mt19937_64 rng(61);
  for (const auto& entry : builtin_catalog()) {
    const Setup s(entry.fan);
    const int trials = s.lat.rank() > 2 ? 10 : 40;
    for (int t = 0; t < trials; ++t) {
      const PicClass d{testing::random_vector(rng, s.lat.rank(), -5, 5)};
      const CohomologyTable table = s.oracle.table(s.lat.representative(d));
      for (std::size_t k = 0; k <= s.lat.dim(); ++k) {
        CAPTURE(entry.fan.name);
        CAPTURE(to_string(d));
        CAPTURE(k);
        const bool by_facets = region_membership(s.K, s.bk, d, k);
        CHECK(by_facets == region_membership_lp(s.K, s.bk, d, k));
        CHECK(by_facets == (table.dims[k] != 0));
      }
    }
  }
}

TEST_CASE("cones over all generators equal cones over extremal ones") {
  std::mt19937_64 rng(67);
  for (const auto& entry : builtin_catalog()) {
    if (entry.fan.ray_count() > 4) continue;
    const ClassLattice lat(entry.fan);
    const KPolytope K = compute_K(lat);
    for (RayMask v : K.vertices) {
      const TranslatedCone ext = translated_cone(K, v, ConeGenerators::Extremal);
      const TranslatedCone all = translated_cone(K, v, ConeGenerators::All);
      CHECK(ext.apex == K.points[v]);
      CHECK(ext.generators.size() <= all.generators.size());
      for (int t = 0; t < 15; ++t) {
        const PicClass d{testing::random_vector(rng, lat.rank(), -5, 5)};
        const bool e = cone_contains(ext, d);
        CHECK(e == cone_contains(all, d));
        CHECK(e == apex_cone_contains(K, v, d));
      }
      CHECK(cone_contains(ext, ext.apex));
    }
  }
}

TEST_CASE("h^k via multiplicities") {
  const Setup p2(projective_space(2));
  for (std::int64_t d = 0; d <= 6; ++d)
    CHECK(hk_via_multiplicities(p2.lat, p2.K, p2.bk, cls({d}), 0).value == testing::binomial(d + 2, 2));
  const MultiplicityResult r = hk_via_multiplicities(p2.lat, p2.K, p2.bk, cls({-5}), 2);
  CHECK(r.value == 6);
  CHECK(r.mu.size() == 1);
  CHECK(r.ell >= 2);
  const MultiplicityResult empty = hk_via_multiplicities(p2.lat, p2.K, p2.bk, cls({3}), 1);
  CHECK(empty.value == 0);
  CHECK(empty.ell == 0);
  CHECK(empty.mu.empty());

  std::mt19937_64 rng(71);
  for (const auto& entry : builtin_catalog()) {
    const Setup s(entry.fan);
    for (int t = 0; t < 5; ++t) {
      const PicClass d{testing::random_vector(rng, s.lat.rank(), -4, 4)};
      for (std::size_t k = 0; k <= s.lat.dim(); ++k) {
        const MultiplicityResult m = hk_via_multiplicities(s.lat, s.K, s.bk, d, k);
        CHECK(m.value == s.oracle.hk(s.lat.representative(d), k));
        CHECK(m.ell <= 64);
      }
    }
  }
}

TEST_CASE("stabilization gives up past max_ell") {
  const Setup p2(projective_space(2));
  CHECK_THROWS_AS(hk_via_multiplicities(p2.lat, p2.K, p2.bk, cls({40}), 0, MultiplicityOptions{2}), NonStabilized);
}

TEST_CASE("containment condition") {
  const ClassLattice p2(projective_space(2));
  const KPolytope K = compute_K(p2);
  CHECK(containment_holds(K, cls({0}), 2));
  // K + 2/2 = [-2, 1] leaves K.
  CHECK_FALSE(containment_holds(K, cls({2}), 2));
  CHECK(containment_holds(K, cls({2}), 4));
  CHECK_FALSE(containment_holds(K, cls({-8}), 4));
  CHECK(containment_holds(K, cls({-8}), 16));
  for (const auto& entry : builtin_catalog()) {
    const ClassLattice lat(entry.fan);
    const KPolytope k = compute_K(lat);
    CHECK(containment_holds(k, lat.zero_class(), 2));
  }
}

TEST_CASE("classes in the star of a vertex are eventually summands") {
  for (const auto& entry : builtin_catalog()) {
    const ClassLattice lat(entry.fan);
    const KPolytope K = compute_K(lat);
    for (RayMask v : K.vertices) {
      CHECK(in_star(K, v, K.points[v]));
      for (RayMask j = 0; j <= lat.fan().all_rays(); ++j) {
        if (!in_star(K, v, K.points[j])) continue;
        bool found = false;
        for (std::uint64_t ell = 2; ell <= 64 && !found; ell *= 2)
          found = multiplicity(lat, K.points[j], K.points[v], ell) > 0;
        CAPTURE(entry.fan.name);
        CAPTURE(v);
        CAPTURE(j);
        CHECK(found);
      }
    }
    // The far vertex is outside the star of the vertex at 0.
    CHECK_FALSE(in_star(K, 0, K.points[lat.fan().all_rays()]));
  }
}
