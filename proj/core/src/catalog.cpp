#include "toric/catalog.hpp"

#include <stdexcept>

namespace toric {

Fan projective_space(std::size_t n) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  rays.emplace_back(n, -1);
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t skip = n + 1; skip-- > 0;) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) cone.push_back(i);
    cones.push_back(cone);
  }
  return make_fan(n, std::move(rays), std::move(cones), "P" + std::to_string(n));
}

Fan product_p1_p1() {
  return make_fan(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, "P1xP1");
}

Fan hirzebruch(std::int64_t a) {
  return make_fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
                  "F" + std::to_string(a));
}

Fan del_pezzo_6() {
  return make_fan(2, {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
                  {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}, "dP6");
}

std::vector<CatalogEntry> builtin_catalog() {
  return {
      {projective_space(1), 2}, {projective_space(2), 3}, {projective_space(3), 4},
      {product_p1_p1(), 4},     {hirzebruch(1), 4},       {hirzebruch(2), 4},
      {del_pezzo_6(), 6},
  };
}

CatalogEntry catalog_entry(std::string_view name) {
  for (auto& e : builtin_catalog())
    if (e.fan.name == name) return e;
  throw std::out_of_range("no catalog fan named '" + std::string(name) + "'");
}

}  // namespace toric
