#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// A built-in smooth complete fan together with the number of maximal cones
/// it must have (the topological Euler characteristic of the variety).
struct CatalogEntry {
  Fan fan;
  std::size_t euler_characteristic = 0;
};

Fan projective_space(std::size_t n);
Fan product_p1_p1();
/// rays (1,0), (0,1), (-1,a), (0,-1)
Fan hirzebruch(std::int64_t a);
/// Blow-up of P^2 in three torus-fixed points; hexagonal fan.
Fan del_pezzo_6();

/// P^1, P^2, P^3, P^1xP^1, F_1, F_2, dP6 (in this order).
std::vector<CatalogEntry> builtin_catalog();

/// Lookup by fan name ("P2", "P1xP1", "F1", "dP6", ...); throws std::out_of_range.
CatalogEntry catalog_entry(std::string_view name);

}  // namespace toric
