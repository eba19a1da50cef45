#include "toric/frobenius.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <unordered_map>

#include "toric/errors.hpp"
#include "toric/polytope.hpp"

namespace toric {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

// Mixed-radix encoding of the classes reachable from the cube.
struct ClassIndex {
  IntVector lo;
  IntVector extent;
  IntVector stride;
  IntVector column_delta;  // index change when b_i increases by one
  std::uint64_t size = 1;

  ClassIndex(const ClassLattice& lat, std::uint64_t ell) {
    const std::size_t rho = lat.rank();
    const auto& w = lat.ray_classes();
    const auto top = static_cast<std::int64_t>(ell - 1);
    lo.assign(rho, 0);
    IntVector hi(rho, 0);
    for (const auto& c : w)
      for (std::size_t j = 0; j < rho; ++j) {
        const std::int64_t v = checked_mul(top, c.coordinates[j]);
        (v < 0 ? lo[j] : hi[j]) = checked_add(v < 0 ? lo[j] : hi[j], v);
      }
    for (std::size_t j = 0; j < rho; ++j) {
      extent.push_back(hi[j] - lo[j] + 1);
      stride.push_back(static_cast<std::int64_t>(size));
      if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(extent.back()), &size) ||
          size > (std::uint64_t{1} << 62))
        throw BudgetExceeded("class range of the cube image is too large to index");
    }
    for (const auto& c : w) {
      std::int64_t d = 0;
      for (std::size_t j = 0; j < rho; ++j) d += c.coordinates[j] * stride[j];
      column_delta.push_back(d);
    }
  }

  std::int64_t origin() const {
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < lo.size(); ++j) idx -= lo[j] * stride[j];
    return idx;
  }

  PicClass decode(std::uint64_t idx) const {
    PicClass c{IntVector(lo.size())};
    for (std::size_t j = 0; j < lo.size(); ++j) {
      c.coordinates[j] = lo[j] + static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(extent[j]));
      idx /= static_cast<std::uint64_t>(extent[j]);
    }
    return c;
  }
};

// Odometer over b_0..b_{r-2} for each fixed value of b_{r-1} in [first, last);
// each step adjusts the class index by one column delta.
template <class Record>
void walk_cube(const ClassIndex& index, std::size_t r, std::int64_t ell,
               std::int64_t first, std::int64_t last, Record&& record) {
  std::vector<std::int64_t> digit(r, 0);
  for (std::int64_t top = first; top < last; ++top) {
    std::int64_t idx = index.origin() + top * index.column_delta[r - 1];
    std::fill(digit.begin(), digit.end(), 0);
    for (;;) {
      record(static_cast<std::uint64_t>(idx));
      std::size_t i = 0;
      for (; i + 1 < r; ++i) {
        if (digit[i] + 1 < ell) {
          ++digit[i];
          idx += index.column_delta[i];
          break;
        }
        idx -= (ell - 1) * index.column_delta[i];
        digit[i] = 0;
      }
      if (i + 1 >= r) break;
    }
  }
}

}  // namespace

ClassHistogram cube_class_histogram(const ClassLattice& lat, std::uint64_t ell,
                                    const FrobeniusOptions& options) {
  if (ell < 2) throw std::invalid_argument("ell must be at least 2");
  const std::size_t r = lat.ray_count();
  std::uint64_t points = 0;
  try {
    points = checked_pow(ell, r);
  } catch (const std::overflow_error&) {
    points = std::numeric_limits<std::uint64_t>::max();
  }
  if (points > options.budget)
    throw BudgetExceeded("cube of " + std::to_string(ell) + "^" + std::to_string(r) +
                         " points exceeds the enumeration budget of " + std::to_string(options.budget));

  const ClassIndex index(lat, ell);
  const auto ell_i = static_cast<std::int64_t>(ell);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(ell)));
  const bool dense = index.size <= kDenseLimit;

  std::vector<std::vector<std::uint64_t>> dense_parts(workers);
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> sparse_parts(workers);
  auto run = [&](unsigned k) {
    const std::int64_t first = ell_i * k / workers;
    const std::int64_t last = ell_i * (k + 1) / workers;
    if (dense) {
      auto& h = dense_parts[k];
      h.assign(index.size, 0);
      walk_cube(index, r, ell_i, first, last, [&](std::uint64_t idx) { ++h[idx]; });
    } else {
      auto& h = sparse_parts[k];
      walk_cube(index, r, ell_i, first, last, [&](std::uint64_t idx) { ++h[idx]; });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < workers; ++k) pool.emplace_back(run, k);
  }

  ClassHistogram out;
  if (dense) {
    for (std::uint64_t idx = 0; idx < index.size; ++idx) {
      std::uint64_t total = 0;
      for (const auto& part : dense_parts) total += part[idx];
      if (total) out.emplace(index.decode(idx), total);
    }
  } else {
    for (const auto& part : sparse_parts)
      for (const auto& [idx, n] : part) out[index.decode(idx)] += n;
  }
  return out;
}

std::uint64_t Decomposition::total_multiplicity() const {
  std::uint64_t t = 0;
  for (const auto& [_, m] : summands) t += m;
  return t;
}

std::uint64_t Decomposition::multiplicity(const PicClass& summand) const {
  auto it = summands.find(summand);
  return it == summands.end() ? 0 : it->second;
}

Decomposition decompose_from_histogram(const ClassLattice& lat, const ClassHistogram& histogram,
                                       const PicClass& source, std::uint64_t ell) {
  if (source.size() != lat.rank()) throw DimensionMismatch("decompose: class has wrong length");
  const auto l = static_cast<std::int64_t>(ell);
  Decomposition d{ell, source, {}};
  for (const auto& [c, count] : histogram) {
    PicClass diff = source - c;
    bool divisible = std::all_of(diff.coordinates.begin(), diff.coordinates.end(),
                                 [&](std::int64_t x) { return x % l == 0; });
    if (!divisible) continue;
    for (auto& x : diff.coordinates) x /= l;
    d.summands.emplace(std::move(diff), count);
  }
  const std::uint64_t expected = checked_pow(ell, lat.dim());
  if (d.total_multiplicity() != expected)
    throw InternalError("push-forward has rank " + std::to_string(d.total_multiplicity()) +
                        ", expected " + std::to_string(expected));
  return d;
}

Decomposition decompose(const ClassLattice& lat, const PicClass& source, std::uint64_t ell,
                        const FrobeniusOptions& options) {
  return decompose_from_histogram(lat, cube_class_histogram(lat, ell, options), source, ell);
}

Decomposition iterated_decompose(const ClassLattice& lat, const PicClass& source,
                                 std::uint64_t ell, unsigned s, const FrobeniusOptions& options) {
  if (s == 0) throw std::invalid_argument("iterated_decompose: s must be at least 1");
  const std::uint64_t big = checked_pow(ell, s);
  Decomposition direct = decompose(lat, source, big, options);
  if (s == 1) return direct;

  // Compose one F_ell step at a time: F_{ell^s} = F_ell o ... o F_ell.
  const ClassHistogram step = cube_class_histogram(lat, ell, options);
  std::map<PicClass, std::uint64_t> layer{{source, 1}};
  for (unsigned level = 0; level < s; ++level) {
    std::map<PicClass, std::uint64_t> next;
    for (const auto& [cls, weight] : layer)
      for (const auto& [e, m] : decompose_from_histogram(lat, step, cls, ell).summands)
        next[e] += weight * m;
    layer = std::move(next);
  }
  if (layer != direct.summands)
    throw InternalError("iterated push-forward disagrees with the direct ell^s decomposition");
  return direct;
}

std::uint64_t multiplicity(const ClassLattice& lat, const PicClass& summand,
                           const PicClass& source, std::uint64_t ell) {
  if (ell < 2) throw std::invalid_argument("ell must be at least 2");
  const auto l = static_cast<std::int64_t>(ell);
  const TDivisor base = lat.representative(source - l * summand);
  std::vector<LatticeConstraint> constraints;
  constraints.reserve(lat.ray_count());
  for (std::size_t i = 0; i < lat.ray_count(); ++i) {
    const std::int64_t b = base.coefficients[i];
    constraints.push_back({lat.fan().rays[i], checked_mul(b, -1), checked_add(l - 1, -b)});
  }
  return count_lattice_points(constraints, lat.dim());
}

}  // namespace toric
