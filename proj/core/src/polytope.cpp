#include "toric/polytope.hpp"

#include <limits>
#include <stdexcept>

namespace toric {

namespace {

__extension__ typedef __int128 i128;

i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("lattice box coordinate exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

// Fraction-free Gaussian elimination (Bareiss); `m` is n*n row-major.
i128 bareiss_det(std::vector<i128> m, std::size_t n) {
  i128 sign = 1;
  i128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[p * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
    prev = m[k * n + k];
  }
  return sign * m[(n - 1) * n + (n - 1)];
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t total) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < total - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Interval of x with lower <= base + c*x <= upper; empty when lo > hi.
void narrow_interval(const LatticeConstraint& con, i128 base, i128 c,
                     i128& lo, i128& hi) {
  if (c == 0) {
    if ((con.lower && base < *con.lower) || (con.upper && base > *con.upper)) {
      lo = 1;
      hi = 0;
    }
    return;
  }
  if (con.lower) {
    i128 rhs = static_cast<i128>(*con.lower) - base;
    if (c > 0) lo = std::max(lo, ceil_div128(rhs, c));
    else hi = std::min(hi, floor_div128(rhs, c));
  }
  if (con.upper) {
    i128 rhs = static_cast<i128>(*con.upper) - base;
    if (c > 0) hi = std::min(hi, floor_div128(rhs, c));
    else lo = std::max(lo, ceil_div128(rhs, c));
  }
}

template <class Leaf>
void scan(const IntegerBox& box, std::span<const LatticeConstraint> constraints,
          Leaf&& leaf) {
  const std::size_t n = box.dimension();
  if (n == 0) return;
  for (std::size_t j = 0; j < n; ++j)
    if (box.lo[j] > box.hi[j]) return;
  for (const auto& con : constraints)
    if (con.normal.size() != n) throw std::invalid_argument("constraint dimension mismatch");

  IntVector point(n);
  // partial[c] = sum over fixed coordinates of normal * point
  std::vector<i128> partial(constraints.size(), 0);
  auto recurse = [&](auto&& self, std::size_t j) -> void {
    if (j + 1 == n) {
      i128 lo = box.lo[j];
      i128 hi = box.hi[j];
      for (std::size_t c = 0; c < constraints.size() && lo <= hi; ++c)
        narrow_interval(constraints[c], partial[c], constraints[c].normal[j], lo, hi);
      if (lo <= hi) leaf(point, narrow(lo), narrow(hi));
      return;
    }
    for (std::int64_t x = box.lo[j]; x <= box.hi[j]; ++x) {
      point[j] = x;
      for (std::size_t c = 0; c < constraints.size(); ++c)
        partial[c] += static_cast<i128>(constraints[c].normal[j]) * x;
      self(self, j + 1);
      for (std::size_t c = 0; c < constraints.size(); ++c)
        partial[c] -= static_cast<i128>(constraints[c].normal[j]) * x;
    }
  };
  recurse(recurse, 0);
}

}  // namespace

std::uint64_t IntegerBox::volume() const {
  std::uint64_t v = 1;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (hi[j] < lo[j]) return 0;
    auto w = static_cast<std::uint64_t>(static_cast<i128>(hi[j]) - lo[j] + 1);
    if (__builtin_mul_overflow(v, w, &v)) return std::numeric_limits<std::uint64_t>::max();
  }
  return v;
}

std::optional<IntegerBox> vertex_bounding_box(
    std::span<const LatticeConstraint> constraints, std::size_t dim) {
  const std::size_t n = dim;
  if (n == 0 || constraints.size() < n) return std::nullopt;
  for (const auto& con : constraints)
    if (con.normal.size() != n) throw std::invalid_argument("constraint dimension mismatch");

  std::optional<IntegerBox> box;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::vector<i128> a(n * n);
  std::vector<i128> beta(n);
  std::vector<i128> numer(n);

  do {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = constraints[idx[i]].normal[j];
    const i128 det = bareiss_det(a, n);
    if (det == 0) continue;

    for (std::uint32_t sides = 0; sides < (1u << n); ++sides) {
      bool available = true;
      for (std::size_t i = 0; i < n && available; ++i) {
        const auto& con = constraints[idx[i]];
        const auto& bound = (sides >> i & 1u) ? con.upper : con.lower;
        if (!bound) available = false;
        else beta[i] = *bound;
      }
      if (!available) continue;

      // Cramer's rule: x_j = numer_j / det.
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<i128> aj = a;
        for (std::size_t i = 0; i < n; ++i) aj[i * n + j] = beta[i];
        numer[j] = bareiss_det(std::move(aj), n);
      }
      i128 d = det;
      if (d < 0) {
        d = -d;
        for (auto& x : numer) x = -x;
      }
      bool feasible = true;
      for (const auto& con : constraints) {
        i128 value = 0;
        for (std::size_t j = 0; j < n; ++j) value += static_cast<i128>(con.normal[j]) * numer[j];
        if ((con.lower && value < static_cast<i128>(*con.lower) * d) ||
            (con.upper && value > static_cast<i128>(*con.upper) * d)) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      if (!box) {
        box = IntegerBox{IntVector(n, std::numeric_limits<std::int64_t>::max()),
                         IntVector(n, std::numeric_limits<std::int64_t>::min())};
      }
      for (std::size_t j = 0; j < n; ++j) {
        box->lo[j] = std::min(box->lo[j], narrow(ceil_div128(numer[j], d)));
        box->hi[j] = std::max(box->hi[j], narrow(floor_div128(numer[j], d)));
      }
    }
  } while (next_combination(idx, constraints.size()));
  return box;
}

std::uint64_t count_points(const IntegerBox& box,
                           std::span<const LatticeConstraint> constraints) {
  std::uint64_t total = 0;
  scan(box, constraints, [&](const IntVector&, std::int64_t lo, std::int64_t hi) {
    total += static_cast<std::uint64_t>(hi - lo) + 1;
  });
  return total;
}

void for_each_point(const IntegerBox& box,
                    std::span<const LatticeConstraint> constraints,
                    const std::function<void(const IntVector&)>& visit) {
  IntVector p;
  scan(box, constraints, [&](const IntVector& prefix, std::int64_t lo, std::int64_t hi) {
    p = prefix;
    for (std::int64_t x = lo; x <= hi; ++x) {
      p.back() = x;
      visit(p);
    }
  });
}

std::uint64_t count_lattice_points(
    std::span<const LatticeConstraint> constraints, std::size_t dim) {
  auto box = vertex_bounding_box(constraints, dim);
  if (!box) return 0;
  return count_points(*box, constraints);
}

bool satisfies(const IntVector& point,
               std::span<const LatticeConstraint> constraints) {
  for (const auto& con : constraints) {
    if (con.normal.size() != point.size()) throw std::invalid_argument("constraint dimension mismatch");
    i128 v = 0;
    for (std::size_t j = 0; j < point.size(); ++j) v += static_cast<i128>(con.normal[j]) * point[j];
    if ((con.lower && v < *con.lower) || (con.upper && v > *con.upper)) return false;
  }
  return true;
}

}  // namespace toric
