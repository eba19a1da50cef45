#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// A point of a rational vector space; entries are kept canonical by GMP.
using RationalPoint = RationalVector;

/// Throws std::overflow_error if `value` does not fit.
std::int64_t to_int64(const Integer& value);

Rational make_rational(std::int64_t num, std::int64_t den = 1);
RationalVector to_rational(const IntVector& v);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exponent);

/// Floor and ceiling of a / b for b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

std::int64_t dot(const IntVector& a, const IntVector& b);

/// gcd of the absolute values; 0 for the zero vector.
std::int64_t content(const IntVector& v);

/// "(a,b,c)"
std::string format_vector(const IntVector& v);
std::string format_vector(const RationalVector& v);

}  // namespace toric
