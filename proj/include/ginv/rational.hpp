#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ginv {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// Parses "n", "-n", "n/d" or "-n/d" (optional leading '+'). Decimal points
/// are rejected so that parameters stay exact.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& q);
std::string to_string(const BigInteger& z);

/// Returns r >= 0 with r*r == q when q is the square of a rational.
std::optional<BigRational> rational_sqrt(const BigRational& q);

inline BigRational make_rational(long num, long den = 1) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const BigRational& q) { return sgn(q); }

}  // namespace ginv
