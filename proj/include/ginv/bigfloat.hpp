#pragma once

#include <mpfr.h>

#include <string>

#include "ginv/rational.hpp"

namespace ginv {

/// Owning wrapper around an MPFR value. Every operation rounds to nearest;
/// binary operations produce a result at the smaller operand precision.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 256;

  explicit BigFloat(mpfr_prec_t precision = kDefaultPrecision);
  BigFloat(long value, mpfr_prec_t precision);
  BigFloat(const BigRational& value, mpfr_prec_t precision);
  ~BigFloat();

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;

  /// Parses a decimal string ("1.5e-3", "2", ...).
  static BigFloat from_string(const std::string& text, mpfr_prec_t precision = kDefaultPrecision);
  static BigFloat pi(mpfr_prec_t precision = kDefaultPrecision);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant decimal digits.
  std::string str(int digits = 20) const;
  /// log10(|x|), or -inf for zero; cheap magnitude for reporting.
  double log10_abs() const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, long b);
  friend BigFloat operator/(const BigFloat& a, long b);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

 private:
  mpfr_t value_;
};

BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);
/// 10^e at the given precision.
BigFloat pow10(long e, mpfr_prec_t precision);
/// 10^x for a real exponent.
BigFloat pow10(const BigFloat& x);

}  // namespace ginv
