#include "ginv/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

mpfr_prec_t min_prec(const BigFloat& a, const BigFloat& b) { return std::min(a.precision(), b.precision()); }

template <class Fn>
BigFloat unary(const BigFloat& x, Fn fn) {
  BigFloat out(x.precision());
  fn(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRational& value, mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::~BigFloat() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat BigFloat::from_string(const std::string& text, mpfr_prec_t precision) {
  BigFloat out(precision);
  if (mpfr_set_str(out.value_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw ParseError("invalid decimal number '" + text + "'");
  return out;
}

BigFloat BigFloat::pi(mpfr_prec_t precision) {
  BigFloat out(precision);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

std::string BigFloat::str(int digits) const {
  if (!is_finite()) return mpfr_nan_p(value_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  if (is_zero()) return "0";
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", std::max(digits - 1, 0), value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
  return std::string(raw);
}

double BigFloat::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

BigFloat BigFloat::operator-() const { return unary(*this, mpfr_neg); }

BigFloat& BigFloat::operator+=(const BigFloat& rhs) { return *this = *this + rhs; }
BigFloat& BigFloat::operator-=(const BigFloat& rhs) { return *this = *this - rhs; }
BigFloat& BigFloat::operator*=(const BigFloat& rhs) { return *this = *this * rhs; }
BigFloat& BigFloat::operator/=(const BigFloat& rhs) { return *this = *this / rhs; }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(min_prec(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(min_prec(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(min_prec(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (b.is_zero()) throw DivisionByZero("BigFloat division by zero");
  BigFloat out(min_prec(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, long b) {
  BigFloat out(a.precision());
  mpfr_mul_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, long b) {
  if (b == 0) throw DivisionByZero("BigFloat division by zero");
  BigFloat out(a.precision());
  mpfr_div_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }

BigFloat log(const BigFloat& x) {
  if (x.sign() <= 0) throw DomainError("log of nonpositive value");
  return unary(x, mpfr_log);
}

BigFloat log1p(const BigFloat& x) { return unary(x, mpfr_log1p); }

BigFloat sqrt(const BigFloat& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative value");
  return unary(x, mpfr_sqrt);
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }

BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

BigFloat pow10(long e, mpfr_prec_t precision) {
  BigFloat out(precision);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

BigFloat pow10(const BigFloat& x) { return unary(x, mpfr_exp10); }

}  // namespace ginv
