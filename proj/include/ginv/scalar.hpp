#pragma once

#include "ginv/bigfloat.hpp"
#include "ginv/errors.hpp"
#include "ginv/rational.hpp"
#include "ginv/tower.hpp"

namespace ginv {

/// Uniform access to the scalar rings used by the series engine. `like`
/// arguments carry context a bare constant cannot (BigFloat precision).
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<BigRational> {
  static BigRational from_rational(const BigRational& q, const BigRational&) { return q; }
  static bool is_zero(const BigRational& x) { return sgn(x) == 0; }
  static BigRational inverse(const BigRational& x) {
    if (sgn(x) == 0) throw DivisionByZero("inverse of zero rational");
    return 1 / x;
  }
  static BigRational scale(const BigRational& x, const BigRational& q) { return x * q; }
};

template <>
struct ScalarTraits<TowerElement> {
  static TowerElement from_rational(const BigRational& q, const TowerElement&) { return TowerElement(q); }
  static bool is_zero(const TowerElement& x) { return x.is_zero(); }
  static TowerElement inverse(const TowerElement& x) { return x.inverse(); }
  static TowerElement scale(const TowerElement& x, const BigRational& q) { return x * TowerElement(q); }
};

template <>
struct ScalarTraits<BigFloat> {
  static BigFloat from_rational(const BigRational& q, const BigFloat& like) { return BigFloat(q, like.precision()); }
  static bool is_zero(const BigFloat& x) { return x.is_zero(); }
  static BigFloat inverse(const BigFloat& x) { return BigFloat(1, x.precision()) / x; }
  static BigFloat scale(const BigFloat& x, const BigRational& q) { return x * BigFloat(q, x.precision()); }
};

template <class S>
S scalar_from(const BigRational& q, const S& like) {
  return ScalarTraits<S>::from_rational(q, like);
}

template <class S>
bool scalar_is_zero(const S& x) {
  return ScalarTraits<S>::is_zero(x);
}

template <class S>
bool scalar_is_one(const S& x) {
  return ScalarTraits<S>::is_zero(x - scalar_from(BigRational(1), x));
}

}  // namespace ginv
