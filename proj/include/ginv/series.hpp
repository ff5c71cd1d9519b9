#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "ginv/errors.hpp"
#include "ginv/scalar.hpp"

namespace ginv {

/// Truncated power series c₀ + c₁x + … + c_N x^N, known modulo x^{N+1}.
/// Binary operations never extend precision: the result order is the
/// smaller operand order.
template <class S>
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<S> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw DomainError("power series needs at least one coefficient");
  }

  static PowerSeries constant(const S& value, int order) {
    std::vector<S> c(static_cast<std::size_t>(order) + 1, scalar_from(BigRational(0), value));
    c[0] = value;
    return PowerSeries(std::move(c));
  }

  /// The series x (zero if order is 0).
  static PowerSeries variable(const S& like, int order) {
    std::vector<S> c(static_cast<std::size_t>(order) + 1, scalar_from(BigRational(0), like));
    if (order >= 1) c[1] = scalar_from(BigRational(1), like);
    return PowerSeries(std::move(c));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const S& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  std::span<const S> coefficients() const { return c_; }

  PowerSeries truncated(int order) const {
    std::vector<S> c(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), static_cast<std::size_t>(order) + 1));
    return PowerSeries(std::move(c));
  }

  PowerSeries operator-() const {
    PowerSeries out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<S> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c.push_back(a[k] + b[k]);
    return PowerSeries(std::move(c));
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

  /// Truncated Cauchy product.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<S> c(static_cast<std::size_t>(n) + 1, scalar_from(BigRational(0), a[0]));
    for (int i = 0; i <= n; ++i) {
      if (scalar_is_zero(a[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (scalar_is_zero(b[j])) continue;
        c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
      }
    }
    return PowerSeries(std::move(c));
  }

  friend PowerSeries operator*(const PowerSeries& a, const S& s) {
    PowerSeries out = a;
    for (auto& x : out.c_) x = x * s;
    return out;
  }

 private:
  std::vector<S> c_;
};

template <class S>
PowerSeries<S> reciprocal(const PowerSeries<S>& a) {
  if (scalar_is_zero(a[0])) throw DivisionByZero("series reciprocal: zero constant term");
  const int n = a.order();
  const S inv0 = ScalarTraits<S>::inverse(a[0]);
  std::vector<S> b;
  b.reserve(static_cast<std::size_t>(n) + 1);
  b.push_back(inv0);
  for (int k = 1; k <= n; ++k) {
    S acc = scalar_from(BigRational(0), a[0]);
    for (int i = 1; i <= k; ++i)
      if (!scalar_is_zero(a[i])) acc += a[i] * b[static_cast<std::size_t>(k - i)];
    b.push_back(-(acc * inv0));
  }
  return PowerSeries<S>(std::move(b));
}

/// exp(a) for a with zero constant term: n·bₙ = Σ_{k=1}^{n} k·aₖ·b_{n−k}.
template <class S>
PowerSeries<S> exp(const PowerSeries<S>& a) {
  if (!scalar_is_zero(a[0])) throw DomainError("series exp: constant term must be zero");
  const int n = a.order();
  std::vector<S> b;
  b.reserve(static_cast<std::size_t>(n) + 1);
  b.push_back(scalar_from(BigRational(1), a[0]));
  for (int m = 1; m <= n; ++m) {
    S acc = scalar_from(BigRational(0), a[0]);
    for (int k = 1; k <= m; ++k)
      if (!scalar_is_zero(a[k])) acc += ScalarTraits<S>::scale(a[k] * b[static_cast<std::size_t>(m - k)], BigRational(k));
    b.push_back(ScalarTraits<S>::scale(acc, BigRational(1, m)));
  }
  return PowerSeries<S>(std::move(b));
}

/// log(a) for a with constant term 1: n·Lₙ = n·aₙ − Σ_{k=1}^{n−1} k·Lₖ·a_{n−k}.
template <class S>
PowerSeries<S> log(const PowerSeries<S>& a) {
  if (!scalar_is_one(a[0])) throw DomainError("series log: constant term must be one");
  const int n = a.order();
  std::vector<S> l;
  l.reserve(static_cast<std::size_t>(n) + 1);
  l.push_back(scalar_from(BigRational(0), a[0]));
  for (int m = 1; m <= n; ++m) {
    S acc = ScalarTraits<S>::scale(a[m], BigRational(m));
    for (int k = 1; k < m; ++k)
      if (!scalar_is_zero(l[static_cast<std::size_t>(k)]))
        acc -= ScalarTraits<S>::scale(l[static_cast<std::size_t>(k)] * a[m - k], BigRational(k));
    l.push_back(ScalarTraits<S>::scale(acc, BigRational(1, m)));
  }
  return PowerSeries<S>(std::move(l));
}

/// a^alpha = exp(alpha·log a); requires constant term 1.
template <class S>
PowerSeries<S> pow(const PowerSeries<S>& a, const S& alpha) {
  if (!scalar_is_one(a[0])) throw DomainError("series pow: constant term must be one");
  return exp(log(a) * alpha);
}

/// cosh(kx) = Σ k^{2m} x^{2m} / (2m)!
template <class S>
PowerSeries<S> cosh_series(const S& k, int order) {
  std::vector<S> c(static_cast<std::size_t>(order) + 1, scalar_from(BigRational(0), k));
  const S k2 = k * k;
  S term = scalar_from(BigRational(1), k);
  for (int m = 0; 2 * m <= order; ++m) {
    if (m > 0) term = ScalarTraits<S>::scale(term * k2, BigRational(1, (2 * m) * (2 * m - 1)));
    c[static_cast<std::size_t>(2 * m)] = term;
  }
  return PowerSeries<S>(std::move(c));
}

/// sinh(kx) = Σ k^{2m+1} x^{2m+1} / (2m+1)!
template <class S>
PowerSeries<S> sinh_series(const S& k, int order) {
  std::vector<S> c(static_cast<std::size_t>(order) + 1, scalar_from(BigRational(0), k));
  const S k2 = k * k;
  S term = k;
  for (int m = 0; 2 * m + 1 <= order; ++m) {
    if (m > 0) term = ScalarTraits<S>::scale(term * k2, BigRational(1, (2 * m + 1) * (2 * m)));
    c[static_cast<std::size_t>(2 * m + 1)] = term;
  }
  return PowerSeries<S>(std::move(c));
}

template <class S>
PowerSeries<S> tanh_series(const S& k, int order) {
  return sinh_series(k, order) * reciprocal(cosh_series(k, order));
}

}  // namespace ginv
