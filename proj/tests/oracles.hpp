#pragma once

#include "ginv/bigfloat.hpp"

namespace ginv::oracle {

// 1 / ((2/π) ∫_0^{π/2} dt / sqrt(x² cos² t + y² sin² t)); the integrand is
// even and π-periodic, so the trapezoid rule over one period converges
// geometrically.
inline BigFloat agm_by_quadrature(const BigFloat& x, const BigFloat& y, int nodes) {
  const mpfr_prec_t prec = x.precision();
  const BigFloat pi = BigFloat::pi(prec);
  const BigFloat h = pi / static_cast<long>(nodes);
  BigFloat sum(0, prec);
  for (int k = 0; k < nodes; ++k) {
    BigFloat t = h * static_cast<long>(k);
    BigFloat c = cos(t);
    BigFloat c2 = c * c;
    BigFloat s2 = BigFloat(1, prec) - c2;
    sum += BigFloat(1, prec) / sqrt(x * x * c2 + y * y * s2);
  }
  BigFloat integral = sum * h / 2L;  // ∫_0^{π/2}
  return BigFloat(1, prec) / (integral * 2L / pi);
}

}  // namespace ginv::oracle
