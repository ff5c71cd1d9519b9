#include "ginv/gini.hpp"

#include <algorithm>

#include "ginv/errors.hpp"
#include "ginv/random.hpp"

namespace ginv {

namespace {

// log(e^u + e^v)
BigFloat log_sum_exp(const BigFloat& u, const BigFloat& v) {
  const BigFloat& hi = u < v ? v : u;
  const BigFloat& lo = u < v ? u : v;
  return hi + log1p(exp(lo - hi));
}

BigFloat gini_eval_unclamped(const GiniParams& g, const BigFloat& x, const BigFloat& y) {
  if (x.sign() <= 0 || y.sign() <= 0) throw DomainError("gini_eval: arguments must be positive");
  const mpfr_prec_t prec = std::min(x.precision(), y.precision());
  const BigFloat lx = log(x);
  const BigFloat ly = log(y);
  const BigFloat p(g.p, prec);
  if (g.p == g.q) {
    // exp(σ·ln x + (1−σ)·ln y) with σ = x^p / (x^p + y^p)
    const BigFloat t = p * (ly - lx);
    BigFloat sigma(prec);
    if (t.sign() > 0) {
      BigFloat e = exp(-t);
      sigma = e / (BigFloat(1, prec) + e);
    } else {
      sigma = BigFloat(1, prec) / (BigFloat(1, prec) + exp(t));
    }
    return exp(ly + sigma * (lx - ly));
  }
  const BigFloat q(g.q, prec);
  const BigFloat num = log_sum_exp(p * lx, p * ly);
  const BigFloat den = log_sum_exp(q * lx, q * ly);
  return exp((num - den) / BigFloat(BigRational(g.p - g.q), prec));
}

}  // namespace

// Rounding in the log domain can push the value just outside [min, max];
// the exact mean never leaves that interval.
BigFloat gini_eval(const GiniParams& g, const BigFloat& x, const BigFloat& y) {
  BigFloat m = gini_eval_unclamped(g, x, y);
  const BigFloat& lo = x < y ? x : y;
  const BigFloat& hi = x < y ? y : x;
  if (m < lo) mpfr_set(m.get(), lo.get(), MPFR_RNDU);
  if (m > hi) mpfr_set(m.get(), hi.get(), MPFR_RNDD);
  return m;
}

bool means_equal(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& d) {
  if (sgn(a + b) == 0 && sgn(c + d) == 0) return true;
  return (a == c && b == d) || (a == d && b == c);
}

BigFloat default_reltol(mpfr_prec_t precision) {
  BigFloat tol(1, precision);
  mpfr_mul_2si(tol.get(), tol.get(), -(precision - 16), MPFR_RNDN);
  return tol;
}

GaussResult gauss_compose(const GiniParams& m, const GiniParams& n, const BigFloat& x, const BigFloat& y,
                          const BigFloat& reltol, int max_iterations, bool keep_trace) {
  if (x.sign() <= 0 || y.sign() <= 0) throw DomainError("gauss_compose: arguments must be positive");
  if (reltol.sign() <= 0) throw DomainError("gauss_compose: tolerance must be positive");
  GaussResult result;
  BigFloat xn = x;
  BigFloat yn = y;
  if (keep_trace) result.trace.emplace_back(xn, yn);
  int it = 0;
  while (abs(xn - yn) > reltol * max(xn, yn)) {
    if (it == max_iterations)
      throw ConvergenceError("gauss_compose: no convergence after " + std::to_string(max_iterations) + " iterations");
    BigFloat next_x = gini_eval(m, xn, yn);
    BigFloat next_y = gini_eval(n, xn, yn);
    xn = std::move(next_x);
    yn = std::move(next_y);
    ++it;
    if (keep_trace) result.trace.emplace_back(xn, yn);
  }
  result.value = (xn + yn) / 2L;
  result.iterations = it;
  return result;
}

Grid default_grid(mpfr_prec_t precision, std::uint64_t seed) {
  Grid grid;
  for (const auto& h : {make_rational(1, 10), make_rational(1, 2), make_rational(1), make_rational(2), make_rational(5)}) {
    BigFloat e = exp(BigFloat(h, precision));
    grid.emplace_back(e, BigFloat(1, precision) / e);
  }
  Rng rng(seed);
  for (int i = 0; i < 16; ++i) {
    BigFloat base(make_rational(static_cast<long>(rng.uniform(1, 1000)), 100), precision);
    BigFloat ratio = pow10(BigFloat(make_rational(static_cast<long>(rng.uniform(-4000, 4000)), 1000), precision));
    grid.emplace_back(base, base * ratio);
  }
  return grid;
}

BigFloat invariance_residual(const ParamTuple& t, const Grid& grid) {
  if (grid.empty()) throw DomainError("invariance_residual: empty grid");
  BigFloat worst(0, grid.front().first.precision());
  for (const auto& [x, y] : grid) {
    BigFloat lhs = gini_eval(t.outer(), gini_eval(t.inner_first(), x, y), gini_eval(t.inner_second(), x, y));
    BigFloat rhs = gini_eval(t.outer(), x, y);
    worst = max(worst, abs(lhs / rhs - BigFloat(1, rhs.precision())));
  }
  return worst;
}

BigFloat matkowski_suto_residual(const BigRational& a, const BigRational& b, const BigRational& c,
                                 const BigRational& d, const Grid& grid) {
  if (grid.empty()) throw DomainError("matkowski_suto_residual: empty grid");
  BigFloat worst(0, grid.front().first.precision());
  for (const auto& [x, y] : grid) {
    BigFloat sum = x + y;
    BigFloat lhs = gini_eval({a, b}, x, y) + gini_eval({c, d}, x, y);
    worst = max(worst, abs(lhs - sum) / sum);
  }
  return worst;
}

}  // namespace ginv
