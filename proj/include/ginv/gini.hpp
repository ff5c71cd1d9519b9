#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ginv/bigfloat.hpp"
#include "ginv/params.hpp"

namespace ginv {

/// G_{p,q}(x, y) for x, y > 0, evaluated in the log domain. The p = q branch
/// is selected by exact rational comparison. Throws DomainError unless
/// x, y > 0. The result has the smaller of the x, y precisions and always
/// lies in [min(x,y), max(x,y)], so G(x, x) = x exactly.
BigFloat gini_eval(const GiniParams& g, const BigFloat& x, const BigFloat& y);

/// True iff G_{a,b} ≡ G_{c,d}: either a+b = c+d = 0 (both geometric) or
/// {a,b} = {c,d}.
bool means_equal(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& d);

struct GaussResult {
  BigFloat value;
  int iterations = 0;
  /// (x_n, y_n) for n = 0..iterations, filled when requested.
  std::vector<std::pair<BigFloat, BigFloat>> trace;
};

/// 2^{-(precision-16)}
BigFloat default_reltol(mpfr_prec_t precision);

/// Gauss composition M⊗N(x, y): iterates x ← M(x,y), y ← N(x,y) until
/// |x−y| ≤ reltol·max(x,y) and returns the midpoint. Throws
/// ConvergenceError after `max_iterations`.
GaussResult gauss_compose(const GiniParams& m, const GiniParams& n, const BigFloat& x, const BigFloat& y,
                          const BigFloat& reltol, int max_iterations = 10000, bool keep_trace = false);

using Grid = std::vector<std::pair<BigFloat, BigFloat>>;

inline constexpr std::uint64_t kDefaultGridSeed = 20090334;

/// (e^h, e^{-h}) for h ∈ {1/10, 1/2, 1, 2, 5}, then 16 seeded pairs with
/// ratio y/x = 10^{k/1000}, |k| ≤ 4000.
Grid default_grid(mpfr_prec_t precision = BigFloat::kDefaultPrecision, std::uint64_t seed = kDefaultGridSeed);

/// sup over the grid of |G_{p,q}(G_{a,b}(x,y), G_{c,d}(x,y)) / G_{p,q}(x,y) − 1|.
BigFloat invariance_residual(const ParamTuple& t, const Grid& grid);

/// sup over the grid of |G_{a,b}(x,y) + G_{c,d}(x,y) − (x+y)| / (x+y).
BigFloat matkowski_suto_residual(const BigRational& a, const BigRational& b, const BigRational& c,
                                 const BigRational& d, const Grid& grid);

}  // namespace ginv
