#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ginv/params.hpp"
#include "ginv/poly.hpp"
#include "ginv/series.hpp"
#include "ginv/tower.hpp"

namespace ginv {

/// Reduced coordinates
///   w = (a+b+c+d)/4, v = (a+b−c−d)/4, t = ((p−q)/2)²,
///   r = ((a−b)²+(c−d)²)/8, s = ((a−b)²−(c−d)²)/8.
struct ReducedParams {
  BigRational w, v, t, r, s;
  friend bool operator==(const ReducedParams&, const ReducedParams&) = default;
};

ReducedParams reduce_params(const ParamTuple& t);

/// Which coordinates are free when sampling a point.
enum class Stage {
  raw,      // a, b, c, d, p, q
  reduced,  // w, v, t, r, s  (p + q = 2w built in)
  after_t,  // w, v, r, s     with t = r + vs/w
  after_r,  // w, v, s        with r = R(w,v,s), t = r + vs/w
};

const char* stage_name(Stage stage);
std::vector<std::string> stage_variables(Stage stage);

/// A tuple whose entries live in one radical tower.
template <class S>
struct Tuple {
  S a, b, c, d, p, q;
};

using LiftedTuple = Tuple<TowerElement>;

struct Lift {
  ReducedParams coords;  // with r, t filled in according to the stage
  LiftedTuple tuple;
};

/// R(w,v,s) = (15w⁴v² − 3w²s² + 3v²s² − 5w³vs − 10wv³s) / (15w²v²), the
/// root in r of the sixth-order coefficient.
BigRational r_of(const BigRational& w, const BigRational& v, const BigRational& s);

/// a = w+v+√(r+s), b = w+v−√(r+s), c = w−v+√(r−s), d = w−v−√(r−s),
/// p = w+√t, q = w−√t over the common tower Q(√(r+s), √(r−s), √t).
LiftedTuple lift_reduced(const ReducedParams& rp);

/// Lifts (w, v, s) through the given stage: after_t takes r as input and
/// sets t = r + vs/w (w ≠ 0); after_r also sets r = R(w,v,s) (v ≠ 0).
/// Throws DomainError on a zero w or v where the stage divides by it.
Lift lift_params(const BigRational& w, const BigRational& v, const BigRational& s, Stage stage,
                 const BigRational& r = BigRational(0));

LiftedTuple to_lifted(const ParamTuple& t);

/// Series of G_{a,b}(e^x, e^{−x}) through x^order: (cosh(ax)/cosh(bx))^{1/(a−b)},
/// or exp(x·tanh(ax)) when a = b.
template <class S>
PowerSeries<S> gini_section(const S& a, const S& b, int order);

/// Series of F(x) = G_{p,q}(G_{a,b}(e^x,e^{−x}), G_{c,d}(e^x,e^{−x})) / G_{p,q}(e^x,e^{−x})
/// through x^order, with no structural checks.
template <class S>
PowerSeries<S> invariance_series(const Tuple<S>& t, int order);

/// Taylor coefficients C₀..C_order of F. Asserts C₀ = 1, every odd
/// coefficient is exactly zero and every radical coordinate vanishes
/// (InternalInconsistency otherwise), then projects to the rationals.
std::vector<BigRational> taylor_coefficients(const LiftedTuple& t, int order);
std::vector<BigRational> taylor_coefficients(const ParamTuple& t, int order);

/// A printed Taylor coefficient C_k = numerator / denominator in the free
/// coordinates of `stage`.
struct ReferenceFormula {
  int k = 0;
  Stage stage = Stage::raw;
  MultiPoly numerator;
  MultiPoly denominator;
};

/// The printed C_k for even k in 2..12. Throws DomainError otherwise.
const ReferenceFormula& reference_formula(int k);

/// The polynomial factor P_k (k = 8, 10, 12) in the printed C_k, and the
/// prefactor C_k = prefactor · P_k.
const MultiPoly& reference_cofactor(int k);
struct Prefactor {
  MultiPoly numerator;    // e.g. 2(v−w)(v+w)s
  MultiPoly denominator;  // e.g. 1063125 w⁵ v⁴
};
const Prefactor& reference_prefactor(int k);

enum class CheckMode { randomized, exhaustive };

const char* mode_name(CheckMode mode);

struct FormulaVerdict {
  int k = 0;
  Stage stage = Stage::raw;
  CheckMode mode = CheckMode::randomized;
  std::uint64_t seed = 0;
  bool confirmed = false;
  int points_checked = 0;
  int points_skipped = 0;
  /// Set on refutation: the sample point, series value and formula value.
  std::optional<std::map<std::string, BigRational>> witness;
  std::optional<BigRational> series_value;
  std::optional<BigRational> formula_value;
  /// On refutation: the series value is exactly the negated formula value.
  bool sign_flipped = false;
  /// Exhaustive mode: values per variable and the degree bound they cover.
  int grid_size = 0;
  int degree_bound = 0;
  /// Variable j takes i + 1 + j/(n + 1 + grid_shift); the smallest shift
  /// whose grid has no inadmissible point.
  int grid_shift = 0;
};

struct FormulaCheckOptions {
  CheckMode mode = CheckMode::randomized;
  int trials = 200;                 // randomized: admissible points to check
  int grid_size = 0;                // exhaustive: values per free variable; 0 = degree bound + 1
  std::uint64_t seed = 1;
  int order = 13;
  long max_numerator = 1000;
  long max_denominator = 1000;
  /// Diagnostic: test against −(printed C_k) instead of the printed C_k.
  bool negate_formula = false;
};

/// Evaluates the printed C_k at a stage point; nullopt at a pole.
std::optional<BigRational> evaluate_formula(const ReferenceFormula& f, const std::map<std::string, BigRational>& point);

/// Admissible point: no zero among w, v, v±w (where the stage uses them),
/// the radicands r±s and t, or the formula denominator. Returns the lift.
std::optional<Lift> admissible_lift(const ReferenceFormula& f, const std::map<std::string, BigRational>& point);

/// Per-variable degree bound for the identity C_k(series) = printed C_k
/// after clearing the stage denominators (w^{k/2} for after_t, w^k v^k for
/// after_r). A tensor grid of bound + 1 values per variable with no skipped
/// point therefore proves the identity.
int formula_degree_bound(int k);

/// Tensor grid for the exhaustive identity test of C_k: grid_size values
/// per free variable (0 = degree bound + 1). Variable j takes
/// i + 1 + j/(n + 1 + shift) with the smallest shift (≤ 32) that makes every
/// point admissible; if none does, the last grid is returned as is.
struct ExhaustiveGrid {
  std::vector<std::map<std::string, BigRational>> points;
  int grid_size = 0;
  int degree_bound = 0;
  int shift = 0;
};
ExhaustiveGrid exhaustive_grid(int k, int grid_size = 0);

/// Identity test of the printed C_k against the series engine. Points are
/// evaluated in parallel; the verdict does not depend on the thread count.
FormulaVerdict check_formula(int k, const FormulaCheckOptions& options = {});

/// C_k from the series engine at one stage point (convenience for callers
/// that already hold an admissible lift).
BigRational series_coefficient(const Lift& lift, int k, int order);

struct SufficiencyVerdict {
  ParamTuple tuple;
  int order = 0;
  bool identically_one = false;
  std::vector<BigRational> coefficients;
};

/// Verifies exactly that F ≡ 1 through x^order for the tuple.
SufficiencyVerdict series_identity_check(const ParamTuple& t, int order);

/// The tuple (u+v, v, u−v, −v, u, 0) through series_identity_check.
/// Throws DomainError for u = 0.
SufficiencyVerdict sufficiency_series_check(const BigRational& u, const BigRational& v, int order);

}  // namespace ginv
