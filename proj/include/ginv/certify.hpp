#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ginv/poly.hpp"
#include "ginv/taylor.hpp"

namespace ginv {

/// The stored cofactor P_k of C_k = prefactor · P_k, checked against the
/// series engine. `scale` is the constant ratio (series C_k) / (printed C_k)
/// observed at every sample point; the printed factorization is consistent
/// iff scale = 1. `series_cofactor` = scale · P_k is the cofactor the series
/// engine actually produces.
struct CofactorCheck {
  int k = 0;
  MultiPoly cofactor;
  MultiPoly series_cofactor;
  std::optional<BigRational> scale;  // unset when the ratio is not constant
  int points_checked = 0;
  bool consistent = false;
  /// Point where the ratio first differs from the one at the first point.
  std::optional<std::map<std::string, BigRational>> witness;
};

/// Samples at least `points` admissible (w, v, s) with s(v−w)(v+w) ≠ 0.
CofactorCheck extract_cofactor(int k, std::uint64_t seed = 1, int points = 20);

struct HomogeneityCheck {
  int k = 0;
  int expected = 0;
  std::optional<int> degree;
  bool passed = false;
};

/// Weighted degree of P_k for weights w:1, v:1, s:2 (expected 8, 14, 20).
HomogeneityCheck homogeneity_check(const MultiPoly& cofactor, int k);

/// One elimination: R = resultant(P8, P_k, s) = unit · w^α v^β (v−w)^m (v+w)^n · H(w,v),
/// then P_{8,k}(z) = H(zv, v) / v^deg H.
struct Elimination {
  int k = 0;
  MultiPoly resultant;
  BigRational unit;
  int w_power = 0, v_power = 0, minus_power = 0, plus_power = 0;
  std::string factor_text;  // e.g. "136687500*w^15*v^15*(v - w)^2*(v + w)^2"
  MultiPoly reduced;        // P_{8,k} in z
  std::vector<BigRational> coefficients;  // of z^0, z^1, …
  bool even_only = false;
  bool homogeneous = false;
  bool matches_printed = false;
  std::vector<std::string> mismatches;  // "z^4: got …, printed …"
  std::optional<bool> methods_agree;    // Bareiss vs interpolation, when run
};

/// Eliminates s from P8 and the given cofactor (k = 10 or 12). For k = 10
/// the printed factor 136687500·w¹⁵v¹⁵(v−w)²(v+w)² is divided out exactly
/// (InexactDivision on failure); for k = 12 the monomial and (v∓w) powers
/// are found by trial division and the unit is normalized so that the z⁰
/// coefficient is a positive primitive integer.
Elimination eliminate(const MultiPoly& p8, const MultiPoly& pk, int k, bool cross_check_methods = false);

struct FinalResultant {
  BigRational value;
  std::size_t digits = 0;  // decimal digits of |Q|
  std::string leading_digits;
  std::string sha256;  // of the decimal string of Q
  bool nonzero = false;
  bool gcd_constant = false;
  bool self_resultant_zero = false;  // negative control res(f, f) = 0
};

/// Q = resultant(P_{8,10}, P_{8,12}, z) via the 44×44 Sylvester matrix.
FinalResultant final_resultant(const MultiPoly& p810, const MultiPoly& p812);

std::string sha256_hex(const std::string& data);

struct CertifyOptions {
  FormulaCheckOptions formulas;  // mode, seed, trials, order
  int cofactor_points = 20;
  bool cross_check_resultants = true;
  bool include_timings = false;  // timings break byte-for-byte reproducibility
};

struct StageResult {
  std::string name;
  bool passed = false;
  nlohmann::json detail;
  double seconds = 0;
};

struct Certificate {
  std::uint64_t seed = 0;
  CheckMode mode = CheckMode::randomized;
  std::vector<StageResult> stages;
  std::string q_decimal;  // full Q, for the report file only
  bool certified() const;
  nlohmann::json to_json(bool include_timings) const;
};

/// Runs the whole pipeline: formula checks, cofactor extraction,
/// homogeneity gates, both eliminations and the final resultant. Stages
/// after a failed homogeneity gate are not run.
Certificate certify(const CertifyOptions& options = {});

nlohmann::json verdict_json(const FormulaVerdict& v);

}  // namespace ginv
