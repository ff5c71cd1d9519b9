#include "ginv/certify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>

#include <gmp.h>
#include <mpfr.h>
#include <openssl/evp.h>

#include "ginv/errors.hpp"
#include "ginv/printed.hpp"
#include "ginv/random.hpp"

namespace ginv {

namespace {

const std::vector<std::string> kWV{"w", "v"};

nlohmann::json point_json(const std::map<std::string, BigRational>& point) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, value] : point) j[name] = to_string(value);
  return j;
}

int expected_weighted_degree(int k) {
  switch (k) {
    case 8: return 8;
    case 10: return 14;
    case 12: return 20;
  }
  throw DomainError("no cofactor P" + std::to_string(k));
}

const std::vector<std::string_view>& printed_reduced(int k) {
  if (k == 10) return printed::kP810;
  if (k == 12) return printed::kP812;
  throw DomainError("no printed P8," + std::to_string(k));
}

// Largest m with (v + sign·w)^m dividing f.
int strip_binomial(MultiPoly& f, int sign) {
  const MultiPoly b = MultiPoly::variable("v") + MultiPoly::variable("w") * BigRational(sign);
  int m = 0;
  while (!f.is_constant()) {
    auto [quotient, remainder] = divide(f, b);
    if (!remainder.is_zero()) break;
    f = std::move(quotient);
    ++m;
  }
  return m;
}

std::string factor_text(const Elimination& e) {
  std::string out = to_string(e.unit);
  auto power = [](const std::string& base, int m) { return m == 1 ? base : base + "^" + std::to_string(m); };
  if (e.w_power) out += "*" + power("w", e.w_power);
  if (e.v_power) out += "*" + power("v", e.v_power);
  if (e.minus_power) out += "*" + power("(v - w)", e.minus_power);
  if (e.plus_power) out += "*" + power("(v + w)", e.plus_power);
  return out;
}

}  // namespace

CofactorCheck extract_cofactor(int k, std::uint64_t seed, int points) {
  const ReferenceFormula& f = reference_formula(k);
  CofactorCheck out;
  out.k = k;
  out.cofactor = reference_cofactor(k);

  Rng rng(seed);
  const int max_draws = points * 100 + 1000;
  for (int draw = 0; draw < max_draws && out.points_checked < points; ++draw) {
    std::map<std::string, BigRational> point{
        {"w", rng.rational(1000, 1000)}, {"v", rng.rational(1000, 1000)}, {"s", rng.rational(1000, 1000)}};
    if (sgn(point["s"]) == 0) continue;
    const auto lift = admissible_lift(f, point);
    if (!lift) continue;
    const BigRational printed = *evaluate_formula(f, point);
    if (sgn(printed) == 0) continue;
    const BigRational ratio = series_coefficient(*lift, k, std::max(k, 13)) / printed;
    ++out.points_checked;
    if (!out.scale) {
      out.scale = ratio;
    } else if (*out.scale != ratio) {
      out.scale.reset();
      out.witness = point;
      return out;
    }
  }
  if (out.scale) {
    out.series_cofactor = out.cofactor * *out.scale;
    out.consistent = out.points_checked >= points && *out.scale == 1;
  }
  return out;
}

HomogeneityCheck homogeneity_check(const MultiPoly& cofactor, int k) {
  HomogeneityCheck out;
  out.k = k;
  out.expected = expected_weighted_degree(k);
  out.degree = weighted_degree(cofactor, {{"w", 1}, {"v", 1}, {"s", 2}}).degree;
  out.passed = out.degree == out.expected;
  return out;
}

Elimination eliminate(const MultiPoly& p8, const MultiPoly& pk, int k, bool cross_check_methods) {
  Elimination e;
  e.k = k;
  e.resultant = resultant(p8, pk, "s").with_variables(kWV);
  if (cross_check_methods)
    e.methods_agree = resultant(p8, pk, "s", ResultantMethod::interpolation) == e.resultant;
  e.homogeneous = weighted_degree(e.resultant, {}).degree.has_value();

  MultiPoly h;
  if (k == 10) {
    // The printed factorization; divexact throws if it does not divide.
    h = divexact(e.resultant, MultiPoly::parse(printed::kR810KnownFactor, kWV));
    e.unit = 136687500;
    e.w_power = e.v_power = 15;
    e.minus_power = e.plus_power = 2;
  } else {
    // Not printed: discover the shape by exact trial division.
    h = e.resultant;
    Exponents low{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
    for (const auto& [exps, c] : h.terms())
      for (std::size_t i = 0; i < 2; ++i) low[i] = std::min(low[i], exps[i]);
    e.w_power = low[0];
    e.v_power = low[1];
    h = divexact(h, MultiPoly::monomial(1, kWV, low));
    e.minus_power = strip_binomial(h, -1);
    e.plus_power = strip_binomial(h, 1);
    // Primitive, with a positive coefficient at w^0.
    const BigRational c = content(h);
    const BigRational at_w0 = h.evaluate({{"w", BigRational(0)}, {"v", BigRational(1)}});
    e.unit = sgn(at_w0) < 0 ? BigRational(-c) : c;
    h = h * (1 / e.unit);
  }
  e.factor_text = factor_text(e);

  const int degree = h.total_degree();
  const MultiPoly zv = MultiPoly::variable("z") * MultiPoly::variable("v");
  MultiPoly reduced = substitute(h, "w", zv);
  reduced = divexact(reduced, MultiPoly::monomial(1, reduced.variables(), [&] {
                       Exponents ex(reduced.variables().size(), 0);
                       for (std::size_t i = 0; i < ex.size(); ++i)
                         if (reduced.variables()[i] == "v") ex[i] = degree;
                       return ex;
                     }()));
  e.reduced = reduced.without_unused_variables();
  if (e.reduced.variables().size() > 1) throw InternalInconsistency("P8," + std::to_string(k) + " still depends on v");

  const int dz = e.reduced.degree("z");
  e.even_only = true;
  for (int i = 0; i <= dz; ++i) {
    e.coefficients.push_back(e.reduced.coefficient_of({{"z", i}}));
    if (i % 2 == 1 && sgn(e.coefficients.back()) != 0) e.even_only = false;
  }

  const auto& printed = printed_reduced(k);
  if (dz != 2 * static_cast<int>(printed.size() - 1))
    e.mismatches.push_back("degree in z: got " + std::to_string(dz) + ", printed " +
                           std::to_string(2 * (printed.size() - 1)));
  for (std::size_t i = 0; i < printed.size(); ++i) {
    const int power = 2 * static_cast<int>(i);
    const BigRational got = power <= dz ? e.coefficients[static_cast<std::size_t>(power)] : BigRational(0);
    const BigRational want = parse_rational(printed[i]);
    if (got != want)
      e.mismatches.push_back("z^" + std::to_string(power) + ": got " + to_string(got) + ", printed " +
                             std::string(printed[i]));
  }
  e.matches_printed = e.mismatches.empty();
  return e;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw InternalInconsistency("SHA-256 digest failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

FinalResultant final_resultant(const MultiPoly& p810, const MultiPoly& p812) {
  FinalResultant out;
  out.value = univariate_resultant(p810, p812);
  const std::string text = to_string(out.value);
  const std::string magnitude = text.front() == '-' ? text.substr(1) : text;
  out.digits = magnitude.size();
  out.leading_digits = magnitude.substr(0, 20);
  out.sha256 = sha256_hex(text);
  out.nonzero = sgn(out.value) != 0;
  out.gcd_constant = univariate_gcd(p810, p812).is_constant();
  out.self_resultant_zero = sgn(univariate_resultant(p810, p810)) == 0;
  return out;
}

nlohmann::json verdict_json(const FormulaVerdict& v) {
  nlohmann::json j;
  j["k"] = v.k;
  j["stage"] = stage_name(v.stage);
  j["mode"] = mode_name(v.mode);
  j["seed"] = v.seed;
  j["verdict"] = v.confirmed ? "confirmed" : v.witness ? "refuted" : "inconclusive";
  j["points_checked"] = v.points_checked;
  j["points_skipped"] = v.points_skipped;
  if (v.mode == CheckMode::exhaustive) {
    j["grid_size"] = v.grid_size;
    j["degree_bound"] = v.degree_bound;
    j["grid_shift"] = v.grid_shift;
  }
  if (v.witness) {
    j["witness"] = point_json(*v.witness);
    j["series_value"] = to_string(*v.series_value);
    j["formula_value"] = to_string(*v.formula_value);
    j["sign_flipped"] = v.sign_flipped;
  }
  return j;
}

bool Certificate::certified() const {
  if (stages.empty()) return false;
  for (const auto& s : stages)
    if (!s.passed) return false;
  return true;
}

nlohmann::json Certificate::to_json(bool include_timings) const {
  nlohmann::json j;
  j["format"] = "ginv-certificate";
  j["version"] = 1;
  j["artifact_versions"] = {{"ginv", "0.1.0"}, {"gmp", gmp_version}, {"mpfr", mpfr_get_version()}};
  j["seed"] = seed;
  j["mode"] = mode_name(mode);
  j["certified"] = certified();
  j["stages"] = nlohmann::json::array();
  for (const auto& s : stages) {
    nlohmann::json st{{"name", s.name}, {"verdict", s.passed ? "pass" : "fail"}, {"detail", s.detail}};
    if (include_timings) st["seconds"] = s.seconds;
    j["stages"].push_back(std::move(st));
  }
  return j;
}

Certificate certify(const CertifyOptions& options) {
  Certificate cert;
  cert.seed = options.formulas.seed;
  cert.mode = options.formulas.mode;

  // Runs one stage; returns its pass flag. Exceptions become failed stages
  // except InternalInconsistency, which signals a bug and propagates.
  auto run = [&cert](const std::string& name, const std::function<bool(nlohmann::json&)>& body) {
    StageResult stage;
    stage.name = name;
    stage.detail = nlohmann::json::object();
    const auto start = std::chrono::steady_clock::now();
    try {
      stage.passed = body(stage.detail);
    } catch (const InexactDivision& e) {
      stage.passed = false;
      stage.detail["error"] = e.what();
      stage.detail["remainder"] = e.remainder();
    } catch (const InternalInconsistency&) {
      throw;
    } catch (const Error& e) {
      stage.passed = false;
      stage.detail["error"] = e.what();
    }
    stage.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    cert.stages.push_back(std::move(stage));
    return cert.stages.back().passed;
  };

  for (int k = 2; k <= 12; k += 2) {
    run("formula C" + std::to_string(k), [&](nlohmann::json& d) {
      const FormulaVerdict v = check_formula(k, options.formulas);
      d = verdict_json(v);
      return v.confirmed;
    });
  }

  std::map<int, MultiPoly> cofactors;
  bool chain_ok = true;
  for (int k : {8, 10, 12}) {
    run("cofactor P" + std::to_string(k), [&](nlohmann::json& d) {
      const CofactorCheck c = extract_cofactor(k, options.formulas.seed, options.cofactor_points);
      d["points_checked"] = c.points_checked;
      d["terms"] = c.cofactor.term_count();
      if (c.scale) {
        d["scale"] = to_string(*c.scale);
        cofactors[k] = c.cofactor;
      } else {
        d["scale"] = nullptr;
        if (c.witness) d["witness"] = point_json(*c.witness);
        chain_ok = false;
      }
      return c.consistent;
    });
  }
  if (!chain_ok) return cert;

  // A constant nonzero scale leaves the zero set of P_k unchanged, so the
  // chain runs on the stored cofactors whenever the ratio is constant.
  for (int k : {8, 10, 12}) {
    const bool ok = run("homogeneity P" + std::to_string(k), [&](nlohmann::json& d) {
      const HomogeneityCheck h = homogeneity_check(cofactors.at(k), k);
      d["weights"] = {{"w", 1}, {"v", 1}, {"s", 2}};
      d["expected"] = h.expected;
      d["degree"] = h.degree ? nlohmann::json(*h.degree) : nlohmann::json(nullptr);
      return h.passed;
    });
    chain_ok = chain_ok && ok;
  }
  if (!chain_ok) return cert;

  std::map<int, MultiPoly> reduced;
  for (int k : {10, 12}) {
    const bool ok = run("elimination R8," + std::to_string(k), [&](nlohmann::json& d) {
      const Elimination e = eliminate(cofactors.at(8), cofactors.at(k), k, options.cross_check_resultants && k == 10);
      d["resultant_terms"] = e.resultant.term_count();
      d["homogeneous"] = e.homogeneous;
      d["factor"] = e.factor_text;
      d["even_only"] = e.even_only;
      d["degree_z"] = e.reduced.degree("z");
      d["matches_printed"] = e.matches_printed;
      d["mismatches"] = e.mismatches;
      if (e.methods_agree) d["methods_agree"] = *e.methods_agree;
      nlohmann::json coeffs = nlohmann::json::array();
      for (std::size_t i = 0; i < e.coefficients.size(); i += 2) coeffs.push_back(to_string(e.coefficients[i]));
      d["even_coefficients"] = coeffs;
      reduced[k] = e.reduced;
      return e.homogeneous && e.even_only && e.matches_printed && e.methods_agree.value_or(true);
    });
    chain_ok = chain_ok && ok;
  }
  if (reduced.size() != 2) return cert;

  run("final resultant Q", [&](nlohmann::json& d) {
    const FinalResultant q = final_resultant(reduced.at(10), reduced.at(12));
    cert.q_decimal = to_string(q.value);
    d["sylvester_size"] = reduced.at(10).degree("z") + reduced.at(12).degree("z");
    d["digits"] = q.digits;
    d["leading_digits"] = q.leading_digits;
    d["sign"] = sgn(q.value);
    d["sha256"] = q.sha256;
    d["nonzero"] = q.nonzero;
    d["gcd_constant"] = q.gcd_constant;
    d["self_resultant_zero"] = q.self_resultant_zero;
    return q.nonzero && q.gcd_constant && q.self_resultant_zero;
  });
  return cert;
}

}  // namespace ginv
