#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "ginv/certify.hpp"
#include "ginv/classify.hpp"
#include "ginv/errors.hpp"
#include "ginv/gini.hpp"
#include "ginv/taylor.hpp"

namespace ginv::cli {

namespace {

using nlohmann::json;

/// Options shared by every subcommand.
struct Output {
  bool json = false;
  std::string report;
};

/// Accepts the typographic minus sign as well as '-'.
std::string normalize_minus(std::string s) {
  static const std::string kMinus = "−";
  for (auto pos = s.find(kMinus); pos != std::string::npos; pos = s.find(kMinus)) s.replace(pos, kMinus.size(), "-");
  return s;
}

std::vector<BigRational> parse_rationals(const std::vector<std::string>& texts) {
  std::vector<BigRational> out;
  for (const auto& t : texts) out.push_back(parse_rational(normalize_minus(t)));
  return out;
}

ParamTuple tuple_of(const std::vector<BigRational>& x) { return {x[0], x[1], x[2], x[3], x[4], x[5]}; }

GiniParams gini_of(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected 'p,q', got '" + text + "'");
  return {parse_rational(normalize_minus(text.substr(0, comma))), parse_rational(normalize_minus(text.substr(comma + 1)))};
}

json rationals_json(const std::vector<BigRational>& x) {
  json j = json::array();
  for (const auto& v : x) j.push_back(to_string(v));
  return j;
}

int decimal_digits(mpfr_prec_t precision) { return static_cast<int>(std::floor(precision * std::log10(2.0))); }

/// Prints the JSON document when requested and writes it to the report path.
void emit(const Output& o, const json& j, std::ostream& out) {
  if (o.json) out << j.dump(2) << "\n";
  if (!o.report.empty()) {
    std::ofstream file(o.report);
    if (!file) throw DomainError("cannot write report to '" + o.report + "'");
    file << j.dump(2) << "\n";
  }
}

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_flag("--json", o.json, "Print the result as JSON");
  cmd->add_option("--report", o.report, "Also write the JSON result to PATH")->option_text("PATH");
}

CheckMode mode_of(const std::string& s) { return s == "exhaustive" ? CheckMode::exhaustive : CheckMode::randomized; }

int cmd_taylor(const std::vector<std::string>& params, int order, const Output& o, std::ostream& out) {
  const auto x = parse_rationals(params);
  const ParamTuple t = tuple_of(x);
  const auto c = taylor_coefficients(t, order);
  json j{{"command", "taylor"}, {"tuple", rationals_json(x)}, {"order", order}};
  json coeffs = json::array();
  std::vector<int> nonzero;
  for (int k = 2; k <= order; k += 2) {
    coeffs.push_back({{"k", k}, {"value", to_string(c[k])}});
    if (sgn(c[k]) != 0) nonzero.push_back(k);
  }
  j["coefficients"] = coeffs;
  j["nonzero"] = nonzero;
  j["identically_one"] = nonzero.empty();
  if (!o.json) {
    out << "tuple (a, b, c, d, p, q) = " << t.str() << "\n";
    for (int k = 2; k <= order; k += 2)
      out << "C" << k << " = " << to_string(c[k]) << (sgn(c[k]) != 0 ? "  [nonzero]" : "") << "\n";
    out << "odd coefficients vanish identically\n";
    if (nonzero.empty())
      out << "F = 1 through x^" << order << "\n";
    else
      out << "first nonzero coefficient: C" << nonzero.front() << "\n";
  }
  emit(o, j, out);
  return kOk;
}

int cmd_classify(const std::vector<std::string>& params, const Output& o, std::ostream& out) {
  const auto x = parse_rationals(params);
  std::vector<std::string> names;
  json j{{"command", "classify"}, {"tuple", rationals_json(x)}};
  if (x.size() == 6) {
    j["equation"] = "invariance";
    for (const auto& f : classify_invariance(tuple_of(x))) names.push_back(f.str());
  } else {
    j["equation"] = "matkowski-suto";
    for (const auto& f : classify_matkowski_suto(x[0], x[1], x[2], x[3])) names.push_back(f.str());
  }
  j["families"] = names;
  if (!o.json) {
    if (names.empty()) out << "none\n";
    for (const auto& n : names) out << n << "\n";
  }
  emit(o, j, out);
  return kOk;
}

BigFloat tolerance_of(const std::string& tol, mpfr_prec_t precision) {
  if (tol.empty()) return pow10(BigFloat(make_rational(-28 * precision, 100), precision));
  BigFloat t = BigFloat::from_string(tol, precision);
  if (!t.is_finite() || t.sign() < 0) throw ParseError("tolerance must be a nonnegative number");
  return t;
}

int cmd_verify(const std::vector<std::string>& params, mpfr_prec_t precision, const std::string& tol_text,
               const Output& o, std::ostream& out) {
  const auto x = parse_rationals(params);
  const BigFloat tol = tolerance_of(tol_text, precision);
  const Grid grid = default_grid(precision);
  const BigFloat residual = x.size() == 6 ? invariance_residual(tuple_of(x), grid)
                                          : matkowski_suto_residual(x[0], x[1], x[2], x[3], grid);
  const bool pass = residual <= tol;
  const json j{{"command", "verify"},
               {"tuple", rationals_json(x)},
               {"equation", x.size() == 6 ? "invariance" : "matkowski-suto"},
               {"precision", precision},
               {"grid_points", grid.size()},
               {"residual", residual.str(12)},
               {"tolerance", tol.str(12)},
               {"verdict", pass ? "pass" : "fail"}};
  if (!o.json) {
    out << "residual  = " << residual.str(12) << "\n";
    out << "tolerance = " << tol.str(12) << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  emit(o, j, out);
  return pass ? kOk : kCheckFailed;
}

int cmd_gauss(const std::string& m_text, const std::string& n_text, const std::vector<std::string>& xy,
              mpfr_prec_t precision, const std::string& tol_text, bool trace, const Output& o, std::ostream& out) {
  const GiniParams m = gini_of(m_text), n = gini_of(n_text);
  const auto v = parse_rationals(xy);
  const BigFloat reltol = tol_text.empty() ? default_reltol(precision) : tolerance_of(tol_text, precision);
  const GaussResult r =
      gauss_compose(m, n, BigFloat(v[0], precision), BigFloat(v[1], precision), reltol, 10000, trace);
  const int digits = decimal_digits(precision);
  json j{{"command", "gauss"},
         {"M", {to_string(m.p), to_string(m.q)}},
         {"N", {to_string(n.p), to_string(n.q)}},
         {"x", to_string(v[0])},
         {"y", to_string(v[1])},
         {"precision", precision},
         {"value", r.value.str(digits)},
         {"iterations", r.iterations}};
  if (trace) {
    json steps = json::array();
    for (const auto& [a, b] : r.trace) steps.push_back({a.str(digits), b.str(digits)});
    j["trace"] = steps;
  }
  if (!o.json) {
    if (trace)
      for (std::size_t i = 0; i < r.trace.size(); ++i)
        out << i << ": " << r.trace[i].first.str(digits) << "  " << r.trace[i].second.str(digits) << "\n";
    out << "value      = " << r.value.str(digits) << "\n";
    out << "iterations = " << r.iterations << "\n";
  }
  emit(o, j, out);
  return kOk;
}

int cmd_check_formula(int k, const FormulaCheckOptions& options, const Output& o, std::ostream& out) {
  const FormulaVerdict v = check_formula(k, options);
  json j = verdict_json(v);
  j["command"] = "check-formula";
  j["negated"] = options.negate_formula;
  if (!o.json) {
    out << (options.negate_formula ? "-C" : "C") << k << " (" << stage_name(v.stage) << ", " << mode_name(v.mode)
        << ", seed " << v.seed << "): " << j["verdict"].get<std::string>() << " after " << v.points_checked
        << " points";
    if (v.points_skipped) out << " (" << v.points_skipped << " skipped)";
    out << "\n";
    if (v.mode == CheckMode::exhaustive)
      out << "grid " << v.grid_size << " values per variable (shift " << v.grid_shift << "), degree bound "
          << v.degree_bound << "\n";
    if (v.witness) {
      out << "witness:";
      for (const auto& [name, value] : *v.witness) out << " " << name << "=" << to_string(value);
      out << "\nseries  = " << to_string(*v.series_value) << "\nformula = " << to_string(*v.formula_value) << "\n";
      if (v.sign_flipped) out << "the series value is exactly the negated formula value\n";
    }
  }
  emit(o, j, out);
  return v.confirmed ? kOk : kCheckFailed;
}

int cmd_certify(const CertifyOptions& options, const Output& o, std::ostream& out) {
  const Certificate cert = certify(options);
  const json j = cert.to_json(options.include_timings);
  if (!o.json) {
    for (const auto& s : cert.stages) out << (s.passed ? "PASS  " : "FAIL  ") << s.name << "\n";
    out << "certified: " << (cert.certified() ? "yes" : "no") << "\n";
  }
  if (o.json) out << j.dump(2) << "\n";
  if (!o.report.empty()) {
    json full = j;
    if (!cert.q_decimal.empty()) full["q_decimal"] = cert.q_decimal;
    emit({false, o.report}, full, out);
  }
  return cert.certified() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and high-precision checks for the invariance equation of Gini means", "ginv"};
  app.require_subcommand(1);

  // taylor
  std::vector<std::string> params;
  int order = 12;
  Output taylor_out;
  auto* taylor = app.add_subcommand("taylor", "Exact Taylor coefficients C2..C_order of the invariance series");
  taylor->add_option("params", params, "a b c d p q as integers or n/d")->required()->expected(6);
  taylor->add_option("--order", order, "Truncation order")->check(CLI::Range(2, 200));
  add_output_flags(taylor, taylor_out);

  // classify
  Output classify_out;
  auto* classify = app.add_subcommand("classify", "Solution families matched by a b c d p q (or a b c d)");
  classify->add_option("params", params, "a b c d [p q]")->required()->expected(4, 6);
  add_output_flags(classify, classify_out);

  // verify
  mpfr_prec_t precision = BigFloat::kDefaultPrecision;
  std::string tol;
  Output verify_out;
  auto* verify = app.add_subcommand("verify", "Numeric residual of the equation on the default grid");
  verify->add_option("params", params, "a b c d [p q]")->required()->expected(4, 6);
  verify->add_option("--precision", precision, "Working precision in bits")->check(CLI::Range(64, 1 << 20));
  verify->add_option("--tol", tol, "Pass tolerance (default 10^(-0.28*precision))");
  add_output_flags(verify, verify_out);

  // gauss
  std::string m_text, n_text;
  std::vector<std::string> xy;
  bool trace = false;
  Output gauss_out;
  auto* gauss = app.add_subcommand("gauss", "Gauss composition M(x)N of two Gini means");
  gauss->add_option("--M", m_text, "First mean as p,q")->required();
  gauss->add_option("--N", n_text, "Second mean as p,q")->required();
  gauss->add_option("xy", xy, "x y > 0")->required()->expected(2);
  gauss->add_option("--precision", precision, "Working precision in bits")->check(CLI::Range(64, 1 << 20));
  gauss->add_option("--tol", tol, "Relative stopping tolerance (default 2^-(precision-16))");
  gauss->add_flag("--trace", trace, "Print every iterate");
  add_output_flags(gauss, gauss_out);

  // check-formula
  int k = 0;
  std::string mode = "randomized";
  FormulaCheckOptions fopts;
  Output check_out;
  auto* check = app.add_subcommand("check-formula", "Test a printed Taylor coefficient against the series engine");
  check->add_option("k", k, "Coefficient index (2, 4, ..., 12)")->required();
  check->add_option("--mode", mode, "randomized or exhaustive")
      ->check(CLI::IsMember({"randomized", "exhaustive"}));
  check->add_option("--seed", fopts.seed, "Sampling seed");
  check->add_option("--trials", fopts.trials, "Randomized mode: admissible points")->check(CLI::Range(1, 1000000));
  check->add_option("--grid", fopts.grid_size, "Exhaustive mode: values per variable (0 = degree bound + 1)")
      ->check(CLI::NonNegativeNumber);
  check->add_option("--order", fopts.order, "Series truncation order")->check(CLI::Range(2, 200));
  check->add_flag("--negate", fopts.negate_formula, "Test against the negated printed formula");
  add_output_flags(check, check_out);

  // certify
  CertifyOptions copts;
  Output certify_out;
  auto* cert = app.add_subcommand("certify", "Run the full certification pipeline");
  cert->add_option("--mode", mode, "randomized or exhaustive")->check(CLI::IsMember({"randomized", "exhaustive"}));
  cert->add_option("--seed", copts.formulas.seed, "Sampling seed");
  cert->add_option("--trials", copts.formulas.trials, "Randomized formula checks: admissible points per formula")
      ->check(CLI::Range(1, 1000000));
  cert->add_option("--order", copts.formulas.order, "Series truncation order")->check(CLI::Range(2, 200));
  cert->add_flag("--timings", copts.include_timings, "Include per-stage timings in the JSON");
  add_output_flags(cert, certify_out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*taylor) return cmd_taylor(params, order, taylor_out, out);
    if (*classify) return cmd_classify(params, classify_out, out);
    if (*verify) return cmd_verify(params, precision, tol, verify_out, out);
    if (*gauss) return cmd_gauss(m_text, n_text, xy, precision, tol, trace, gauss_out, out);
    if (*check) {
      fopts.mode = mode_of(mode);
      return cmd_check_formula(k, fopts, check_out, out);
    }
    if (*cert) {
      copts.formulas.mode = mode_of(mode);
      return cmd_certify(copts, certify_out, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConvergenceError& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace ginv::cli
