#include "ginv/taylor.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "ginv/bigfloat.hpp"
#include "ginv/errors.hpp"
#include "ginv/printed.hpp"
#include "ginv/random.hpp"

namespace ginv {

ReducedParams reduce_params(const ParamTuple& t) {
  ReducedParams rp;
  rp.w = (t.a + t.b + t.c + t.d) / 4;
  rp.v = (t.a + t.b - t.c - t.d) / 4;
  const BigRational half_pq = (t.p - t.q) / 2;
  rp.t = half_pq * half_pq;
  const BigRational ab2 = (t.a - t.b) * (t.a - t.b);
  const BigRational cd2 = (t.c - t.d) * (t.c - t.d);
  rp.r = (ab2 + cd2) / 8;
  rp.s = (ab2 - cd2) / 8;
  return rp;
}

const char* stage_name(Stage stage) {
  switch (stage) {
    case Stage::raw: return "raw";
    case Stage::reduced: return "reduced";
    case Stage::after_t: return "after_t";
    case Stage::after_r: return "after_r";
  }
  return "?";
}

std::vector<std::string> stage_variables(Stage stage) {
  switch (stage) {
    case Stage::raw: return {"a", "b", "c", "d", "p", "q"};
    case Stage::reduced: return {"w", "v", "t", "r", "s"};
    case Stage::after_t: return {"w", "v", "r", "s"};
    case Stage::after_r: return {"w", "v", "s"};
  }
  return {};
}

BigRational r_of(const BigRational& w, const BigRational& v, const BigRational& s) {
  const BigRational den = 15 * w * w * v * v;
  if (sgn(den) == 0) throw DomainError("R(w,v,s) needs w and v nonzero");
  const BigRational num = 15 * w * w * w * w * v * v - 3 * w * w * s * s + 3 * v * v * s * s -
                          5 * w * w * w * v * s - 10 * w * v * v * v * s;
  return num / den;
}

LiftedTuple lift_reduced(const ReducedParams& rp) {
  const std::array<BigRational, 3> radicands{rp.r + rp.s, rp.r - rp.s, rp.t};
  // Coordinates over masks of the three radicands; only the rational part
  // and a single root ever appear.
  auto element = [&](const BigRational& rational, unsigned root_mask, int root_sign) {
    std::array<BigRational, 8> coords{};
    coords[0] = rational;
    coords[root_mask] = root_sign;
    return TowerElement::make(radicands, coords);
  };
  LiftedTuple t;
  t.a = element(rp.w + rp.v, 1, 1);
  t.b = element(rp.w + rp.v, 1, -1);
  t.c = element(rp.w - rp.v, 2, 1);
  t.d = element(rp.w - rp.v, 2, -1);
  t.p = element(rp.w, 4, 1);
  t.q = element(rp.w, 4, -1);
  return t;
}

Lift lift_params(const BigRational& w, const BigRational& v, const BigRational& s, Stage stage,
                 const BigRational& r) {
  ReducedParams rp;
  rp.w = w;
  rp.v = v;
  rp.s = s;
  switch (stage) {
    case Stage::after_t:
      if (sgn(w) == 0) throw DomainError("t = r + vs/w needs w nonzero");
      rp.r = r;
      break;
    case Stage::after_r:
      rp.r = r_of(w, v, s);
      break;
    default:
      throw DomainError(std::string("lift_params: stage ") + stage_name(stage) + " is not parameterized by (w, v, s)");
  }
  rp.t = rp.r + v * s / w;
  return {rp, lift_reduced(rp)};
}

LiftedTuple to_lifted(const ParamTuple& t) {
  return {TowerElement(t.a), TowerElement(t.b), TowerElement(t.c),
          TowerElement(t.d), TowerElement(t.p), TowerElement(t.q)};
}

namespace {

// log G_{a,b}(e^x, e^{−x}).
template <class S>
PowerSeries<S> log_section(const S& a, const S& b, int order) {
  const S diff = a - b;
  if (scalar_is_zero(diff)) {
    const auto x = PowerSeries<S>::variable(a, order);
    return x * tanh_series(a, order);
  }
  return (log(cosh_series(a, order)) - log(cosh_series(b, order))) * ScalarTraits<S>::inverse(diff);
}

}  // namespace

template <class S>
PowerSeries<S> gini_section(const S& a, const S& b, int order) {
  return exp(log_section(a, b, order));
}

// Everything runs in the log domain: with A = G_{a,b}(e^x,e^{−x}) and
// B = G_{c,d}(e^x,e^{−x}), A^p = exp(p·log A) has constant term 1, so every
// log/exp below is well defined.
template <class S>
PowerSeries<S> invariance_series(const Tuple<S>& t, int order) {
  const auto log_a = log_section(t.a, t.b, order);
  const auto log_b = log_section(t.c, t.d, order);
  const auto log_k = log_section(t.p, t.q, order);
  const S half = scalar_from(BigRational(1, 2), t.p);
  const S pq = t.p - t.q;

  PowerSeries<S> log_outer = log_a;
  if (scalar_is_zero(pq)) {
    const auto ap = exp(log_a * t.p);
    const auto bp = exp(log_b * t.p);
    log_outer = (ap * log_a + bp * log_b) * reciprocal(ap + bp);
  } else {
    const auto mean_p = (exp(log_a * t.p) + exp(log_b * t.p)) * half;
    const auto mean_q = (exp(log_a * t.q) + exp(log_b * t.q)) * half;
    log_outer = (log(mean_p) - log(mean_q)) * ScalarTraits<S>::inverse(pq);
  }
  return exp(log_outer - log_k);
}

template PowerSeries<BigRational> gini_section(const BigRational&, const BigRational&, int);
template PowerSeries<TowerElement> gini_section(const TowerElement&, const TowerElement&, int);
template PowerSeries<BigFloat> gini_section(const BigFloat&, const BigFloat&, int);
template PowerSeries<BigRational> invariance_series(const Tuple<BigRational>&, int);
template PowerSeries<TowerElement> invariance_series(const Tuple<TowerElement>&, int);
template PowerSeries<BigFloat> invariance_series(const Tuple<BigFloat>&, int);

std::vector<BigRational> taylor_coefficients(const LiftedTuple& t, int order) {
  if (order < 0) throw DomainError("taylor order must be nonnegative");
  const auto series = invariance_series(t, order);
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    const TowerElement& c = series[k];
    if (!c.is_rational())
      throw InternalInconsistency("Taylor coefficient C" + std::to_string(k) + " has a radical part: " + c.str());
    const BigRational& q = c.rational_part();
    if (k == 0 && q != 1) throw InternalInconsistency("C0 = " + to_string(q) + ", expected 1");
    if (k % 2 == 1 && sgn(q) != 0)
      throw InternalInconsistency("odd Taylor coefficient C" + std::to_string(k) + " = " + to_string(q));
    out.push_back(q);
  }
  return out;
}

std::vector<BigRational> taylor_coefficients(const ParamTuple& t, int order) {
  if (order < 0) throw DomainError("taylor order must be nonnegative");
  const Tuple<BigRational> q{t.a, t.b, t.c, t.d, t.p, t.q};
  const auto series = invariance_series(q, order);
  std::vector<BigRational> out(series.coefficients().begin(), series.coefficients().end());
  if (out[0] != 1) throw InternalInconsistency("C0 = " + to_string(out[0]) + ", expected 1");
  for (int k = 1; k <= order; k += 2)
    if (sgn(out[static_cast<std::size_t>(k)]) != 0)
      throw InternalInconsistency("odd Taylor coefficient C" + std::to_string(k) + " = " +
                                  to_string(out[static_cast<std::size_t>(k)]));
  return out;
}

namespace {

MultiPoly parse_in(std::string_view text, Stage stage) {
  return MultiPoly::parse(text, stage_variables(stage));
}

struct FormulaTable {
  std::map<int, ReferenceFormula> formulas;
  std::map<int, MultiPoly> cofactors;
  std::map<int, Prefactor> prefactors;
};

const FormulaTable& formula_table() {
  static const FormulaTable table = [] {
    FormulaTable t;
    auto add = [&t](int k, Stage stage, MultiPoly num, MultiPoly den) {
      t.formulas.emplace(k, ReferenceFormula{k, stage, std::move(num), std::move(den)});
    };
    add(2, Stage::raw, parse_in(printed::kC2, Stage::raw), MultiPoly::constant(BigRational(1), stage_variables(Stage::raw)));
    add(4, Stage::reduced, parse_in(printed::kC4, Stage::reduced),
        MultiPoly::constant(BigRational(1), stage_variables(Stage::reduced)));
    add(6, Stage::after_t, parse_in(printed::kC6Numerator, Stage::after_t),
        parse_in(printed::kC6Denominator, Stage::after_t));

    struct High {
      int k;
      std::string_view cofactor, prefactor, denominator;
    };
    for (const High& h : {High{8, printed::kP8, printed::kC8Prefactor, printed::kC8Denominator},
                          High{10, printed::kP10, printed::kC10Prefactor, printed::kC10Denominator},
                          High{12, printed::kP12, printed::kC12Prefactor, printed::kC12Denominator}}) {
      auto cof = parse_in(h.cofactor, Stage::after_r);
      Prefactor pre{parse_in(h.prefactor, Stage::after_r), parse_in(h.denominator, Stage::after_r)};
      add(h.k, Stage::after_r, pre.numerator * cof, pre.denominator);
      t.cofactors.emplace(h.k, std::move(cof));
      t.prefactors.emplace(h.k, std::move(pre));
    }
    return t;
  }();
  return table;
}

}  // namespace

const ReferenceFormula& reference_formula(int k) {
  const auto& table = formula_table().formulas;
  const auto it = table.find(k);
  if (it == table.end()) throw DomainError("no printed formula for C" + std::to_string(k));
  return it->second;
}

const MultiPoly& reference_cofactor(int k) {
  const auto& table = formula_table().cofactors;
  const auto it = table.find(k);
  if (it == table.end()) throw DomainError("no printed cofactor P" + std::to_string(k));
  return it->second;
}

const Prefactor& reference_prefactor(int k) {
  const auto& table = formula_table().prefactors;
  const auto it = table.find(k);
  if (it == table.end()) throw DomainError("no printed prefactor for C" + std::to_string(k));
  return it->second;
}

const char* mode_name(CheckMode mode) { return mode == CheckMode::randomized ? "randomized" : "exhaustive"; }

std::optional<BigRational> evaluate_formula(const ReferenceFormula& f, const std::map<std::string, BigRational>& point) {
  const BigRational den = f.denominator.evaluate(point);
  if (sgn(den) == 0) return std::nullopt;
  return f.numerator.evaluate(point) / den;
}

std::optional<Lift> admissible_lift(const ReferenceFormula& f, const std::map<std::string, BigRational>& point) {
  if (!evaluate_formula(f, point)) return std::nullopt;
  auto get = [&point](const char* name) { return point.at(name); };

  Lift lift;
  if (f.stage == Stage::raw) {
    const ParamTuple t(get("a"), get("b"), get("c"), get("d"), get("p"), get("q"));
    lift.coords = reduce_params(t);
    lift.tuple = to_lifted(t);
    return lift;
  }

  const BigRational w = get("w"), v = get("v"), s = get("s");
  if (sgn(w) == 0 || sgn(v) == 0 || w == v || w == -v) return std::nullopt;
  try {
    switch (f.stage) {
      case Stage::reduced: {
        ReducedParams rp{w, v, get("t"), get("r"), s};
        lift = {rp, {}};
        break;
      }
      case Stage::after_t: lift = lift_params(w, v, s, Stage::after_t, get("r")); break;
      default: lift = lift_params(w, v, s, Stage::after_r); break;
    }
  } catch (const DomainError&) {
    return std::nullopt;
  }
  const ReducedParams& rp = lift.coords;
  if (sgn(rp.r + rp.s) == 0 || sgn(rp.r - rp.s) == 0 || sgn(rp.t) == 0) return std::nullopt;
  lift.tuple = lift_reduced(rp);
  return lift;
}

BigRational series_coefficient(const Lift& lift, int k, int order) {
  if (k < 0 || k > order) throw DomainError("coefficient index outside the series order");
  return taylor_coefficients(lift.tuple, order)[static_cast<std::size_t>(k)];
}

int formula_degree_bound(int k) {
  switch (reference_formula(k).stage) {
    case Stage::raw:
    case Stage::reduced: return k;
    case Stage::after_t: return k + k / 2;
    case Stage::after_r: return 3 * k;
  }
  return 0;
}

namespace {

using Point = std::map<std::string, BigRational>;

enum class Outcome { skipped, agreed, refuted };

struct PointResult {
  Outcome outcome = Outcome::skipped;
  BigRational series, formula;
};

PointResult check_point(const ReferenceFormula& f, const Point& point, int order, bool negate) {
  PointResult out;
  const auto lift = admissible_lift(f, point);
  if (!lift) return out;
  out.series = series_coefficient(*lift, f.k, order);
  out.formula = *evaluate_formula(f, point);
  if (negate) out.formula = -out.formula;
  out.outcome = out.series == out.formula ? Outcome::agreed : Outcome::refuted;
  return out;
}

// Runs job(i) for i in [0, n) on all hardware threads. Each index is
// written by exactly one worker, so results are thread-count independent.
template <class Job>
void parallel_for(std::size_t n, Job job) {
  const std::size_t workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 64u));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

ExhaustiveGrid exhaustive_grid(int k, int grid_size) {
  const ReferenceFormula& f = reference_formula(k);
  const auto vars = stage_variables(f.stage);
  ExhaustiveGrid grid;
  grid.degree_bound = formula_degree_bound(k);
  grid.grid_size = grid_size > 0 ? grid_size : grid.degree_bound + 1;
  // Variable j takes i + 1 + j/(n+1+shift) for i in [0, grid_size): all
  // values are positive and distinct variables never coincide, so w, v and
  // v ± w are never zero. Other exclusions (a vanishing radicand or
  // denominator) can still hit a grid point; the shift then grows until the
  // whole grid is admissible.
  const std::size_t n = vars.size();
  constexpr int kMaxShift = 32;
  for (int shift = 0; shift <= kMaxShift; ++shift) {
    grid.points.clear();
    grid.shift = shift;
    std::vector<int> index(n, 0);
    while (true) {
      std::map<std::string, BigRational> point;
      for (std::size_t j = 0; j < n; ++j)
        point[vars[j]] =
            BigRational(index[j] + 1) + make_rational(static_cast<long>(j), static_cast<long>(n + 1) + shift);
      grid.points.push_back(std::move(point));
      std::size_t j = 0;
      while (j < n && ++index[j] == grid.grid_size) index[j++] = 0;
      if (j == n) break;
    }
    std::atomic<bool> admissible{true};
    parallel_for(grid.points.size(), [&](std::size_t i) {
      if (admissible && !admissible_lift(f, grid.points[i])) admissible = false;
    });
    if (admissible) break;
  }
  return grid;
}

FormulaVerdict check_formula(int k, const FormulaCheckOptions& options) {
  const ReferenceFormula& f = reference_formula(k);
  const auto vars = stage_variables(f.stage);
  const int order = std::max(options.order, k);

  FormulaVerdict verdict;
  verdict.k = k;
  verdict.stage = f.stage;
  verdict.mode = options.mode;
  verdict.seed = options.seed;

  std::vector<Point> points;
  if (options.mode == CheckMode::randomized) {
    // Admissibility is cheap, so the sample plan is drawn serially and only
    // the series evaluations run in parallel. Bounded so a pathological
    // stage cannot loop forever.
    Rng rng(options.seed);
    const int max_draws = options.trials * 100 + 1000;
    for (int draw = 0; draw < max_draws && static_cast<int>(points.size()) < options.trials; ++draw) {
      Point point;
      for (const auto& var : vars) point[var] = rng.rational(options.max_numerator, options.max_denominator);
      if (admissible_lift(f, point))
        points.push_back(std::move(point));
      else
        ++verdict.points_skipped;
    }
  } else {
    ExhaustiveGrid grid = exhaustive_grid(k, options.grid_size);
    verdict.degree_bound = grid.degree_bound;
    verdict.grid_size = grid.grid_size;
    verdict.grid_shift = grid.shift;
    points = std::move(grid.points);
  }

  std::vector<PointResult> results(points.size());
  parallel_for(points.size(), [&](std::size_t i) { results[i] = check_point(f, points[i], order, options.negate_formula); });

  for (std::size_t i = 0; i < results.size(); ++i) {
    const PointResult& r = results[i];
    if (r.outcome == Outcome::skipped) {
      ++verdict.points_skipped;
      continue;
    }
    ++verdict.points_checked;
    if (r.outcome == Outcome::refuted) {
      verdict.witness = points[i];
      verdict.series_value = r.series;
      verdict.formula_value = r.formula;
      verdict.sign_flipped = r.series == -r.formula;
      return verdict;
    }
  }
  if (options.mode == CheckMode::randomized)
    verdict.confirmed = verdict.points_checked >= options.trials;
  else  // a skipped grid point would leave a hole in the interpolation argument
    verdict.confirmed = verdict.points_checked > 0 && verdict.points_skipped == 0 &&
                        verdict.grid_size > verdict.degree_bound;
  return verdict;
}

SufficiencyVerdict series_identity_check(const ParamTuple& t, int order) {
  SufficiencyVerdict verdict;
  verdict.tuple = t;
  verdict.order = order;
  verdict.coefficients = taylor_coefficients(t, order);
  verdict.identically_one = true;
  for (int k = 1; k <= order; ++k)
    if (sgn(verdict.coefficients[static_cast<std::size_t>(k)]) != 0) verdict.identically_one = false;
  return verdict;
}

SufficiencyVerdict sufficiency_series_check(const BigRational& u, const BigRational& v, int order) {
  if (sgn(u) == 0) throw DomainError("sufficiency family needs u nonzero");
  return series_identity_check(ParamTuple(u + v, v, u - v, -v, u, BigRational(0)), order);
}

}  // namespace ginv
