#include <doctest.h>

#include "ginv/bigfloat.hpp"
#include "ginv/errors.hpp"
#include "ginv/random.hpp"
#include "ginv/taylor.hpp"

using namespace ginv;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

bool all_zero_from(const std::vector<BigRational>& c, std::size_t first) {
  for (std::size_t k = first; k < c.size(); ++k)
    if (sgn(c[k]) != 0) return false;
  return true;
}

ParamTuple random_tuple(Rng& rng, long max_num = 20, long max_den = 6) {
  return {rng.rational(max_num, max_den), rng.rational(max_num, max_den), rng.rational(max_num, max_den),
          rng.rational(max_num, max_den), rng.rational(max_num, max_den), rng.rational(max_num, max_den)};
}

bool close(const BigFloat& x, const BigRational& exact, long digits) {
  const BigFloat e(exact, x.precision());
  return abs(x - e) <= abs(e) * pow10(-digits, x.precision());
}

}  // namespace

TEST_CASE("reduce_params examples") {
  CHECK(reduce_params(ParamTuple(3, 1, 5, -5, 2, 0)) == ReducedParams{1, 1, 1, 13, -12});
  CHECK(reduce_params(ParamTuple(q(3, 2), q(1, 2), q(1, 2), q(-1, 2), 1, 0)) ==
        ReducedParams{q(1, 2), q(1, 2), q(1, 4), q(1, 4), 0});
  CHECK(reduce_params(ParamTuple(0, 0, 0, 0, 0, 0)) == ReducedParams{0, 0, 0, 0, 0});
}

TEST_CASE("lift_params examples") {
  SUBCASE("family (v) point is fully rational") {
    const Lift l = lift_params(1, 1, -12, Stage::after_r);
    CHECK(l.coords.r == 13);
    CHECK(l.coords.t == 1);
    CHECK(l.tuple.a == TowerElement(3));
    CHECK(l.tuple.b == TowerElement(1));
    CHECK(l.tuple.c == TowerElement(5));
    CHECK(l.tuple.d == TowerElement(-5));
    CHECK(l.tuple.p == TowerElement(2));
    CHECK(l.tuple.q == TowerElement(0));
    CHECK(l.tuple.a.is_rational());
  }
  SUBCASE("formal radicals") {
    const Lift l = lift_params(1, 2, 3, Stage::after_r);
    CHECK(l.coords.r == q(-43, 20));
    CHECK(l.coords.t == q(77, 20));
    CHECK(l.tuple.a == TowerElement(3) + TowerElement::sqrt(q(17, 20)));
    CHECK(l.tuple.c == TowerElement(-1) + TowerElement::sqrt(q(-103, 20)));
    CHECK_FALSE(l.tuple.c.is_rational());
    // a, …, q share one basis, so mixed arithmetic never needs alignment.
    CHECK(l.tuple.a.identical(l.tuple.a + l.tuple.c - l.tuple.c));
  }
  SUBCASE("after t with vs/w = 0") {
    const Lift l = lift_params(1, 0, 1, Stage::after_t, 1);
    CHECK(l.coords.t == 1);
    CHECK(l.tuple.p == TowerElement(2));
    CHECK(l.tuple.q == TowerElement(0));
  }
  CHECK_THROWS_AS(lift_params(0, 1, 1, Stage::after_t, 1), DomainError);
  CHECK_THROWS_AS(lift_params(1, 0, 1, Stage::after_r), DomainError);
  CHECK_THROWS_AS(lift_params(1, 1, 1, Stage::raw), DomainError);
}

TEST_CASE("stage consistency: reduce after lift is the identity on perfect squares") {
  const Lift l = lift_params(1, 1, -12, Stage::after_r);
  const ParamTuple t(l.tuple.a.rational_part(), l.tuple.b.rational_part(), l.tuple.c.rational_part(),
                     l.tuple.d.rational_part(), l.tuple.p.rational_part(), l.tuple.q.rational_part());
  CHECK(t == ParamTuple(3, 1, 5, -5, 2, 0));
  CHECK(reduce_params(t) == l.coords);

  // (w, v, r, s) = (4, −1, 5, 4): r + s = 9, r − s = 1 and t = 4.
  const Lift m = lift_params(4, -1, 4, Stage::after_t, 5);
  REQUIRE(m.coords.t == 4);
  const ParamTuple u(m.tuple.a.rational_part(), m.tuple.b.rational_part(), m.tuple.c.rational_part(),
                     m.tuple.d.rational_part(), m.tuple.p.rational_part(), m.tuple.q.rational_part());
  CHECK(m.tuple.p.is_rational());
  CHECK(reduce_params(u) == m.coords);
}

TEST_CASE("taylor_coefficients examples") {
  CHECK(all_zero_from(taylor_coefficients(ParamTuple(2, 1, 2, 1, 2, 1), 12), 1));
  const auto c = taylor_coefficients(ParamTuple(1, 0, 1, 0, 2, 0), 2);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == 1);
  CHECK(c[2] == q(-1, 2));
  CHECK(all_zero_from(taylor_coefficients(ParamTuple(2, 1, 0, -1, 1, 0), 12), 1));
  // Equal-parameter branches of every pair at once.
  CHECK(all_zero_from(taylor_coefficients(ParamTuple(1, 1, 1, 1, 1, 1), 10), 1));
}

TEST_CASE("taylor_coefficients agree over Q and over the tower") {
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    const ParamTuple t = random_tuple(rng);
    CHECK(taylor_coefficients(t, 8) == taylor_coefficients(to_lifted(t), 8));
  }
}

TEST_CASE("evenness and rationality on random lifted tuples") {
  Rng rng(11);
  int lifted = 0;
  for (int i = 0; i < 30; ++i) {
    const BigRational w = rng.nonzero_rational(9, 5), v = rng.nonzero_rational(9, 5), s = rng.rational(9, 5);
    const Lift l = lift_params(w, v, s, Stage::after_t, rng.rational(9, 5));
    // taylor_coefficients throws on a nonzero odd coefficient or radical part.
    const auto c = taylor_coefficients(l.tuple, 9);
    CHECK(c[0] == 1);
    if (!l.tuple.a.is_rational() || !l.tuple.c.is_rational() || !l.tuple.p.is_rational()) ++lifted;
  }
  CHECK(lifted > 20);
}

TEST_CASE("C2 equals (a+b+c+d)/4 - (p+q)/2 on random tuples") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const ParamTuple t = random_tuple(rng, 1000, 1000);
    CHECK(taylor_coefficients(t, 2)[2] == (t.a + t.b + t.c + t.d) / 4 - (t.p + t.q) / 2);
  }
}

TEST_CASE("random tuples have a nonzero C_k with k <= 12") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto c = taylor_coefficients(random_tuple(rng), 12);
    CHECK_FALSE(all_zero_from(c, 1));
  }
}

TEST_CASE("invariance_series over BigFloat matches the exact tower series") {
  // (w, v, s) = (1, 1/5, 1/10) after r = R: every radicand is positive, so
  // the same tuple has a real floating-point realisation.
  const Lift l = lift_params(1, q(1, 5), q(1, 10), Stage::after_r);
  const auto exact = taylor_coefficients(l.tuple, 12);
  const long prec = 512;
  const auto re = [&](const BigRational& x) { return BigFloat(x, prec); };
  const ReducedParams& rp = l.coords;
  const BigFloat w = re(rp.w), v = re(rp.v);
  const BigFloat r1 = sqrt(re(rp.r + rp.s)), r2 = sqrt(re(rp.r - rp.s)), r3 = sqrt(re(rp.t));
  const Tuple<BigFloat> t{w + v + r1, w + v - r1, w - v + r2, w - v - r2, w + r3, w - r3};
  const auto fl = invariance_series(t, 12);
  for (int k : {2, 4, 6, 8, 10, 12}) {
    if (sgn(exact[static_cast<std::size_t>(k)]) == 0) continue;
    CHECK_MESSAGE(close(fl[k], exact[static_cast<std::size_t>(k)], 100), "k = ", k);
  }
}

TEST_CASE("printed formula table") {
  CHECK(reference_formula(2).stage == Stage::raw);
  CHECK(reference_formula(4).stage == Stage::reduced);
  CHECK(reference_formula(6).stage == Stage::after_t);
  for (int k : {8, 10, 12}) CHECK(reference_formula(k).stage == Stage::after_r);
  CHECK_THROWS_AS(reference_formula(3), DomainError);
  CHECK_THROWS_AS(reference_formula(14), DomainError);
  CHECK(reference_cofactor(8).term_count() == 8);
  CHECK(reference_cofactor(10).term_count() == 18);
  CHECK(reference_cofactor(12).term_count() == 32);
  CHECK(reference_prefactor(10).denominator.str() == "1063125*w^5*v^4");
}

TEST_CASE("check_formula: C2 in both modes") {
  const auto rnd = check_formula(2);
  CHECK(rnd.confirmed);
  CHECK(rnd.points_checked == 200);
  FormulaCheckOptions ex;
  ex.mode = CheckMode::exhaustive;
  ex.order = 2;
  const auto full = check_formula(2, ex);
  CHECK(full.confirmed);
  CHECK(full.grid_size == 3);
  CHECK(full.points_checked == 729);
  CHECK(full.points_skipped == 0);
}

TEST_CASE("check_formula: C4 in exhaustive mode") {
  FormulaCheckOptions ex;
  ex.mode = CheckMode::exhaustive;
  ex.order = 4;
  const auto c4 = check_formula(4, ex);
  CHECK(c4.confirmed);
  CHECK(c4.points_checked == 5 * 5 * 5 * 5 * 5);
}

TEST_CASE("C6 vanishes at the family (v) point") {
  const ReferenceFormula& f = reference_formula(6);
  const std::map<std::string, BigRational> point{{"w", 1}, {"v", 1}, {"r", 13}, {"s", -12}};
  CHECK(evaluate_formula(f, point) == BigRational(0));
  const Lift l = lift_params(1, 1, -12, Stage::after_t, 13);
  CHECK(series_coefficient(l, 6, 13) == 0);
}

TEST_CASE("C8 at (w, v, s) = (1, 2, 3)") {
  const ReferenceFormula& f = reference_formula(8);
  const std::map<std::string, BigRational> point{{"w", 1}, {"v", 2}, {"s", 3}};
  const auto lift = admissible_lift(f, point);
  REQUIRE(lift);
  const BigRational series = series_coefficient(*lift, 8, 13);
  CHECK(series == *evaluate_formula(f, point));
  // Independent complex-arithmetic numeric Taylor expansion of F.
  CHECK(close(BigFloat::from_string("-10.6037142857142857142857142857142857142857143", 256), series, 40));
  CHECK(series == q(-37113, 3500));
}

TEST_CASE("check_formula: randomized C6, C8, C12 confirmed") {
  FormulaCheckOptions o;
  o.trials = 40;
  for (int k : {4, 6, 8, 12}) {
    const auto v = check_formula(k, o);
    CHECK_MESSAGE(v.confirmed, "k = ", k);
    CHECK_FALSE(v.witness);
  }
}

TEST_CASE("printed C10 carries the wrong overall sign") {
  FormulaCheckOptions o;
  o.trials = 40;
  const auto v = check_formula(10, o);
  CHECK_FALSE(v.confirmed);
  REQUIRE(v.witness);
  CHECK(v.sign_flipped);
  o.negate_formula = true;
  CHECK(check_formula(10, o).confirmed);

  // Independent oracle: numeric Taylor expansion of F at (1, 1/5, 1/10)
  // gives C10 ≈ −0.00426124278247619047619047619047619047619047619.
  const Lift l = lift_params(1, q(1, 5), q(1, 10), Stage::after_r);
  const BigRational c10 = series_coefficient(l, 10, 10);
  CHECK(c10 < 0);
  CHECK(close(BigFloat::from_string("-0.00426124278247619047619047619047619047619047619", 256), c10, 40));
}

TEST_CASE("check_formula is deterministic given the seed") {
  FormulaCheckOptions o;
  o.trials = 5;
  o.seed = 42;
  const auto a = check_formula(10, o);
  const auto b = check_formula(10, o);
  REQUIRE(a.witness);
  CHECK(*a.witness == *b.witness);
  CHECK(*a.series_value == *b.series_value);
}

TEST_CASE("sufficiency_series_check examples") {
  CHECK(sufficiency_series_check(1, q(1, 2), 20).identically_one);
  CHECK(sufficiency_series_check(2, 1, 20).identically_one);
  CHECK(sufficiency_series_check(1, 0, 20).identically_one);
  CHECK_THROWS_AS(sufficiency_series_check(0, 1, 20), DomainError);
  const auto bad = series_identity_check(ParamTuple(1, 0, 1, 0, 2, 0), 6);
  CHECK_FALSE(bad.identically_one);
  CHECK(bad.coefficients[2] == q(-1, 2));
}

TEST_CASE("exhaustive grids leave no hole") {
  // C10 and C12 use the same construction on larger grids; they are covered
  // by `ginv certify --mode exhaustive` rather than here, for runtime.
  for (int k = 2; k <= 8; k += 2) {
    const ExhaustiveGrid g = exhaustive_grid(k);
    CHECK(g.grid_size == formula_degree_bound(k) + 1);
    const auto& f = reference_formula(k);
    std::size_t expected = 1;
    for (std::size_t j = 0; j < stage_variables(f.stage).size(); ++j) expected *= static_cast<std::size_t>(g.grid_size);
    CHECK(g.points.size() == expected);
    int holes = 0;
    for (const auto& p : g.points) holes += !admissible_lift(f, p);
    CHECK_MESSAGE(holes == 0, "C", k);
    // The unshifted C8 grid contains (w,v,s) = (5, 5/4, 25/2), where r + s = 0.
    CHECK(g.shift == (k == 8 ? 1 : 0));
  }
  CHECK_FALSE(admissible_lift(reference_formula(8), {{"w", 5}, {"v", make_rational(5, 4)}, {"s", make_rational(25, 2)}}));
}
