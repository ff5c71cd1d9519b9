#include <doctest.h>

#include "ginv/random.hpp"
#include "ginv/series.hpp"

using namespace ginv;

namespace {

using RSeries = PowerSeries<BigRational>;

BigRational q(long n, long d = 1) { return make_rational(n, d); }

RSeries S(std::initializer_list<BigRational> c) { return RSeries(std::vector<BigRational>(c)); }

RSeries random_series(Rng& rng, int order, bool unit_constant, long max_num = 30) {
  std::vector<BigRational> c;
  for (int k = 0; k <= order; ++k) c.push_back(rng.rational(max_num, 7));
  c[0] = unit_constant ? BigRational(1) : BigRational(0);
  return RSeries(std::move(c));
}

template <class S>
bool series_equal(const PowerSeries<S>& a, const PowerSeries<S>& b) {
  if (a.order() != b.order()) return false;
  for (int k = 0; k <= a.order(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

}  // namespace

TEST_CASE("series_mul and series_add") {
  CHECK(series_equal(S({1, 1, 0}) * S({1, -1, 0}), S({1, 0, -1})));
  CHECK(series_equal(S({1, 1, 1}) * RSeries::constant(q(1), 2), S({1, 1, 1})));
  RSeries c = cosh_series(q(1), 4);
  CHECK(series_equal(c * c, S({1, 0, 1, 0, q(1, 3)})));
  CHECK((S({1, 2, 3}) + S({1, 1})).order() == 1);
  CHECK(series_equal(S({1, 2, 3}) - S({1, 2, 3}), S({0, 0, 0})));
}

TEST_CASE("series_reciprocal") {
  CHECK(series_equal(reciprocal(S({1, -1, 0, 0, 0})), S({1, 1, 1, 1, 1})));
  CHECK(series_equal(reciprocal(S({1})), S({1})));
  RSeries sech = reciprocal(cosh_series(q(1), 4));
  CHECK(series_equal(sech, S({1, 0, q(-1, 2), 0, q(5, 24)})));
  CHECK(series_equal(sech * cosh_series(q(1), 4), RSeries::constant(q(1), 4)));
  CHECK_THROWS_AS(reciprocal(S({0, 1})), DivisionByZero);
}

TEST_CASE("series exp and log") {
  CHECK(series_equal(exp(S({0, 1, 0, 0})), S({1, 1, q(1, 2), q(1, 6)})));
  CHECK(series_equal(log(S({1, 1, 0, 0})), S({0, 1, q(-1, 2), q(1, 3)})));
  CHECK(series_equal(exp(log(S({1, 2, 3, 0, 0}))), S({1, 2, 3, 0, 0})));
  CHECK_THROWS_AS(exp(S({1, 1})), DomainError);
  CHECK_THROWS_AS(log(S({2, 1})), DomainError);
}

TEST_CASE("series_pow") {
  CHECK(series_equal(pow(S({1, 1, 0}), q(1, 2)), S({1, q(1, 2), q(-1, 8)})));
  CHECK(series_equal(pow(S({1, 1, 0}), q(2)), S({1, 2, 1})));
  // (cosh(ax)/cosh(bx))^{1/(a-b)} with (a,b) = (1,0)
  RSeries section = pow(cosh_series(q(1), 4) * reciprocal(cosh_series(q(0), 4)), q(1));
  CHECK(series_equal(section, S({1, 0, q(1, 2), 0, q(1, 24)})));
  CHECK_THROWS_AS(pow(S({2, 1}), q(1, 2)), DomainError);
}

TEST_CASE("cosh and tanh series") {
  CHECK(series_equal(cosh_series(q(2), 4), S({1, 0, 2, 0, q(2, 3)})));
  CHECK(series_equal(cosh_series(q(0), 4), S({1, 0, 0, 0, 0})));
  CHECK(series_equal(tanh_series(q(1), 5), S({0, 1, 0, q(-1, 3), 0, q(2, 15)})));
}

TEST_CASE("exp/log round trip and pow consistency over the rationals") {
  Rng rng(99);
  for (int i = 0; i < 25; ++i) {
    RSeries a = random_series(rng, 8, true);
    CHECK(series_equal(exp(log(a)), a));
    CHECK(series_equal(pow(a, q(3)), a * a * a));
    BigRational alpha = rng.rational(9, 5), beta = rng.rational(9, 5);
    CHECK(series_equal(pow(a, alpha) * pow(a, beta), pow(a, BigRational(alpha + beta))));
    RSeries z = random_series(rng, 8, false);
    CHECK(series_equal(log(exp(z)), z));
  }
}

TEST_CASE("exp/log round trip and pow consistency over a radical tower") {
  Rng rng(123);
  const BigRational rads[] = {q(2), q(-3)};
  auto element = [&]() {
    std::vector<BigRational> c;
    for (int m = 0; m < 4; ++m) c.push_back(rng.rational(10, 5));
    return TowerElement::make(rads, c);
  };
  for (int i = 0; i < 5; ++i) {
    std::vector<TowerElement> c{TowerElement(1)};
    for (int k = 1; k <= 6; ++k) c.push_back(element());
    PowerSeries<TowerElement> a(c);
    CHECK(series_equal(exp(log(a)), a));
    CHECK(series_equal(pow(a, TowerElement(2)), a * a));
    TowerElement alpha = element();
    CHECK(series_equal(pow(pow(a, alpha), alpha.inverse()), a));
  }
}

TEST_CASE("BigFloat series agree with exact series") {
  Rng rng(7);
  const mpfr_prec_t prec = 256;
  for (int i = 0; i < 10; ++i) {
    RSeries a = random_series(rng, 10, true, 7);
    BigRational alpha = rng.rational(7, 7);
    RSeries exact = pow(a, alpha) * reciprocal(cosh_series(alpha, 10));
    std::vector<BigFloat> fc;
    for (const auto& c : a.coefficients()) fc.emplace_back(c, prec);
    PowerSeries<BigFloat> af(fc);
    BigFloat falpha(alpha, prec);
    PowerSeries<BigFloat> approx = pow(af, falpha) * reciprocal(cosh_series(falpha, 10));
    for (int k = 0; k <= 10; ++k) {
      BigFloat ref(exact[k], prec);
      BigFloat err = abs(approx[k] - ref);
      BigFloat tol(1, prec);
      mpfr_mul_2si(tol.get(), tol.get(), -(prec - 10), MPFR_RNDN);
      if (!ref.is_zero()) tol *= abs(ref);
      INFO("k=", k, " ref=", ref.str(), " err=", err.str(5));
      CHECK(err <= tol);
    }
  }
}
