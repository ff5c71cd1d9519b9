#include <doctest.h>

#include "ginv/bigfloat.hpp"
#include "ginv/errors.hpp"
#include "ginv/random.hpp"
#include "ginv/tower.hpp"

using namespace ginv;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

TowerElement random_element(Rng& rng, std::span<const BigRational> radicands) {
  std::vector<BigRational> coords;
  for (std::size_t m = 0; m < (std::size_t{1} << radicands.size()); ++m) coords.push_back(rng.rational(20, 9));
  return TowerElement::make(radicands, coords);
}

}  // namespace

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == q(3));
  CHECK(parse_rational("-5") == q(-5));
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("-1/2") == q(-1, 2));
  CHECK(parse_rational("1/1") == q(1));
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("2/-3"), ParseError);
}

TEST_CASE("BigRational field axioms on random values") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    BigRational a = rng.rational(1000, 1000), b = rng.rational(1000, 1000), c = rng.rational(1000, 1000);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (sgn(a) != 0) CHECK(a * (1 / a) == 1);
    CHECK(a.get_den() > 0);
  }
}

TEST_CASE("rational_sqrt detects squares") {
  CHECK(*rational_sqrt(q(9, 4)) == q(3, 2));
  CHECK(*rational_sqrt(q(0)) == q(0));
  CHECK_FALSE(rational_sqrt(q(2)).has_value());
  CHECK_FALSE(rational_sqrt(q(-4)).has_value());
}

TEST_CASE("tower_make folds perfect squares and zero radicands") {
  const BigRational one[] = {q(1)};
  const BigRational two_plus_root[] = {q(2), q(1)};
  TowerElement x = TowerElement::make(one, two_plus_root);
  CHECK(x.radicands().empty());
  CHECK(x.rational_part() == q(3));

  const BigRational nine_quarters[] = {q(9, 4)};
  const BigRational root_only[] = {q(0), q(1)};
  CHECK(TowerElement::make(nine_quarters, root_only) == TowerElement(q(3, 2)));

  const BigRational zero[] = {q(0)};
  CHECK(TowerElement::make(zero, two_plus_root) == TowerElement(q(2)));
}

TEST_CASE("tower_make keeps a genuine radical") {
  // r + s = 17/20 at the lifted point (w,v,s) = (1,2,3)
  const BigRational rad[] = {q(17, 20)};
  const BigRational coords[] = {q(3), q(1)};
  TowerElement a = TowerElement::make(rad, coords);
  REQUIRE(a.dimension() == 2);
  CHECK(a.rational_part() == q(3));
  CHECK(a.coord(1) == q(1));
  CHECK_FALSE(a.is_rational());
}

TEST_CASE("negative radicands are formal square roots") {
  TowerElement r = TowerElement::sqrt(q(-103, 20));
  REQUIRE(r.dimension() == 2);
  TowerElement sq = r * r;
  CHECK(sq.is_rational());
  CHECK(sq.rational_part() == q(-103, 20));
}

TEST_CASE("tower_make reuses dependent radicands") {
  // √8 = 2√2 and √6 = √2·√3 over the basis {2, 3}
  const BigRational rads[] = {q(2), q(3), q(8), q(6)};
  std::vector<BigRational> coords(16, q(0));
  coords[4] = q(1);  // √8
  coords[8] = q(1);  // √6
  TowerElement x = TowerElement::make(rads, coords);
  REQUIRE(x.radicands().size() == 2);
  CHECK(x.coord(1) == q(2));
  CHECK(x.coord(3) == q(1));
}

TEST_CASE("tower_make is idempotent") {
  Rng rng(5);
  const BigRational rads[] = {q(5), q(-3), q(7, 2)};
  for (int i = 0; i < 20; ++i) {
    TowerElement x = random_element(rng, rads);
    std::vector<BigRational> coords;
    for (unsigned m = 0; m < x.dimension(); ++m) coords.push_back(x.coord(m));
    TowerElement y = TowerElement::make(x.radicands(), coords);
    CHECK(y.identical(x));
  }
}

TEST_CASE("tower_mul examples") {
  const BigRational two[] = {q(2)};
  const BigRational a_coords[] = {q(1), q(1)};
  const BigRational b_coords[] = {q(1), q(-1)};
  TowerElement a = TowerElement::make(two, a_coords);
  TowerElement b = TowerElement::make(two, b_coords);
  CHECK(a * b == TowerElement(q(-1)));

  const BigRational two_three[] = {q(2), q(3)};
  const BigRational r2[] = {q(0), q(1), q(0), q(0)};
  const BigRational r3[] = {q(0), q(0), q(1), q(0)};
  TowerElement prod = TowerElement::make(two_three, r2) * TowerElement::make(two_three, r3);
  CHECK(prod.coord(3) == q(1));
  CHECK(prod.coord(0) == q(0));

  // p + q for the family-(iv) tuple (3/2,1/2,1/2,-1/2,1,0): w = 1/2, t = 1/4
  TowerElement root_t = TowerElement::sqrt(q(1, 4));
  TowerElement p = TowerElement(q(1, 2)) + root_t;
  TowerElement qq = TowerElement(q(1, 2)) - root_t;
  CHECK(p + qq == TowerElement(q(1)));
}

TEST_CASE("tower_mul rejects unaligned operands and align merges them") {
  TowerElement r2 = TowerElement::sqrt(q(2));
  TowerElement r3 = TowerElement::sqrt(q(3));
  CHECK_THROWS_AS(r2 * r3, AlignmentError);
  auto [x, y] = align(r2, r3);
  TowerElement prod = x * y;
  CHECK(prod.radicands().size() == 2);
  CHECK(prod == TowerElement::sqrt(q(6)));

  auto [a, b] = align(x * y, TowerElement::sqrt(q(5)));
  CHECK(a.radicands().size() == 3);
  CHECK_THROWS_AS(align(a, TowerElement::sqrt(q(7))), AlignmentError);
}

TEST_CASE("tower_inv examples") {
  CHECK(TowerElement(q(2)).inverse() == TowerElement(q(1, 2)));
  const BigRational two[] = {q(2)};
  const BigRational x_coords[] = {q(1), q(1)};
  const BigRational inv_coords[] = {q(-1), q(1)};
  CHECK(TowerElement::make(two, x_coords).inverse() == TowerElement::make(two, inv_coords));
  TowerElement two_root_t = TowerElement(q(2)) * TowerElement::sqrt(q(1, 4));
  CHECK(two_root_t.inverse() == TowerElement(q(1)));
  CHECK_THROWS_AS(TowerElement().inverse(), DivisionByZero);
}

TEST_CASE("tower field properties on random elements") {
  Rng rng(2024);
  const BigRational rads[] = {q(-103, 20), q(17, 20), q(77, 20)};
  for (int i = 0; i < 40; ++i) {
    TowerElement x = random_element(rng, rads);
    TowerElement y = random_element(rng, rads);
    TowerElement z = random_element(rng, rads);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == TowerElement(1));
    for (std::size_t k = 0; k < x.radicands().size(); ++k) {
      CHECK((x * y).conjugate(k) == x.conjugate(k) * y.conjugate(k));
      CHECK((x + y).conjugate(k) == x.conjugate(k) + y.conjugate(k));
    }
  }
}

TEST_CASE("BigFloat carries the smaller precision") {
  BigFloat a(1, 128);
  BigFloat b(3, 256);
  BigFloat c = a / b;
  CHECK(c.precision() == 128);
  CHECK((b * b).precision() == 256);
  BigFloat third(make_rational(1, 3), 256);
  CHECK(abs(third * 3L - BigFloat(1, 256)).log10_abs() < -75);
  CHECK(BigFloat::from_string("2.5").to_double() == doctest::Approx(2.5));
  CHECK_THROWS_AS(BigFloat::from_string("abc"), ParseError);
  CHECK_THROWS_AS(log(BigFloat(0, 64)), DomainError);
  CHECK(exp(log(BigFloat(7, 256))).str(30).substr(0, 10) == "7.00000000");
}
