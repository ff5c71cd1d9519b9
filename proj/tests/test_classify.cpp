#include <doctest.h>

#include "ginv/classify.hpp"
#include "ginv/errors.hpp"
#include "ginv/gini.hpp"
#include "ginv/taylor.hpp"

using namespace ginv;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

SolutionFamily fam(Family f) { return {f}; }
SolutionFamily fam_iv(BigRational u, BigRational v) { return {Family::IV, u, v, std::nullopt}; }
SolutionFamily fam_w(Family f, BigRational w) { return {f, std::nullopt, std::nullopt, w}; }

bool contains_tag(const std::set<SolutionFamily>& s, Family f) {
  return std::any_of(s.begin(), s.end(), [f](const SolutionFamily& x) { return x.tag == f; });
}

const std::array<Family, 6> kFamilies{Family::I, Family::II, Family::III, Family::IV, Family::V, Family::VI};

}  // namespace

TEST_CASE("classify_invariance examples") {
  CHECK(classify_invariance(ParamTuple(3, 1, 5, -5, 2, 0)) == std::set{fam_w(Family::V, 1)});
  CHECK(classify_invariance(ParamTuple(1, -1, 2, -2, 3, -3)) == std::set{fam(Family::I)});
  CHECK(classify_invariance(ParamTuple(0, 0, 0, 0, 0, 0)) ==
        std::set{fam(Family::I), fam(Family::II), fam(Family::III), fam_iv(0, 0), fam_w(Family::V, 0),
                 fam_w(Family::VI, 0)});
  CHECK(classify_invariance(ParamTuple(2, 1, 0, -1, 1, 0)) == std::set{fam_iv(1, 1)});
  CHECK(classify_invariance(ParamTuple(1, 0, 1, 0, 2, 0)).empty());
  // Parameter order inside each pair is irrelevant.
  CHECK(classify_invariance(ParamTuple(1, 3, -5, 5, 0, 2)) == std::set{fam_w(Family::V, 1)});
}

TEST_CASE("family IV with u = 0 also reports III") {
  // {a,b} = {v,v}, {c,d} = {−v,−v}, {p,q} = {0,0}.
  const auto s = classify_invariance(ParamTuple(2, 2, -2, -2, 0, 0));
  CHECK(s.count(fam_iv(0, 2)));
  CHECK(s.count(fam(Family::III)));
}

TEST_CASE("SolutionFamily text") {
  CHECK(fam_w(Family::V, 1).str() == "V (w=1)");
  CHECK(fam_iv(1, q(1, 2)).str() == "IV (u=1, v=1/2)");
  CHECK(fam(Family::III).str() == "III");
  CHECK(parse_family("vi") == Family::VI);
  CHECK_FALSE(parse_family("VII"));
}

TEST_CASE("classify_matkowski_suto examples") {
  // {1,0} = {1+v, v} with v = 0 as well, so condition ii holds alongside i.
  CHECK(classify_matkowski_suto(1, 0, 1, 0) == std::set<MSFamily>{{MSTag::i}, {MSTag::ii, BigRational(0)}});
  CHECK(classify_matkowski_suto(2, 1, 0, -1) == std::set<MSFamily>{{MSTag::ii, BigRational(1)}});
  CHECK(classify_matkowski_suto(q(3, 2), q(1, 2), 1, -1) == std::set<MSFamily>{{MSTag::iii}});
  CHECK(classify_matkowski_suto(-7, 7, q(1, 2), q(3, 2)) == std::set<MSFamily>{{MSTag::iv}});
  CHECK(classify_matkowski_suto(2, 0, 1, 0).empty());
}

TEST_CASE("sample_family examples") {
  const std::array iv{q(1), q(1, 2)};
  CHECK(sample_family(Family::IV, iv) == ParamTuple(q(3, 2), q(1, 2), q(1, 2), q(-1, 2), 1, 0));
  const std::array vi{q(2), q(5)};
  CHECK(sample_family(Family::VI, vi) == ParamTuple(5, -5, 6, 2, 4, 0));
  const std::array iii{q(2), q(1), q(3)};
  CHECK(sample_family(Family::III, iii) == ParamTuple(2, 1, -1, -2, 3, -3));
  CHECK_THROWS_AS(sample_family(Family::IV, iii), DomainError);
}

TEST_CASE("round trip: sample_family lands in its own family") {
  Rng rng(17);
  for (Family f : kFamilies)
    for (int i = 0; i < 50; ++i) {
      const ParamTuple t = sample_family(f, rng);
      CHECK_MESSAGE(contains_tag(classify_invariance(t), f), family_name(f), " ", t.str());
    }
}

TEST_CASE("soundness: family members solve the invariance equation") {
  const Grid grid = default_grid(256);
  const BigFloat tol = pow10(-60, 256);
  Rng rng(23);
  for (Family f : kFamilies)
    for (int i = 0; i < 3; ++i) {
      const ParamTuple t = sample_family(f, rng);
      CHECK_MESSAGE(invariance_residual(t, grid) <= tol, family_name(f), " ", t.str());
      const auto c = taylor_coefficients(t, 12);
      CHECK(std::all_of(c.begin() + 1, c.end(), [](const BigRational& x) { return sgn(x) == 0; }));
    }
}

TEST_CASE("completeness at order 12 on random tuples") {
  Rng rng(29);
  int unclassified = 0;
  for (int i = 0; i < 500; ++i) {
    ParamTuple t(rng.rational(12, 4), rng.rational(12, 4), rng.rational(12, 4), rng.rational(12, 4),
                 rng.rational(12, 4), rng.rational(12, 4));
    if (!classify_invariance(t).empty()) continue;
    ++unclassified;
    const auto c = taylor_coefficients(t, 12);
    CHECK_MESSAGE(std::any_of(c.begin() + 1, c.end(), [](const BigRational& x) { return sgn(x) != 0; }), t.str());
  }
  CHECK(unclassified >= 490);
}

TEST_CASE("Corollary consistency with the Theorem at {p,q} = {1,0}") {
  Rng rng(31);
  std::vector<std::array<BigRational, 4>> cases;
  for (int i = 0; i < 200; ++i)
    cases.push_back({rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2), rng.rational(4, 2)});
  for (int i = 0; i < 20; ++i) {
    const std::array v{rng.rational(6, 3)};
    cases.push_back(sample_ms_family(MSTag::ii, v));
    cases.push_back(sample_ms_family(MSTag::iii, v));
    cases.push_back(sample_ms_family(MSTag::iv, v));
  }
  cases.push_back(sample_ms_family(MSTag::i, {}));
  for (const auto& [a, b, c, d] : cases) {
    const bool ms = !classify_matkowski_suto(a, b, c, d).empty();
    const bool th = !classify_invariance(ParamTuple(a, b, c, d, 1, 0)).empty();
    CHECK_MESSAGE(ms == th, to_string(a), " ", to_string(b), " ", to_string(c), " ", to_string(d));
  }
}

TEST_CASE("lemma_normalized") {
  CHECK(lemma_normalized(ParamTuple(3, -3, 2, 1, 5, -5)) == ParamTuple(0, 0, 2, 1, 0, 0));
  // Theorem III and I read identically once the geometric pairs are merged.
  const ParamTuple a(1, -1, 2, -2, 3, -3), b(4, -4, 5, -5, 6, -6);
  CHECK(lemma_normalized(a) == lemma_normalized(b));
}
