#include "ginv/classify.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "ginv/errors.hpp"

namespace ginv {

namespace {

// Multiset equality of two pairs.
bool same_pair(const BigRational& a, const BigRational& b, const BigRational& c, const BigRational& d) {
  return (a == c && b == d) || (a == d && b == c);
}

// Values x with {p,q} = {k·x, 0}.
std::set<BigRational> scaled_zero_partner(const BigRational& p, const BigRational& q, long k) {
  std::set<BigRational> out;
  if (sgn(q) == 0) out.insert(p / k);
  if (sgn(p) == 0) out.insert(q / k);
  return out;
}

// Orders optionals with "absent" first.
int compare_opt(const std::optional<BigRational>& x, const std::optional<BigRational>& y) {
  if (!x || !y) return int(bool(x)) - int(bool(y));
  return cmp(*x, *y);
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::V: return "V";
    case Family::VI: return "VI";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view text) {
  std::string up(text);
  for (auto& ch : up) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (Family f : {Family::I, Family::II, Family::III, Family::IV, Family::V, Family::VI})
    if (up == family_name(f)) return f;
  return std::nullopt;
}

std::string SolutionFamily::str() const {
  std::string out = family_name(tag);
  if (u && v) out += " (u=" + to_string(*u) + ", v=" + to_string(*v) + ")";
  if (w) out += " (w=" + to_string(*w) + ")";
  return out;
}

bool operator<(const SolutionFamily& a, const SolutionFamily& b) {
  if (a.tag != b.tag) return a.tag < b.tag;
  if (int c = compare_opt(a.u, b.u)) return c < 0;
  if (int c = compare_opt(a.v, b.v)) return c < 0;
  return compare_opt(a.w, b.w) < 0;
}

std::set<SolutionFamily> classify_invariance(const ParamTuple& t) {
  std::set<SolutionFamily> out;
  const auto& [a, b, c, d, p, q] = t;
  if (sgn(a + b) == 0 && sgn(c + d) == 0 && sgn(p + q) == 0) out.insert({Family::I});
  if (same_pair(a, b, c, d) && same_pair(c, d, p, q)) out.insert({Family::II});
  if (same_pair(a, b, -c, -d) && sgn(p + q) == 0) out.insert({Family::III});
  for (const BigRational& u : scaled_zero_partner(p, q, 1)) {
    // {a,b} = {u+v, v} forces v ∈ {a, b}.
    for (const BigRational& v : {a, b})
      if (same_pair(a, b, u + v, v) && same_pair(c, d, u - v, -v)) out.insert({Family::IV, u, v, std::nullopt});
  }
  for (const BigRational& w : scaled_zero_partner(p, q, 2)) {
    if (same_pair(a, b, 3 * w, w) && sgn(c + d) == 0) out.insert({Family::V, std::nullopt, std::nullopt, w});
    if (sgn(a + b) == 0 && same_pair(c, d, 3 * w, w)) out.insert({Family::VI, std::nullopt, std::nullopt, w});
  }
  return out;
}

const char* ms_name(MSTag tag) {
  switch (tag) {
    case MSTag::i: return "i";
    case MSTag::ii: return "ii";
    case MSTag::iii: return "iii";
    case MSTag::iv: return "iv";
  }
  return "?";
}

std::string MSFamily::str() const {
  std::string out = ms_name(tag);
  if (v) out += " (v=" + to_string(*v) + ")";
  return out;
}

bool operator<(const MSFamily& a, const MSFamily& b) {
  if (a.tag != b.tag) return a.tag < b.tag;
  return compare_opt(a.v, b.v) < 0;
}

std::set<MSFamily> classify_matkowski_suto(const BigRational& a, const BigRational& b, const BigRational& c,
                                           const BigRational& d) {
  std::set<MSFamily> out;
  const BigRational one(1), zero(0), three_halves(3, 2), half(1, 2);
  if (same_pair(a, b, one, zero) && same_pair(c, d, one, zero)) out.insert({MSTag::i});
  for (const BigRational& v : {a, b})
    if (same_pair(a, b, 1 + v, v) && same_pair(c, d, 1 - v, -v)) out.insert({MSTag::ii, v});
  if (same_pair(a, b, three_halves, half) && sgn(c + d) == 0) out.insert({MSTag::iii});
  if (sgn(a + b) == 0 && same_pair(c, d, three_halves, half)) out.insert({MSTag::iv});
  return out;
}

std::size_t family_arity(Family f) {
  switch (f) {
    case Family::I:
    case Family::III: return 3;
    default: return 2;
  }
}

ParamTuple sample_family(Family f, std::span<const BigRational> x) {
  if (x.size() != family_arity(f))
    throw DomainError(std::string("family ") + family_name(f) + " takes " + std::to_string(family_arity(f)) +
                      " parameters, got " + std::to_string(x.size()));
  const BigRational zero(0);
  switch (f) {
    case Family::I: return {x[0], -x[0], x[1], -x[1], x[2], -x[2]};
    case Family::II: return {x[0], x[1], x[0], x[1], x[0], x[1]};
    case Family::III: return {x[0], x[1], -x[0], -x[1], x[2], -x[2]};
    case Family::IV: return {x[0] + x[1], x[1], x[0] - x[1], -x[1], x[0], zero};
    case Family::V: return {3 * x[0], x[0], x[1], -x[1], 2 * x[0], zero};
    case Family::VI: return {x[1], -x[1], 3 * x[0], x[0], 2 * x[0], zero};
  }
  throw DomainError("unknown family");
}

ParamTuple sample_family(Family f, Rng& rng, long max_num, long max_den) {
  std::vector<BigRational> x;
  for (std::size_t i = 0; i < family_arity(f); ++i) x.push_back(rng.rational(max_num, max_den));
  return sample_family(f, x);
}

std::array<BigRational, 4> sample_ms_family(MSTag tag, std::span<const BigRational> x) {
  const std::size_t arity = tag == MSTag::i ? 0 : 1;
  if (x.size() != arity)
    throw DomainError(std::string("family ") + ms_name(tag) + " takes " + std::to_string(arity) + " parameters");
  const BigRational three_halves(3, 2), half(1, 2);
  switch (tag) {
    case MSTag::i: return {1, 0, 1, 0};
    case MSTag::ii: return {1 + x[0], x[0], 1 - x[0], -x[0]};
    case MSTag::iii: return {three_halves, half, x[0], -x[0]};
    case MSTag::iv: return {x[0], -x[0], three_halves, half};
  }
  throw DomainError("unknown family");
}

ParamTuple lemma_normalized(const ParamTuple& t) {
  auto norm = [](const BigRational& x, const BigRational& y) {
    return sgn(x + y) == 0 ? std::pair<BigRational, BigRational>{0, 0} : std::pair{x, y};
  };
  const auto [a, b] = norm(t.a, t.b);
  const auto [c, d] = norm(t.c, t.d);
  const auto [p, q] = norm(t.p, t.q);
  return {a, b, c, d, p, q};
}

}  // namespace ginv
