#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "ginv/params.hpp"
#include "ginv/random.hpp"

namespace ginv {

/// The six solution families of G_{p,q}(G_{a,b}, G_{c,d}) = G_{p,q}:
///   I    a+b = c+d = p+q = 0
///   II   {a,b} = {c,d} = {p,q}
///   III  {a,b} = {−c,−d}, p+q = 0
///   IV   {a,b} = {u+v,v}, {c,d} = {u−v,−v}, {p,q} = {u,0}
///   V    {a,b} = {3w,w}, c+d = 0, {p,q} = {2w,0}
///   VI   a+b = 0, {c,d} = {3w,w}, {p,q} = {2w,0}
enum class Family { I = 1, II, III, IV, V, VI };

const char* family_name(Family f);
/// Parses "I".."VI" (case-insensitive); nullopt otherwise.
std::optional<Family> parse_family(std::string_view text);

struct SolutionFamily {
  Family tag = Family::I;
  std::optional<BigRational> u, v, w;  // witnesses for IV (u, v) and V/VI (w)

  SolutionFamily() = default;
  SolutionFamily(Family f, std::optional<BigRational> u_ = {}, std::optional<BigRational> v_ = {},
                 std::optional<BigRational> w_ = {})
      : tag(f), u(std::move(u_)), v(std::move(v_)), w(std::move(w_)) {}

  std::string str() const;  // e.g. "IV (u=1, v=1/2)"
  friend bool operator==(const SolutionFamily&, const SolutionFamily&) = default;
  friend bool operator<(const SolutionFamily& a, const SolutionFamily& b);
};

/// Every family condition the tuple satisfies, with every witness (the
/// conditions overlap on degenerate tuples).
std::set<SolutionFamily> classify_invariance(const ParamTuple& t);

/// Matkowski–Sutô families, G_{a,b} + G_{c,d} = x + y:
///   i    {a,b} = {c,d} = {1,0}
///   ii   {a,b} = {1+v,v}, {c,d} = {1−v,−v}
///   iii  {a,b} = {3/2,1/2}, c+d = 0
///   iv   a+b = 0, {c,d} = {3/2,1/2}
enum class MSTag { i = 1, ii, iii, iv };

const char* ms_name(MSTag tag);

struct MSFamily {
  MSTag tag = MSTag::i;
  std::optional<BigRational> v;

  MSFamily() = default;
  MSFamily(MSTag t, std::optional<BigRational> v_ = {}) : tag(t), v(std::move(v_)) {}  // NOLINT

  std::string str() const;
  friend bool operator==(const MSFamily&, const MSFamily&) = default;
  friend bool operator<(const MSFamily& a, const MSFamily& b);
};

std::set<MSFamily> classify_matkowski_suto(const BigRational& a, const BigRational& b, const BigRational& c,
                                           const BigRational& d);

/// Builds a member of family f from its free parameters:
///   I: (a, c, p)   II: (a, b)   III: (a, b, p)   IV: (u, v)   V: (w, c)   VI: (w, a)
/// Throws DomainError on the wrong number of parameters.
ParamTuple sample_family(Family f, std::span<const BigRational> params);

/// Member of family f with seeded random parameters.
ParamTuple sample_family(Family f, Rng& rng, long max_num = 20, long max_den = 6);

/// Number of free parameters sample_family expects for f.
std::size_t family_arity(Family f);

/// The members of the Corollary families, by the same convention:
///   i: ()   ii: (v)   iii: (c)   iv: (a)
std::array<BigRational, 4> sample_ms_family(MSTag tag, std::span<const BigRational> params);

/// Replaces every pair with zero sum by (0, 0), the canonical parameters of
/// the geometric mean; pairs that define the same mean then compare equal.
ParamTuple lemma_normalized(const ParamTuple& t);

}  // namespace ginv
