#pragma once

#include <array>
#include <string>
#include <utility>

#include "ginv/rational.hpp"

namespace ginv {

/// Parameters of a Gini mean G_{p,q}; stored with p ≥ q since the mean is
/// symmetric in its parameters.
struct GiniParams {
  BigRational p;
  BigRational q;

  GiniParams() = default;
  GiniParams(BigRational first, BigRational second) : p(std::move(first)), q(std::move(second)) {
    if (p < q) std::swap(p, q);
  }

  friend bool operator==(const GiniParams&, const GiniParams&) = default;
};

/// The six parameters of G_{p,q}(G_{a,b}(x,y), G_{c,d}(x,y)) = G_{p,q}(x,y).
/// Each pair is normalized descending, so member-wise equality is multiset
/// equality of {a,b}, {c,d}, {p,q}.
struct ParamTuple {
  BigRational a, b, c, d, p, q;

  ParamTuple() = default;
  ParamTuple(BigRational a_, BigRational b_, BigRational c_, BigRational d_, BigRational p_, BigRational q_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), p(std::move(p_)), q(std::move(q_)) {
    if (a < b) std::swap(a, b);
    if (c < d) std::swap(c, d);
    if (p < q) std::swap(p, q);
  }

  GiniParams inner_first() const { return {a, b}; }
  GiniParams inner_second() const { return {c, d}; }
  GiniParams outer() const { return {p, q}; }
  std::array<BigRational, 6> values() const { return {a, b, c, d, p, q}; }

  std::string str() const {
    return "(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) + ", " + to_string(d) + ", " +
           to_string(p) + ", " + to_string(q) + ")";
  }

  friend bool operator==(const ParamTuple&, const ParamTuple&) = default;
};

}  // namespace ginv
