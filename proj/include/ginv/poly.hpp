#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ginv/rational.hpp"

namespace ginv {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are keyed by exponent vectors aligned with `variables()`; zero
/// coefficients are never stored. The map is ordered lexicographically with
/// the first variable most significant, so the last entry is the leading
/// term used by division.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(const BigRational& c, std::vector<std::string> variables = {});
  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(const BigRational& c, std::vector<std::string> variables, Exponents exps);

  /// Parses sums of products of integers, variables, powers (^) and
  /// parenthesized subexpressions; '/' is allowed by constants only. When
  /// `variables` is given the result uses exactly that ordering (unknown
  /// names are an error); otherwise names are ordered by first appearance.
  static MultiPoly parse(std::string_view text, std::optional<std::vector<std::string>> variables = std::nullopt);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, BigRational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero if absent).
  BigRational constant_term() const;

  /// Degree in `var`; -1 for the zero polynomial, 0 when var is absent.
  int degree(std::string_view var) const;
  int total_degree() const;

  /// Coefficient of var^k as a polynomial in the remaining variables.
  MultiPoly coefficient(std::string_view var, int k) const;
  /// Coefficient of the given monomial, by variable name ({} = constant).
  BigRational coefficient_of(const std::map<std::string, int>& monomial) const;

  /// Re-expresses the polynomial over `variables`, which must contain every
  /// variable that actually occurs.
  MultiPoly with_variables(const std::vector<std::string>& variables) const;
  /// Drops variables that do not occur in any term.
  MultiPoly without_unused_variables() const;

  BigRational evaluate(const std::map<std::string, BigRational>& point) const;
  /// Substitutes a rational value for one variable, which is removed.
  MultiPoly evaluate(std::string_view var, const BigRational& value) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const BigRational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRational& c) { return a *= c; }
  friend MultiPoly operator*(const BigRational& c, MultiPoly a) { return a *= c; }

  /// Equal as polynomials (variable lists are unified first).
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Canonical text: terms in descending lexicographic order, e.g.
  /// "2100*w^3*v^5 - 3850*w^2*v^4*s".
  std::string str() const;

 private:
  void add_term(const Exponents& e, const BigRational& c);
  std::optional<std::size_t> index_of(std::string_view var) const;

  std::vector<std::string> vars_;
  std::map<Exponents, BigRational> terms_;
};

/// Variable list containing a's variables followed by b's new ones.
std::vector<std::string> merged_variables(const MultiPoly& a, const MultiPoly& b);

MultiPoly pow(const MultiPoly& f, unsigned k);

/// Positive integer weights, one per variable name.
using WeightVector = std::map<std::string, int>;

struct WeightedDegree {
  std::optional<int> degree;  // set when f is weighted-homogeneous
  std::set<int> degrees;      // distinct weighted degrees of the terms
};

/// Throws DomainError for the zero polynomial or a nonpositive weight.
/// Variables without an entry in `weights` count with weight 1.
WeightedDegree weighted_degree(const MultiPoly& f, const WeightVector& weights);

/// Replaces `var` by `g` everywhere.
MultiPoly substitute(const MultiPoly& f, std::string_view var, const MultiPoly& g);

struct DivisionResult {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Multivariate division by a single divisor in lex order.
DivisionResult divide(const MultiPoly& f, const MultiPoly& g);

/// Exact quotient; throws InexactDivision carrying the remainder.
MultiPoly divexact(const MultiPoly& f, const MultiPoly& g);

/// Positive rational c with f/c having coprime integer coefficients
/// (1 for the zero polynomial).
BigRational content(const MultiPoly& f);

enum class ResultantMethod { bareiss, interpolation, cross_check };

/// Resultant of f and g with respect to `var`: the Sylvester determinant,
/// a polynomial in the remaining variables. `bareiss` runs fraction-free
/// elimination over the polynomial ring; `interpolation` evaluates the other
/// variables at 0, 1, …, D (D the Sylvester degree bound) and interpolates;
/// `cross_check` runs both and throws InternalInconsistency on disagreement.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var,
                    ResultantMethod method = ResultantMethod::bareiss);

/// Resultant of two univariate polynomials in the same variable, by
/// fraction-free elimination over the integers.
BigRational univariate_resultant(const MultiPoly& f, const MultiPoly& g);

/// Monic gcd over the rationals of two univariate polynomials.
MultiPoly univariate_gcd(const MultiPoly& f, const MultiPoly& g);

}  // namespace ginv
