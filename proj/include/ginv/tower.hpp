#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ginv/rational.hpp"

namespace ginv {

/// Element of Q(√d₁, √d₂, √d₃): the rationals adjoined with at most three
/// formal square roots.
///
/// The radicand list (the "basis") is kept canonical: radicands are nonzero,
/// not rational squares, multiplicatively independent modulo squares, and
/// sorted ascending. Under those conditions the algebra is a field of
/// dimension 2^k, so every nonzero element is invertible. Negative radicands
/// are kept as formal symbols with (√d)² = d.
///
/// Coordinates are indexed by a bitmask over the basis: bit i set means the
/// factor √dᵢ is present, so coord(0) is the rational part.
class TowerElement {
 public:
  static constexpr std::size_t kMaxRadicals = 3;

  TowerElement();
  TowerElement(const BigRational& q);  // NOLINT(google-explicit-constructor)
  TowerElement(long n);                // NOLINT(google-explicit-constructor)

  /// Builds the element Σ coords[m]·∏_{i∈m}√radicands[i] and folds it to
  /// canonical form. `coords` may be shorter than 2^radicands.size(); the
  /// missing entries are zero. Perfect squares fold into rational factors,
  /// zero radicands annihilate their monomials, and radicands that are a
  /// square multiple of a product of earlier ones are rewritten over them.
  static TowerElement make(std::span<const BigRational> radicands,
                           std::span<const BigRational> coords);

  /// √d as a tower element (rational when d is a square).
  static TowerElement sqrt(const BigRational& d);

  std::span<const BigRational> radicands() const;
  std::size_t dimension() const { return coords_.size(); }
  const BigRational& coord(unsigned mask) const { return coords_.at(mask); }
  const BigRational& rational_part() const { return coords_.front(); }

  /// True when every radical coordinate is zero.
  bool is_rational() const;
  bool is_zero() const;

  /// Flips the sign of √dᵢ. A ring automorphism of the tower.
  TowerElement conjugate(std::size_t index) const;

  /// Multiplies by all nontrivial sign-conjugates; the product is rational.
  /// Throws DivisionByZero for zero.
  TowerElement inverse() const;

  TowerElement operator-() const;
  TowerElement& operator+=(const TowerElement& rhs);
  TowerElement& operator-=(const TowerElement& rhs);
  TowerElement& operator*=(const TowerElement& rhs);
  TowerElement& operator/=(const TowerElement& rhs);

  friend TowerElement operator+(TowerElement lhs, const TowerElement& rhs) { return lhs += rhs; }
  friend TowerElement operator-(TowerElement lhs, const TowerElement& rhs) { return lhs -= rhs; }
  friend TowerElement operator*(const TowerElement& lhs, const TowerElement& rhs);
  friend TowerElement operator/(const TowerElement& lhs, const TowerElement& rhs) {
    return lhs * rhs.inverse();
  }

  /// Exact equality; operands over different bases are compared after
  /// alignment.
  friend bool operator==(const TowerElement& lhs, const TowerElement& rhs);

  /// Same canonical representation (basis and coordinates), no alignment.
  bool identical(const TowerElement& other) const;

  std::string str() const;

  struct Basis;

 private:
  TowerElement(std::shared_ptr<const Basis> basis, std::vector<BigRational> coords);
  bool same_basis(const TowerElement& other) const;
  friend std::pair<TowerElement, TowerElement> align(const TowerElement&, const TowerElement&);

  std::shared_ptr<const Basis> basis_;
  std::vector<BigRational> coords_;
};

/// Rewrites both operands over one merged basis. Throws AlignmentError when
/// the merged basis needs more than kMaxRadicals independent radicals.
std::pair<TowerElement, TowerElement> align(const TowerElement& x, const TowerElement& y);

}  // namespace ginv
