#include "ginv/tower.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "ginv/errors.hpp"

namespace ginv {

struct TowerElement::Basis {
  std::vector<BigRational> radicands;
  // products[m] = ∏_{i∈m} radicands[i]
  std::vector<BigRational> products;

  explicit Basis(std::vector<BigRational> rads) : radicands(std::move(rads)) {
    products.assign(std::size_t{1} << radicands.size(), BigRational(1));
    for (std::size_t m = 1; m < products.size(); ++m) {
      auto low = static_cast<std::size_t>(std::countr_zero(m));
      products[m] = products[m & (m - 1)] * radicands[low];
    }
  }
};

namespace {

using Basis = TowerElement::Basis;

const std::shared_ptr<const Basis>& rational_basis() {
  static const auto basis = std::make_shared<const Basis>(std::vector<BigRational>{});
  return basis;
}

// √input = scale · ∏_{i∈mask} √basis[i]
struct Image {
  BigRational scale;
  unsigned mask = 0;
};

struct Fold {
  std::shared_ptr<const Basis> basis;
  std::vector<Image> images;
};

BigRational product_of(const std::vector<BigRational>& values, unsigned mask) {
  BigRational prod(1);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (mask & (1u << i)) prod *= values[i];
  return prod;
}

Fold fold(std::span<const BigRational> inputs) {
  std::vector<BigRational> raw;
  std::vector<Image> images;
  images.reserve(inputs.size());
  for (const auto& d : inputs) {
    if (sgn(d) == 0) {
      images.push_back({BigRational(0), 0});
      continue;
    }
    bool found = false;
    for (unsigned mask = 0; mask < (1u << raw.size()); ++mask) {
      if (auto root = rational_sqrt(d / product_of(raw, mask))) {
        images.push_back({*root, mask});
        found = true;
        break;
      }
    }
    if (!found) {
      raw.push_back(d);
      images.push_back({BigRational(1), 1u << (raw.size() - 1)});
    }
  }
  if (raw.size() > TowerElement::kMaxRadicals)
    throw AlignmentError("radical tower needs " + std::to_string(raw.size()) +
                         " independent square roots (at most 3 supported)");

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return raw[i] < raw[j]; });
  std::vector<unsigned> new_bit(raw.size());
  std::vector<BigRational> sorted;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    new_bit[order[pos]] = 1u << pos;
    sorted.push_back(raw[order[pos]]);
  }
  for (auto& img : images) {
    unsigned remapped = 0;
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (img.mask & (1u << i)) remapped |= new_bit[i];
    img.mask = remapped;
  }
  Fold result;
  result.basis = sorted.empty() ? rational_basis() : std::make_shared<const Basis>(std::move(sorted));
  result.images = std::move(images);
  return result;
}

// Maps the input monomial ∏_{i∈subset}√inputs[i] (offset by `shift` bits in
// the caller's coordinate indexing) to scale·basis-monomial.
Image monomial_image(const Fold& f, unsigned subset, std::size_t first, std::size_t count) {
  Image acc{BigRational(1), 0};
  for (std::size_t i = 0; i < count; ++i) {
    if (!(subset & (1u << i))) continue;
    const Image& img = f.images[first + i];
    if (sgn(img.scale) == 0) return {BigRational(0), 0};
    acc.scale *= img.scale * f.basis->products[acc.mask & img.mask];
    acc.mask ^= img.mask;
  }
  return acc;
}

std::vector<BigRational> remap(const Fold& f, std::span<const BigRational> coords, std::size_t first,
                               std::size_t count) {
  std::vector<BigRational> out(f.basis->products.size(), BigRational(0));
  for (unsigned subset = 0; subset < coords.size(); ++subset) {
    if (sgn(coords[subset]) == 0) continue;
    Image img = monomial_image(f, subset, first, count);
    if (sgn(img.scale) == 0) continue;
    out[img.mask] += coords[subset] * img.scale;
  }
  return out;
}

}  // namespace

TowerElement::TowerElement() : basis_(rational_basis()), coords_{BigRational(0)} {}

TowerElement::TowerElement(const BigRational& q) : basis_(rational_basis()), coords_{q} {}

TowerElement::TowerElement(long n) : basis_(rational_basis()), coords_{BigRational(n)} {}

TowerElement::TowerElement(std::shared_ptr<const Basis> basis, std::vector<BigRational> coords)
    : basis_(std::move(basis)), coords_(std::move(coords)) {}

TowerElement TowerElement::make(std::span<const BigRational> radicands,
                                std::span<const BigRational> coords) {
  if (coords.size() > (std::size_t{1} << radicands.size()))
    throw DomainError("tower_make: more coordinates than basis monomials");
  Fold f = fold(radicands);
  auto out = remap(f, coords, 0, radicands.size());
  return TowerElement(f.basis, std::move(out));
}

TowerElement TowerElement::sqrt(const BigRational& d) {
  const BigRational rad[] = {d};
  const BigRational coords[] = {BigRational(0), BigRational(1)};
  return make(rad, coords);
}

std::span<const BigRational> TowerElement::radicands() const { return basis_->radicands; }

bool TowerElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const BigRational& c) { return sgn(c) == 0; });
}

bool TowerElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigRational& c) { return sgn(c) == 0; });
}

bool TowerElement::same_basis(const TowerElement& other) const {
  return basis_ == other.basis_ || basis_->radicands == other.basis_->radicands;
}

bool TowerElement::identical(const TowerElement& other) const {
  return same_basis(other) && coords_ == other.coords_;
}

TowerElement TowerElement::conjugate(std::size_t index) const {
  if (index >= basis_->radicands.size()) throw DomainError("conjugate: radical index out of range");
  TowerElement out = *this;
  for (std::size_t m = 0; m < out.coords_.size(); ++m)
    if (m & (std::size_t{1} << index)) out.coords_[m] = -out.coords_[m];
  return out;
}

TowerElement TowerElement::inverse() const {
  if (is_zero()) throw DivisionByZero("tower_inv: inverse of zero");
  TowerElement acc(1);
  TowerElement norm = *this;
  for (std::size_t i = 0; i < basis_->radicands.size(); ++i) {
    TowerElement conj = norm.conjugate(i);
    acc *= conj;
    norm *= conj;
  }
  if (!norm.is_rational() || sgn(norm.rational_part()) == 0)
    throw InternalInconsistency("tower_inv: norm is not a nonzero rational: " + norm.str());
  BigRational scale = 1 / norm.rational_part();
  for (auto& c : acc.coords_) c *= scale;
  return acc;
}

TowerElement TowerElement::operator-() const {
  TowerElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

TowerElement& TowerElement::operator+=(const TowerElement& rhs) {
  if (rhs.basis_->radicands.empty()) {
    coords_[0] += rhs.coords_[0];
  } else if (basis_->radicands.empty()) {
    BigRational q = coords_[0];
    *this = rhs;
    coords_[0] += q;
  } else {
    if (!same_basis(rhs)) throw AlignmentError("tower add: operands have different radicand lists");
    for (std::size_t m = 0; m < coords_.size(); ++m) coords_[m] += rhs.coords_[m];
  }
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& rhs) { return *this += -rhs; }

TowerElement operator*(const TowerElement& lhs, const TowerElement& rhs) {
  if (rhs.basis_->radicands.empty()) {
    TowerElement out = lhs;
    for (auto& c : out.coords_) c *= rhs.coords_[0];
    return out;
  }
  if (lhs.basis_->radicands.empty()) {
    TowerElement out = rhs;
    for (auto& c : out.coords_) c *= lhs.coords_[0];
    return out;
  }
  if (!lhs.same_basis(rhs)) throw AlignmentError("tower_mul: operands have different radicand lists");
  const auto& products = lhs.basis_->products;
  std::vector<BigRational> out(lhs.coords_.size(), BigRational(0));
  BigRational term;
  for (std::size_t i = 0; i < lhs.coords_.size(); ++i) {
    if (sgn(lhs.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coords_.size(); ++j) {
      if (sgn(rhs.coords_[j]) == 0) continue;
      term = lhs.coords_[i] * rhs.coords_[j];
      if (i & j) term *= products[i & j];
      out[i ^ j] += term;
    }
  }
  return TowerElement(lhs.basis_, std::move(out));
}

TowerElement& TowerElement::operator*=(const TowerElement& rhs) { return *this = *this * rhs; }

TowerElement& TowerElement::operator/=(const TowerElement& rhs) { return *this = *this / rhs; }

bool operator==(const TowerElement& lhs, const TowerElement& rhs) {
  if (lhs.same_basis(rhs)) return lhs.coords_ == rhs.coords_;
  if (lhs.is_rational() && rhs.is_rational()) return lhs.rational_part() == rhs.rational_part();
  try {
    auto [x, y] = align(lhs, rhs);
    return x.coords_ == y.coords_;
  } catch (const AlignmentError&) {
    return false;
  }
}

std::pair<TowerElement, TowerElement> align(const TowerElement& x, const TowerElement& y) {
  if (x.same_basis(y)) return {x, y};
  std::vector<BigRational> inputs(x.basis_->radicands);
  inputs.insert(inputs.end(), y.basis_->radicands.begin(), y.basis_->radicands.end());
  Fold f = fold(inputs);
  auto xs = remap(f, x.coords_, 0, x.basis_->radicands.size());
  auto ys = remap(f, y.coords_, x.basis_->radicands.size(), y.basis_->radicands.size());
  return {TowerElement(f.basis, std::move(xs)), TowerElement(f.basis, std::move(ys))};
}

std::string TowerElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t m = 0; m < coords_.size(); ++m) {
    if (sgn(coords_[m]) == 0) continue;
    BigRational c = coords_[m];
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    bool unit = m != 0 && c == 1;
    if (!unit) os << c.get_str();
    for (std::size_t i = 0; i < basis_->radicands.size(); ++i) {
      if (!(m & (std::size_t{1} << i))) continue;
      if (!unit) os << "*";
      unit = false;
      os << "sqrt(" << basis_->radicands[i].get_str() << ")";
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ginv
