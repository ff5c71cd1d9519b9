#pragma once

#include <cstdint>
#include <random>

#include "ginv/rational.hpp"

namespace ginv {

/// Seeded generator with platform-independent integer draws, so sample
/// plans and certificates are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// n/d with |n| ≤ max_num and 1 ≤ d ≤ max_den.
  BigRational rational(std::int64_t max_num, std::int64_t max_den) {
    BigRational q(static_cast<long>(uniform(-max_num, max_num)), static_cast<unsigned long>(uniform(1, max_den)));
    q.canonicalize();
    return q;
  }

  /// Like rational() but never zero.
  BigRational nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
    BigRational q;
    do {
      q = rational(max_num, max_den);
    } while (sgn(q) == 0);
    return q;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ginv
