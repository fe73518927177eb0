#pragma once

#include <cstdint>
#include <random>

#include "adhm/gaussian_rational.hpp"
#include "adhm/matrix.hpp"

namespace adhm {

/// Seeded source of small exact values. Only the raw mt19937_64 stream is
/// used (never std::*_distribution, whose output is implementation-defined),
/// so a seed reproduces bit-identical values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(std::uint64_t numerator = 1, std::uint64_t denominator = 2);

  /// p/q with |p| <= bound, 1 <= q <= bound.
  mpq_class rational(std::int64_t bound);
  /// Nonzero variant of rational().
  mpq_class nonzero_rational(std::int64_t bound);
  /// Real part always drawn; imaginary part nonzero with probability 1/2.
  GR gaussian(std::int64_t bound);
  GR nonzero_gaussian(std::int64_t bound);
  RationalMatrix matrix(std::size_t rows, std::size_t cols, std::int64_t bound);
  /// Random invertible matrix (unit-triangular factors times a permutation,
  /// scaled diagonally), so inversion never fails.
  RationalMatrix invertible(std::size_t n, std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace adhm
