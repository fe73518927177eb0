#include "adhm/random.hpp"

#include <limits>
#include <numeric>
#include <vector>

namespace adhm {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool Rng::coin(std::uint64_t numerator, std::uint64_t denominator) {
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(denominator) - 1)) < numerator;
}

mpq_class Rng::rational(std::int64_t bound) {
  mpq_class q(static_cast<long>(uniform(-bound, bound)), static_cast<unsigned long>(uniform(1, bound)));
  q.canonicalize();
  return q;
}

mpq_class Rng::nonzero_rational(std::int64_t bound) {
  for (;;) {
    mpq_class q = rational(bound);
    if (sgn(q) != 0) return q;
  }
}

GR Rng::gaussian(std::int64_t bound) {
  mpq_class re = rational(bound);
  mpq_class im = coin() ? rational(bound) : mpq_class(0);
  return {re, im};
}

GR Rng::nonzero_gaussian(std::int64_t bound) {
  for (;;) {
    GR z = gaussian(bound);
    if (!z.is_zero()) return z;
  }
}

RationalMatrix Rng::matrix(std::size_t rows, std::size_t cols, std::int64_t bound) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = gaussian(bound);
  return m;
}

RationalMatrix Rng::invertible(std::size_t n, std::int64_t bound) {
  RationalMatrix lower = RationalMatrix::identity(n), upper = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = gaussian(bound);
      upper(j, i) = gaussian(bound);
    }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
  RationalMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = nonzero_gaussian(bound);
  return lower * upper * p;
}

}  // namespace adhm
