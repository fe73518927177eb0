#pragma once

// Reference computations used only by the tests. They avoid the library's
// row reduction so that agreement is evidence rather than tautology.

#include <optional>
#include <utility>
#include <vector>

#include "adhm/matrix.hpp"
#include "adhm/subspace.hpp"

namespace oracle {

using adhm::GR;
using adhm::RationalMatrix;

/// Determinant by fraction-free (Bareiss) elimination with row swaps.
inline GR determinant(RationalMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return GR(1);
  GR sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k).is_zero()) ++swap;
      if (swap == n) return GR(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// The unique x with A x = y for A of full column rank, via the normal
/// equations A^H A x = A^H y and Cramer's rule. nullopt if A^H A is singular
/// or the solution does not satisfy A x = y.
inline std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& y) {
  const RationalMatrix ah = a.conjugate_transpose();
  const RationalMatrix gram = ah * a, rhs = ah * y;
  const GR det = determinant(gram);
  if (det.is_zero()) return std::nullopt;
  RationalMatrix x(gram.cols(), 1);
  for (std::size_t j = 0; j < gram.cols(); ++j) {
    RationalMatrix replaced = gram;
    for (std::size_t i = 0; i < gram.rows(); ++i) replaced(i, j) = rhs(i, 0);
    x(j, 0) = determinant(replaced) / det;
  }
  if (a * x != y) return std::nullopt;
  return x;
}

/// Rank as the size of the largest nonvanishing leading minor after greedy
/// column selection: a column is kept when it is independent of those kept,
/// tested by the Gram determinant.
inline std::size_t rank(const RationalMatrix& m) {
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    kept.push_back(j);
    const RationalMatrix sub = m.select_cols(kept);
    if (determinant(sub.conjugate_transpose() * sub).is_zero()) kept.pop_back();
  }
  return kept.size();
}

/// Largest subspace inside Ker c invariant under the generators, by the
/// descending iteration V <- V cap a1^-1(V) cap a2^-1(V) from V = Ker c.
inline adhm::Subspace max_invariant_in_kernel(const std::vector<RationalMatrix>& gens, const RationalMatrix& c) {
  adhm::Subspace v = adhm::kernel_basis(c);
  for (;;) {
    // Rows cutting out V: the transpose of a basis of its annihilator.
    const RationalMatrix eq = v.annihilator().basis().transpose();
    RationalMatrix stacked = eq;
    for (const auto& g : gens) stacked = adhm::vstack(stacked, eq * g);
    adhm::Subspace next = adhm::kernel_basis(stacked);
    if (next == v) return v;
    v = next;
  }
}

/// Sum of w(gens) * seed over every word of length < n, the literal span.
inline adhm::Subspace word_span(const std::vector<RationalMatrix>& gens, const RationalMatrix& seed, std::size_t n) {
  std::vector<RationalMatrix> level{seed};
  RationalMatrix all = seed;
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<RationalMatrix> next;
    for (const auto& v : level)
      for (const auto& g : gens) next.push_back(g * v);
    for (const auto& v : next) all = adhm::hstack(all, v);
    level = std::move(next);
  }
  return adhm::Subspace::span(all);
}

}  // namespace oracle
