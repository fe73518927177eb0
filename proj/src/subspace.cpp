#include "adhm/subspace.hpp"

#include <algorithm>

#include "adhm/errors.hpp"

namespace adhm {

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = RationalMatrix(ambient_dim, 0);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = RationalMatrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const RationalMatrix& m) {
  // RREF of the transpose, read back as columns, is the reduced column
  // echelon form of the column space.
  auto ef = row_reduce(m.transpose());
  Subspace s;
  s.ambient_ = m.rows();
  s.pivots_ = ef.pivots;
  s.basis_ = ef.reduced.block(0, 0, ef.pivots.size(), m.rows()).transpose();
  return s;
}

bool Subspace::contains(const RationalMatrix& vectors) const {
  if (vectors.rows() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  if (vectors.cols() == 0) return true;
  // Reduced echelon basis: a vector lies in the span iff it equals the
  // combination given by its pivot-row entries.
  return basis_ * vectors.select_rows(pivots_) == vectors;
}

bool Subspace::is_invariant_under(const RationalMatrix& m) const {
  if (!m.is_square() || m.rows() != ambient_) throw DimensionMismatch("operator does not act on ambient space");
  return contains(m * basis_);
}

RationalMatrix Subspace::coordinates(const RationalMatrix& vectors) const {
  if (!contains(vectors)) throw DimensionMismatch("vectors do not lie in the subspace");
  return vectors.select_rows(pivots_);
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("sum of subspaces of different spaces");
  return span(hstack(basis_, other.basis_));
}

Subspace Subspace::annihilator() const { return kernel_basis(basis_.transpose()); }

RationalMatrix Subspace::standard_complement() const {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (std::find(pivots_.begin(), pivots_.end(), i) == pivots_.end()) rest.push_back(i);
  RationalMatrix c(ambient_, rest.size());
  for (std::size_t j = 0; j < rest.size(); ++j) c(rest[j], j) = 1;
  return c;
}

Subspace kernel_basis(const RationalMatrix& m) {
  auto ef = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  RationalMatrix k(n, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) k(ef.pivots[r], f) = -ef.reduced(r, free[f]);
  }
  return Subspace::span(k);
}

Subspace invariant_closure(std::span<const RationalMatrix> generators, const Subspace& seed) {
  const std::size_t n = seed.ambient_dim();
  for (const auto& g : generators)
    if (!g.is_square() || g.rows() != n)
      throw DimensionMismatch("generator of size " + std::to_string(g.rows()) + "x" +
                              std::to_string(g.cols()) + " does not act on dimension " + std::to_string(n));
  Subspace current = seed;
  // The dimension strictly grows until the fixed point, so n rounds suffice.
  for (std::size_t round = 0; round <= n; ++round) {
    RationalMatrix stacked = current.basis();
    for (const auto& g : generators) stacked = hstack(stacked, g * current.basis());
    Subspace next = Subspace::span(stacked);
    if (next.dim() == current.dim()) return current;
    current = std::move(next);
  }
  return current;
}

Subspace max_invariant_in_kernel(std::span<const RationalMatrix> generators, const RationalMatrix& c) {
  const std::size_t n = c.cols();
  std::vector<RationalMatrix> transposed;
  transposed.reserve(generators.size());
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != n) throw DimensionMismatch("generator does not act on the domain of c");
    transposed.push_back(g.transpose());
  }
  Subspace rows_of_c = Subspace::span(c.transpose());
  return invariant_closure(transposed, rows_of_c).annihilator();
}

}  // namespace adhm
