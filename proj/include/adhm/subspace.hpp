#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "adhm/matrix.hpp"

namespace adhm {

/// A linear subspace of Q(i)^n, stored by its unique reduced column echelon
/// basis. Two Subspace values are equal iff they describe the same subspace.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Column space of `m`.
  static Subspace span(const RationalMatrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// ambient_dim x dim, reduced column echelon form.
  const RationalMatrix& basis() const { return basis_; }
  /// Row index carrying the leading 1 of each basis column.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// True iff every column of `vectors` lies in the subspace.
  bool contains(const RationalMatrix& vectors) const;
  bool contains(const Subspace& other) const { return contains(other.basis_); }
  /// True iff m maps the subspace into itself.
  bool is_invariant_under(const RationalMatrix& m) const;

  /// Coordinates of vectors known to lie in the subspace, w.r.t. basis().
  RationalMatrix coordinates(const RationalMatrix& vectors) const;

  Subspace operator+(const Subspace& other) const;
  /// {x : y^T x = 0 for all y in the subspace} (bilinear, not Hermitian).
  Subspace annihilator() const;
  /// Standard basis vectors at the non-pivot rows; together with basis()
  /// they form a basis of the ambient space.
  RationalMatrix standard_complement() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right kernel {x : M x = 0} in canonical form; dim = cols - rank.
Subspace kernel_basis(const RationalMatrix& m);

/// Smallest subspace containing `seed` and invariant under every generator.
/// Throws DimensionMismatch if a generator is not square of the seed's size.
Subspace invariant_closure(std::span<const RationalMatrix> generators, const Subspace& seed);

/// Largest subspace invariant under every generator and contained in Ker c.
Subspace max_invariant_in_kernel(std::span<const RationalMatrix> generators, const RationalMatrix& c);

}  // namespace adhm
