#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "adhm/matrix.hpp"

namespace adhm {

/// Exponent vector of a monomial in a fixed, ordered set of variables.
using Monomial = std::vector<unsigned>;

/// A polynomial in n commuting variables whose coefficients are matrices of
/// one fixed shape. Zero coefficients are never stored, so two values compare
/// equal exactly when they are the same polynomial.
class MatrixPolynomial {
 public:
  MatrixPolynomial(std::size_t variables, std::size_t rows, std::size_t cols);

  std::size_t variables() const { return vars_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::map<Monomial, RationalMatrix>& terms() const { return terms_; }

  /// Adds coeff * monomial.
  void add_term(const Monomial& monomial, const RationalMatrix& coeff);
  /// Coefficient of a monomial (zero matrix if absent).
  RationalMatrix coefficient(const Monomial& monomial) const;
  RationalMatrix evaluate(std::span<const GR> values) const;
  bool is_zero() const { return terms_.empty(); }

  /// Block matrix of polynomials; blocks[i][j] must have matching shapes.
  static MatrixPolynomial from_blocks(const std::vector<std::vector<MatrixPolynomial>>& blocks);
  /// The block of rows/cols [row, row+nrows) x [col, col+ncols).
  MatrixPolynomial block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const;

  friend MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b);
  friend bool operator==(const MatrixPolynomial&, const MatrixPolynomial&) = default;

 private:
  std::size_t vars_, rows_, cols_;
  std::map<Monomial, RationalMatrix> terms_;
};

/// Convenience: the polynomial  sum_v  var(v) * coeffs[v]  plus constant term.
MatrixPolynomial linear_form(std::size_t variables, const std::vector<std::pair<int, RationalMatrix>>& terms);

}  // namespace adhm
