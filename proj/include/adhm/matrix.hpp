#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "adhm/gaussian_rational.hpp"

namespace adhm {

/// Dense row-major matrix over Q(i). Zero-sized dimensions are legal and show
/// up naturally (charge 0, or an empty block after a splitting).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<GR> entries);
  /// Row-wise literal, e.g. {{1, 0}, {0, 1}}.
  RationalMatrix(std::initializer_list<std::initializer_list<GR>> rows);

  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(std::span<const GR> diag);
  /// Column vector of length n with a single 1 at `index`.
  static RationalMatrix unit_vector(std::size_t n, std::size_t index);
  static RationalMatrix column(std::span<const GR> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  GR& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const GR& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<GR>& entries() const { return data_; }

  bool is_zero() const;
  bool is_upper_triangular() const;

  RationalMatrix transpose() const;
  RationalMatrix conjugate_transpose() const;
  RationalMatrix block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const;
  RationalMatrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  void set_block(std::size_t row, std::size_t col, const RationalMatrix& m);
  RationalMatrix select_rows(std::span<const std::size_t> rows) const;
  RationalMatrix select_cols(std::span<const std::size_t> cols) const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const GR& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const GR& s) { return a *= s; }
  friend RationalMatrix operator*(const GR& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  RationalMatrix operator-() const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GR> data_;
};

using Matrix = RationalMatrix;

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// [a | b]; row counts must agree.
RationalMatrix hstack(std::initializer_list<const RationalMatrix*> parts);
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
/// [a ; b]; column counts must agree.
RationalMatrix vstack(std::initializer_list<const RationalMatrix*> parts);
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix power(const RationalMatrix& m, std::size_t n);
GR trace(const RationalMatrix& m);

struct EchelonForm {
  RationalMatrix reduced;             // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

EchelonForm row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
/// Throws NotSquare or SingularMatrix.
RationalMatrix inverse(const RationalMatrix& m);
bool is_invertible(const RationalMatrix& m);

}  // namespace adhm
