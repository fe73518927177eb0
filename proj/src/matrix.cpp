#include "adhm/matrix.hpp"

#include <ostream>

#include "adhm/errors.hpp"

namespace adhm {

namespace {

std::string shape(const RationalMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<GR> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw DimensionMismatch("entry count " + std::to_string(data_.size()) + " does not match " +
                            std::to_string(rows) + "x" + std::to_string(cols));
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<GR>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const GR> diag) {
  RationalMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RationalMatrix RationalMatrix::unit_vector(std::size_t n, std::size_t index) {
  RationalMatrix v(n, 1);
  v(index, 0) = 1;
  return v;
}

RationalMatrix RationalMatrix::column(std::span<const GR> entries) {
  return {entries.size(), 1, std::vector<GR>(entries.begin(), entries.end())};
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool RationalMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i && j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::conjugate_transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

RationalMatrix RationalMatrix::block(std::size_t row, std::size_t col, std::size_t nrows,
                                     std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_)
    throw DimensionMismatch("block out of range of " + shape(*this));
  RationalMatrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row + i, col + j);
  return b;
}

void RationalMatrix::set_block(std::size_t row, std::size_t col, const RationalMatrix& m) {
  if (row + m.rows_ > rows_ || col + m.cols_ > cols_)
    throw DimensionMismatch("set_block out of range of " + shape(*this));
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(row + i, col + j) = m(i, j);
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> rows) const {
  RationalMatrix s(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(rows[i], j);
  return s;
}

RationalMatrix RationalMatrix::select_cols(std::span<const std::size_t> cols) const {
  RationalMatrix s(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(i, cols[j]);
  return s;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("cannot add " + shape(*this) + " and " + shape(o));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionMismatch("cannot subtract " + shape(o) + " from " + shape(*this));
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const GR& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix n(*this);
  for (auto& x : n.data_) x = -x;
  return n;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
  RationalMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const GR& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GR& y = b(l, j);
        if (!y.is_zero()) p(i, j) += x * y;
      }
    }
  return p;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
  }
  return os << ']';
}

RationalMatrix hstack(std::initializer_list<const RationalMatrix*> parts) {
  std::size_t rows = parts.size() ? (*parts.begin())->rows() : 0, cols = 0;
  for (const auto* p : parts) {
    if (p->rows() != rows) throw DimensionMismatch("hstack row mismatch");
    cols += p->cols();
  }
  RationalMatrix out(rows, cols);
  std::size_t at = 0;
  for (const auto* p : parts) {
    out.set_block(0, at, *p);
    at += p->cols();
  }
  return out;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) { return hstack({&a, &b}); }

RationalMatrix vstack(std::initializer_list<const RationalMatrix*> parts) {
  std::size_t cols = parts.size() ? (*parts.begin())->cols() : 0, rows = 0;
  for (const auto* p : parts) {
    if (p->cols() != cols) throw DimensionMismatch("vstack column mismatch");
    rows += p->rows();
  }
  RationalMatrix out(rows, cols);
  std::size_t at = 0;
  for (const auto* p : parts) {
    out.set_block(at, 0, *p);
    at += p->rows();
  }
  return out;
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) { return vstack({&a, &b}); }

RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

RationalMatrix power(const RationalMatrix& m, std::size_t n) {
  if (!m.is_square()) throw NotSquare("power of non-square matrix");
  RationalMatrix p = RationalMatrix::identity(m.rows());
  for (std::size_t i = 0; i < n; ++i) p = p * m;
  return p;
}

GR trace(const RationalMatrix& m) {
  if (!m.is_square()) throw NotSquare("trace of non-square matrix");
  GR t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

EchelonForm row_reduce(RationalMatrix m) {
  EchelonForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    GR inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      GR f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw NotSquare("inverse of non-square " + shape(m) + " matrix");
  const std::size_t n = m.rows();
  auto ef = row_reduce(hstack(m, RationalMatrix::identity(n)));
  if (ef.pivots.size() < n || (n > 0 && ef.pivots[n - 1] >= n))
    throw SingularMatrix("matrix is singular");
  return ef.reduced.block(0, n, n, n);
}

bool is_invertible(const RationalMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

}  // namespace adhm
