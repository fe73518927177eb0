#include "adhm/symbolic.hpp"

#include "adhm/errors.hpp"

namespace adhm {

MatrixPolynomial::MatrixPolynomial(std::size_t variables, std::size_t rows, std::size_t cols)
    : vars_(variables), rows_(rows), cols_(cols) {}

void MatrixPolynomial::add_term(const Monomial& monomial, const RationalMatrix& coeff) {
  if (monomial.size() != vars_) throw DimensionMismatch("monomial arity differs from variable count");
  if (coeff.rows() != rows_ || coeff.cols() != cols_) throw DimensionMismatch("coefficient shape mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RationalMatrix MatrixPolynomial::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? RationalMatrix::zero(rows_, cols_) : it->second;
}

RationalMatrix MatrixPolynomial::evaluate(std::span<const GR> values) const {
  if (values.size() != vars_) throw DimensionMismatch("wrong number of variable values");
  RationalMatrix out = RationalMatrix::zero(rows_, cols_);
  for (const auto& [mono, coeff] : terms_) {
    GR w(1);
    for (std::size_t v = 0; v < vars_; ++v)
      for (unsigned e = 0; e < mono[v]; ++e) w *= values[v];
    if (!w.is_zero()) out += coeff * w;
  }
  return out;
}

MatrixPolynomial MatrixPolynomial::from_blocks(const std::vector<std::vector<MatrixPolynomial>>& blocks) {
  if (blocks.empty() || blocks.front().empty()) throw DimensionMismatch("empty block layout");
  const std::size_t vars = blocks.front().front().vars_;
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (const auto& row : blocks) {
    if (row.size() != blocks.front().size()) throw DimensionMismatch("ragged block layout");
    row_off.push_back(row_off.back() + row.front().rows_);
  }
  for (const auto& b : blocks.front()) col_off.push_back(col_off.back() + b.cols_);

  MatrixPolynomial out(vars, row_off.back(), col_off.back());
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      const auto& b = blocks[i][j];
      if (b.rows_ != row_off[i + 1] - row_off[i] || b.cols_ != col_off[j + 1] - col_off[j] || b.vars_ != vars)
        throw DimensionMismatch("block shape mismatch");
      for (const auto& [mono, coeff] : b.terms_) {
        RationalMatrix placed = RationalMatrix::zero(out.rows_, out.cols_);
        placed.set_block(row_off[i], col_off[j], coeff);
        out.add_term(mono, placed);
      }
    }
  return out;
}

MatrixPolynomial MatrixPolynomial::block(std::size_t row, std::size_t col, std::size_t nrows,
                                         std::size_t ncols) const {
  MatrixPolynomial out(vars_, nrows, ncols);
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, coeff.block(row, col, nrows, ncols));
  return out;
}

MatrixPolynomial operator*(const MatrixPolynomial& a, const MatrixPolynomial& b) {
  if (a.vars_ != b.vars_) throw DimensionMismatch("product of polynomials in different rings");
  if (a.cols_ != b.rows_) throw DimensionMismatch("product of incompatible matrix polynomials");
  MatrixPolynomial out(a.vars_, a.rows_, b.cols_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(a.vars_);
      for (std::size_t v = 0; v < a.vars_; ++v) m[v] = ma[v] + mb[v];
      out.add_term(m, ca * cb);
    }
  return out;
}

MatrixPolynomial linear_form(std::size_t variables, const std::vector<std::pair<int, RationalMatrix>>& terms) {
  if (terms.empty()) throw DimensionMismatch("linear form needs at least one term");
  MatrixPolynomial out(variables, terms.front().second.rows(), terms.front().second.cols());
  for (const auto& [var, coeff] : terms) {
    Monomial m(variables, 0);
    if (var >= 0) m.at(static_cast<std::size_t>(var)) = 1;
    out.add_term(m, coeff);
  }
  return out;
}

}  // namespace adhm
