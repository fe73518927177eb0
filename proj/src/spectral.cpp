#include "adhm/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>
#include <numeric>

#include "adhm/errors.hpp"
#include "adhm/polynomial.hpp"
#include "adhm/subspace.hpp"

namespace adhm {

std::optional<std::size_t> nilpotency_index(const RationalMatrix& m) {
  if (!m.is_square()) throw NotSquare("nilpotency index of non-square matrix");
  const std::size_t k = m.rows();
  if (k == 0) return 0;
  RationalMatrix p = m;
  for (std::size_t n = 1; n <= k; ++n) {
    if (p.is_zero()) return n;
    p = p * m;
  }
  return std::nullopt;
}

namespace {

std::size_t common_size(std::span<const RationalMatrix> mats) {
  const std::size_t n = mats.empty() ? 0 : mats.front().rows();
  for (const auto& m : mats)
    if (!m.is_square() || m.rows() != n) throw DimensionMismatch("family members must be square of equal size");
  return n;
}

void require_commuting(std::span<const RationalMatrix> mats) {
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = i + 1; j < mats.size(); ++j)
      if (!commutator(mats[i], mats[j]).is_zero())
        throw NonCommuting("matrices " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
}

// Returns g with g^{-1} M g upper triangular for every M.
RationalMatrix triangularizing_basis(const std::vector<RationalMatrix>& mats, std::size_t n) {
  if (n == 0) return RationalMatrix::identity(0);
  if (mats.empty()) return RationalMatrix::identity(n);

  // Common eigenvector: intersect eigenspaces one matrix at a time; each
  // eigenspace is invariant under the remaining (commuting) matrices.
  Subspace common = Subspace::full(n);
  for (const auto& m : mats) {
    RationalMatrix restricted = common.coordinates(m * common.basis());
    auto roots = gaussian_rational_roots(characteristic_polynomial(restricted));
    if (roots.roots.empty())
      throw IrrationalSpectrum("characteristic polynomial has no root in Q(i)");
    const GR& lambda = roots.roots.front().root;
    RationalMatrix shifted = restricted - RationalMatrix::identity(restricted.rows()) * lambda;
    common = Subspace::span(common.basis() * kernel_basis(shifted).basis());
  }

  RationalMatrix v = common.basis().col(0);
  RationalMatrix g1 = hstack(v, Subspace::span(v).standard_complement());
  RationalMatrix g1_inv = inverse(g1);
  std::vector<RationalMatrix> quotient;
  quotient.reserve(mats.size());
  for (const auto& m : mats) quotient.push_back((g1_inv * m * g1).block(1, 1, n - 1, n - 1));
  RationalMatrix rest = triangularizing_basis(quotient, n - 1);
  return g1 * block_diagonal(RationalMatrix::identity(1), rest);
}

}  // namespace

Triangularization commuting_reduce(std::span<const RationalMatrix> mats) {
  const std::size_t n = common_size(mats);
  require_commuting(mats);

  Triangularization out;
  out.change_of_basis = triangularizing_basis(std::vector<RationalMatrix>(mats.begin(), mats.end()), n);
  RationalMatrix g_inv = inverse(out.change_of_basis);
  for (const auto& m : mats) {
    out.triangular.push_back(g_inv * m * out.change_of_basis);
    if (!out.triangular.back().is_upper_triangular())
      throw std::logic_error("commuting_reduce produced a non-triangular form");
  }
  out.joint_eigenvalues.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : out.triangular) out.joint_eigenvalues[i].push_back(t(i, i));
  return out;
}

namespace {

using Cx = std::complex<double>;

Eigen::MatrixXcd to_eigen(const RationalMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_complex();
  return e;
}

// Swap the adjacent diagonal entries k, k+1 of an upper triangular Schur form
// with a Givens rotation, keeping M = U T U^*.
void swap_schur(Eigen::MatrixXcd& t, Eigen::MatrixXcd& u, Eigen::Index k) {
  Cx t11 = t(k, k), t22 = t(k + 1, k + 1), t12 = t(k, k + 1);
  Cx x0 = t12, x1 = t22 - t11;
  double norm = std::sqrt(std::norm(x0) + std::norm(x1));
  if (norm == 0.0) return;
  Cx c = x0 / norm, s = x1 / norm;
  Eigen::Matrix2cd g;
  g << c, -std::conj(s), s, std::conj(c);
  t.middleCols(k, 2) = (t.middleCols(k, 2) * g).eval();
  t.middleRows(k, 2) = (g.adjoint() * t.middleRows(k, 2)).eval();
  u.middleCols(k, 2) = (u.middleCols(k, 2) * g).eval();
  t(k + 1, k) = 0.0;
}

Cx snap(Cx z) {
  double re = std::abs(z.real()) < kApproxTolerance ? 0.0 : z.real();
  double im = std::abs(z.imag()) < kApproxTolerance ? 0.0 : z.imag();
  return {re, im};
}

}  // namespace

std::vector<std::vector<std::complex<double>>> approximate_joint_eigenvalues(
    std::span<const RationalMatrix> mats) {
  const std::size_t n = common_size(mats);
  require_commuting(mats);
  if (n == 0 || mats.empty()) return std::vector<std::vector<Cx>>(n);

  // Generic combination; its eigenvalue multiplicities are read off exactly
  // from the square-free decomposition of its characteristic polynomial.
  RationalMatrix combo = RationalMatrix::zero(n, n);
  for (std::size_t j = 0; j < mats.size(); ++j) {
    GR weight(mpq_class(1, 3 + 2 * static_cast<long>(j)) + mpq_class(static_cast<long>(j)),
              mpq_class(static_cast<long>(j), 7));
    combo += mats[j] * weight;
  }
  struct Cluster {
    Cx center;
    std::size_t multiplicity;
  };
  std::vector<Cluster> clusters;
  auto factors = squarefree_factorization(characteristic_polynomial(combo));
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (const auto& z : approximate_roots(factors[i])) clusters.push_back({z, i + 1});

  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(to_eigen(combo));
  Eigen::MatrixXcd t = schur.matrixT();
  Eigen::MatrixXcd u = schur.matrixU();
  const auto nn = static_cast<Eigen::Index>(n);

  // Assign each Schur diagonal entry to the nearest cluster with capacity.
  std::vector<std::size_t> label(n, 0);
  std::vector<bool> taken(n, false);
  std::vector<std::size_t> order(clusters.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return clusters[a].multiplicity > clusters[b].multiplicity; });
  for (auto c : order) {
    for (std::size_t m = 0; m < clusters[c].multiplicity; ++m) {
      std::size_t best = n;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i]) continue;
        double d = std::abs(t(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) - clusters[c].center);
        if (d < best_d) best_d = d, best = i;
      }
      if (best == n) break;
      taken[best] = true;
      label[best] = c;
    }
  }

  // Make clusters contiguous; the Schur form is then block upper triangular
  // for every member of the family.
  for (std::size_t pass = 0; pass < n; ++pass)
    for (Eigen::Index k = 0; k + 1 < nn; ++k)
      if (label[static_cast<std::size_t>(k)] > label[static_cast<std::size_t>(k + 1)]) {
        swap_schur(t, u, k);
        std::swap(label[static_cast<std::size_t>(k)], label[static_cast<std::size_t>(k + 1)]);
      }

  std::vector<std::vector<Cx>> joint(n, std::vector<Cx>(mats.size()));
  for (std::size_t j = 0; j < mats.size(); ++j) {
    Eigen::MatrixXcd b = u.adjoint() * to_eigen(mats[j]) * u;
    std::size_t start = 0;
    while (start < n) {
      std::size_t end = start;
      while (end < n && label[end] == label[start]) ++end;
      Cx sum = 0;
      for (std::size_t i = start; i < end; ++i) sum += b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
      Cx mean = snap(sum / static_cast<double>(end - start));
      for (std::size_t i = start; i < end; ++i) joint[i][j] = mean;
      start = end;
    }
  }
  std::sort(joint.begin(), joint.end(), [](const auto& a, const auto& b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j].real() != b[j].real()) return a[j].real() < b[j].real();
      if (a[j].imag() != b[j].imag()) return a[j].imag() < b[j].imag();
    }
    return false;
  });
  return joint;
}

}  // namespace adhm
