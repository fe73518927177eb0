#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "adhm/matrix.hpp"

namespace adhm {

/// Smallest n with M^n = 0, or nullopt when M^k != 0 for k = size(M).
/// The 0x0 matrix has index 0. Throws NotSquare.
std::optional<std::size_t> nilpotency_index(const RationalMatrix& m);

struct Triangularization {
  RationalMatrix change_of_basis;            // g
  std::vector<RationalMatrix> triangular;    // g^{-1} M_j g, upper triangular
  /// joint_eigenvalues[i][j] = (g^{-1} M_j g)(i, i)
  std::vector<std::vector<GR>> joint_eigenvalues;
};

/// Simultaneous upper triangularization of a commuting family over Q(i).
/// Deterministic: at each step the smallest rational eigenvalue (in the
/// (re, im) order) of the first matrix is split off first.
/// Throws NonCommuting, DimensionMismatch, or IrrationalSpectrum when some
/// characteristic polynomial does not split over Q(i).
Triangularization commuting_reduce(std::span<const RationalMatrix> mats);

/// Floating-point joint spectrum of a commuting family, for inputs whose
/// spectrum is not in Q(i). A generic combination is Schur-reduced (complex QR
/// iteration); eigenvalues of each member are averaged over clusters of the
/// combination's spectrum. Each entry is one joint eigenvalue (one value per
/// input matrix), sorted lexicographically.
std::vector<std::vector<std::complex<double>>> approximate_joint_eigenvalues(
    std::span<const RationalMatrix> mats);

/// Snapping tolerance used when reporting approximate eigenvalues.
inline constexpr double kApproxTolerance = 1e-9;

}  // namespace adhm
