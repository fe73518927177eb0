#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "adhm/gaussian_rational.hpp"
#include "adhm/matrix.hpp"

namespace adhm {

/// Univariate polynomial over Q(i); coefficients low degree first, no
/// trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GR> coeffs);
  /// x - root
  static Polynomial linear(const GR& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<GR>& coefficients() const { return c_; }
  const GR& leading() const { return c_.back(); }

  GR operator()(const GR& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  struct DivMod;
  DivMod divmod(const Polynomial& divisor) const;

 private:
  void trim();
  std::vector<GR> c_;
};

struct Polynomial::DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Monic gcd.
Polynomial gcd(Polynomial a, Polynomial b);

/// det(x*I - M), monic of degree n.
Polynomial characteristic_polynomial(const RationalMatrix& m);

struct RootWithMultiplicity {
  GR root;
  std::size_t multiplicity;
};

struct GaussianRootResult {
  std::vector<RootWithMultiplicity> roots;  // sorted, distinct
  bool splits = false;                      // multiplicities sum to the degree
};

/// Yun decomposition p = lead * prod_i f_i^(i+1); entry i is f_i (monic,
/// square-free, pairwise coprime, possibly constant 1).
std::vector<Polynomial> squarefree_factorization(const Polynomial& p);

/// Floating-point roots (companion eigenvalues, Newton-polished).
std::vector<std::complex<double>> approximate_roots(const Polynomial& p);

/// All roots of p that lie in Q(i), each verified by exact evaluation.
/// Candidates come from a floating-point solve of the square-free part and are
/// snapped to the lattice (1/L)Z[i], L the leading coefficient after clearing
/// denominators, which contains every Gaussian rational root.
GaussianRootResult gaussian_rational_roots(const Polynomial& p);

}  // namespace adhm
