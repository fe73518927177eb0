#include "adhm/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>

#include "adhm/errors.hpp"

namespace adhm {

Polynomial::Polynomial(std::vector<GR> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::linear(const GR& root) { return Polynomial({-root, GR(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GR Polynomial::operator()(const GR& x) const {
  GR acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<GR> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * GR(static_cast<long>(i)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  GR inv = leading().inverse();
  std::vector<GR> m = c_;
  for (auto& x : m) x *= inv;
  return Polynomial(std::move(m));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GR> p(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(p));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<GR> d(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
  return Polynomial(std::move(d));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw SingularMatrix("polynomial division by zero");
  std::vector<GR> rem = c_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<GR> quot(static_cast<std::size_t>(degree() - dd + 1));
  GR lead_inv = divisor.leading().inverse();
  for (int i = degree() - dd; i >= 0; --i) {
    GR q = rem[static_cast<std::size_t>(i + dd)] * lead_inv;
    quot[static_cast<std::size_t>(i)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial characteristic_polynomial(const RationalMatrix& m) {
  if (!m.is_square()) throw NotSquare("characteristic polynomial of non-square matrix");
  // Faddeev-LeVerrier recursion.
  const std::size_t n = m.rows();
  std::vector<GR> c(n + 1);
  c[n] = 1;
  RationalMatrix mk = RationalMatrix::zero(n, n);
  const RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = -trace(m * mk) / GR(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

namespace {

mpz_class round_to_integer(const mpq_class& q) {
  mpq_class shifted = q + mpq_class(1, 2);
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return f;
}

}  // namespace

std::vector<std::complex<double>> approximate_roots(const Polynomial& p) {
  const Polynomial monic_poly = p.monic();
  const int n = monic_poly.degree();
  if (n <= 0) return {};
  const auto& c = monic_poly.coefficients();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)].to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<std::complex<double>> roots(solver.eigenvalues().begin(), solver.eigenvalues().end());
  // A few Newton steps tighten the companion eigenvalues.
  for (auto& z : roots) {
    for (int it = 0; it < 8; ++it) {
      std::complex<long double> val = 0, dp = 0, zz(z.real(), z.imag());
      for (int i = n; i >= 0; --i) {
        dp = dp * zz + val;
        auto ci = c[static_cast<std::size_t>(i)].to_complex();
        val = val * zz + std::complex<long double>(ci.real(), ci.imag());
      }
      if (std::abs(dp) == 0.0L) break;
      zz -= val / dp;
      z = {static_cast<double>(zz.real()), static_cast<double>(zz.imag())};
    }
  }
  return roots;
}

std::vector<Polynomial> squarefree_factorization(const Polynomial& p) {
  std::vector<Polynomial> factors;
  if (p.degree() <= 0) return factors;
  const Polynomial one({GR(1)});
  Polynomial f = p.monic();
  Polynomial a = gcd(f, f.derivative());
  Polynomial b = f.divmod(a).quotient;
  Polynomial c = f.derivative().divmod(a).quotient;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    a = gcd(b, d);
    factors.push_back(a);
    b = b.divmod(a).quotient;
    c = d.divmod(a).quotient;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back() == one) factors.pop_back();
  return factors;
}

GaussianRootResult gaussian_rational_roots(const Polynomial& p) {
  GaussianRootResult out;
  if (p.degree() <= 0) {
    out.splits = true;
    return out;
  }
  Polynomial squarefree = p.divmod(gcd(p, p.derivative())).quotient.monic();

  std::vector<GR> candidates;
  if (squarefree.degree() == 1) {
    candidates.push_back(-squarefree.coefficients()[0]);
  } else {
    mpz_class lcm_den = 1;
    for (const auto& x : squarefree.coefficients()) {
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.re().get_den_mpz_t());
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.im().get_den_mpz_t());
    }
    const mpq_class scale(lcm_den);
    for (const auto& z : approximate_roots(squarefree)) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
      mpz_class re = round_to_integer(mpq_class(z.real()) * scale);
      mpz_class im = round_to_integer(mpq_class(z.imag()) * scale);
      candidates.emplace_back(mpq_class(re) / scale, mpq_class(im) / scale);
    }
  }

  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::size_t total = 0;
  for (const auto& z : candidates) {
    if (!squarefree(z).is_zero()) continue;
    std::size_t mult = 0;
    Polynomial rest = p;
    for (;;) {
      auto dm = rest.divmod(Polynomial::linear(z));
      if (!dm.remainder.is_zero()) break;
      rest = std::move(dm.quotient);
      ++mult;
    }
    out.roots.push_back({z, mult});
    total += mult;
  }
  out.splits = total == static_cast<std::size_t>(p.degree());
  return out;
}

}  // namespace adhm
