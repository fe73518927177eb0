#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <iosfwd>
#include <string>

namespace adhm {

/// An element re + i*im of Q(i) with arbitrary-precision rational parts.
///
/// Both parts are kept in canonical GMP form (reduced, positive denominator),
/// so equality is plain field comparison.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(implicit)
  GaussianRational(mpq_class re, mpq_class im = 0);

  /// Parses "p", "p/q" for each part. Throws ParseError on malformed input or
  /// a zero denominator.
  static GaussianRational parse(const std::string& re, const std::string& im);
  static GaussianRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws SingularMatrix on zero.
  GaussianRational inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  // Lexicographic on (re, im); a total order used only for canonical sorting.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

using GR = GaussianRational;

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Canonical "p/q" (or "p" for integers) text of a rational.
std::string rational_to_string(const mpq_class& q);
/// Inverse of rational_to_string; throws ParseError.
mpq_class parse_rational(const std::string& text);

}  // namespace adhm
