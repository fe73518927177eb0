#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "adhm/errors.hpp"
#include "adhm/matrix.hpp"
#include "adhm/subspace.hpp"
#include "adhm/symbolic.hpp"

namespace adhm {

/// Raised when a tuple fails the integrability condition; carries the defect.
class IntegrabilityViolation : public Error {
 public:
  explicit IntegrabilityViolation(RationalMatrix defect)
      : Error("IntegrabilityViolation", "integrability condition fails"), defect_(std::move(defect)) {}
  const RationalMatrix& defect() const { return defect_; }

 private:
  RationalMatrix defect_;
};

/// Unvalidated ADHM tuple (a1, a2, b, c) on W = Q(i)^k with framing rank r:
/// a1, a2 : W -> W,  b : Q(i)^r -> W,  c : W -> Q(i)^r.
/// Only the shapes are checked.
class P2Tuple {
 public:
  P2Tuple() = default;
  P2Tuple(std::size_t k, std::size_t r, RationalMatrix a1, RationalMatrix a2, RationalMatrix b,
          RationalMatrix c);
  static P2Tuple zero(std::size_t k, std::size_t r);

  std::size_t k() const { return k_; }
  std::size_t r() const { return r_; }
  const RationalMatrix& a1() const { return a1_; }
  const RationalMatrix& a2() const { return a2_; }
  const RationalMatrix& b() const { return b_; }
  const RationalMatrix& c() const { return c_; }

  friend bool operator==(const P2Tuple&, const P2Tuple&) = default;

 private:
  std::size_t k_ = 0, r_ = 0;
  RationalMatrix a1_, a2_, b_, c_;
};

/// [a1, a2] + b c
RationalMatrix integrability_defect(const P2Tuple& m);

/// A point of the space of integrable tuples; construction enforces
/// [a1, a2] + b c = 0 (throws IntegrabilityViolation).
class MonadDataP2 {
 public:
  explicit MonadDataP2(P2Tuple tuple);

  const P2Tuple& tuple() const { return t_; }
  std::size_t k() const { return t_.k(); }
  std::size_t r() const { return t_.r(); }
  const RationalMatrix& a1() const { return t_.a1(); }
  const RationalMatrix& a2() const { return t_.a2(); }
  const RationalMatrix& b() const { return t_.b(); }
  const RationalMatrix& c() const { return t_.c(); }

  friend bool operator==(const MonadDataP2&, const MonadDataP2&) = default;

 private:
  P2Tuple t_;
};

/// Point [x1 : x2 : x3] of P^2, normalized so the first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  /// Throws PreconditionViolation when all coordinates vanish.
  ProjectivePoint(GR x1, GR x2, GR x3);

  const GR& x1() const { return x_[0]; }
  const GR& x2() const { return x_[1]; }
  const GR& x3() const { return x_[2]; }
  std::span<const GR, 3> coords() const { return x_; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  std::array<GR, 3> x_;
};

/// g . (a1, a2, b, c) = (g^-1 a1 g, g^-1 a2 g, g^-1 b, c g).
/// Throws SingularGroupElement (or DimensionMismatch for a wrong size).
P2Tuple act(const RationalMatrix& g, const P2Tuple& m);
MonadDataP2 act(const RationalMatrix& g, const MonadDataP2& m);

/// Smallest (a1, a2)-invariant subspace containing Im b.
Subspace min_b_special(const MonadDataP2& m);
/// Largest (a1, a2)-invariant subspace contained in Ker c.
Subspace max_c_special(const MonadDataP2& m);
/// Only special subspaces are W (b-special) and 0 (c-special).
bool is_nondegenerate(const MonadDataP2& m);

/// A(x) : W -> W + W + C^r,  rows (x1 - a1 x3; x2 - a2 x3; c x3).
/// The coordinate overloads take the given (unnormalized) homogeneous values.
RationalMatrix evaluate_A(const P2Tuple& m, const GR& x1, const GR& x2, const GR& x3);
RationalMatrix evaluate_A(const P2Tuple& m, const ProjectivePoint& p);
/// B(x) : W + W + C^r -> W,  columns (-x2 + a2 x3, x1 - a1 x3, b x3).
RationalMatrix evaluate_B(const P2Tuple& m, const GR& x1, const GR& x2, const GR& x3);
RationalMatrix evaluate_B(const P2Tuple& m, const ProjectivePoint& p);

/// A and B as matrix polynomials in (x1, x2, x3).
MatrixPolynomial symbolic_A(const P2Tuple& m);
MatrixPolynomial symbolic_B(const P2Tuple& m);

/// dim Ker B(p) - rank A(p).
std::size_t fiber_dimension(const MonadDataP2& m, const ProjectivePoint& p);
/// First sample at which the fiber dimension differs from r, if any.
std::optional<ProjectivePoint> first_degenerate_point(const MonadDataP2& m,
                                                      std::span<const ProjectivePoint> samples);
/// [0:0:1], [1:0:0], [0:1:0], [1:1:1], then seeded random points.
std::vector<ProjectivePoint> sample_points_p2(std::size_t count, std::uint64_t seed);

/// a1, a2 nilpotent and c vanishes on the (a1, a2)-closure of Im b, i.e.
/// c w(a1, a2) b = 0 for every word w including the empty one.
bool is_concentrated_at_origin(const MonadDataP2& m);

enum class SpectrumMode { exact, float_fallback };

using PointPair = std::array<GR, 2>;
using ApproxPointPair = std::array<std::complex<double>, 2>;

/// Canonical completely reducible representative: nondegenerate reduced data
/// of charge l plus k - l joint eigenvalue pairs.
struct DUPoint {
  MonadDataP2 reduced;
  /// Sorted. Empty when `approximate` is set.
  std::vector<PointPair> points;
  /// Set when the exact spectrum left Q(i) and the float fallback ran.
  bool approximate = false;
  std::vector<ApproxPointPair> approximate_points;

  std::size_t charge() const { return reduced.k(); }
  std::size_t point_count() const { return approximate ? approximate_points.size() : points.size(); }
};

/// Recursively splits off the maximal c-special subspace (first) or the
/// minimal b-special subspace, passes to the orbit closure by dropping the
/// off-diagonal blocks, and collects the commuting discarded blocks as points.
/// Throws IrrationalSpectrum in exact mode when a discarded block's spectrum
/// is not in Q(i).
DUPoint canonical_reduction(const MonadDataP2& m, SpectrumMode mode = SpectrumMode::exact);

}  // namespace adhm
