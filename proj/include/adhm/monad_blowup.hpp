#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adhm/monad_p2.hpp"

namespace adhm {

class SurjectivityViolation : public Error {
 public:
  explicit SurjectivityViolation(std::size_t cokernel_dim)
      : Error("SurjectivityViolation",
              "a1(W1) + a2(W1) + b(C^r) misses " + std::to_string(cokernel_dim) + " dimension(s) of W0"),
        cokernel_dim_(cokernel_dim) {}
  std::size_t cokernel_dim() const { return cokernel_dim_; }

 private:
  std::size_t cokernel_dim_;
};

/// Unvalidated blowup tuple with dim W0 = dim W1 = k:
/// a1, a2 : W1 -> W0,  d : W0 -> W1,  b : C^r -> W0,  c : W1 -> C^r.
class BlowupTuple {
 public:
  BlowupTuple() = default;
  /// Throws DimensionMismatch on any shape error.
  BlowupTuple(std::size_t k, std::size_t r, RationalMatrix a1, RationalMatrix a2, RationalMatrix d,
              RationalMatrix b, RationalMatrix c);

  std::size_t k() const { return k_; }
  std::size_t r() const { return r_; }
  const RationalMatrix& a1() const { return a1_; }
  const RationalMatrix& a2() const { return a2_; }
  const RationalMatrix& d() const { return d_; }
  const RationalMatrix& b() const { return b_; }
  const RationalMatrix& c() const { return c_; }

  friend bool operator==(const BlowupTuple&, const BlowupTuple&) = default;

 private:
  std::size_t k_ = 0, r_ = 0;
  RationalMatrix a1_, a2_, d_, b_, c_;
};

/// a1 d a2 - a2 d a1 + b c
RationalMatrix blowup_defect(const BlowupTuple& m);
/// k - rank [a1 | a2 | b]
std::size_t surjectivity_defect(const BlowupTuple& m);

/// A validated blowup tuple (integrable, [a1 | a2 | b] surjective).
class MonadDataBlowup {
 public:
  const BlowupTuple& tuple() const { return t_; }
  std::size_t k() const { return t_.k(); }
  std::size_t r() const { return t_.r(); }
  const RationalMatrix& a1() const { return t_.a1(); }
  const RationalMatrix& a2() const { return t_.a2(); }
  const RationalMatrix& d() const { return t_.d(); }
  const RationalMatrix& b() const { return t_.b(); }
  const RationalMatrix& c() const { return t_.c(); }

  friend MonadDataBlowup validate(BlowupTuple tuple);
  friend bool operator==(const MonadDataBlowup&, const MonadDataBlowup&) = default;

 private:
  explicit MonadDataBlowup(BlowupTuple t) : t_(std::move(t)) {}
  BlowupTuple t_;
};

/// Checks integrability, then surjectivity. Throws IntegrabilityViolation
/// (with the defect) or SurjectivityViolation (with the cokernel dimension).
MonadDataBlowup validate(BlowupTuple tuple);

/// A point of the blowup: x in P^2 and [y1 : y2] with x1 y1 + x2 y2 = 0,
/// y normalized so its first nonzero coordinate is 1.
class BlowupPoint {
 public:
  /// Throws IncidenceViolation, or PreconditionViolation for y = 0.
  BlowupPoint(ProjectivePoint x, GR y1, GR y2);
  /// The unique point over x when (x1, x2) != 0; y = [x2 : -x1].
  /// Throws PointOnExceptionalLine for x = [0:0:1].
  static BlowupPoint over(const ProjectivePoint& x);
  static BlowupPoint on_exceptional_line(GR y1, GR y2) { return {ProjectivePoint(0, 0, 1), std::move(y1), std::move(y2)}; }

  const ProjectivePoint& x() const { return x_; }
  const GR& y1() const { return y1_; }
  const GR& y2() const { return y2_; }
  bool on_exceptional_line() const { return x_.x1().is_zero() && x_.x2().is_zero(); }

  friend bool operator==(const BlowupPoint&, const BlowupPoint&) = default;

 private:
  ProjectivePoint x_;
  GR y1_, y2_;
};

/// (g0, g1) . (a1, a2, d, b, c) = (g0^-1 a1 g1, g0^-1 a2 g1, g1^-1 d g0, g0^-1 b, c g1).
BlowupTuple act2(const RationalMatrix& g0, const RationalMatrix& g1, const BlowupTuple& m);
MonadDataBlowup act2(const RationalMatrix& g0, const RationalMatrix& g1, const MonadDataBlowup& m);

/// A~(p) : W1 + W0 -> (W0 + W1)^2 + C^r, (4k + r) x 2k. Row blocks W0, W1,
/// W0, W1, C^r; column blocks W1, W0.
RationalMatrix evaluate_A_blowup(const BlowupTuple& m, const ProjectivePoint& x, const GR& y1, const GR& y2);
RationalMatrix evaluate_A_blowup(const BlowupTuple& m, const BlowupPoint& p);
/// B~(p) : (W0 + W1)^2 + C^r -> W0 + W1, 2k x (4k + r).
RationalMatrix evaluate_B_blowup(const BlowupTuple& m, const ProjectivePoint& x, const GR& y1, const GR& y2);
RationalMatrix evaluate_B_blowup(const BlowupTuple& m, const BlowupPoint& p);

/// A~ and B~ as matrix polynomials in (x1, x2, x3, y1, y2).
MatrixPolynomial symbolic_A_blowup(const BlowupTuple& m);
MatrixPolynomial symbolic_B_blowup(const BlowupTuple& m);

/// dim Ker B~(p) - rank A~(p).
std::size_t fiber_dimension_blowup(const MonadDataBlowup& m, const BlowupPoint& p);

/// Exceptional-line points y = [1:0], [0:1], [1:1]; x3 = 0 points; then
/// seeded random affine points (x3 = 1) with their unique y.
std::vector<BlowupPoint> sample_points_blowup(std::size_t count, std::uint64_t seed);

/// The projection (W0 + W1)^2 + C^r -> W^2 + C^r with kernel W0^2 (W = W1
/// via the identity): keeps the W1 blocks and C^r.
RationalMatrix fiber_projection_matrix(std::size_t k, std::size_t r);

struct FiberProjectionReport {
  bool kernel_maps_into_kernel = false;  // p(Ker B~) in Ker B
  bool image_maps_into_image = false;    // p(Im A~) in Im A
  bool injective = false;                // induced map on Ker/Im is injective
  std::size_t blowup_fiber_dim = 0;
  std::size_t p2_fiber_dim = 0;
  bool isomorphism() const {
    return kernel_maps_into_kernel && image_maps_into_image && injective && blowup_fiber_dim == p2_fiber_dim;
  }
};

/// Compares Ker B~/Im A~ at p with Ker B/Im A of the pushed-forward tuple at
/// x, using y rescaled to (x2, -x1). Throws PointOnExceptionalLine.
FiberProjectionReport fiber_projection_report(const MonadDataBlowup& m, const BlowupPoint& p);
bool fiber_projection_check(const MonadDataBlowup& m, const BlowupPoint& p);

}  // namespace adhm
