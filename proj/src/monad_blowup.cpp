#include "adhm/monad_blowup.hpp"

#include "adhm/random.hpp"
#include "adhm/stratify.hpp"

namespace adhm {

BlowupTuple::BlowupTuple(std::size_t k, std::size_t r, RationalMatrix a1, RationalMatrix a2, RationalMatrix d,
                         RationalMatrix b, RationalMatrix c)
    : k_(k), r_(r), a1_(std::move(a1)), a2_(std::move(a2)), d_(std::move(d)), b_(std::move(b)), c_(std::move(c)) {
  auto expect = [](const RationalMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
    if (m.rows() != rows || m.cols() != cols)
      throw DimensionMismatch(std::string(name) + " must be " + std::to_string(rows) + "x" + std::to_string(cols) +
                              ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  };
  expect(a1_, k, k, "a1");
  expect(a2_, k, k, "a2");
  expect(d_, k, k, "d");
  expect(b_, k, r, "b");
  expect(c_, r, k, "c");
}

RationalMatrix blowup_defect(const BlowupTuple& m) {
  return m.a1() * m.d() * m.a2() - m.a2() * m.d() * m.a1() + m.b() * m.c();
}

std::size_t surjectivity_defect(const BlowupTuple& m) {
  return m.k() - rank(hstack({&m.a1(), &m.a2(), &m.b()}));
}

MonadDataBlowup validate(BlowupTuple tuple) {
  RationalMatrix defect = blowup_defect(tuple);
  if (!defect.is_zero()) throw IntegrabilityViolation(std::move(defect));
  if (std::size_t coker = surjectivity_defect(tuple); coker != 0) throw SurjectivityViolation(coker);
  return MonadDataBlowup(std::move(tuple));
}

BlowupPoint::BlowupPoint(ProjectivePoint x, GR y1, GR y2) : x_(std::move(x)), y1_(std::move(y1)), y2_(std::move(y2)) {
  if (y1_.is_zero() && y2_.is_zero()) throw PreconditionViolation("[0:0] is not a point of P^1");
  GR inv = (y1_.is_zero() ? y2_ : y1_).inverse();
  y1_ *= inv;
  y2_ *= inv;
  if (!(x_.x1() * y1_ + x_.x2() * y2_).is_zero()) throw IncidenceViolation("x1 y1 + x2 y2 != 0");
}

BlowupPoint BlowupPoint::over(const ProjectivePoint& x) {
  if (x.x1().is_zero() && x.x2().is_zero())
    throw PointOnExceptionalLine("x = [0:0:1] lies under the exceptional line");
  return {x, x.x2(), -x.x1()};
}

BlowupTuple act2(const RationalMatrix& g0, const RationalMatrix& g1, const BlowupTuple& m) {
  const std::size_t k = m.k();
  if (g0.rows() != k || g0.cols() != k || g1.rows() != k || g1.cols() != k)
    throw DimensionMismatch("group element has the wrong size");
  RationalMatrix g0_inv, g1_inv;
  try {
    g0_inv = inverse(g0);
    g1_inv = inverse(g1);
  } catch (const SingularMatrix&) {
    throw SingularGroupElement("group element is not invertible");
  }
  return {k, m.r(), g0_inv * m.a1() * g1, g0_inv * m.a2() * g1, g1_inv * m.d() * g0, g0_inv * m.b(), m.c() * g1};
}

MonadDataBlowup act2(const RationalMatrix& g0, const RationalMatrix& g1, const MonadDataBlowup& m) {
  return validate(act2(g0, g1, m.tuple()));
}

RationalMatrix evaluate_A_blowup(const BlowupTuple& m, const ProjectivePoint& x, const GR& y1, const GR& y2) {
  const std::size_t k = m.k(), r = m.r();
  const auto id = RationalMatrix::identity(k);
  RationalMatrix a(4 * k + r, 2 * k);
  a.set_block(0, 0, m.a1() * x.x3());
  a.set_block(0, k, id * -y2);
  a.set_block(k, 0, id * x.x1() - m.d() * m.a1() * x.x3());
  a.set_block(2 * k, 0, m.a2() * x.x3());
  a.set_block(2 * k, k, id * y1);
  a.set_block(3 * k, 0, id * x.x2() - m.d() * m.a2() * x.x3());
  a.set_block(4 * k, 0, m.c() * x.x3());
  return a;
}

RationalMatrix evaluate_A_blowup(const BlowupTuple& m, const BlowupPoint& p) {
  return evaluate_A_blowup(m, p.x(), p.y1(), p.y2());
}

RationalMatrix evaluate_B_blowup(const BlowupTuple& m, const ProjectivePoint& x, const GR& y1, const GR& y2) {
  const std::size_t k = m.k(), r = m.r();
  const auto id = RationalMatrix::identity(k);
  RationalMatrix b(2 * k, 4 * k + r);
  b.set_block(0, 0, id * x.x2());
  b.set_block(0, k, m.a2() * x.x3());
  b.set_block(0, 2 * k, id * -x.x1());
  b.set_block(0, 3 * k, m.a1() * -x.x3());
  b.set_block(0, 4 * k, m.b() * x.x3());
  b.set_block(k, 0, m.d() * y1);
  b.set_block(k, k, id * y1);
  b.set_block(k, 2 * k, m.d() * y2);
  b.set_block(k, 3 * k, id * y2);
  return b;
}

RationalMatrix evaluate_B_blowup(const BlowupTuple& m, const BlowupPoint& p) {
  return evaluate_B_blowup(m, p.x(), p.y1(), p.y2());
}

namespace {

enum Var { X1 = 0, X2 = 1, X3 = 2, Y1 = 3, Y2 = 4 };

}  // namespace

MatrixPolynomial symbolic_A_blowup(const BlowupTuple& m) {
  const std::size_t k = m.k(), r = m.r();
  const auto id = RationalMatrix::identity(k);
  RationalMatrix ex1(4 * k + r, 2 * k), ex2 = ex1, ex3 = ex1, ey1 = ex1, ey2 = ex1;
  ex3.set_block(0, 0, m.a1());
  ex3.set_block(k, 0, -(m.d() * m.a1()));
  ex3.set_block(2 * k, 0, m.a2());
  ex3.set_block(3 * k, 0, -(m.d() * m.a2()));
  ex3.set_block(4 * k, 0, m.c());
  ex1.set_block(k, 0, id);
  ex2.set_block(3 * k, 0, id);
  ey1.set_block(2 * k, k, id);
  ey2.set_block(0, k, -id);
  return linear_form(5, {{X1, ex1}, {X2, ex2}, {X3, ex3}, {Y1, ey1}, {Y2, ey2}});
}

MatrixPolynomial symbolic_B_blowup(const BlowupTuple& m) {
  const std::size_t k = m.k(), r = m.r();
  const auto id = RationalMatrix::identity(k);
  RationalMatrix ex1(2 * k, 4 * k + r), ex2 = ex1, ex3 = ex1, ey1 = ex1, ey2 = ex1;
  ex2.set_block(0, 0, id);
  ex3.set_block(0, k, m.a2());
  ex1.set_block(0, 2 * k, -id);
  ex3.set_block(0, 3 * k, -m.a1());
  ex3.set_block(0, 4 * k, m.b());
  ey1.set_block(k, 0, m.d());
  ey1.set_block(k, k, id);
  ey2.set_block(k, 2 * k, m.d());
  ey2.set_block(k, 3 * k, id);
  return linear_form(5, {{X1, ex1}, {X2, ex2}, {X3, ex3}, {Y1, ey1}, {Y2, ey2}});
}

std::size_t fiber_dimension_blowup(const MonadDataBlowup& m, const BlowupPoint& p) {
  const std::size_t middle = 4 * m.k() + m.r();
  return middle - rank(evaluate_B_blowup(m.tuple(), p)) - rank(evaluate_A_blowup(m.tuple(), p));
}

std::vector<BlowupPoint> sample_points_blowup(std::size_t count, std::uint64_t seed) {
  std::vector<BlowupPoint> pts{
      BlowupPoint::on_exceptional_line(1, 0), BlowupPoint::on_exceptional_line(0, 1),
      BlowupPoint::on_exceptional_line(1, 1), BlowupPoint::over({1, 0, 0}),
      BlowupPoint::over({0, 1, 0}),           BlowupPoint::over({1, 1, 0}),
  };
  Rng rng(seed);
  while (pts.size() < count) {
    GR x1 = rng.gaussian(8), x2 = rng.gaussian(8);
    if (x1.is_zero() && x2.is_zero()) continue;
    pts.push_back(BlowupPoint::over({x1, x2, 1}));
  }
  if (pts.size() > count) pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(count), pts.end());
  return pts;
}

RationalMatrix fiber_projection_matrix(std::size_t k, std::size_t r) {
  RationalMatrix p(2 * k + r, 4 * k + r);
  for (std::size_t i = 0; i < k; ++i) {
    p(i, k + i) = 1;
    p(k + i, 3 * k + i) = 1;
  }
  for (std::size_t i = 0; i < r; ++i) p(2 * k + i, 4 * k + i) = 1;
  return p;
}

FiberProjectionReport fiber_projection_report(const MonadDataBlowup& m, const BlowupPoint& p) {
  if (p.on_exceptional_line()) throw PointOnExceptionalLine("fiber projection is only defined off L");
  const ProjectivePoint& x = p.x();
  // Off L the y-sections are rescaled to y1 = x2, y2 = -x1.
  const GR y1 = x.x2(), y2 = -x.x1();
  const RationalMatrix a_tilde = evaluate_A_blowup(m.tuple(), x, y1, y2);
  const RationalMatrix b_tilde = evaluate_B_blowup(m.tuple(), x, y1, y2);
  const P2Tuple pushed = pushforward(m.tuple());
  const RationalMatrix a = evaluate_A(pushed, x);
  const RationalMatrix b = evaluate_B(pushed, x);
  const RationalMatrix proj = fiber_projection_matrix(m.k(), m.r());

  const RationalMatrix ker_tilde = kernel_basis(b_tilde).basis();
  const RationalMatrix projected_kernel = proj * ker_tilde;
  const std::size_t rank_a_tilde = rank(a_tilde), rank_a = rank(a);

  FiberProjectionReport rep;
  rep.kernel_maps_into_kernel = (b * projected_kernel).is_zero();
  rep.image_maps_into_image = Subspace::span(a).contains(proj * a_tilde);
  rep.blowup_fiber_dim = ker_tilde.cols() - rank_a_tilde;
  rep.p2_fiber_dim = (a.rows() - rank(b)) - rank_a;
  // Injective on Ker B~ / Im A~: the image of Ker B~ in Ker B / Im A has the
  // full dimension of the source.
  rep.injective = rank(hstack(projected_kernel, a)) - rank_a == rep.blowup_fiber_dim;
  return rep;
}

bool fiber_projection_check(const MonadDataBlowup& m, const BlowupPoint& p) {
  return fiber_projection_report(m, p).isomorphism();
}

}  // namespace adhm
