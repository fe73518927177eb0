#include "doctest.h"

#include "adhm/instance_gen.hpp"
#include "adhm/monad_blowup.hpp"
#include "adhm/random.hpp"

using namespace adhm;

namespace {

BlowupTuple k1_valid() { return {1, 1, {{1}}, {{1}}, {{0}}, {{1}}, {{0}}}; }

BlowupTuple k2_valid() {
  return {2, 2, RationalMatrix::identity(2), {{0, 0}, {1, 0}}, {{0, 1}, {0, 0}}, RationalMatrix::identity(2),
          {{-1, 0}, {0, 1}}};
}

BlowupTuple random_raw(Rng& rng, std::size_t k, std::size_t r) {
  return {k, r, rng.matrix(k, k, 4), rng.matrix(k, k, 4), rng.matrix(k, k, 4), rng.matrix(k, r, 4), rng.matrix(r, k, 4)};
}

// [[defect x3^2, -sigma 1], [sigma 1, 0]] with sigma = x1 y1 + x2 y2.
MatrixPolynomial expected_product(const BlowupTuple& t) {
  const std::size_t k = t.k();
  MatrixPolynomial p(5, 2 * k, 2 * k);
  RationalMatrix corner(2 * k, 2 * k), sigma(2 * k, 2 * k);
  corner.set_block(0, 0, blowup_defect(t));
  sigma.set_block(0, k, -RationalMatrix::identity(k));
  sigma.set_block(k, 0, RationalMatrix::identity(k));
  p.add_term({0, 0, 2, 0, 0}, corner);
  p.add_term({1, 0, 0, 1, 0}, sigma);
  p.add_term({0, 1, 0, 0, 1}, sigma);
  return p;
}

}  // namespace

TEST_SUITE("monad_blowup") {
  TEST_CASE("validation examples") {
    CHECK_NOTHROW(validate(k1_valid()));
    BlowupTuple bad{1, 1, {{1}}, {{1}}, {{0}}, {{1}}, {{1}}};
    try {
      validate(bad);
      FAIL("expected IntegrabilityViolation");
    } catch (const IntegrabilityViolation& e) {
      CHECK(e.defect() == RationalMatrix{{1}});
      CHECK(e.kind() == "IntegrabilityViolation");
    }
    CHECK(blowup_defect(k2_valid()).is_zero());
    CHECK_NOTHROW(validate(k2_valid()));

    BlowupTuple not_onto{2, 1, RationalMatrix(2, 2), RationalMatrix(2, 2), RationalMatrix(2, 2), {{1}, {0}}, RationalMatrix(1, 2)};
    try {
      validate(not_onto);
      FAIL("expected SurjectivityViolation");
    } catch (const SurjectivityViolation& e) {
      CHECK(e.cokernel_dim() == 1);
    }
    CHECK_THROWS_AS(BlowupTuple(1, 1, {{1}}, {{1}}, RationalMatrix(2, 2), {{1}}, {{0}}), DimensionMismatch);
  }

  TEST_CASE("group action") {
    const MonadDataBlowup m = validate(k2_valid());
    const RationalMatrix id = RationalMatrix::identity(2);
    CHECK(act2(id, id, m) == m);
    const MonadDataBlowup scaled = act2(id * GR(2), id, m);
    CHECK(scaled.a1() == m.a1() * GR(mpq_class(1, 2)));
    CHECK(scaled.a2() == m.a2() * GR(mpq_class(1, 2)));
    CHECK(scaled.b() == m.b() * GR(mpq_class(1, 2)));
    CHECK(scaled.d() == m.d() * GR(2));
    CHECK(scaled.c() == m.c());
    Rng rng(31);
    const RationalMatrix g0 = rng.invertible(2, 3), g1 = rng.invertible(2, 3);
    CHECK(act2(inverse(g0), inverse(g1), act2(g0, g1, m)) == m);
    CHECK_THROWS_AS(act2(RationalMatrix(2, 2), id, m), SingularGroupElement);
  }

  TEST_CASE("blowup points") {
    const BlowupPoint p(ProjectivePoint(1, 2, 0), 4, -2);
    CHECK(p.y1() == GR(1));
    CHECK(p.y2() == GR(mpq_class(-1, 2)));
    CHECK_THROWS_AS(BlowupPoint(ProjectivePoint(1, 0, 0), 1, 0), IncidenceViolation);
    CHECK_THROWS_AS(BlowupPoint::over(ProjectivePoint(0, 0, 1)), PointOnExceptionalLine);
    CHECK(BlowupPoint::over(ProjectivePoint(1, 1, 0)).y2() == GR(-1));
    CHECK(BlowupPoint::on_exceptional_line(0, 3).on_exceptional_line());
  }

  TEST_CASE("pointwise products vanish for valid data") {
    const auto t1 = k1_valid();
    const auto e = BlowupPoint::on_exceptional_line(1, 0);
    CHECK((evaluate_B_blowup(t1, e) * evaluate_A_blowup(t1, e)).is_zero());
    const BlowupPoint inf(ProjectivePoint(1, 0, 0), 0, 1);
    CHECK((evaluate_B_blowup(t1, inf) * evaluate_A_blowup(t1, inf)).is_zero());

    Rng rng(32);
    const BlowupTuple raw = random_raw(rng, 2, 1);
    const RationalMatrix prod = evaluate_B_blowup(raw, e) * evaluate_A_blowup(raw, e);
    CHECK(prod.block(0, 0, 2, 2) == blowup_defect(raw));
  }

  TEST_CASE("symbolic blowup identity on random raw tuples") {
    Rng rng(33);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t k = static_cast<std::size_t>(rng.uniform(0, 3)), r = static_cast<std::size_t>(rng.uniform(1, 2));
      const BlowupTuple raw = random_raw(rng, k, r);
      CHECK(symbolic_B_blowup(raw) * symbolic_A_blowup(raw) == expected_product(raw));
    }
  }

  TEST_CASE("sample points are incident and include the exceptional line") {
    const auto pts = sample_points_blowup(12, 4);
    REQUIRE(pts.size() == 12);
    std::size_t on_line = 0;
    for (const auto& p : pts) {
      CHECK((p.x().x1() * p.y1() + p.x().x2() * p.y2()).is_zero());
      on_line += p.on_exceptional_line();
    }
    CHECK(on_line >= 3);
  }

  TEST_CASE("fiber dimension is invariant under the group action") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const MonadDataBlowup m = validate(std::get<BlowupTuple>(generate({2, 2, seed, Family::blowup_generic})));
      Rng rng(seed + 100);
      const MonadDataBlowup moved = act2(rng.invertible(2, 3), rng.invertible(2, 3), m);
      for (const auto& p : sample_points_blowup(8, seed)) CHECK(fiber_dimension_blowup(m, p) == fiber_dimension_blowup(moved, p));
    }
  }

  TEST_CASE("fiber projection") {
    const MonadDataBlowup m1 = validate(k1_valid());
    CHECK(fiber_projection_check(m1, BlowupPoint::over(ProjectivePoint(1, 1, 0))));
    const MonadDataBlowup m2 = validate(k2_valid());
    const auto report = fiber_projection_report(m2, BlowupPoint::over(ProjectivePoint(1, 0, 1)));
    CHECK(report.kernel_maps_into_kernel);
    CHECK(report.image_maps_into_image);
    CHECK(report.injective);
    CHECK(report.blowup_fiber_dim == report.p2_fiber_dim);
    CHECK(report.isomorphism());
    CHECK_THROWS_AS(fiber_projection_check(m2, BlowupPoint::on_exceptional_line(1, 0)), PointOnExceptionalLine);
  }
}
