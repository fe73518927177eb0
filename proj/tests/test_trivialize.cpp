#include "doctest.h"

#include "adhm/instance_gen.hpp"
#include "adhm/trivialize.hpp"
#include "oracles.hpp"

using namespace adhm;

namespace {

// k = 1, r = 1, a = 0, b = 1, c = 0.
MonadDataP2 scalar_data() { return MonadDataP2(P2Tuple(1, 1, {{0}}, {{0}}, {{1}}, {{0}})); }

// k = 2, r = 1, a1 = J (J e2 = e1), a2 = 0, b = e1, c = 0.
MonadDataP2 jordan_data() {
  return MonadDataP2(P2Tuple(2, 1, {{0, 1}, {0, 0}}, RationalMatrix(2, 2), {{1}, {0}}, RationalMatrix(1, 2)));
}

RationalMatrix column(std::initializer_list<GR> v) {
  std::vector<GR> entries(v);
  return RationalMatrix::column(entries);
}

MonadDataP2 concentrated(std::size_t k, std::size_t r, std::uint64_t seed) {
  return MonadDataP2(std::get<P2Tuple>(generate({k, r, seed, Family::block_concentrated})));
}

}  // namespace

TEST_SUITE("trivialize") {
  TEST_CASE("first section") {
    const MonadDataP2 m = scalar_data();
    CHECK(section_s1(m, 1, ChartPoint::u1(5, 0)) == column({0, 0, 1}));
    CHECK(section_s1(m, 1, ChartPoint::u1(0, 2)) == column({0, -2, 1}));
    const MonadDataP2 j = jordan_data();
    const ChartPoint p = ChartPoint::u1(1, 1);
    CHECK((evaluate_B(j.tuple(), p.point()) * section_s1(j, 1, p)).is_zero());
    CHECK_THROWS_AS(section_s1(m, 2, p), IndexOutOfRange);
    CHECK_THROWS_AS(section_s1(m, 0, p), IndexOutOfRange);
    CHECK_THROWS_AS(section_s1(m, 1, ChartPoint::u2(1, 1)), PreconditionViolation);
  }

  TEST_CASE("second section") {
    const MonadDataP2 m = scalar_data();
    CHECK(section_s2(m, 1, ChartPoint::u2(5, 0)) == column({0, 0, 1}));
    CHECK(section_s2(m, 1, ChartPoint::u2(0, 2)) == column({2, 0, 1}));
    // Mirror of the Jordan example with the roles of a1 and a2 swapped.
    const MonadDataP2 j(P2Tuple(2, 1, RationalMatrix(2, 2), {{0, 1}, {0, 0}}, {{1}, {0}}, RationalMatrix(1, 2)));
    const ChartPoint p = ChartPoint::u2(1, 1);
    CHECK((evaluate_B(j.tuple(), p.point()) * section_s2(j, 1, p)).is_zero());
    CHECK_THROWS_AS(section_s2(m, 3, p), IndexOutOfRange);
  }

  TEST_CASE("frame matrices") {
    const MonadDataP2 m = concentrated(3, 2, 1);
    const RationalMatrix f0 = frame_matrix(m, ChartPoint::u1(0, 0));
    // At alpha3 = 0: [[1, 0], [alpha2, 0], [0, 1]] in block form.
    CHECK(f0.block(0, 0, 3, 3) == RationalMatrix::identity(3));
    CHECK(f0.block(6, 3, 2, 2) == RationalMatrix::identity(2));
    CHECK(rank(f0) == 5);
    CHECK(rank(frame_matrix(scalar_data(), ChartPoint::u1(0, 1))) == 2);
    const MonadDataP2 not_nilpotent(P2Tuple(1, 1, {{2}}, {{0}}, {{0}}, {{0}}));
    CHECK_THROWS_AS(frame_matrix(not_nilpotent, ChartPoint::u1(0, mpq_class(1, 2))), PreconditionViolation);
  }

  TEST_CASE("transition") {
    const MonadDataP2 m = scalar_data();
    const Transition t0 = transition_xi(m, 1, 3, 0);
    CHECK(t0.xi1.is_zero());
    CHECK(t0.xi2 == column({1}));
    const Transition t1 = transition_xi(m, 1, 1, 1);
    CHECK(t1.xi1 == column({1}));
    CHECK(t1.xi2 == column({1}));
    CHECK_THROWS_AS(transition_xi(m, 1, 0, 1), OverlapViolation);

    // k = 2 at (alpha2, alpha3) = (2, 1): the identity and an independent solve.
    const MonadDataP2 k2 = concentrated(2, 1, 3);
    const GR alpha2(2), alpha3(1);
    const Transition t = transition_xi(k2, 1, alpha2, alpha3);
    const RationalMatrix s1 = section_s1(k2, 1, ChartPoint::u1(alpha2, alpha3));
    const RationalMatrix s2 = section_s2(k2, 1, ChartPoint::u2(alpha2.inverse(), alpha3 / alpha2));
    CHECK(s2 - s1 == evaluate_A(k2.tuple(), 1, alpha2, alpha3) * t.xi1);
    CHECK((k2.c() * t.xi1).is_zero());
    const auto solved = oracle::solve(frame_matrix(k2, ChartPoint::u1(alpha2, alpha3)), s2);
    REQUIRE(solved.has_value());
    CHECK(*solved == vstack(t.xi1, t.xi2));
  }

  TEST_CASE("verification") {
    const MonadDataP2 empty(P2Tuple::zero(0, 1));
    CHECK(verify_trivialization(empty, sample_chart_points(5, 0)).ok);
    const auto rep = verify_trivialization(concentrated(1, 2, 4), sample_chart_points(10, 4));
    CHECK(rep.ok);
    CHECK(rep.points_checked == 10);
    CHECK(rep.transitions_checked > 0);
    const MonadDataP2 bad(P2Tuple(2, 1, RationalMatrix::identity(2), RationalMatrix(2, 2), RationalMatrix(2, 1), RationalMatrix(1, 2)));
    CHECK_THROWS_AS(verify_trivialization(bad, sample_chart_points(3, 0)), PreconditionViolation);
  }

  TEST_CASE("sample chart points") {
    const auto pts = sample_chart_points(10, 9);
    REQUIRE(pts.size() == 10);
    CHECK(pts[0] == ChartPoint::u1(0, 0));
    CHECK(pts[1].coord_b.is_zero());
    CHECK(pts[1].in_overlap());
    CHECK(pts == sample_chart_points(10, 9));
    CHECK(sample_chart_points(2, 9).size() == 2);
  }
}
