#include "adhm/trivialize.hpp"

#include "adhm/random.hpp"

namespace adhm {

std::array<GR, 3> ChartPoint::representative() const {
  if (chart == Chart::U1) return {GR(1), coord_a, coord_b};
  return {coord_a, GR(1), coord_b};
}

ProjectivePoint ChartPoint::point() const {
  auto x = representative();
  return {x[0], x[1], x[2]};
}

namespace {

void require_concentrated(const MonadDataP2& m) {
  if (!is_concentrated_at_origin(m)) throw PreconditionViolation("data are not concentrated at the origin");
}

void require_index(const MonadDataP2& m, std::size_t i) {
  if (i < 1 || i > m.r())
    throw IndexOutOfRange("section index " + std::to_string(i) + " outside 1.." + std::to_string(m.r()));
}

// (1 - t a)^-1 b e_i; invertible because a is nilpotent.
RationalMatrix resolvent_column(const RationalMatrix& a, const GR& t, const MonadDataP2& m, std::size_t i) {
  const RationalMatrix one = RationalMatrix::identity(m.k());
  return inverse(one - a * t) * m.b().col(i - 1);
}

RationalMatrix section_column(const MonadDataP2& m, std::size_t i, const RationalMatrix& first,
                              const RationalMatrix& second) {
  const std::size_t k = m.k();
  RationalMatrix s(2 * k + m.r(), 1);
  s.set_block(0, 0, first);
  s.set_block(k, 0, second);
  s(2 * k + i - 1, 0) = 1;
  return s;
}

RationalMatrix s1_unchecked(const MonadDataP2& m, std::size_t i, const GR& alpha3) {
  return section_column(m, i, RationalMatrix(m.k(), 1), resolvent_column(m.a1(), alpha3, m, i) * -alpha3);
}

RationalMatrix s2_unchecked(const MonadDataP2& m, std::size_t i, const GR& beta3) {
  return section_column(m, i, resolvent_column(m.a2(), beta3, m, i) * beta3, RationalMatrix(m.k(), 1));
}

RationalMatrix section_unchecked(const MonadDataP2& m, std::size_t i, const ChartPoint& p) {
  return p.chart == Chart::U1 ? s1_unchecked(m, i, p.coord_b) : s2_unchecked(m, i, p.coord_b);
}

RationalMatrix frame_unchecked(const MonadDataP2& m, const ChartPoint& p) {
  const auto x = p.representative();
  RationalMatrix frame = evaluate_A(m.tuple(), x[0], x[1], x[2]);
  for (std::size_t i = 1; i <= m.r(); ++i) frame = hstack(frame, section_unchecked(m, i, p));
  return frame;
}

Transition xi_unchecked(const MonadDataP2& m, std::size_t i, const GR& alpha2, const GR& alpha3) {
  const RationalMatrix one = RationalMatrix::identity(m.k());
  const RationalMatrix xi1 =
      inverse(one - m.a1() * alpha3) * inverse(one * alpha2 - m.a2() * alpha3) * m.b().col(i - 1) * alpha3;
  return {xi1, RationalMatrix::unit_vector(m.r(), i - 1)};
}

std::string describe(const ChartPoint& p) {
  return std::string(p.chart == Chart::U1 ? "U1(" : "U2(") + p.coord_a.to_string() + ", " + p.coord_b.to_string() +
         ")";
}

}  // namespace

RationalMatrix section_s1(const MonadDataP2& m, std::size_t i, const ChartPoint& p) {
  require_index(m, i);
  if (p.chart != Chart::U1) throw PreconditionViolation("s1 is defined on U1");
  require_concentrated(m);
  return s1_unchecked(m, i, p.coord_b);
}

RationalMatrix section_s2(const MonadDataP2& m, std::size_t i, const ChartPoint& p) {
  require_index(m, i);
  if (p.chart != Chart::U2) throw PreconditionViolation("s2 is defined on U2");
  require_concentrated(m);
  return s2_unchecked(m, i, p.coord_b);
}

RationalMatrix frame_matrix(const MonadDataP2& m, const ChartPoint& p) {
  require_concentrated(m);
  return frame_unchecked(m, p);
}

Transition transition_xi(const MonadDataP2& m, std::size_t i, const GR& alpha2, const GR& alpha3) {
  require_index(m, i);
  if (alpha2.is_zero()) throw OverlapViolation("alpha2 = 0 lies outside U1 and U2");
  require_concentrated(m);
  return xi_unchecked(m, i, alpha2, alpha3);
}

TrivializationReport verify_trivialization(const MonadDataP2& m, std::span<const ChartPoint> samples) {
  require_concentrated(m);
  TrivializationReport rep;
  auto fail = [&rep](std::string what) {
    rep.ok = false;
    rep.failures.push_back(std::move(what));
  };

  for (const auto& p : samples) {
    ++rep.points_checked;
    const auto x = p.representative();
    const RationalMatrix b_mat = evaluate_B(m.tuple(), x[0], x[1], x[2]);
    for (std::size_t i = 1; i <= m.r(); ++i)
      if (!(b_mat * section_unchecked(m, i, p)).is_zero())
        fail("B s_" + std::to_string(i) + " != 0 at " + describe(p));
    if (rank(frame_unchecked(m, p)) != m.k() + m.r()) fail("frame not of full rank at " + describe(p));

    if (!p.in_overlap()) continue;
    ++rep.transitions_checked;
    const GR alpha2 = p.chart == Chart::U1 ? p.coord_a : p.coord_a.inverse();
    const GR alpha3 = p.chart == Chart::U1 ? p.coord_b : p.coord_b / p.coord_a;
    const GR beta3 = alpha3 / alpha2;
    const RationalMatrix a_mat = evaluate_A(m.tuple(), GR(1), alpha2, alpha3);
    for (std::size_t i = 1; i <= m.r(); ++i) {
      const Transition t = xi_unchecked(m, i, alpha2, alpha3);
      const RationalMatrix diff = s2_unchecked(m, i, beta3) - s1_unchecked(m, i, alpha3);
      if (diff != a_mat * t.xi1) fail("s2 - s1 != A xi1 for i = " + std::to_string(i) + " at " + describe(p));
      if (!(m.c() * t.xi1).is_zero()) fail("c xi1 != 0 for i = " + std::to_string(i) + " at " + describe(p));
    }
  }
  return rep;
}

std::vector<ChartPoint> sample_chart_points(std::size_t count, std::uint64_t seed) {
  std::vector<ChartPoint> pts{ChartPoint::u1(0, 0), ChartPoint::u1(1, 0), ChartPoint::u2(0, 0), ChartPoint::u2(2, 1)};
  Rng rng(seed);
  while (pts.size() < count) {
    GR a = rng.gaussian(6), b = rng.gaussian(6);
    pts.push_back(pts.size() % 2 == 0 ? ChartPoint::u1(std::move(a), std::move(b))
                                      : ChartPoint::u2(std::move(a), std::move(b)));
  }
  if (pts.size() > count) pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(count), pts.end());
  return pts;
}

}  // namespace adhm
