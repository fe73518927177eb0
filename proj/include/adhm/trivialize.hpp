#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adhm/monad_p2.hpp"

namespace adhm {

enum class Chart { U1, U2 };

/// A point of U1 = {x1 != 0} or U2 = {x2 != 0} in affine coordinates:
/// U1: (alpha2, alpha3) -> [1 : alpha2 : alpha3],
/// U2: (beta1, beta3)   -> [beta1 : 1 : beta3].
struct ChartPoint {
  Chart chart = Chart::U1;
  GR coord_a;
  GR coord_b;

  static ChartPoint u1(GR alpha2, GR alpha3) { return {Chart::U1, std::move(alpha2), std::move(alpha3)}; }
  static ChartPoint u2(GR beta1, GR beta3) { return {Chart::U2, std::move(beta1), std::move(beta3)}; }

  /// The chart's homogeneous representative, with a 1 in the chart slot.
  std::array<GR, 3> representative() const;
  ProjectivePoint point() const;
  /// Whether the point also lies in the other chart.
  bool in_overlap() const { return !coord_a.is_zero(); }

  friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

/// s^1_i = (0, -alpha3 (1 - alpha3 a1)^-1 b e_i, e_i) as a column of length
/// 2k + r. The middle entry sits in the second W block, matching the column
/// order of B. i is 1-based. Throws IndexOutOfRange, or PreconditionViolation
/// when p is not a U1 point or the data are not concentrated at the origin.
RationalMatrix section_s1(const MonadDataP2& m, std::size_t i, const ChartPoint& p);
/// s^2_i = (beta3 (1 - beta3 a2)^-1 b e_i, 0, e_i) for a U2 point.
RationalMatrix section_s2(const MonadDataP2& m, std::size_t i, const ChartPoint& p);

/// [A(p) | s_1 ... s_r], (2k + r) x (k + r), with the sections of p's chart.
RationalMatrix frame_matrix(const MonadDataP2& m, const ChartPoint& p);

struct Transition {
  RationalMatrix xi1;  // k x 1
  RationalMatrix xi2;  // r x 1
};

/// Coefficients of s^2_i in the U1 frame at [1 : alpha2 : alpha3]:
/// xi1 = alpha3 (1 - alpha3 a1)^-1 (alpha2 - alpha3 a2)^-1 b e_i, xi2 = e_i,
/// so that s^2_i - s^1_i = A(p) xi1. Throws OverlapViolation when alpha2 = 0.
Transition transition_xi(const MonadDataP2& m, std::size_t i, const GR& alpha2, const GR& alpha3);

struct TrivializationReport {
  bool ok = true;
  std::size_t points_checked = 0;
  std::size_t transitions_checked = 0;
  std::vector<std::string> failures;
};

/// At every sample: B s = 0 for every section, the frame has full column
/// rank, and on the overlap s^2 - s^1 = A xi1 with c xi1 = 0. U2 samples are
/// carried to U1 by alpha2 = 1/beta1, alpha3 = beta3/beta1.
/// Throws PreconditionViolation for data not concentrated at the origin.
TrivializationReport verify_trivialization(const MonadDataP2& m, std::span<const ChartPoint> samples);

/// Seeded chart points. The first four are U1 (0, 0), U1 (1, 0), U2 (0, 0)
/// and U2 (2, 1); the rest alternate charts with small random coordinates.
std::vector<ChartPoint> sample_chart_points(std::size_t count, std::uint64_t seed);

}  // namespace adhm
