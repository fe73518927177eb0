#include "adhm/monad_p2.hpp"

#include <algorithm>

#include "adhm/random.hpp"
#include "adhm/spectral.hpp"

namespace adhm {

P2Tuple::P2Tuple(std::size_t k, std::size_t r, RationalMatrix a1, RationalMatrix a2, RationalMatrix b,
                 RationalMatrix c)
    : k_(k), r_(r), a1_(std::move(a1)), a2_(std::move(a2)), b_(std::move(b)), c_(std::move(c)) {
  auto expect = [](const RationalMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
    if (m.rows() != rows || m.cols() != cols)
      throw DimensionMismatch(std::string(name) + " must be " + std::to_string(rows) + "x" + std::to_string(cols) +
                              ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  };
  expect(a1_, k, k, "a1");
  expect(a2_, k, k, "a2");
  expect(b_, k, r, "b");
  expect(c_, r, k, "c");
}

P2Tuple P2Tuple::zero(std::size_t k, std::size_t r) {
  return {k, r, RationalMatrix(k, k), RationalMatrix(k, k), RationalMatrix(k, r), RationalMatrix(r, k)};
}

RationalMatrix integrability_defect(const P2Tuple& m) { return commutator(m.a1(), m.a2()) + m.b() * m.c(); }

MonadDataP2::MonadDataP2(P2Tuple tuple) : t_(std::move(tuple)) {
  RationalMatrix defect = integrability_defect(t_);
  if (!defect.is_zero()) throw IntegrabilityViolation(std::move(defect));
}

ProjectivePoint::ProjectivePoint(GR x1, GR x2, GR x3) : x_{std::move(x1), std::move(x2), std::move(x3)} {
  auto lead = std::find_if(x_.begin(), x_.end(), [](const GR& z) { return !z.is_zero(); });
  if (lead == x_.end()) throw PreconditionViolation("[0:0:0] is not a point of P^2");
  GR inv = lead->inverse();
  for (auto& z : x_) z *= inv;
}

P2Tuple act(const RationalMatrix& g, const P2Tuple& m) {
  if (g.rows() != m.k() || g.cols() != m.k()) throw DimensionMismatch("group element has the wrong size");
  RationalMatrix g_inv;
  try {
    g_inv = inverse(g);
  } catch (const SingularMatrix&) {
    throw SingularGroupElement("group element is not invertible");
  }
  return {m.k(), m.r(), g_inv * m.a1() * g, g_inv * m.a2() * g, g_inv * m.b(), m.c() * g};
}

MonadDataP2 act(const RationalMatrix& g, const MonadDataP2& m) { return MonadDataP2(act(g, m.tuple())); }

Subspace min_b_special(const MonadDataP2& m) {
  const std::array gens{m.a1(), m.a2()};
  return invariant_closure(gens, Subspace::span(m.b()));
}

Subspace max_c_special(const MonadDataP2& m) {
  const std::array gens{m.a1(), m.a2()};
  return max_invariant_in_kernel(gens, m.c());
}

bool is_nondegenerate(const MonadDataP2& m) { return min_b_special(m).is_full() && max_c_special(m).is_zero(); }

RationalMatrix evaluate_A(const P2Tuple& m, const GR& x1, const GR& x2, const GR& x3) {
  const auto id = RationalMatrix::identity(m.k());
  RationalMatrix top = id * x1 - m.a1() * x3;
  RationalMatrix mid = id * x2 - m.a2() * x3;
  RationalMatrix low = m.c() * x3;
  return vstack({&top, &mid, &low});
}

RationalMatrix evaluate_A(const P2Tuple& m, const ProjectivePoint& p) { return evaluate_A(m, p.x1(), p.x2(), p.x3()); }

RationalMatrix evaluate_B(const P2Tuple& m, const GR& x1, const GR& x2, const GR& x3) {
  const auto id = RationalMatrix::identity(m.k());
  RationalMatrix left = m.a2() * x3 - id * x2;
  RationalMatrix mid = id * x1 - m.a1() * x3;
  RationalMatrix right = m.b() * x3;
  return hstack({&left, &mid, &right});
}

RationalMatrix evaluate_B(const P2Tuple& m, const ProjectivePoint& p) { return evaluate_B(m, p.x1(), p.x2(), p.x3()); }

MatrixPolynomial symbolic_A(const P2Tuple& m) {
  const auto id = RationalMatrix::identity(m.k());
  const auto zk = RationalMatrix::zero(m.k(), m.k());
  const auto zc = RationalMatrix::zero(m.r(), m.k());
  // x1 * (1;0;0) + x2 * (0;1;0) + x3 * (-a1;-a2;c)
  RationalMatrix e1 = vstack({&id, &zk, &zc});
  RationalMatrix e2 = vstack({&zk, &id, &zc});
  RationalMatrix na1 = -m.a1(), na2 = -m.a2();
  RationalMatrix e3 = vstack({&na1, &na2, &m.c()});
  return linear_form(3, {{0, e1}, {1, e2}, {2, e3}});
}

MatrixPolynomial symbolic_B(const P2Tuple& m) {
  const auto id = RationalMatrix::identity(m.k());
  const auto zk = RationalMatrix::zero(m.k(), m.k());
  const auto zb = RationalMatrix::zero(m.k(), m.r());
  // x1 * (0,1,0) + x2 * (-1,0,0) + x3 * (a2,-a1,b)
  RationalMatrix e1 = hstack({&zk, &id, &zb});
  RationalMatrix nid = -id;
  RationalMatrix e2 = hstack({&nid, &zk, &zb});
  RationalMatrix na1 = -m.a1();
  RationalMatrix e3 = hstack({&m.a2(), &na1, &m.b()});
  return linear_form(3, {{0, e1}, {1, e2}, {2, e3}});
}

std::size_t fiber_dimension(const MonadDataP2& m, const ProjectivePoint& p) {
  const std::size_t middle = 2 * m.k() + m.r();
  return middle - rank(evaluate_B(m.tuple(), p)) - rank(evaluate_A(m.tuple(), p));
}

std::optional<ProjectivePoint> first_degenerate_point(const MonadDataP2& m,
                                                      std::span<const ProjectivePoint> samples) {
  for (const auto& p : samples)
    if (fiber_dimension(m, p) != m.r()) return p;
  return std::nullopt;
}

std::vector<ProjectivePoint> sample_points_p2(std::size_t count, std::uint64_t seed) {
  std::vector<ProjectivePoint> pts{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}};
  Rng rng(seed);
  while (pts.size() < count) {
    GR x1 = rng.gaussian(8), x2 = rng.gaussian(8), x3 = rng.gaussian(8);
    if (x1.is_zero() && x2.is_zero() && x3.is_zero()) continue;
    pts.emplace_back(x1, x2, x3);
  }
  if (pts.size() > count) pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(count), pts.end());
  return pts;
}

bool is_concentrated_at_origin(const MonadDataP2& m) {
  if (!nilpotency_index(m.a1()) || !nilpotency_index(m.a2())) return false;
  return (m.c() * min_b_special(m).basis()).is_zero();
}

namespace {

// Conjugate by g = [basis | complement] and keep the leading `dim` block
// (keep_leading) or the trailing one; the dropped diagonal block is recorded.
P2Tuple split(const P2Tuple& t, const Subspace& v, bool keep_leading,
              std::vector<std::array<RationalMatrix, 2>>& deltas) {
  const std::size_t k = t.k(), r = t.r(), d = v.dim();
  RationalMatrix g = hstack(v.basis(), v.standard_complement());
  P2Tuple conj = act(g, t);
  const std::size_t lo = keep_leading ? 0 : d;
  const std::size_t n = keep_leading ? d : k - d;
  const std::size_t drop_lo = keep_leading ? d : 0;
  const std::size_t drop_n = k - n;
  deltas.push_back({conj.a1().block(drop_lo, drop_lo, drop_n, drop_n),
                    conj.a2().block(drop_lo, drop_lo, drop_n, drop_n)});
  return {n, r, conj.a1().block(lo, lo, n, n), conj.a2().block(lo, lo, n, n), conj.b().block(lo, 0, n, r),
          conj.c().block(0, lo, r, n)};
}

bool point_less(const PointPair& a, const PointPair& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

DUPoint canonical_reduction(const MonadDataP2& m, SpectrumMode mode) {
  std::vector<std::array<RationalMatrix, 2>> deltas;
  P2Tuple current = m.tuple();
  while (current.k() > 0) {
    MonadDataP2 valid(current);
    Subspace c_special = max_c_special(valid);
    if (!c_special.is_zero()) {
      // a = [[f, *], [0, a']], b = [*; b'], c = [0, c']
      current = split(current, c_special, false, deltas);
      continue;
    }
    Subspace b_special = min_b_special(valid);
    if (!b_special.is_full()) {
      // a = [[a', *], [0, f]], b = [b'; 0], c = [c', *]
      current = split(current, b_special, true, deltas);
      continue;
    }
    break;
  }

  DUPoint out{MonadDataP2(current), {}, false, {}};
  try {
    for (const auto& block : deltas)
      for (const auto& joint : commuting_reduce(block).joint_eigenvalues) out.points.push_back({joint[0], joint[1]});
    std::sort(out.points.begin(), out.points.end(), point_less);
  } catch (const IrrationalSpectrum&) {
    if (mode == SpectrumMode::exact) throw;
    out.points.clear();
    out.approximate = true;
    for (const auto& block : deltas)
      for (const auto& joint : approximate_joint_eigenvalues(block)) out.approximate_points.push_back({joint[0], joint[1]});
    std::sort(out.approximate_points.begin(), out.approximate_points.end(), [](const auto& a, const auto& b) {
      for (std::size_t j = 0; j < 2; ++j) {
        if (a[j].real() != b[j].real()) return a[j].real() < b[j].real();
        if (a[j].imag() != b[j].imag()) return a[j].imag() < b[j].imag();
      }
      return false;
    });
  }
  return out;
}

}  // namespace adhm
