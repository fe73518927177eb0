#include "adhm/instance_gen.hpp"

#include <algorithm>

#include "adhm/random.hpp"
#include "adhm/subspace.hpp"

namespace adhm {

namespace {

constexpr std::array<std::string_view, kAllFamilies.size()> kNames{
    "charge_one", "commuting_points", "block_concentrated", "blowup_zero_d", "blowup_generic", "invalid_integrability"};

// Group elements use a small bound to keep entry sizes down after conjugation.
constexpr std::int64_t kGroupBound = 3;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

// A random polynomial without constant term in the n x n upper shift matrix.
// Any two such matrices commute and both are nilpotent.
RationalMatrix shift_polynomial(Rng& rng, std::size_t n, std::int64_t bound) {
  RationalMatrix shift(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) shift(i, i + 1) = 1;
  RationalMatrix out(n, n), power = shift;
  for (std::size_t e = 1; e < n; ++e) {
    out += power * rng.gaussian(bound);
    power = power * shift;
  }
  return out;
}

RationalMatrix upper_block(const RationalMatrix& top, const RationalMatrix& corner, const RationalMatrix& bottom) {
  RationalMatrix out(top.rows() + bottom.rows(), top.cols() + bottom.cols());
  out.set_block(0, 0, top);
  out.set_block(0, top.cols(), corner);
  out.set_block(top.rows(), top.cols(), bottom);
  return out;
}

P2Tuple charge_one(Rng& rng, std::size_t k, std::size_t r, std::int64_t bound) {
  if (k != 1 || r < 2) throw InfeasibleSpec("charge_one needs k = 1 and r >= 2");
  RationalMatrix b(1, r), c(r, 1);
  for (std::size_t j = 0; j < r; ++j) b(0, j) = rng.gaussian(bound);
  const std::size_t lead = pick(rng, 0, r - 1);
  b(0, lead) = rng.nonzero_gaussian(bound);
  // c solves b c = 0 with the `lead` entry determined by the others.
  do {
    GR sum;
    for (std::size_t j = 0; j < r; ++j)
      if (j != lead) {
        c(j, 0) = rng.gaussian(bound);
        sum += b(0, j) * c(j, 0);
      }
    c(lead, 0) = -sum / b(0, lead);
  } while (c.is_zero());
  return {1, r, RationalMatrix(1, 1), RationalMatrix(1, 1), b, c};
}

P2Tuple commuting_points(Rng& rng, std::size_t k, std::size_t r, std::int64_t bound) {
  RationalMatrix a1(k, k), a2(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    a1(i, i) = rng.gaussian(bound);
    a2(i, i) = rng.gaussian(bound);
  }
  return {k, r, a1, a2, RationalMatrix(k, r), RationalMatrix(r, k)};
}

// a_i = [[N_i, X_i], [0, M_i]] with commuting nilpotent diagonal blocks. One
// of X_1, X_2 is U V^T with U in the kernel of the other N; b = [U; 0] and
// c = [0, gamma] with gamma chosen so the off-diagonal block of [a1, a2]
// cancels against b c. The upper block is invariant and killed by c, so the
// data are concentrated at the origin. A random conjugation hides the shape.
P2Tuple block_concentrated(Rng& rng, std::size_t k, std::size_t r, std::int64_t bound) {
  const std::size_t ku = pick(rng, 0, k), kd = k - ku;
  const RationalMatrix n1 = shift_polynomial(rng, ku, bound), n2 = shift_polynomial(rng, ku, bound);
  const RationalMatrix m1 = shift_polynomial(rng, kd, bound), m2 = shift_polynomial(rng, kd, bound);
  const bool corner_on_a1 = rng.coin();

  const Subspace ker = kernel_basis(corner_on_a1 ? n2 : n1);
  const RationalMatrix u = ker.basis() * rng.matrix(ker.dim(), r, bound);
  const RationalMatrix v = rng.matrix(kd, r, bound);
  const RationalMatrix x = u * v.transpose();
  const RationalMatrix gamma = corner_on_a1 ? -(v.transpose() * m2) : v.transpose() * m1;
  const RationalMatrix none(ku, kd);

  RationalMatrix a1 = upper_block(n1, corner_on_a1 ? x : none, m1);
  RationalMatrix a2 = upper_block(n2, corner_on_a1 ? none : x, m2);
  RationalMatrix b = vstack(u, RationalMatrix(kd, r));
  RationalMatrix c = hstack(RationalMatrix(r, ku), gamma);
  return act(rng.invertible(k, kGroupBound), P2Tuple(k, r, a1, a2, b, c));
}

BlowupTuple blowup_zero_d(Rng& rng, std::size_t k, std::size_t r, std::int64_t bound) {
  // b of rank s <= r leaves room for a nonzero c with columns in Ker b.
  const std::size_t s = pick(rng, 0, r);
  RationalMatrix b = s == r ? rng.matrix(k, r, bound) : rng.matrix(k, s, bound) * rng.matrix(s, r, bound);
  const Subspace ker = kernel_basis(b);
  RationalMatrix c = ker.basis() * rng.matrix(ker.dim(), k, bound);
  for (;;) {
    RationalMatrix a1 = rng.matrix(k, k, bound), a2 = rng.matrix(k, k, bound);
    BlowupTuple t(k, r, std::move(a1), std::move(a2), RationalMatrix(k, k), b, c);
    if (surjectivity_defect(t) == 0) return t;
  }
}

BlowupTuple lift(const P2Tuple& m, bool prefer_identity_d) {
  const std::size_t k = m.k();
  BlowupTuple with_d(k, m.r(), m.a1(), m.a2(), RationalMatrix::identity(k), m.b(), m.c());
  if (prefer_identity_d && surjectivity_defect(with_d) == 0) return with_d;
  return {k, m.r(), RationalMatrix::identity(k), m.a2(), m.a1(), m.b(), m.c()};
}

BlowupTuple blowup_generic(Rng& rng, std::size_t k, std::size_t r, std::int64_t bound) {
  const std::size_t sources = (k == 1 && r >= 2) ? 3 : 2;
  P2Tuple base;
  switch (pick(rng, 0, sources - 1)) {
    case 0: base = block_concentrated(rng, k, r, bound); break;
    case 1: base = commuting_points(rng, k, r, bound); break;
    default: base = charge_one(rng, k, r, bound); break;
  }
  const bool prefer_identity_d = rng.coin();
  RationalMatrix g0 = rng.invertible(k, kGroupBound), g1 = rng.invertible(k, kGroupBound);
  return act2(g0, g1, lift(base, prefer_identity_d));
}

P2Tuple invalid_integrability(Rng& rng, std::size_t k, std::size_t r, std::int64_t bound) {
  if (k == 0) throw InfeasibleSpec("every k = 0 tuple is integrable");
  const P2Tuple base = block_concentrated(rng, k, r, bound);
  for (;;) {
    // Perturbing b(i, j) and c(j, l) together contributes s t e_i e_l^T.
    RationalMatrix b = base.b(), c = base.c();
    const std::size_t i = pick(rng, 0, k - 1), j = pick(rng, 0, r - 1), l = pick(rng, 0, k - 1);
    b(i, j) += rng.nonzero_gaussian(bound);
    c(j, l) += rng.nonzero_gaussian(bound);
    P2Tuple t(k, r, base.a1(), base.a2(), std::move(b), std::move(c));
    if (!integrability_defect(t).is_zero()) return t;
  }
}

}  // namespace

std::string_view family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

Family parse_family(std::string_view name) {
  auto it = std::find(kNames.begin(), kNames.end(), name);
  if (it == kNames.end()) throw ParseError("unknown family '" + std::string(name) + "'");
  return kAllFamilies[static_cast<std::size_t>(it - kNames.begin())];
}

bool is_blowup_family(Family f) { return f == Family::blowup_zero_d || f == Family::blowup_generic; }

GeneratedInstance generate(const GenSpec& spec) {
  if (spec.r < 1) throw InfeasibleSpec("r must be at least 1");
  if (spec.bound < 1) throw InfeasibleSpec("bound must be positive");
  Rng rng(spec.seed);
  const std::size_t k = spec.k, r = spec.r;
  switch (spec.family) {
    case Family::charge_one: return charge_one(rng, k, r, spec.bound);
    case Family::commuting_points: return commuting_points(rng, k, r, spec.bound);
    case Family::block_concentrated: return block_concentrated(rng, k, r, spec.bound);
    case Family::blowup_zero_d: return blowup_zero_d(rng, k, r, spec.bound);
    case Family::blowup_generic: return blowup_generic(rng, k, r, spec.bound);
    case Family::invalid_integrability: return invalid_integrability(rng, k, r, spec.bound);
  }
  throw InfeasibleSpec("unknown family");
}

BlowupTuple lift_to_blowup(const P2Tuple& m) { return lift(m, true); }

}  // namespace adhm
