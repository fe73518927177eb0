#include "adhm/stratify.hpp"

#include <array>

#include "adhm/spectral.hpp"

namespace adhm {

P2Tuple pushforward(const BlowupTuple& m) {
  return {m.k(), m.r(), m.d() * m.a1(), m.d() * m.a2(), m.d() * m.b(), m.c()};
}

MonadDataP2 pushforward(const MonadDataBlowup& m) { return MonadDataP2(pushforward(m.tuple())); }

std::string StratumWitness::describe() const {
  if (kind == Kind::not_nilpotent) return matrix + " not nilpotent";
  std::string s = "c";
  for (int i : word) s += "*da" + std::to_string(i);
  return s + "*db != 0";
}

std::vector<Word> enumerate_words(std::size_t max_len) {
  std::vector<Word> words{Word{}};
  std::size_t level_start = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = words.size();
    for (int letter : {1, 2})
      for (std::size_t i = level_start; i < level_end; ++i) {
        Word w{letter};
        w.insert(w.end(), words[i].begin(), words[i].end());
        words.push_back(std::move(w));
      }
    level_start = level_end;
  }
  return words;
}

namespace {

// Shortest word w with c w db != 0. Words are extended on the left, so each
// level is computed from the previous one by a single multiplication.
std::optional<Word> shortest_failing_word(const RationalMatrix& da1, const RationalMatrix& da2,
                                          const RationalMatrix& db, const RationalMatrix& c, std::size_t max_len) {
  struct Entry {
    Word word;
    RationalMatrix value;  // w * db
  };
  std::vector<Entry> level{{Word{}, db}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& e : level)
      if (!(c * e.value).is_zero()) return e.word;
    if (len == max_len) return std::nullopt;
    std::vector<Entry> next;
    next.reserve(2 * level.size());
    for (int letter : {1, 2}) {
      const RationalMatrix& a = letter == 1 ? da1 : da2;
      for (const auto& e : level) {
        Word w{letter};
        w.insert(w.end(), e.word.begin(), e.word.end());
        next.push_back({std::move(w), a * e.value});
      }
    }
    level = std::move(next);
  }
}

}  // namespace

StratumReport classify_s0(const MonadDataBlowup& m) {
  const P2Tuple pushed = pushforward(m.tuple());
  StratumReport rep;
  rep.nilpotency_da1 = nilpotency_index(pushed.a1());
  rep.nilpotency_da2 = nilpotency_index(pushed.a2());
  const std::array gens{pushed.a1(), pushed.a2()};
  const Subspace closure = invariant_closure(gens, Subspace::span(pushed.b()));
  rep.krylov_dim = closure.dim();
  const bool words_vanish = (pushed.c() * closure.basis()).is_zero();
  rep.is_s0 = rep.nilpotency_da1 && rep.nilpotency_da2 && words_vanish;

  if (!rep.nilpotency_da1) {
    rep.witness = StratumWitness{StratumWitness::Kind::not_nilpotent, "da1", {}};
  } else if (!rep.nilpotency_da2) {
    rep.witness = StratumWitness{StratumWitness::Kind::not_nilpotent, "da2", {}};
  } else if (!words_vanish) {
    // The closure is spanned by words of length < k, so the search terminates.
    auto w = shortest_failing_word(pushed.a1(), pushed.a2(), pushed.b(), pushed.c(), m.k());
    rep.witness = StratumWitness{StratumWitness::Kind::word, {}, w.value()};
  }
  return rep;
}

bool classify_s0_oracle(const MonadDataBlowup& m, std::size_t max_len) {
  const RationalMatrix da1 = m.d() * m.a1(), da2 = m.d() * m.a2(), db = m.d() * m.b();
  // Nilpotency by the Cayley-Hamilton bound: M^k = 0.
  if (!power(da1, m.k()).is_zero() || !power(da2, m.k()).is_zero()) return false;
  // Every word is evaluated; level L holds c w for all 2^L words of length L.
  std::vector<RationalMatrix> level{m.c()};
  for (std::size_t len = 0;; ++len) {
    for (const auto& prefix : level)
      if (!(prefix * db).is_zero()) return false;
    if (len == max_len) return true;
    std::vector<RationalMatrix> next;
    next.reserve(2 * level.size());
    for (const auto& prefix : level) {
      next.push_back(prefix * da1);
      next.push_back(prefix * da2);
    }
    level = std::move(next);
  }
}

ChargeLabel charge_label(const DUPoint& reduction, std::size_t total_charge) {
  ChargeLabel label;
  label.total_charge = total_charge;
  label.bundle_charge_l = reduction.charge();
  if (reduction.approximate) {
    for (const auto& p : reduction.approximate_points) {
      bool origin = std::abs(p[0]) < kApproxTolerance && std::abs(p[1]) < kApproxTolerance;
      ++(origin ? label.points_at_origin : label.points_elsewhere);
    }
  } else {
    for (const auto& p : reduction.points) ++(p[0].is_zero() && p[1].is_zero() ? label.points_at_origin : label.points_elsewhere);
  }
  return label;
}

ChargeLabel charge_label(const MonadDataP2& m, SpectrumMode mode) {
  return charge_label(canonical_reduction(m, mode), m.k());
}

}  // namespace adhm
