#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "adhm/monad_blowup.hpp"
#include "adhm/monad_p2.hpp"

namespace adhm {

/// (a1, a2, d, b, c) -> (d a1, d a2, d b, c). Defined on raw tuples; the
/// defect of the result is d times the blowup defect.
P2Tuple pushforward(const BlowupTuple& m);
MonadDataP2 pushforward(const MonadDataBlowup& m);

/// A word i_1 ... i_n over {1, 2}, standing for c (d a_{i_1}) ... (d a_{i_n}) d b.
using Word = std::vector<int>;

struct StratumWitness {
  enum class Kind { not_nilpotent, word } kind;
  std::string matrix;  // "da1" or "da2" for not_nilpotent
  Word word;           // for kind == word
  std::string describe() const;
};

struct StratumReport {
  bool is_s0 = false;
  std::optional<std::size_t> nilpotency_da1;  // nullopt: not nilpotent
  std::optional<std::size_t> nilpotency_da2;
  std::size_t krylov_dim = 0;  // dim of the (da1, da2)-closure of Im(d b)
  std::optional<StratumWitness> witness;
};

/// S0 test: d a1, d a2 nilpotent and c annihilates the (d a1, d a2)-invariant
/// closure of Im(d b). On failure the witness is the first non-nilpotent
/// matrix, else the shortest failing word (ties broken lexicographically).
StratumReport classify_s0(const MonadDataBlowup& m);

/// All words of length 0..max_len in length-then-lexicographic order.
std::vector<Word> enumerate_words(std::size_t max_len);

/// Literal check of nilpotency plus c w d b = 0 for every word with
/// |w| <= max_len. Independent of the closure-based classifier.
bool classify_s0_oracle(const MonadDataBlowup& m, std::size_t max_len);

struct ChargeLabel {
  std::size_t total_charge = 0;
  std::size_t bundle_charge_l = 0;
  std::size_t points_at_origin = 0;
  std::size_t points_elsewhere = 0;
};

ChargeLabel charge_label(const DUPoint& reduction, std::size_t total_charge);
/// Runs canonical_reduction and sorts its points by whether they are (0, 0).
ChargeLabel charge_label(const MonadDataP2& m, SpectrumMode mode = SpectrumMode::exact);

}  // namespace adhm
