#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "adhm/monad_blowup.hpp"
#include "adhm/monad_p2.hpp"

namespace adhm {

enum class Family {
  charge_one,             // k = 1, a = 0, b c = 0 with b, c nonzero; nondegenerate
  commuting_points,       // diagonal a1, a2, b = c = 0
  block_concentrated,     // nilpotent block-triangular data concentrated at the origin
  blowup_zero_d,          // blowup data with d = 0; always in S0
  blowup_generic,         // blowup lifts of the P^2 families, randomly acted on
  invalid_integrability,  // P^2 tuple with a nonzero defect
};

inline constexpr std::array kAllFamilies{Family::charge_one,    Family::commuting_points,
                                         Family::block_concentrated, Family::blowup_zero_d,
                                         Family::blowup_generic, Family::invalid_integrability};

std::string_view family_name(Family f);
/// Throws ParseError for an unknown name.
Family parse_family(std::string_view name);
bool is_blowup_family(Family f);

struct GenSpec {
  std::size_t k = 1;
  std::size_t r = 1;
  std::uint64_t seed = 0;
  Family family = Family::charge_one;
  /// Bound on numerators and denominators of random entries.
  std::int64_t bound = 16;
};

using GeneratedInstance = std::variant<P2Tuple, BlowupTuple>;

/// A pure function of the spec. Every family except invalid_integrability
/// yields a tuple that validates. Throws InfeasibleSpec when the family
/// cannot be realised with the requested k, r.
GeneratedInstance generate(const GenSpec& spec);

/// An integrable P^2 tuple viewed as blowup data: (a1, a2, 1, b, c) when
/// [a1 | a2 | b] is surjective, else (1, a2, a1, b, c). Both are integrable
/// and surjective; the first pushes forward to the input.
BlowupTuple lift_to_blowup(const P2Tuple& m);

}  // namespace adhm
