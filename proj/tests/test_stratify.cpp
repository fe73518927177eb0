#include "doctest.h"

#include "adhm/instance_gen.hpp"
#include "adhm/random.hpp"
#include "adhm/stratify.hpp"

using namespace adhm;

namespace {

BlowupTuple k1_zero_d() { return {1, 1, {{1}}, {{1}}, {{0}}, {{1}}, {{0}}}; }
BlowupTuple k1_unit_d() { return {1, 1, {{1}}, {{1}}, {{1}}, {{1}}, {{0}}}; }
BlowupTuple k2_example() {
  return {2, 2, RationalMatrix::identity(2), {{0, 0}, {1, 0}}, {{0, 1}, {0, 0}}, RationalMatrix::identity(2),
          {{-1, 0}, {0, 1}}};
}

}  // namespace

TEST_SUITE("stratify") {
  TEST_CASE("pushforward examples") {
    CHECK(pushforward(k1_zero_d()) == P2Tuple::zero(1, 1));
    const P2Tuple pushed = pushforward(k2_example());
    CHECK(pushed.a1() == RationalMatrix{{0, 1}, {0, 0}});
    CHECK(pushed.a2() == RationalMatrix{{1, 0}, {0, 0}});
    CHECK(pushed.b() == RationalMatrix{{0, 1}, {0, 0}});
    CHECK(pushed.c() == k2_example().c());
    CHECK(integrability_defect(pushed).is_zero());

    Rng rng(41);
    const BlowupTuple raw{2, 1, rng.matrix(2, 2, 4), rng.matrix(2, 2, 4), RationalMatrix::identity(2), rng.matrix(2, 1, 4),
                          rng.matrix(1, 2, 4)};
    const P2Tuple same = pushforward(raw);
    CHECK(same.a1() == raw.a1());
    CHECK(integrability_defect(same) == blowup_defect(raw));
  }

  TEST_CASE("pushforward defect is d times the blowup defect") {
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t k = static_cast<std::size_t>(rng.uniform(0, 4)), r = static_cast<std::size_t>(rng.uniform(1, 3));
      const BlowupTuple raw{k, r, rng.matrix(k, k, 5), rng.matrix(k, k, 5), rng.matrix(k, k, 5), rng.matrix(k, r, 5),
                            rng.matrix(r, k, 5)};
      CHECK(integrability_defect(pushforward(raw)) == raw.d() * blowup_defect(raw));
    }
  }

  TEST_CASE("classification examples") {
    const auto zero_d = classify_s0(validate(k1_zero_d()));
    CHECK(zero_d.is_s0);
    CHECK_FALSE(zero_d.witness.has_value());

    const auto unit_d = classify_s0(validate(k1_unit_d()));
    CHECK_FALSE(unit_d.is_s0);
    REQUIRE(unit_d.witness.has_value());
    CHECK(unit_d.witness->describe() == "da1 not nilpotent");

    const auto two = classify_s0(validate(k2_example()));
    CHECK_FALSE(two.is_s0);
    CHECK(two.nilpotency_da1 == 2);
    CHECK_FALSE(two.nilpotency_da2.has_value());
    REQUIRE(two.witness.has_value());
    CHECK(two.witness->describe() == "da2 not nilpotent");

    for (const auto& t : {k1_zero_d(), k1_unit_d(), k2_example()}) {
      const MonadDataBlowup m = validate(t);
      CHECK(classify_s0_oracle(m, 2 * m.k()) == classify_s0(m).is_s0);
    }
  }

  TEST_CASE("word witnesses are shortest and lexicographically first") {
    // a = 0, d = 1, b c = 0 but c b != 0: the empty word fails.
    const BlowupTuple empty_word{1, 2, {{0}}, {{0}}, {{1}}, {{1, 0}}, {{0}, {1}}};
    const auto rep_empty = classify_s0(validate(empty_word));
    CHECK_FALSE(rep_empty.is_s0);
    REQUIRE(rep_empty.witness.has_value());
    CHECK(rep_empty.witness->kind == StratumWitness::Kind::word);
    CHECK(rep_empty.witness->word.empty());
    CHECK(rep_empty.witness->describe() == "c*db != 0");

    // d a1 = J with J e2 = e1, d a2 = 0, b = [e2, e2], c = [e1^T; -e1^T]:
    // b c = 0 and c b = 0, but c J b != 0.
    const BlowupTuple one_letter{2, 2, {{0, 1}, {0, 0}}, RationalMatrix(2, 2), RationalMatrix::identity(2),
                                 {{0, 0}, {1, 1}}, {{1, 0}, {-1, 0}}};
    const auto rep = classify_s0(validate(one_letter));
    CHECK_FALSE(rep.is_s0);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->word == Word{1});
    CHECK(rep.witness->describe() == "c*da1*db != 0");
    CHECK_FALSE(classify_s0_oracle(validate(one_letter), 4));
    CHECK(classify_s0_oracle(validate(one_letter), 0));  // nilpotent and c db = 0
  }

  TEST_CASE("word enumeration") {
    CHECK(enumerate_words(0) == std::vector<Word>{Word{}});
    CHECK(enumerate_words(2) == std::vector<Word>{{}, {1}, {2}, {1, 1}, {1, 2}, {2, 1}, {2, 2}});
    CHECK(enumerate_words(4).size() == 31);
  }

  TEST_CASE("classifier agrees with the oracle on generated data and is group invariant") {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
      const std::size_t k = 1 + seed % 3;
      const Family fam = seed % 2 ? Family::blowup_generic : Family::blowup_zero_d;
      const MonadDataBlowup m = validate(std::get<BlowupTuple>(generate({k, 2, seed, fam})));
      const StratumReport rep = classify_s0(m);
      CHECK(rep.is_s0 == classify_s0_oracle(m, 2 * k));
      if (fam == Family::blowup_zero_d) CHECK(rep.is_s0);
      Rng rng(seed);
      const MonadDataBlowup moved = act2(rng.invertible(k, 3), rng.invertible(k, 3), m);
      CHECK(classify_s0(moved).is_s0 == rep.is_s0);
      if (rep.is_s0) {
        const MonadDataP2 pushed = pushforward(m);
        CHECK(is_concentrated_at_origin(pushed));
        const ChargeLabel label = charge_label(pushed);
        CHECK(label.points_elsewhere == 0);
        CHECK(label.bundle_charge_l == 0);
      }
    }
  }

  TEST_CASE("charge labels") {
    const P2Tuple one{1, 2, RationalMatrix(1, 1), RationalMatrix(1, 1), {{1, 0}}, {{0}, {1}}};
    const ChargeLabel l1 = charge_label(MonadDataP2(one));
    CHECK(l1.total_charge == 1);
    CHECK(l1.bundle_charge_l == 1);
    CHECK(l1.points_at_origin == 0);
    CHECK(l1.points_elsewhere == 0);

    const P2Tuple diag{2, 1, {{1, 0}, {0, 2}}, {{3, 0}, {0, 4}}, RationalMatrix(2, 1), RationalMatrix(1, 2)};
    const ChargeLabel l2 = charge_label(MonadDataP2(diag));
    CHECK(l2.total_charge == 2);
    CHECK(l2.bundle_charge_l == 0);
    CHECK(l2.points_at_origin == 0);
    CHECK(l2.points_elsewhere == 2);

    const P2Tuple mixed{2, 1, {{0, 0}, {0, 1}}, RationalMatrix(2, 2), RationalMatrix(2, 1), RationalMatrix(1, 2)};
    const ChargeLabel l3 = charge_label(MonadDataP2(mixed));
    CHECK(l3.points_at_origin == 1);
    CHECK(l3.points_elsewhere == 1);
  }
}
