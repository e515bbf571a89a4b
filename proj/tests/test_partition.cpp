#include "doctest.h"
#include "oracles.hpp"
#include "pencil/errors.hpp"
#include "pencil/partition.hpp"
#include "support.hpp"

using namespace pencil;
using pencil::test::rep;
using pencil::test::star;

TEST_SUITE("partition") {
  TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
    CHECK(conjugate(Partition{10}) == Partition(rep(1, 10)));
    CHECK(conjugate(Partition{0}) == Partition{});
    CHECK(conjugate(Partition{}).empty());
    CHECK(conjugate(FiniteSequence{3, 1, 0}) == Partition{2, 1, 1});
  }

  TEST_CASE("trailing zeros are stripped") {
    CHECK(Partition{3, 0, 0} == Partition{3});
    CHECK(Partition{3}.part(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), InputError);
    CHECK(StarPartition::from_sequence({2, 1, 0}) == star(2, {1}));
  }

  TEST_CASE("weights") {
    CHECK(weight(Partition{2, 1}) == 3);
    CHECK(weight(Partition{0}) == 0);
    CHECK(star_weight(star(101, rep(101, 101))) == 10302);
    CHECK(star(101, rep(101, 101)).tail_weight() == 10201);
  }

  TEST_CASE("conjugate_star and back") {
    const FiniteSequence c{2, 1, 0};
    const StarPartition r = conjugate_star(c);
    CHECK(r == star(3, {2, 1}));
    CHECK(indices_from_star(r) == c);
  }

  TEST_CASE("1step majorization") {
    CHECK(is_1step_majorized(FiniteSequence{1, 0}, FiniteSequence{1}));
    CHECK_FALSE(is_1step_majorized(FiniteSequence{2, 2}, FiniteSequence{1}));
    CHECK(is_1step_majorized(FiniteSequence{0, 0}, FiniteSequence{0}));
    CHECK(is_1step_majorized(FiniteSequence{5}, FiniteSequence{}));
    CHECK_THROWS_AS(is_1step_majorized(FiniteSequence{1}, FiniteSequence{1}), InputError);
  }

  TEST_CASE("conjugate majorization") {
    CHECK(is_conjugate_majorized(star(2, {2}), star(3, {1})));
    CHECK_FALSE(is_conjugate_majorized(star(2), star(2)));
    CHECK(is_conjugate_majorized(star(1), star(2)));
    CHECK_FALSE(is_conjugate_majorized(star(3), star(2)));
  }

  TEST_CASE("gap_index") {
    CHECK(gap_index(star(2), star(1)) == 0);
    CHECK(gap_index(star(3, {2, 1}), star(2, {1, 1})) == 1);
    CHECK(gap_index(star(1), star(0)) == 0);
    CHECK_THROWS_AS(gap_index(star(2), star(2)), InputError);
  }

  TEST_CASE("deficit") {
    CHECK(deficit_feasible(star(1, {1, 1}), 2));
    CHECK_FALSE(deficit_feasible(star(1, {1, 1}), 1));
    CHECK(deficit_feasible(star(3, {2, 2}), 0));
    CHECK_FALSE(deficit_feasible(star(0), 0));
    CHECK_THROWS_AS(star(0, {1}), InputError);
    CHECK(deficit_construct(star(1, {1, 1}), 2) == star(0));
    CHECK(deficit_construct(star(3, {2, 2}), 2) == star(2, {1, 1}));
    const StarPartition q = deficit_construct(star(3, {2, 2}), 1);
    CHECK(is_conjugate_majorized(q, star(3, {2, 2})));
    CHECK(q.tail_weight() == 3);
    CHECK_THROWS_AS(deficit_construct(star(1, {1, 1}), 1), DomainError);
  }

  TEST_CASE("add") {
    CHECK(add(Partition{2, 1}, Partition{1, 1}) == Partition{3, 2});
    CHECK(add(Partition{}, Partition{3}) == Partition{3});
    CHECK(add(Partition{2, 2}, conjugate(Partition{3})) == Partition{3, 3, 1});
    CHECK(add_at_zero(star(2, {1}), Partition{1, 1, 1}) == star(3, {2, 1}));
  }

  TEST_CASE("isqrt") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(10302) == 101);
    CHECK(isqrt(112) == 10);
    for (Int k = 0; k < 20000; ++k) {
      const Int r = isqrt(k);
      REQUIRE(r * r <= k);
      REQUIRE((r + 1) * (r + 1) > k);
    }
    const Int big = 3037000499;  // floor(sqrt(2^63 - 1))
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big - 1) == big - 1);
    CHECK_THROWS_AS(isqrt(-1), InputError);
  }

  TEST_CASE("partitions_of") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(12).size() == 77);
    CHECK(partitions_of(6, 2).size() == 4);
  }

  TEST_CASE("oracles at small size") {
    const auto conj = pencil::test::conjugation_oracle(12, 500, 3);
    CHECK_MESSAGE(conj.ok(), conj.first_failure);
    const auto dual = pencil::test::duality_oracle(4, 3);
    CHECK_MESSAGE(dual.ok(), dual.first_failure);
    const auto gap = pencil::test::gap_oracle(8);
    CHECK_MESSAGE(gap.ok(), gap.first_failure);
    const auto def = pencil::test::deficit_oracle(8);
    CHECK_MESSAGE(def.ok(), def.first_failure);
  }
}
