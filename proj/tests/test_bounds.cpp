#include "doctest.h"
#include "pencil/bounds.hpp"
#include "pencil/builder.hpp"
#include "pencil/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace pencil;
using namespace pencil::test;

namespace {

const Scenario kColEqual{RankOneKind::Column, RankChange::Equal};

bool same(const Interval& i, Int lo, Int hi) { return i.lower == lo && i.upper == hi; }

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("completion bounds") {
    const auto sub = chr({}, star(0), star(2, {1}));
    const auto eq = completion_bounds(sub, sub, RankChange::Equal);
    CHECK(same(eq.s, -1, 1));
    CHECK(same(eq.r, 0, 0));
    CHECK(eq.r.tag == "eqgpboundr01lreq");
    const auto full = chr({}, star(1), star(0));
    const auto plus = completion_bounds(sub, full, RankChange::PlusOne);
    CHECK(same(plus.r, -1, 0));
    CHECK_THROWS_AS(completion_bounds(sub, sub, RankChange::MinusOne), InputError);
  }

  TEST_CASE("two-sided completion bounds") {
    const auto zero_s = chr({}, star(1, {1}), star(0));
    const auto one = two_sided_completion_bounds(zero_s, 1);
    CHECK(same(one.s, 0, 1));
    CHECK(one.s.tag == "eqgpboundsrrr1");
    const auto r113 = chr({}, star(113, {113}), star(0));
    CHECK(same(two_sided_completion_bounds(r113, 2).r, -11, 12));
    CHECK(same(two_sided_completion_bounds(r113, 4).w, 0, 2));
    CHECK(two_sided_completion_bounds(r113, 4).w.tag == "eqgpboundwr+r");
    CHECK_THROWS_AS(two_sided_completion_bounds(r113, 5), InputError);
  }

  TEST_CASE("perturbation bounds, u v(s)^T kind") {
    const auto big = chr({}, star(0), star(101, rep(101, 101)));
    const auto b = perturbation_bounds(big, kColEqual);
    CHECK(same(b.s, -101, 101));
    CHECK(b.s.tag == "eqgpboundsrrr1");
    const auto hundred = chr({}, star(0), star(10, rep(10, 9)));
    CHECK(perturbation_bounds(hundred, kColEqual).s.upper == 10);
    const auto none = perturbation_bounds(hundred, Scenario{});
    CHECK(same(none.w, -2, 2));
    CHECK(none.w.tag == "eqgpboundw");
  }

  TEST_CASE("row kind uses the transposed intervals") {
    const auto w = chr({}, star(3, {2, 1}), star(0));
    const auto row = perturbation_bounds(w, {RankOneKind::Row, RankChange::Equal});
    CHECK(same(row.r, -2, 2));  // r nonzero, |r*| = 6
    CHECK(row.r.tag == "eqgpboundrrrr1col");
    CHECK(same(row.s, 0, 2));
  }

  TEST_CASE("check_bounds") {
    const auto w = chr({{Eigenvalue(0), Partition{1, 1}}}, star(1), star(0));
    const auto rep0 = check_bounds(w, w, Scenario{});
    CHECK(rep0.violations.empty());
    for (const auto& d : rep0.differences) CHECK(d.value == 0);

    const auto w_hat = chr({{Eigenvalue(0), Partition{2}}}, star(1), star(0));
    const auto r = check_bounds(w, w_hat, kColEqual);
    CHECK(r.violations.empty());
    bool plus = false, minus = false;
    for (const auto& d : r.differences)
      if (d.component == 'w' && d.lambda && *d.lambda == Eigenvalue(0)) {
        if (d.index == 1) plus = d.value == 1;
        if (d.index == 2) minus = d.value == -1;
      }
    CHECK(plus);
    CHECK(minus);

    const auto base = chr({{Eigenvalue(0), Partition{1, 1, 1, 1}}}, star(0), star(0));
    const auto fake = chr({{Eigenvalue(0), Partition{4}}}, star(0), star(0));
    const auto bad = check_bounds(base, fake, Scenario{});
    REQUIRE_FALSE(bad.violations.empty());
    CHECK(bad.violations.front().component == 'w');
    CHECK(bad.violations.front().value == 3);
    CHECK_THROWS_AS(check_bounds(base, chr({}, star(0), star(0)), Scenario{}), InputError);
  }

  TEST_CASE("differences reach one past the support") {
    const auto a = chr({{Eigenvalue(1), Partition{2, 1}}}, star(1), star(0));
    const auto b = chr({{Eigenvalue(-1), Partition{2, 1}}}, star(1), star(0));
    Int w_max = 0;
    bool saw_both = false;
    for (const auto& d : all_differences(a, b))
      if (d.component == 'w') {
        w_max = std::max(w_max, d.index);
        saw_both = saw_both || (d.lambda && *d.lambda == Eigenvalue(-1));
      }
    CHECK(w_max == 3);
    CHECK(saw_both);
  }

  TEST_CASE("nesting and duality on random characteristics") {
    const auto run = nesting_oracle(300, 17);
    CHECK_MESSAGE(run.ok(), run.first_failure);
  }
}
