// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "lsc/epform.hpp"
#include "testgen.h"

using namespace lsc;

TEST_CASE("normal form exists exactly for thick/return-free trees") {
  testgen::Gen gen(11);
  for (int i = 0; i < 30; ++i) {
    const SetExpr e = gen.ep_expr();
    CHECK(e.ep_eligible());
    CHECK(eventually_periodic_normalize(e).has_value());
  }
  const SetExpr t = SetExpr::thick(Schedule::geometric(3, 1));
  CHECK_FALSE(t.ep_eligible());
  CHECK_FALSE(eventually_periodic_normalize(t).has_value());
  const SetExpr mixed = SetExpr::unite({SetExpr::residue(0, 2), t});
  CHECK_FALSE(mixed.ep_eligible());
  CHECK_FALSE(eventually_periodic_normalize(mixed).has_value());
}

TEST_CASE("normal form agrees with lazy membership") {
  testgen::Gen gen(12);
  for (int i = 0; i < 60; ++i) {
    const SetExpr e = gen.ep_expr();
    const auto form = eventually_periodic_normalize(e);
    REQUIRE(form.has_value());
    const Int horizon = std::min<Int>(form->pre_len + 2 * form->period() + 64, 50'000);
    const Window w = e.window(horizon);
    for (Int n = 1; n <= horizon; ++n) CHECK(form->contains(n) == w.test(n));
    CHECK_FALSE(form->contains(0));
    CHECK_FALSE(form->contains(-3));
  }
}

TEST_CASE("forms are reduced") {
  // res(0,2) | res(1,2) collapses to the full set: period 1, no preperiod.
  const auto full = eventually_periodic_normalize(
      SetExpr::unite({SetExpr::residue(0, 2), SetExpr::residue(1, 2)}));
  REQUIRE(full.has_value());
  CHECK(full->pre_len == 0);
  CHECK(full->period() == 1);
  CHECK(full->cofinite_tail());

  // res(2,4) reduces the structural period 4 to the true period... 4 stays,
  // but a redundant doubling res(2,4) | res(2,4) must not inflate it.
  const auto r = eventually_periodic_normalize(
      SetExpr::unite({SetExpr::residue(2, 4), SetExpr::residue(2, 4)}));
  REQUIRE(r.has_value());
  CHECK(r->period() == 4);
  CHECK(r->pre_len == 0);

  // A finite set has period 1 and a preperiod reaching its maximum.
  const auto f = eventually_periodic_normalize(SetExpr::finite({5, 2}));
  REQUIRE(f.has_value());
  CHECK(f->pre_len == 5);
  CHECK(f->period() == 1);
  CHECK_FALSE(f->infinite());
}

TEST_CASE("stats on hand-checked sets") {
  const auto full = eventually_periodic_normalize(SetExpr::full());
  const EpStats st_full = ep_stats(*full);
  CHECK(st_full.infinite);
  CHECK(st_full.cofinite);
  CHECK(st_full.first_member == 1);
  CHECK(st_full.sup_gap == 1);
  CHECK(st_full.ps_min_shift == 0);

  const auto empty = eventually_periodic_normalize(SetExpr::empty());
  const EpStats st_empty = ep_stats(*empty);
  CHECK_FALSE(st_empty.infinite);
  CHECK(st_empty.first_member == 0);
  CHECK(st_empty.ps_min_shift == -1);

  const auto r13 = eventually_periodic_normalize(SetExpr::residue(1, 3));
  const EpStats st_r13 = ep_stats(*r13);
  CHECK(st_r13.infinite);
  CHECK_FALSE(st_r13.cofinite);
  CHECK(st_r13.first_member == 1);
  CHECK(st_r13.sup_gap == 3);
  CHECK(st_r13.max_run == 1);
  CHECK(st_r13.ps_min_shift == 2);

  // {n : n = 0,1 mod 4}: runs of two, sup gap 3, shifts 0..2 cover.
  const auto u = eventually_periodic_normalize(
      SetExpr::unite({SetExpr::residue(0, 4), SetExpr::residue(1, 4)}));
  const EpStats st_u = ep_stats(*u);
  CHECK(st_u.first_member == 1);
  CHECK(st_u.sup_gap == 3);
  CHECK(st_u.max_run == 2);
  CHECK(st_u.ps_min_shift == 2);
}

TEST_CASE("stats agree with the brute-force oracle") {
  testgen::Gen gen(13);
  for (int i = 0; i < 60; ++i) {
    const SetExpr e = gen.ep_expr();
    const auto form = eventually_periodic_normalize(e);
    REQUIRE(form.has_value());
    const EpStats st = ep_stats(*form);
    const testgen::Oracle o = testgen::brute_oracle(e);

    CHECK(st.infinite == o.infinite);
    CHECK(st.cofinite == o.cofinite);
    CHECK(st.first_member == o.first);
    if (o.infinite) CHECK(st.sup_gap == o.sup_gap);
    if (!o.cofinite) CHECK(st.max_run == o.max_run);
    CHECK(st.ps_min_shift == o.ps_min_shift);
  }
}

TEST_CASE("table growth beyond the safety cap is refused") {
  // Structural period 20M * 2 exceeds the 32M-cell cap.
  const SetExpr big = SetExpr::dilate(2, SetExpr::residue(0, 20'000'000));
  CHECK_THROWS_AS(eventually_periodic_normalize(big), Error);
  try {
    eventually_periodic_normalize(big);
  } catch (const Error& err) {
    CHECK(err.code() == Error::Code::ResourceLimit);
  }
}
