// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "lsc/certify.hpp"
#include "lsc/symbolic.hpp"

using namespace lsc;

TEST_CASE("return sets of the Fibonacci word") {
  const SetExpr ra = return_set(fibonacci_spec(), "a");
  const Verdict v = syndetic_gap(ra, 10'000);
  REQUIRE(v.outcome == Outcome::Certified);
  CHECK(std::get<SyndeticCert>(v.cert).gap == 2);

  const SetExpr rb = return_set(fibonacci_spec(), "b");
  const Verdict vb = syndetic_gap(rb, 10'000);
  REQUIRE(vb.outcome == Outcome::Certified);
  CHECK(std::get<SyndeticCert>(vb.cert).gap == 3);

  // Out-of-alphabet patterns are rejected up front.
  CHECK_THROWS_AS(return_set(fibonacci_spec(), "ax"), Error);
  CHECK_THROWS_AS(return_set(fibonacci_spec(), ""), Error);
}

TEST_CASE("no square of b in a long Fibonacci prefix") {
  const std::string prefix = expand_word(fibonacci_spec(), 10'000);
  CHECK(prefix.find("bb") == std::string::npos);
  CHECK(prefix.find("aaa") == std::string::npos);
}

TEST_CASE("recurrence profile of uniformly recurrent words") {
  const RecurrenceProfile p = uniform_recurrence_profile(fibonacci_spec(), 5, 400);
  REQUIRE(p.w.size() == 5);
  CHECK(p.w[0] == 2);  // every length-2 window of fib contains an 'a'
  for (size_t i = 0; i < p.w.size(); ++i) {
    CHECK(p.w[i] >= static_cast<Int>(i) + 1);
    if (i > 0) CHECK(p.w[i] >= p.w[i - 1]);
  }
  CHECK(p.non_recurrent.empty());

  // Growing the prefix never shrinks W.
  const RecurrenceProfile q = uniform_recurrence_profile(fibonacci_spec(), 5, 1200);
  for (size_t i = 0; i < 5; ++i) CHECK(q.w[i] >= p.w[i]);

  const RecurrenceProfile tm = uniform_recurrence_profile(thue_morse_spec(), 4, 400);
  CHECK(tm.non_recurrent.empty());
  CHECK(tm.w[0] == 3);  // "00" window misses a 1... gaps of equal letters reach 2

  CHECK_THROWS_AS(uniform_recurrence_profile(fibonacci_spec(), 5, 50), Error);
}

TEST_CASE("a one-off factor shows up as non-recurrent evidence") {
  // a -> ab, b -> b gives abbbb...: 'a' occurs exactly once.
  const SubstitutionSpec s{{{'a', "ab"}, {'b', "b"}}, 'a'};
  const RecurrenceProfile p = uniform_recurrence_profile(s, 2, 200);
  CHECK(std::find(p.non_recurrent.begin(), p.non_recurrent.end(), "a") !=
        p.non_recurrent.end());
  CHECK(std::find(p.non_recurrent.begin(), p.non_recurrent.end(), "ab") !=
        p.non_recurrent.end());
  // W(1) degenerates to the whole prefix: only one window length fits "a".
  CHECK(p.w[0] == 200);
}

TEST_CASE("cylinder cover checks") {
  const CoverResult all = cylinder_cover_check(fibonacci_spec(), {"a", "b"}, 2, 1000);
  CHECK(all.certified);
  CHECK(all.violating_factor.empty());

  const CoverResult mix = cylinder_cover_check(fibonacci_spec(), {"aa", "ab", "b"}, 2, 1000);
  CHECK(mix.certified);

  // Length-2 factors are aa, ab, ba; dropping coverage of "ab" is caught, and
  // the first factor of the word is the reported counterexample.
  const CoverResult miss = cylinder_cover_check(fibonacci_spec(), {"aa", "b"}, 2, 1000);
  CHECK_FALSE(miss.certified);
  CHECK(miss.violating_factor == "ab");

  CHECK_THROWS_AS(cylinder_cover_check(fibonacci_spec(), {"aba"}, 2, 1000), Error);
  CHECK_THROWS_AS(cylinder_cover_check(fibonacci_spec(), {"a"}, 0, 1000), Error);
}

TEST_CASE("joint return times of coprime singleton rotations") {
  const JointReturnResult r =
      joint_return({{2, 0, {0}}, {3, 0, {0}}}, 1000);
  CHECK_FALSE(r.empty);
  CHECK(r.realized_gap == 6);
  CHECK(r.asserted_gap == 6);
  REQUIRE(r.residue_form.has_value());
  CHECK(r.window == r.residue_form->window(1000));
  CHECK(r.residue_form->member(6));
  CHECK_FALSE(r.residue_form->member(8));

  // Offset starts pin a different class mod 6.
  const JointReturnResult s =
      joint_return({{2, 1, {0}}, {3, 2, {0}}}, 1000);
  CHECK(s.realized_gap == 6);
  REQUIRE(s.residue_form.has_value());
  CHECK(s.residue_form->member(1));
  CHECK(s.residue_form->member(7));
}

TEST_CASE("joint return without the exact-form shortcut") {
  // Non-coprime moduli: correct window, no asserted class.
  const JointReturnResult r =
      joint_return({{2, 0, {0}}, {4, 0, {0}}}, 100);
  CHECK_FALSE(r.residue_form.has_value());
  CHECK(r.realized_gap == 4);
  CHECK(r.window == SetExpr::residue(0, 4).window(100));

  // Multiple targets: the odd positions, gap 2.
  const JointReturnResult odds = joint_return({{4, 0, {1, 3}}}, 100);
  CHECK_FALSE(odds.residue_form.has_value());
  CHECK(odds.realized_gap == 2);

  // Incompatible targets on one modulus: provably empty window.
  const JointReturnResult none =
      joint_return({{2, 0, {0}}, {2, 0, {1}}}, 100);
  CHECK(none.empty);
  CHECK(none.realized_gap == 0);
  CHECK(none.window.count() == 0);

  CHECK_THROWS_AS(joint_return({}, 100), Error);
  CHECK_THROWS_AS(joint_return({{2, 0, {}}}, 100), Error);
}

TEST_CASE("assembled dynamically-thick-style unions") {
  const std::vector<SetExpr> rets{return_set(fibonacci_spec(), "a"),
                                  return_set(fibonacci_spec(), "b")};
  const std::vector<Schedule> scheds{Schedule::geometric(3, 1), Schedule::geometric(3, 2)};
  const DynThickResult r = dyn_thick_from_returns(rets, scheds);
  CHECK_FALSE(r.hypothesis.empty());
  // Members come from a return set restricted to its schedule.
  for (Int n : r.expr.window(100).members()) {
    const bool b0 = rets[0].member(n) && scheds[0].contains(n);
    const bool b1 = rets[1].member(n) && scheds[1].contains(n);
    CHECK((b0 || b1));
  }

  const DynThickResult empty = dyn_thick_from_returns({}, {});
  CHECK(empty.expr.kind() == SetExpr::Kind::Empty);
  CHECK(empty.hypothesis.empty());

  CHECK_THROWS_AS(dyn_thick_from_returns(rets, {Schedule::geometric(3, 1)}), Error);
}
