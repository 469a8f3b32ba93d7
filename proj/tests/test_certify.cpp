// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "lsc/certify.hpp"
#include "testgen.h"

using namespace lsc;

namespace {

const SetExpr kFibA = SetExpr::returns(fibonacci_spec(), "a");

Limits tiny_budget() {
  Limits l = Limits::defaults();
  l.budget = 50;
  return l;
}

}  // namespace

TEST_CASE("exact-tier verdicts match the brute-force oracle") {
  testgen::Gen gen(31);
  for (int i = 0; i < 40; ++i) {
    const SetExpr e = gen.ep_expr();
    const testgen::Oracle o = testgen::brute_oracle(e);

    const Verdict syn = syndetic_gap(e, 1000);
    if (!o.infinite) {
      CHECK(syn.outcome == Outcome::Refuted);
      CHECK(syn.exact);
      CHECK(syn.bound == 0);
    } else {
      REQUIRE(syn.outcome == Outcome::Certified);
      CHECK(syn.exact);
      const auto& cert = std::get<SyndeticCert>(syn.cert);
      CHECK(cert.gap == o.sup_gap);
      CHECK(revalidate(e, cert));
    }

    const Verdict th = thick_to_level(e, 3, 100'000);
    if (!o.cofinite && o.max_run < 3) {
      CHECK(th.outcome == Outcome::Refuted);
      CHECK(th.exact);
    } else {
      REQUIRE(th.outcome == Outcome::Certified);
      CHECK(th.exact);
      CHECK(revalidate(e, std::get<ThickCert>(th.cert)));
    }

    const Verdict ps = piecewise_syndetic(e, 16, 3, 100'000);
    if (!o.infinite) {
      CHECK(ps.outcome == Outcome::Refuted);
      CHECK(ps.exact);
    } else if (o.ps_min_shift > 16) {
      CHECK(ps.outcome == Outcome::Unknown);
    } else {
      REQUIRE(ps.outcome == Outcome::Certified);
      CHECK(std::get<PsCert>(ps.cert).shift == o.ps_min_shift);
      CHECK(revalidate(e, std::get<PsCert>(ps.cert)));
    }

    const Verdict ip = ip_witness(e, 2, 300);
    const std::vector<Int> pair = testgen::brute_ip2(e, 300);
    if (pair.empty()) {
      CHECK(ip.outcome == Outcome::Refuted);
      CHECK(ip.bound == 300);
    } else {
      REQUIRE(ip.outcome == Outcome::Certified);
      CHECK(std::get<IpCert>(ip.cert).generators == pair);
      CHECK(revalidate(e, std::get<IpCert>(ip.cert)));
    }
  }
}

TEST_CASE("window-tier syndetic") {
  // The geometric thick set has growing gaps: no verdict at this window.
  const Verdict v = syndetic_gap(SetExpr::thick(Schedule::geometric(3, 1)), 200);
  CHECK(v.outcome == Outcome::Unknown);

  // Return times of 'a' in the Fibonacci word have gaps 1 and 2 only.
  const Verdict fib = syndetic_gap(kFibA, 1000);
  REQUIRE(fib.outcome == Outcome::Certified);
  CHECK_FALSE(fib.exact);
  const auto& cert = std::get<SyndeticCert>(fib.cert);
  CHECK(cert.gap == 2);
  CHECK(cert.checked_window == 1000);
  CHECK(revalidate(kFibA, cert));
}

TEST_CASE("window-tier thick finds prefix witnesses per length") {
  const SetExpr t = SetExpr::thick(Schedule::geometric(10, 1));
  const Verdict v = thick_to_level(t, 4, 100'000);
  REQUIRE(v.outcome == Outcome::Certified);
  CHECK_FALSE(v.exact);
  const auto& cert = std::get<ThickCert>(v.cert);
  CHECK(cert.level == 4);
  REQUIRE(cert.witnesses.size() == 4);
  for (size_t l = 0; l < 4; ++l) CHECK(cert.witnesses[l].length() == static_cast<Int>(l) + 1);
  CHECK(revalidate(t, cert));

  // Tampering breaks re-validation.
  ThickCert bad = cert;
  bad.witnesses[0].lo = 1;  // 1 is not a member of the geometric union
  bad.witnesses[0].hi = 1;
  CHECK_FALSE(revalidate(t, bad));
  ThickCert cut = cert;
  cut.witnesses.pop_back();
  CHECK_FALSE(revalidate(t, cut));
}

TEST_CASE("window-tier thick refutation needs an exhausted scan") {
  // No "bb" in the Fibonacci word, so level 2 fails; the bound is inside the
  // always-scanned initial window, making the failure a refutation.
  const SetExpr fib_b = SetExpr::returns(fibonacci_spec(), "b");
  const Verdict v = thick_to_level(fib_b, 2, 5000);
  CHECK(v.outcome == Outcome::Refuted);
  CHECK_FALSE(v.exact);
  CHECK(v.bound == 5000);
}

TEST_CASE("window-tier piecewise syndetic finds the least shift") {
  // R = 'a' return times: R itself has no triple run ("aaa" never occurs),
  // but gaps <= 2 make R u (R-1) cover a tail of N.
  const Verdict v = piecewise_syndetic(kFibA, 4, 3, 5000);
  REQUIRE(v.outcome == Outcome::Certified);
  const auto& cert = std::get<PsCert>(v.cert);
  CHECK(cert.shift == 1);
  CHECK(cert.inner.level == 3);
  CHECK(revalidate(kFibA, cert));
}

TEST_CASE("finite-sums witnesses") {
  const Verdict v = ip_witness(SetExpr::residue(0, 2), 3, 100);
  REQUIRE(v.outcome == Outcome::Certified);
  CHECK(std::get<IpCert>(v.cert).generators == std::vector<Int>{2, 4, 6});
  CHECK(revalidate(SetExpr::residue(0, 2), std::get<IpCert>(v.cert)));

  // Odd numbers: the sum of two odd members is even, never a member.
  const Verdict odd = ip_witness(SetExpr::residue(1, 2), 2, 1000);
  CHECK(odd.outcome == Outcome::Refuted);
  CHECK(odd.bound == 1000);

  IpCert fake{{2, 4, 5}};
  CHECK_FALSE(revalidate(SetExpr::residue(0, 2), fake));
  CHECK_THROWS_AS(ip_witness(SetExpr::full(), 0, 10), Error);
  CHECK_THROWS_AS(ip_witness(SetExpr::full(), 2, 0), Error);
}

TEST_CASE("dynamical syndeticity certificates") {
  const SetExpr evens = SetExpr::residue(0, 2);
  const Verdict ds = ds_certificate(evens, {2, 4}, 500);
  REQUIRE(ds.outcome == Outcome::Certified);
  CHECK(std::get<SyndeticCert>(ds.cert).gap == 2);

  const Verdict dcs = dcs_certificate(evens, {2, 4}, 500);
  REQUIRE(dcs.outcome == Outcome::Certified);
  CHECK(std::get<SyndeticCert>(dcs.cert).gap == 2);

  CHECK_THROWS_AS(ds_certificate(evens, {}, 500), Error);
  CHECK_THROWS_AS(ds_certificate(evens, {3}, 500), Error);  // 3 not in B
}

TEST_CASE("thickness probe with searched F") {
  // Probe res(0,2) against A = N: F = {1,2} mixes both residues, so S - F
  // covers N; smaller candidates fail.
  const FSearchResult r = dt_check(SetExpr::full(), SetExpr::residue(0, 2), 2, 3, 1000);
  REQUIRE(r.verdict.outcome == Outcome::Certified);
  CHECK(r.f == std::vector<Int>{1, 2});

  // A = S = evens: every shift keeps everything even, so S - F is never
  // thick; the all-members candidate settles the refutation for every F.
  const FSearchResult no = dt_check(SetExpr::residue(0, 2), SetExpr::residue(0, 2), 8, 3, 1000);
  CHECK(no.verdict.outcome == Outcome::Refuted);
  CHECK(no.f.empty());

  // The probe must be piecewise syndetic.
  CHECK_THROWS_AS(dt_check(SetExpr::full(), SetExpr::finite({1, 2}), 4, 3, 1000), Error);
}

TEST_CASE("thickness probe with supplied F") {
  const FSearchResult r =
      dt_check_with(SetExpr::full(), SetExpr::residue(0, 3), {1, 2, 3}, 4, 1000);
  REQUIRE(r.verdict.outcome == Outcome::Certified);
  CHECK(r.verdict.exact);  // S - F is eventually periodic and cofinite
  CHECK(r.f == std::vector<Int>{1, 2, 3});

  CHECK_THROWS_AS(dt_check_with(SetExpr::residue(0, 2), SetExpr::full(), {3}, 2, 100), Error);
  CHECK_THROWS_AS(dt_check_with(SetExpr::full(), SetExpr::full(), {}, 2, 100), Error);
}

TEST_CASE("pointwise recurrence obstruction probe") {
  // S = res(0,3), F = {1}: S - 1 misses S entirely, so S \ (S - F) = S keeps
  // gap 3 > threshold 2.
  const PrResult r = pr_check(SetExpr::finite({1}), SetExpr::residue(0, 3), 4, 100, 2);
  REQUIRE(r.verdict.outcome == Outcome::Certified);
  CHECK(r.f == std::vector<Int>{1});
  CHECK(r.realized_gap == 3);

  // F = {3} shifts S onto itself: the remainder is empty, whose gap spans the
  // whole window — still above threshold.
  const PrResult empty_rem = pr_check(SetExpr::finite({3}), SetExpr::residue(0, 3), 4, 100, 50);
  REQUIRE(empty_rem.verdict.outcome == Outcome::Certified);
  CHECK(empty_rem.realized_gap == 101);

  // Threshold above every achievable gap: the all-members candidate already
  // realizes the largest remainder gap (3), so the refutation is conclusive.
  const PrResult no = pr_check(SetExpr::finite({1}), SetExpr::residue(0, 3), 4, 100, 10);
  CHECK(no.verdict.outcome == Outcome::Refuted);
  CHECK(no.verdict.bound == 4);

  // Probe S = N: every shift removes everything, so the remainder is empty
  // and its sentinel gap spans the whole window -- vacuously certified.
  const PrResult vac = pr_check(SetExpr::residue(0, 2), SetExpr::full(), 6, 100, 2);
  CHECK(vac.verdict.outcome == Outcome::Certified);
  CHECK(vac.realized_gap == 101);

  // The probe must carry a syndetic certificate on the window.
  CHECK_THROWS_AS(pr_check(SetExpr::full(), SetExpr::finite({5}), 4, 100, 2), Error);
}

TEST_CASE("self-correlation scan") {
  const SetExpr b = SetExpr::unite({SetExpr::residue(0, 4), SetExpr::residue(1, 4)});
  const ShiftCorrelationResult r = shift_correlation(b, 8, 16, 3, 10'000);
  REQUIRE(r.verdict.outcome == Outcome::Certified);
  CHECK(r.shift == 1);  // B n (B-1) = res(0,4), piecewise syndetic

  // A residue class correlates with itself only at multiples of the modulus.
  const ShiftCorrelationResult r3 = shift_correlation(SetExpr::residue(0, 3), 8, 16, 3, 10'000);
  REQUIRE(r3.verdict.outcome == Outcome::Certified);
  CHECK(r3.shift == 3);
}

TEST_CASE("compactness prefix search") {
  const CompactnessResult r = compactness_prefix(3, SetExpr::thick(Schedule::geometric(3, 1)),
                                                 100'000);
  REQUIRE(r.verdict.outcome == Outcome::Certified);
  CHECK(r.m == 11);  // [9,11] is the first run of length 3

  const CompactnessResult never = compactness_prefix(2, SetExpr::residue(0, 3), 1000);
  CHECK(never.verdict.outcome == Outcome::Refuted);
  CHECK(never.verdict.exact);  // eventually periodic: no run of 2 ever
  CHECK(never.verdict.bound == 0);

  const CompactnessResult maybe = compactness_prefix(30, SetExpr::thick(Schedule::geometric(3, 1)),
                                                     50);
  CHECK(maybe.verdict.outcome == Outcome::Refuted);
  CHECK_FALSE(maybe.verdict.exact);  // longer runs exist past the bound
  CHECK(maybe.verdict.bound == 50);
}

TEST_CASE("budget exhaustion yields unknown, never a wrong verdict") {
  const Verdict v = syndetic_gap(kFibA, 100'000, tiny_budget());
  CHECK(v.outcome == Outcome::Unknown);
  const Verdict t = thick_to_level(SetExpr::thick(Schedule::geometric(3, 1)), 5, 1'000'000,
                                   tiny_budget());
  CHECK(t.outcome == Outcome::Unknown);
}

TEST_CASE("parallel search is deterministic") {
  Limits par = Limits::defaults();
  par.parallel = true;
  par.threads = 4;

  const SetExpr a = SetExpr::unite({SetExpr::residue(0, 7), SetExpr::residue(3, 11)});
  const Verdict serial = ip_witness(a, 3, 2000);
  const Verdict parallel = ip_witness(a, 3, 2000, par);
  REQUIRE(serial.outcome == Outcome::Certified);
  REQUIRE(parallel.outcome == Outcome::Certified);
  CHECK(std::get<IpCert>(serial.cert).generators == std::get<IpCert>(parallel.cert).generators);
}
