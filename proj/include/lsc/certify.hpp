// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "lsc/certificate.hpp"
#include "lsc/epform.hpp"
#include "lsc/polynomial.hpp"

namespace lsc {

// Syndeticity. Exact tier: infinite eventually periodic sets certify with the
// true gap bound, finite ones refute. Otherwise the verdict is relative to
// 1..window: Certified when the realized gaps are bounded and the trailing
// memberless stretch does not exceed the reported gap, else Unknown.
Verdict syndetic_gap(const SetExpr& s, Int window, const Limits& limits = Limits::defaults());

// Thickness to a level: one witness interval per length 1..level. Exact tier
// refutes when the set is eventually periodic and its longest run is below
// level. Otherwise searches [1, bound] guided by schedule-derived regions.
Verdict thick_to_level(const SetExpr& h, Int level, Int bound,
                       const Limits& limits = Limits::defaults());

// Piecewise syndeticity: least shift N <= shift_bound such that
// (A-0) u ... u (A-N) is thick (to `level` within `bound` off the exact
// tier). Exact tier computes the minimal N outright.
Verdict piecewise_syndetic(const SetExpr& a, Int shift_bound, Int level, Int bound,
                           const Limits& limits = Limits::defaults());

// Finite-sums witness of the given depth: generators x1 < ... < xd, all
// 2^d - 1 subset sums in the set and <= bound. Lexicographically least
// witness; exhaustion refutes up to bound.
Verdict ip_witness(const SetExpr& a, int depth, Int bound,
                   const Limits& limits = Limits::defaults());

// Dynamical syndeticity data: the intersection of B - f over f in F (with B
// itself for the combined form) is checked for a syndetic gap on the window.
// Throws Error(Precondition) unless F is a nonempty subset of B.
Verdict ds_certificate(const SetExpr& b, const std::vector<Int>& f, Int window,
                       const Limits& limits = Limits::defaults());
Verdict dcs_certificate(const SetExpr& b, const std::vector<Int>& f, Int window,
                        const Limits& limits = Limits::defaults());

struct FSearchResult {
  Verdict verdict;
  std::vector<Int> f;  // meaningful when certified
};

// Dynamical thickness probe: find finite F inside A with S - F thick to
// `level` within `bound`. Candidates are subsets of A's members <= f_bound,
// ordered by max element, then cardinality, then lexicographically. The probe
// S must first pass a piecewise-syndeticity check (ps_shift_bound), else
// Error(Precondition). The all-members candidate is tested first: if it
// fails, monotonicity rules out every F up to f_bound.
FSearchResult dt_check(const SetExpr& a, const SetExpr& s, Int f_bound, Int level, Int bound,
                       Int ps_shift_bound = 16, const Limits& limits = Limits::defaults());

// Same check with a caller-supplied F (skips the search, keeps validation).
FSearchResult dt_check_with(const SetExpr& a, const SetExpr& s, std::vector<Int> f, Int level,
                            Int bound, const Limits& limits = Limits::defaults());

struct PrResult {
  Verdict verdict;
  std::vector<Int> f;
  Int realized_gap = 0;  // maximal gap of S \ (S-F) on the window
};

// Pointwise-recurrence obstruction probe: find finite F inside A such that
// S \ (S - F) has a gap exceeding gap_threshold on 1..window (threshold <= 0
// selects ceil(window / 10)). S must carry a syndetic certificate on the
// window. Monotone shortcut as in dt_check, with the direction reversed.
PrResult pr_check(const SetExpr& a, const SetExpr& s, Int f_bound, Int window,
                  Int gap_threshold = 0, const Limits& limits = Limits::defaults());

struct ShiftCorrelationResult {
  Int shift = 0;  // first n with B n (B - n) piecewise syndetic
  Verdict verdict;
};

// Scans n = 1..n_bound for piecewise-syndetic self-correlation.
ShiftCorrelationResult shift_correlation(const SetExpr& b, Int n_bound, Int shift_bound,
                                         Int level, Int bound,
                                         const Limits& limits = Limits::defaults());

struct BrauerResult {
  Verdict verdict;
  Int y = 0;
  Int x = 0;
  std::vector<Int> members;  // x, y and all x + p_i(y), sorted
};

// Lexicographically least (y, x) with x, y, x + p_i(y) all in the set and
// <= bound; refutes up to bound on exhaustion.
BrauerResult brauer_search(const SetExpr& a, const std::vector<Polynomial>& polys, Int bound,
                           const Limits& limits = Limits::defaults());

struct CompactnessResult {
  Verdict verdict;
  Int m = 0;  // least M with an interval of length n inside B n [1, M]
};

// Least window end M <= m_bound whose prefix of B contains a run of length n.
CompactnessResult compactness_prefix(Int n, const SetExpr& b, Int m_bound,
                                     const Limits& limits = Limits::defaults());

}  // namespace lsc
