// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>

#include "lsc/certify.hpp"

namespace lsc {

// Union over residue classes: branch i is Residue(i mod k, k) n Thick(H_i).
// Requires k >= 2 and exactly k schedules.
SetExpr residue_thick_union(Int k, const std::vector<Schedule>& schedules);

// Finite witness for the set above: picks one interval I_i per schedule with
// |I_i| > ell and max I_i < min I_{i+1}, and returns the elements of I_i
// congruent to i mod k, all branches concatenated in increasing order.
// Throws Error(Precondition) when a schedule runs out before qualifying.
std::vector<Int> prop41_F_witness(Int k, const std::vector<Schedule>& schedules, Int ell);

struct PrimeResidueParams {
  std::vector<Int> primes;     // pairwise distinct, primality-checked
  std::vector<Int> residues;   // c_i, reduced mod p_i on use
  std::vector<Schedule> schedules;
  // Demands c_i != 0 (mod p_i) and pairwise separated schedules: all entries
  // must be blocks (or whole rows) of one separated family with no index
  // collision. This is what makes the assembled union provably not an IP set.
  bool non_ip = false;
};

// Union of the first `truncation` branches (p_i N + c_i) n Thick(H_i). All
// certificates about the result are relative to the truncation.
SetExpr prime_residue_union(const PrimeResidueParams& params, Int truncation);

// Least positive n with n = a_i - i (mod p_i) for i = 1..k; then n + i lies
// in p_i N + a_i for every i, so [n+1, n+k] is covered by the union of the
// residue classes. Primes must be pairwise distinct.
Int crt_cover_witness(const std::vector<Int>& primes, const std::vector<Int>& residues);

struct SeparatedTable {
  SeparatedFamily fam;
  std::vector<std::vector<Schedule>> blocks;  // [row-1][col-1]

  const Schedule& block(Int row, Int col) const {
    return blocks.at(static_cast<size_t>(row - 1)).at(static_cast<size_t>(col - 1));
  }
};

// Doubly-indexed family of thick schedules with every pointwise difference
// between distinct blocks at least sep(d) for each truncation d of the index
// range. sep must be monotone increasing on 1..max(rows, cols); the layout
// uses the dominating linear bound slope * d with slope = max ceil(sep(d)/d).
SeparatedTable separated_thick_family(Int rows, Int cols,
                                      const std::function<Int(Int)>& sep);

// Minimal |x - y| over members x, y of distinct blocks with row and column
// indices <= d, restricted to [1, window]. Returns nullopt when fewer than
// two blocks have members in the window.
std::optional<Int> min_cross_separation(const SeparatedTable& table, Int d, Int window);

struct SplitResult {
  SetExpr a1;
  SetExpr a2;
  Int checked_window = 0;           // disjointness + exhaustiveness window
  std::vector<Verdict> part_certs;  // split_thick: thickness verdict per part
  std::vector<std::vector<Int>> carved;  // split_by_filtration: per-round sets
};

// Interleaves a schedule: part 1 takes the odd-indexed intervals, part 2 the
// even-indexed ones. Both parts are certified thick to `level` within
// `bound`, and the partition identity is verified on 1..check_window.
SplitResult split_thick(const Schedule& sched, Int level, Int bound, Int check_window,
                        const Limits& limits = Limits::defaults());

// Round-N carve: returns a finite subset of `remaining` witnessing the
// round's family (nullopt = no witness found, aborts the split).
using Extractor = std::function<std::optional<std::vector<Int>>(Int round,
                                                                const SetExpr& remaining)>;

// Built-in carve: an interval of length N inside the remaining set, located
// with the prefix run search below m_bound.
Extractor interval_extractor(Int m_bound = 1'000'000,
                             const Limits& limits = Limits::defaults());

// Alternately assigns carved finite sets to the two parts (odd rounds to
// part 1, even to part 2); whatever remains after `rounds` goes to part 1.
// Throws Error(CarveFailure) with the failing round in detail().
SplitResult split_by_filtration(const SetExpr& a, const Extractor& carve, Int rounds,
                                Int check_window, const Limits& limits = Limits::defaults());

struct Decomposition {
  SetExpr b_s;                     // (A n G_S) u (N \ G_S)
  Schedule g_s;                    // explicit union of the chosen intervals
  Int ell = 0;                     // least qualifying density constant
  SyndeticCert cert;               // for B_S n S on the window
  std::vector<Interval> intervals; // the chosen I_1 < I_2 < ...
};

// Splits A into a structured part along intervals where A n S meets every
// length-ell subinterval, and an unstructured remainder. Intervals are the
// greedy leftmost maximal good intervals with strictly increasing lengths
// and max I_i + i < min I_{i+1}; ell is the least value <= ell_max for which
// the selection either has two intervals or one interval covering half the
// window. Requires A n S piecewise-syndetic-certified (shift/level bounds
// below); throws Error(Precondition) otherwise and when no ell qualifies.
Decomposition structure_decompose(const SetExpr& a, const SetExpr& s, Int n, Int ell_max,
                                  Int ps_shift_bound = 16, Int ps_level = 3,
                                  const Limits& limits = Limits::defaults());

struct RobustProbeReport {
  bool found = false;
  size_t collection_index = 0;  // first member certifying, when found
  Verdict verdict;
};

// For each probe A: the first B in the collection with A n B certified
// syndetic on 1..n.
std::vector<RobustProbeReport> robustly_syndetic_check(const std::vector<SetExpr>& collection,
                                                       const std::vector<SetExpr>& probes,
                                                       Int n,
                                                       const Limits& limits = Limits::defaults());

}  // namespace lsc
