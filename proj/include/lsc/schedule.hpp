// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lsc/core.hpp"

namespace lsc {

// Parameters of a doubly-indexed family of thick sets whose members stay
// pairwise far apart. Intervals are laid out in rounds: round n places one
// interval per block (row-major), each of length n*cols, and every interval
// starts beyond twice the end of the previous one plus a clearance of
// sep(max(rows, cols)) + n, where sep(d) = slope * d. Pointwise differences
// between elements of distinct blocks are therefore at least
// sep(max(rows, cols)) >= sep(d) for every truncation d, and the sum of two
// members never lands in a later interval of the representable range.
struct SeparatedFamily {
  Int rows = 1;
  Int cols = 1;
  Int slope = 1;  // sep(d) = slope * d

  Int sep(Int d) const { return slope * d; }
  Int gap_floor() const { return slope * (rows > cols ? rows : cols); }
  friend bool operator==(const SeparatedFamily&, const SeparatedFamily&) = default;
};

// A finitely described, strictly increasing sequence of disjoint intervals
// I_1 < I_2 < ... with hi_j + 1 < lo_{j+1}. Geometric and Separated kinds
// also guarantee |I_{j+1}| >= |I_j| and |I_j| >= j, so their interval unions
// are thick. Explicit lists are finite and carry no growth promise.
class Schedule {
 public:
  enum class Kind { Geometric, Explicit, Separated, Strided };

  // I_j = [c*b^j, c*b^j + j] for j >= 1. Requires b >= 2, c >= 1 and
  // c*b*(b-1) >= 3 (which already forces the gap invariant for every j).
  static Schedule geometric(Int base, Int anchor);
  static Schedule explicit_list(std::vector<Interval> intervals);
  // One block of a separated family; its j-th interval is the block's
  // round-j placement.
  static Schedule separated_block(const SeparatedFamily& fam, Int row, Int col);
  // Union of all blocks of one row, in layout order (round-major).
  static Schedule separated_row(const SeparatedFamily& fam, Int row);
  // Every step-th interval of base starting at offset (1 <= offset <= step).
  static Schedule stride(Schedule base, Int offset, Int step);

  Kind kind() const;

  // 1-based. nullopt once an Explicit list is exhausted or a Geometric
  // interval would overflow the representable range.
  std::optional<Interval> interval(Int j) const;

  // Calls fn on I_1, I_2, ... while lo <= hi_bound; stops early when fn
  // returns false.
  void for_each_interval(Int hi_bound, const std::function<bool(Interval)>& fn) const;

  bool contains(Int n) const;

  // Introspection used by the printer and by construction-level checks.
  Int geometric_base() const;
  Int geometric_anchor() const;
  const std::vector<Interval>& explicit_intervals() const;
  const SeparatedFamily& family() const;
  Int separated_row_index() const;
  Int separated_col_index() const;  // 0 for a whole-row schedule
  Schedule stride_base() const;
  Int stride_offset() const;
  Int stride_step() const;

 private:
  struct Impl;
  explicit Schedule(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace lsc
