// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "lsc/setexpr.hpp"

namespace lsc {

// Eventually periodic membership table: positions 1..pre_len are read from
// pre, and n > pre_len is read from cycle[(n - pre_len - 1) mod period].
// Normal forms exist exactly for expressions without Thick/Return nodes, and
// make syndetic/thick/piecewise-syndetic questions decidable.
struct EpForm {
  Int pre_len = 0;
  std::vector<bool> pre;
  std::vector<bool> cycle;  // never empty

  Int period() const { return static_cast<Int>(cycle.size()); }
  bool contains(Int n) const {
    if (n < 1) return false;
    if (n <= pre_len) return pre[static_cast<size_t>(n - 1)];
    return cycle[static_cast<size_t>((n - pre_len - 1) % period())];
  }
  bool infinite() const;       // some cycle bit set
  bool cofinite_tail() const;  // every cycle bit set
};

// nullopt iff the expression contains a Thick or Return node. The period of
// the result divides the lcm of all moduli times all dilation factors; the
// form is reduced (minimal cycle divisor, preperiod trimmed). Throws
// Error(ResourceLimit) if the table would exceed the safety cap.
std::optional<EpForm> eventually_periodic_normalize(const SetExpr& e);

struct EpStats {
  bool infinite = false;
  bool cofinite = false;   // tail all true, i.e. the set is thick
  Int first_member = 0;    // 0 when empty
  // max(first member, largest difference of consecutive members); the exact
  // syndetic gap bound. Only meaningful when infinite.
  Int sup_gap = 0;
  // Longest run of consecutive members; meaningful when not cofinite.
  Int max_run = 0;
  // Minimal N with (A-0) u ... u (A-N) cofinite; -1 when the set is finite.
  Int ps_min_shift = -1;
};

EpStats ep_stats(const EpForm& f);

}  // namespace lsc
