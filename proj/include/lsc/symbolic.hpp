// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "lsc/setexpr.hpp"

namespace lsc {

// Return-time set of the pattern cylinder along the word's orbit: the n >= 1
// (per the base flag) where the pattern occurs at word index n (respectively
// n - 1). Validates that the pattern is nonempty and stays inside the word's
// alphabet.
SetExpr return_set(WordSpec word, std::string pattern,
                   ReturnBase base = ReturnBase::IndexDropZero);

// Recurrence data of the inspected prefix. w[i] is W(i+1): the least window
// length such that the length-(i+1) prefix factor occurs in every window of
// that length inside the prefix. Always W(n) >= n and W monotone; growing the
// prefix never shrinks any W(n).
struct RecurrenceProfile {
  Int prefix_len = 0;
  std::vector<Int> w;
  // Factors (length <= n_max) seen exactly once in the prefix: finite
  // evidence against uniform recurrence of the word.
  std::vector<std::string> non_recurrent;
};

// Requires prefix_len >= 20 * n_max so the statistics have room to stabilize.
RecurrenceProfile uniform_recurrence_profile(const WordSpec& word, Int n_max, Int prefix_len);

// Rotation by +1 on Z/modulus starting at `start`; return times are the n
// with (start + n) mod modulus in targets.
struct CyclicSystem {
  Int modulus = 1;
  Int start = 0;
  std::vector<Int> targets;
};

struct JointReturnResult {
  Window window;          // joint return times on 1..N
  Int realized_gap = 0;   // max(first member, consecutive differences); 0 = empty
  bool empty = false;     // no joint return time <= N
  // When the moduli are pairwise coprime and every target is a singleton,
  // the joint return set is one residue class mod lcm(m_i) with gap exactly
  // lcm(m_i); the class is attached here and verified against the window.
  std::optional<SetExpr> residue_form;
  Int asserted_gap = 0;
};

JointReturnResult joint_return(const std::vector<CyclicSystem>& systems, Int n);

struct DynThickResult {
  SetExpr expr;            // union of returns_i n Thick(schedules_i)
  std::string hypothesis;  // the user-asserted part of the construction
};

// Assembles a dynamically-thick-style union from return sets and schedules.
// Joint disjointness of the underlying systems is not checkable here; the
// result records it as a user-asserted hypothesis. Empty input yields Empty.
DynThickResult dyn_thick_from_returns(const std::vector<SetExpr>& returns,
                                      const std::vector<Schedule>& schedules);

struct CoverResult {
  bool certified = false;
  std::string violating_factor;  // first length-n factor missing every pattern
};

// Do the patterns cover every length-n factor of the prefix (as prefixes of
// the factor)? Requires n >= the longest pattern.
CoverResult cylinder_cover_check(const WordSpec& word, const std::vector<std::string>& patterns,
                                 Int n, Int prefix_len);

}  // namespace lsc
