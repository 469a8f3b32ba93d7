// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsc/core.hpp"
#include "lsc/schedule.hpp"
#include "lsc/word.hpp"

namespace lsc {

// Bit table over 1..size(). Index arguments are 1-based positions.
class Window {
 public:
  Window() = default;
  explicit Window(Int n) : bits_(static_cast<size_t>(n < 0 ? 0 : n), false) {}

  Int size() const { return static_cast<Int>(bits_.size()); }
  bool test(Int i) const { return i >= 1 && i <= size() && bits_[static_cast<size_t>(i - 1)]; }
  void set(Int i, bool v = true) { bits_[static_cast<size_t>(i - 1)] = v; }

  Int count() const;
  std::vector<Int> members() const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  std::vector<bool> bits_;
};

// How occurrences of a pattern at word index i (0-based) are mapped into N.
enum class ReturnBase {
  IndexDropZero,  // occurrence at i becomes i; the i = 0 occurrence is dropped
  IndexPlusOne,   // occurrence at i becomes i + 1
};

// Immutable algebraic description of a subset of N = {1, 2, ...} with lazy
// membership. Value-semantic handle over a shared node.
class SetExpr {
 public:
  enum class Kind {
    Empty, Full, Finite, Residue, Thick, Return,
    Union, Inter, Compl, ShiftDown, ShiftUp, Dilate, Quotient,
  };

  static SetExpr empty();
  static SetExpr full();
  static SetExpr finite(std::vector<Int> elems);           // elements >= 1
  static SetExpr residue(Int r, Int m);                    // {n : n = r mod m}, 0 <= r < m
  static SetExpr thick(Schedule sched);                    // union of the schedule's intervals
  static SetExpr returns(WordSpec word, std::string pattern,
                         ReturnBase base = ReturnBase::IndexDropZero);
  static SetExpr unite(std::vector<SetExpr> parts);        // nonempty list
  static SetExpr intersect(std::vector<SetExpr> parts);    // nonempty list
  static SetExpr complement(SetExpr a);
  static SetExpr shift_down(Int n, SetExpr a);             // A - n = {m : m + n in A}
  static SetExpr shift_up(Int n, SetExpr a);               // (A + n), clipped to N
  static SetExpr dilate(Int k, SetExpr a);                 // kA
  static SetExpr quotient(Int k, SetExpr a);               // A/k = {m : mk in A}

  Kind kind() const;

  bool member(Int n) const;       // pure, thread-safe
  Window window(Int n) const;     // membership table of 1..n

  // True when the expression avoids Thick and Return nodes, i.e. when the
  // eventually-periodic normal form exists.
  bool ep_eligible() const;

  // Payload accessors; only valid for the matching kind.
  const std::vector<Int>& finite_elements() const;
  Int residue_value() const;
  Int modulus() const;
  const Schedule& schedule() const;
  const Word& word() const;
  const std::string& pattern() const;
  ReturnBase return_base() const;
  const std::vector<SetExpr>& children() const;
  Int amount() const;  // shift distance or scale factor

 private:
  struct Node;
  explicit SetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::shared_ptr<Node> blank();
  static SetExpr make_unary(Kind kind, Int amount, SetExpr a, Int min_amount, const char* what);
  std::shared_ptr<const Node> node_;
};

// Window over d = 1..n of the difference set S - S2, evaluated with the fixed
// horizon 2n: d is reported when some s' <= 2n has s' in S2 and s' + d in S.
Window difference_set_window(const SetExpr& s, const SetExpr& s2, Int n);

// Regions where runs of consecutive members plausibly live, harvested from
// Thick nodes (and shifted/scaled through the operators above them). Hints
// only: callers re-validate with member(). Sorted by lo, deduplicated,
// clipped to [1, bound], at most cap entries per schedule.
std::vector<Interval> run_hint_regions(const SetExpr& e, Int bound, int cap_per_schedule = 64);

}  // namespace lsc
