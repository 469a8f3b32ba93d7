// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>
#include <vector>

#include "lsc/setexpr.hpp"

namespace lsc {

// Gap bound: first member <= gap and every difference of consecutive members
// within 1..checked_window is <= gap.
struct SyndeticCert {
  Int gap = 0;
  Int checked_window = 0;
};

// One witness interval per length 1..level (or longer); every integer of
// every witness is a member.
struct ThickCert {
  Int level = 0;
  std::vector<Interval> witnesses;
};

// The union (A-0) u ... u (A-shift) is thick to the inner level; the inner
// witnesses live in that union.
struct PsCert {
  Int shift = 0;
  ThickCert inner;
};

// Strictly increasing generators whose 2^d - 1 nonempty subset sums all
// belong to the set.
struct IpCert {
  std::vector<Int> generators;
};

enum class Outcome { Certified, Refuted, Unknown };

using Certificate = std::variant<std::monostate, SyndeticCert, ThickCert, PsCert, IpCert>;

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  // True when the answer was settled on the eventually periodic tier and so
  // holds for the full infinite set, not just the inspected window.
  bool exact = false;
  // Refuted: the exhausted search bound (0 = absolute refutation).
  // Unknown: the bound or budget that was reached.
  Int bound = 0;
  Certificate cert;

  static Verdict certified(Certificate c, bool exact_flag) {
    return Verdict{Outcome::Certified, exact_flag, 0, std::move(c)};
  }
  static Verdict refuted(Int bound_reached, bool exact_flag) {
    return Verdict{Outcome::Refuted, exact_flag, bound_reached, std::monostate{}};
  }
  static Verdict unknown(Int bound_reached) {
    return Verdict{Outcome::Unknown, false, bound_reached, std::monostate{}};
  }
};

// Certificate re-validation against lazy membership; used by tests, document
// replay, and the CLI before emitting a document.
bool revalidate(const SetExpr& s, const SyndeticCert& c);
bool revalidate(const SetExpr& h, const ThickCert& c);
bool revalidate(const SetExpr& a, const PsCert& c);
bool revalidate(const SetExpr& a, const IpCert& c);
bool revalidate(const SetExpr& s, const Verdict& v);  // dispatches on the payload

}  // namespace lsc
