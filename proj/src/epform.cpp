// SPDX-License-Identifier: Apache-2.0
#include "lsc/epform.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace lsc {

namespace {
constexpr Int kCellCap = 32 * 1000 * 1000;

void check_cells(Int pre_len, Int period) {
  if (pre_len < 0 || period < 1 || pre_len + period > kCellCap)
    throw Error(Error::Code::ResourceLimit, "eventually periodic table exceeds safety cap");
}

// Build a form with the given shape by sampling a membership function, then
// reduce it.
EpForm build(Int pre_len, Int period, const std::function<bool(Int)>& contains) {
  check_cells(pre_len, period);
  EpForm f;
  f.pre_len = pre_len;
  f.pre.resize(static_cast<size_t>(pre_len));
  for (Int n = 1; n <= pre_len; ++n) f.pre[static_cast<size_t>(n - 1)] = contains(n);
  f.cycle.resize(static_cast<size_t>(period));
  for (Int j = 0; j < period; ++j) f.cycle[static_cast<size_t>(j)] = contains(pre_len + 1 + j);
  // Minimal divisor period.
  const Int p = period;
  for (Int d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (Int i = d; i < p && ok; ++i) ok = f.cycle[static_cast<size_t>(i)] == f.cycle[static_cast<size_t>(i % d)];
    if (ok) {
      f.cycle.resize(static_cast<size_t>(d));
      break;
    }
  }
  // Trim the preperiod: dropping one trailing entry is sound when it matches
  // the last cycle slot, and each drop rotates the cycle right by one.
  const Int q = f.period();
  Int trim = 0;
  while (trim < f.pre_len &&
         f.pre[static_cast<size_t>(f.pre_len - trim - 1)] ==
             f.cycle[static_cast<size_t>(((q - 1 - trim) % q + q) % q)])
    ++trim;
  if (trim > 0) {
    f.pre_len -= trim;
    f.pre.resize(static_cast<size_t>(f.pre_len));
    std::rotate(f.cycle.begin(), f.cycle.end() - (trim % q), f.cycle.end());
  }
  return f;
}

Int lcm_checked(Int a, Int b) {
  const Int g = std::gcd(a, b);
  Int out;
  if (__builtin_mul_overflow(a / g, b, &out) || out > kCellCap)
    throw Error(Error::Code::ResourceLimit, "eventually periodic period exceeds safety cap");
  return out;
}

EpForm normalize(const SetExpr& e);

EpForm normalize_children_combine(const SetExpr& e, bool is_union) {
  std::vector<EpForm> kids;
  kids.reserve(e.children().size());
  Int pre_len = 0, period = 1;
  for (const SetExpr& k : e.children()) {
    kids.push_back(normalize(k));
    pre_len = std::max(pre_len, kids.back().pre_len);
    period = lcm_checked(period, kids.back().period());
  }
  return build(pre_len, period, [&](Int n) {
    if (is_union) {
      for (const EpForm& f : kids)
        if (f.contains(n)) return true;
      return false;
    }
    for (const EpForm& f : kids)
      if (!f.contains(n)) return false;
    return true;
  });
}

EpForm normalize(const SetExpr& e) {
  using K = SetExpr::Kind;
  switch (e.kind()) {
    case K::Empty:
      return build(0, 1, [](Int) { return false; });
    case K::Full:
      return build(0, 1, [](Int) { return true; });
    case K::Finite: {
      const auto& elems = e.finite_elements();
      const Int pre = elems.empty() ? 0 : elems.back();
      return build(pre, 1, [&](Int n) { return std::binary_search(elems.begin(), elems.end(), n); });
    }
    case K::Residue:
      return build(0, e.modulus(), [&](Int n) { return n % e.modulus() == e.residue_value(); });
    case K::Union:
      return normalize_children_combine(e, true);
    case K::Inter:
      return normalize_children_combine(e, false);
    case K::Compl: {
      EpForm f = normalize(e.children()[0]);
      f.pre.flip();
      f.cycle.flip();
      return f;
    }
    case K::ShiftDown: {
      EpForm f = normalize(e.children()[0]);
      const Int k = e.amount();
      return build(std::max<Int>(0, f.pre_len - k), f.period(),
                   [&](Int n) { return f.contains(n + k); });
    }
    case K::ShiftUp: {
      EpForm f = normalize(e.children()[0]);
      const Int k = e.amount();
      return build(f.pre_len + k, f.period(), [&](Int n) { return f.contains(n - k); });
    }
    case K::Dilate: {
      EpForm f = normalize(e.children()[0]);
      const Int k = e.amount();
      Int pre, per;
      if (__builtin_mul_overflow(f.pre_len, k, &pre) || __builtin_mul_overflow(f.period(), k, &per))
        throw Error(Error::Code::ResourceLimit, "eventually periodic table exceeds safety cap");
      return build(pre, per, [&](Int n) { return n % k == 0 && f.contains(n / k); });
    }
    case K::Quotient: {
      EpForm f = normalize(e.children()[0]);
      const Int k = e.amount();
      const Int pre = (f.pre_len + k - 1) / k;
      const Int per = f.period() / std::gcd(f.period(), k);
      return build(pre, per, [&](Int n) { return f.contains(n * k); });
    }
    case K::Thick:
    case K::Return:
      break;
  }
  throw Error(Error::Code::InvalidArgument, "expression is not eventually periodic");
}
}  // namespace

bool EpForm::infinite() const {
  return std::find(cycle.begin(), cycle.end(), true) != cycle.end();
}

bool EpForm::cofinite_tail() const {
  return std::find(cycle.begin(), cycle.end(), false) == cycle.end();
}

std::optional<EpForm> eventually_periodic_normalize(const SetExpr& e) {
  if (!e.ep_eligible()) return std::nullopt;
  return normalize(e);
}

EpStats ep_stats(const EpForm& f) {
  EpStats st;
  st.infinite = f.infinite();
  st.cofinite = f.cofinite_tail();
  const Int p = f.period();
  // Every distinct consecutive difference, and every complete run, shows up
  // within pre_len + a few periods.
  const Int scan = f.pre_len + 4 * p;
  Int prev = 0, run = 0;
  for (Int n = 1; n <= scan; ++n) {
    if (f.contains(n)) {
      if (st.first_member == 0) st.first_member = n;
      if (prev != 0) st.sup_gap = std::max(st.sup_gap, n - prev);
      prev = n;
      ++run;
      // Ignore a run still open at the scan edge; for a non-cofinite cycle it
      // recurs (and closes) one period earlier.
      if (n < scan) st.max_run = std::max(st.max_run, run);
    } else {
      run = 0;
    }
  }
  if (st.first_member != 0) st.sup_gap = std::max(st.sup_gap, st.first_member);
  if (!st.infinite) {
    st.sup_gap = 0;
    st.ps_min_shift = -1;
    return st;
  }
  if (st.cofinite) st.max_run = -1;
  // Minimal N with the union of shifts 0..N covering the whole cycle: the
  // longest circular zero-run.
  Int zero_run = 0, best = 0;
  for (Int i = 0; i < 2 * p; ++i) {
    if (!f.cycle[static_cast<size_t>(i % p)]) {
      ++zero_run;
      best = std::max(best, std::min(zero_run, p - 1));
    } else {
      zero_run = 0;
    }
  }
  st.ps_min_shift = best;
  return st;
}

}  // namespace lsc
