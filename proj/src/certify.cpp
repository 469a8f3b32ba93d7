// SPDX-License-Identifier: Apache-2.0
#include "lsc/certify.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace lsc {

namespace {

constexpr Int kInitWindow = 65536;

SetExpr shifted_union(const SetExpr& a, Int max_shift) {
  std::vector<SetExpr> parts;
  parts.reserve(static_cast<size_t>(max_shift) + 1);
  for (Int i = 0; i <= max_shift; ++i) parts.push_back(SetExpr::shift_down(i, a));
  return SetExpr::unite(std::move(parts));
}

SetExpr probe_minus_f(const SetExpr& s, const std::vector<Int>& f) {
  std::vector<SetExpr> parts;
  parts.reserve(f.size());
  for (Int x : f) parts.push_back(SetExpr::shift_down(x, s));
  return SetExpr::unite(std::move(parts));
}

// First maximal run of members per requested length, scanning a membership
// predicate over 1..limit. Returns nullopt when some length has no run.
std::optional<std::vector<Interval>> witnesses_by_scan(const std::function<bool(Int)>& mem,
                                                       Int level, Int limit) {
  std::vector<Interval> runs;
  Int run_start = 0;
  for (Int n = 1; n <= limit + 1; ++n) {
    const bool in = n <= limit && mem(n);
    if (in && run_start == 0) run_start = n;
    if (!in && run_start != 0) {
      runs.push_back({run_start, n - 1});
      run_start = 0;
      if (runs.back().length() >= level) break;
    }
  }
  std::vector<Interval> out;
  for (Int l = 1; l <= level; ++l) {
    const Interval* found = nullptr;
    for (const Interval& r : runs)
      if (r.length() >= l) {
        found = &r;
        break;
      }
    if (!found) return std::nullopt;
    out.push_back({found->lo, found->lo + l - 1});
  }
  return out;
}

struct RunScan {
  std::vector<Interval> runs;  // maximal member runs, ascending and merged
  bool complete = true;        // false when the budget ran out mid-scan
  bool exhaustive = false;     // true when all of [1, bound] was examined
};

// Scan the initial window plus schedule-derived hint regions for runs of
// consecutive members. stop_len > 0 stops as soon as a run reaches it.
RunScan scan_runs(const SetExpr& e, Int bound, Int stop_len, Budget& budget) {
  RunScan rs;
  std::vector<Interval> regions;
  const Int init_hi = std::min(bound, kInitWindow);
  regions.push_back({1, init_hi});
  for (Interval iv : run_hint_regions(e, bound)) regions.push_back(iv);
  std::sort(regions.begin(), regions.end(),
            [](Interval a, Interval b) { return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi; });
  rs.exhaustive = init_hi == bound;

  Int scanned_hi = 0;
  Int run_start = 0;
  Int run_end = 0;
  auto close_run = [&]() {
    if (run_start != 0) {
      if (!rs.runs.empty() && rs.runs.back().hi + 1 == run_start)
        rs.runs.back().hi = run_end;
      else
        rs.runs.push_back({run_start, run_end});
      run_start = 0;
    }
  };
  auto hit_stop = [&]() {
    return stop_len > 0 && !rs.runs.empty() && rs.runs.back().length() >= stop_len;
  };

  for (const Interval& region : regions) {
    Int start = std::max(region.lo, scanned_hi + 1);
    if (start > region.hi) continue;
    if (start > scanned_hi + 1) close_run();  // gap of unexamined positions
    // Walk left into unexamined territory if the region begins mid-run.
    if (start == region.lo) {
      Int left = start - 1;
      std::vector<Int> extra;
      while (left > scanned_hi && left >= 1) {
        if (!budget.spend()) {
          rs.complete = false;
          return rs;
        }
        if (!e.member(left)) break;
        extra.push_back(left);
        --left;
      }
      if (!extra.empty()) {
        run_start = extra.back();
        run_end = extra.front();
      }
    }
    for (Int n = start; n <= region.hi; ++n) {
      if (!budget.spend()) {
        rs.complete = false;
        close_run();
        return rs;
      }
      if (e.member(n)) {
        if (run_start == 0) run_start = n;
        run_end = n;
      } else {
        close_run();
      }
    }
    scanned_hi = std::max(scanned_hi, region.hi);
    // A run touching the region edge may continue beyond it.
    if (run_start != 0 && run_end == region.hi) {
      Int n = region.hi + 1;
      while (n <= bound) {
        if (!budget.spend()) {
          rs.complete = false;
          close_run();
          return rs;
        }
        if (!e.member(n)) break;
        run_end = n;
        ++n;
      }
      scanned_hi = std::max(scanned_hi, run_end);
    }
    close_run();
    if (hit_stop()) return rs;
  }
  close_run();
  return rs;
}

Verdict syndetic_impl(const SetExpr& s, Int window, Budget& budget) {
  if (window < 1) throw Error(Error::Code::InvalidArgument, "window must be >= 1");
  if (auto form = eventually_periodic_normalize(s)) {
    const EpStats st = ep_stats(*form);
    if (!st.infinite) return Verdict::refuted(0, true);
    return Verdict::certified(
        SyndeticCert{st.sup_gap, std::max(window, st.sup_gap)}, true);
  }
  Int first = 0, prev = 0, gap = 0;
  for (Int n = 1; n <= window; ++n) {
    if (!budget.spend()) return Verdict::unknown(n);
    if (!s.member(n)) continue;
    if (first == 0) first = n;
    else gap = std::max(gap, n - prev);
    prev = n;
  }
  if (first == 0) return Verdict::unknown(window);
  gap = std::max(gap, first);
  if (window - prev > gap) return Verdict::unknown(window);  // unbounded-looking tail
  return Verdict::certified(SyndeticCert{gap, window}, false);
}

Verdict thick_impl(const SetExpr& h, Int level, Int bound, Budget& budget) {
  if (level < 1) throw Error(Error::Code::InvalidArgument, "level must be >= 1");
  if (bound < 1) throw Error(Error::Code::InvalidArgument, "bound must be >= 1");
  if (auto form = eventually_periodic_normalize(h)) {
    const EpStats st = ep_stats(*form);
    if (!st.cofinite && st.max_run < level) return Verdict::refuted(0, true);
    const Int limit = form->pre_len + 4 * form->period() + level + 2;
    auto wit = witnesses_by_scan([&](Int n) { return form->contains(n); }, level, limit);
    if (!wit) return Verdict::refuted(0, true);  // defensive; stats said otherwise
    return Verdict::certified(ThickCert{level, std::move(*wit)}, true);
  }
  const RunScan rs = scan_runs(h, bound, level, budget);
  std::vector<Interval> witnesses;
  for (Int l = 1; l <= level; ++l) {
    const Interval* found = nullptr;
    for (const Interval& r : rs.runs)
      if (r.length() >= l) {
        found = &r;
        break;
      }
    if (!found) {
      // A complete scan of all of [1, bound] makes the failure a genuine
      // refutation relative to the bound.
      if (rs.complete && rs.exhaustive) return Verdict::refuted(bound, false);
      return Verdict::unknown(bound);
    }
    witnesses.push_back({found->lo, found->lo + l - 1});
  }
  return Verdict::certified(ThickCert{level, std::move(witnesses)}, false);
}

Verdict ps_impl(const SetExpr& a, Int shift_bound, Int level, Int bound, Budget& budget) {
  if (shift_bound < 0) throw Error(Error::Code::InvalidArgument, "shift bound must be >= 0");
  if (auto form = eventually_periodic_normalize(a)) {
    const EpStats st = ep_stats(*form);
    if (!st.infinite) return Verdict::refuted(0, true);
    if (st.ps_min_shift > shift_bound) return Verdict::unknown(shift_bound);
    const SetExpr u = shifted_union(a, st.ps_min_shift);
    Verdict inner = thick_impl(u, level, bound, budget);
    if (inner.outcome != Outcome::Certified) return Verdict::unknown(shift_bound);
    return Verdict::certified(PsCert{st.ps_min_shift, std::get<ThickCert>(inner.cert)}, true);
  }
  bool all_refuted = true;
  for (Int n = 0; n <= shift_bound; ++n) {
    if (budget.exhausted()) return Verdict::unknown(n);
    Verdict inner = thick_impl(shifted_union(a, n), level, bound, budget);
    if (inner.outcome == Outcome::Certified)
      return Verdict::certified(PsCert{n, std::get<ThickCert>(inner.cert)}, false);
    if (inner.outcome != Outcome::Refuted) all_refuted = false;
  }
  if (all_refuted) return Verdict::refuted(shift_bound, false);
  return Verdict::unknown(shift_bound);
}

// Membership through a precomputed bitmap when the bound is small enough,
// else through the expression with budget accounting.
class MemberFn {
 public:
  MemberFn(const SetExpr& e, Int bound, Budget& budget) : e_(e), budget_(budget) {
    if (bound <= 4'000'000) table_ = e.window(bound);
  }
  bool operator()(Int n) const {
    budget_.spend();
    if (n >= 1 && n <= table_.size()) return table_.test(n);
    return e_.member(n);
  }
  bool over_budget() const { return budget_.exhausted(); }

 private:
  const SetExpr& e_;
  Budget& budget_;
  Window table_;
};

struct IpSearchState {
  std::optional<std::vector<Int>> witness;
};

// Depth-first extension of gens by candidates > last, keeping every subset
// sum a member and the grand total <= bound. Ascending candidate order makes
// the first hit the lexicographic minimum.
bool ip_dfs(const MemberFn& mem, int depth, Int bound, std::vector<Int>& gens,
            std::vector<Int>& sums, Int total, IpSearchState& st) {
  if (static_cast<int>(gens.size()) == depth) {
    st.witness = gens;
    return true;
  }
  const Int remaining = depth - static_cast<Int>(gens.size()) - 1;
  const Int last = gens.empty() ? 0 : gens.back();
  for (Int x = last + 1;; ++x) {
    // Tightest completion: x, x+1, ..., x+remaining all still to come.
    const Int min_total = total + x + remaining * x + remaining * (remaining + 1) / 2;
    if (min_total > bound) return false;
    if (mem.over_budget()) return false;
    bool ok = mem(x);
    const size_t prev_count = sums.size();
    if (ok) {
      for (size_t i = 0; i < prev_count && ok; ++i) ok = mem(sums[i] + x);
    }
    if (ok) {
      gens.push_back(x);
      for (size_t i = 0; i < prev_count; ++i) sums.push_back(sums[i] + x);
      sums.push_back(x);
      if (ip_dfs(mem, depth, bound, gens, sums, total + x, st)) return true;
      sums.resize(prev_count);
      gens.pop_back();
    }
  }
}

Verdict brauer_impl(const SetExpr& a, const std::vector<Polynomial>& polys, Int y_lo, Int y_hi,
                    Int bound, Budget& budget, Int& out_y, Int& out_x,
                    std::vector<Int>& out_members) {
  for (Int y = y_lo; y <= y_hi; ++y) {
    if (!budget.spend()) return Verdict::unknown(bound);
    if (!a.member(y)) continue;
    std::vector<Int> vals;
    bool feasible = true;
    Int max_pos = 0, min_neg = 0;
    for (const Polynomial& p : polys) {
      Int v;
      try {
        v = p.eval(y);
      } catch (const Error&) {
        feasible = false;
        break;
      }
      vals.push_back(v);
      max_pos = std::max(max_pos, v);
      min_neg = std::min(min_neg, v);
    }
    if (!feasible) continue;
    const Int x_lo = 1 - min_neg;
    const Int x_hi = bound - max_pos;
    for (Int x = x_lo; x <= x_hi; ++x) {
      if (!budget.spend()) return Verdict::unknown(bound);
      if (!a.member(x)) continue;
      bool all = true;
      for (Int v : vals) {
        if (!budget.spend()) return Verdict::unknown(bound);
        if (!a.member(x + v)) {
          all = false;
          break;
        }
      }
      if (all) {
        out_y = y;
        out_x = x;
        out_members = {y, x};
        for (Int v : vals) out_members.push_back(x + v);
        std::sort(out_members.begin(), out_members.end());
        out_members.erase(std::unique(out_members.begin(), out_members.end()),
                          out_members.end());
        return Verdict::certified(std::monostate{}, false);
      }
    }
  }
  return Verdict::refuted(bound, false);
}

std::vector<Int> window_members_below(const SetExpr& a, Int f_bound, Budget& budget) {
  std::vector<Int> out;
  for (Int n = 1; n <= f_bound; ++n) {
    if (!budget.spend()) break;
    if (a.member(n)) out.push_back(n);
  }
  return out;
}

// Enumerates candidate finite subsets of `members` ordered by maximal element
// (ascending), then cardinality, then lexicographic order, invoking visit
// until it returns true. Returns false if the enumeration was exhausted or
// the budget ran out.
bool enumerate_f_candidates(const std::vector<Int>& members, Budget& budget,
                            const std::function<bool(const std::vector<Int>&)>& visit) {
  const size_t t = members.size();
  std::vector<Int> cand;
  std::function<bool(size_t, size_t, size_t)> combos =
      [&](size_t next, size_t still, size_t limit) -> bool {
    if (still == 0) return visit(cand);
    for (size_t i = next; i + still <= limit + 1; ++i) {
      cand.insert(cand.end() - 1, members[i]);  // keep the max element last
      if (!budget.spend()) return false;
      if (combos(i + 1, still - 1, limit)) return true;
      cand.erase(cand.end() - 2);
    }
    return false;
  };
  for (size_t idx = 0; idx < t; ++idx) {
    for (size_t card = 1; card <= idx + 1; ++card) {
      cand.clear();
      cand.push_back(members[idx]);
      if (budget.exhausted()) return false;
      if (combos(0, card - 1, idx == 0 ? 0 : idx - 1)) return true;
    }
  }
  return false;
}

}  // namespace

Verdict syndetic_gap(const SetExpr& s, Int window, const Limits& limits) {
  Budget budget(limits.budget);
  return syndetic_impl(s, window, budget);
}

Verdict thick_to_level(const SetExpr& h, Int level, Int bound, const Limits& limits) {
  Budget budget(limits.budget);
  return thick_impl(h, level, bound, budget);
}

Verdict piecewise_syndetic(const SetExpr& a, Int shift_bound, Int level, Int bound,
                           const Limits& limits) {
  Budget budget(limits.budget);
  return ps_impl(a, shift_bound, level, bound, budget);
}

Verdict ip_witness(const SetExpr& a, int depth, Int bound, const Limits& limits) {
  if (depth < 1 || depth > 20) throw Error(Error::Code::InvalidArgument, "depth must be in 1..20");
  if (bound < 1) throw Error(Error::Code::InvalidArgument, "bound must be >= 1");
  Budget budget(limits.budget);
  MemberFn mem(a, bound, budget);

  auto search_range = [&](Int x1_lo, Int x1_hi) -> std::optional<std::vector<Int>> {
    // Run the depth-first search with the first generator pinned to each
    // value of the slice in turn.
    for (Int x1 = x1_lo; x1 <= x1_hi; ++x1) {
      if (mem.over_budget()) return std::nullopt;
      const Int remaining = depth - 1;
      if (x1 + remaining * x1 + remaining * (remaining + 1) / 2 > bound) break;
      if (!mem(x1)) continue;
      std::vector<Int> gens{x1};
      std::vector<Int> sums{x1};
      IpSearchState st;
      if (ip_dfs(mem, depth, bound, gens, sums, x1, st)) return st.witness;
    }
    return std::nullopt;
  };

  std::optional<std::vector<Int>> witness;
  const Int x1_max = bound / depth;
  int threads = limits.parallel ? (limits.threads > 0
                                       ? limits.threads
                                       : static_cast<int>(std::thread::hardware_concurrency()))
                                : 1;
  threads = std::max(1, std::min<int>(threads, 16));
  if (threads > 1 && x1_max >= threads) {
    std::vector<std::optional<std::vector<Int>>> results(static_cast<size_t>(threads));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    const Int chunk = (x1_max + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          const Int lo = 1 + t * chunk;
          const Int hi = std::min<Int>(x1_max, (t + 1) * chunk);
          if (lo <= hi) results[static_cast<size_t>(t)] = search_range(lo, hi);
        } catch (...) {
          errors[static_cast<size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
    for (auto& r : results)
      if (r && (!witness || *r < *witness)) witness = r;
  } else {
    witness = search_range(1, x1_max);
  }

  if (witness) return Verdict::certified(IpCert{std::move(*witness)}, false);
  if (mem.over_budget()) return Verdict::unknown(bound);
  return Verdict::refuted(bound, false);
}

Verdict ds_certificate(const SetExpr& b, const std::vector<Int>& f, Int window,
                       const Limits& limits) {
  if (f.empty()) throw Error(Error::Code::Precondition, "F must be nonempty");
  for (Int x : f)
    if (!b.member(x))
      throw Error(Error::Code::Precondition, "F must be a finite subset of B");
  std::vector<SetExpr> parts;
  for (Int x : f) parts.push_back(SetExpr::shift_down(x, b));
  Budget budget(limits.budget);
  return syndetic_impl(SetExpr::intersect(std::move(parts)), window, budget);
}

Verdict dcs_certificate(const SetExpr& b, const std::vector<Int>& f, Int window,
                        const Limits& limits) {
  if (f.empty()) throw Error(Error::Code::Precondition, "F must be nonempty");
  for (Int x : f)
    if (!b.member(x))
      throw Error(Error::Code::Precondition, "F must be a finite subset of B");
  std::vector<SetExpr> parts{b};
  for (Int x : f) parts.push_back(SetExpr::shift_down(x, b));
  Budget budget(limits.budget);
  return syndetic_impl(SetExpr::intersect(std::move(parts)), window, budget);
}

FSearchResult dt_check_with(const SetExpr& a, const SetExpr& s, std::vector<Int> f, Int level,
                            Int bound, const Limits& limits) {
  if (f.empty()) throw Error(Error::Code::Precondition, "F must be nonempty");
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  for (Int x : f)
    if (!a.member(x))
      throw Error(Error::Code::Precondition, "F must be a finite subset of A");
  Budget budget(limits.budget);
  Verdict v = thick_impl(probe_minus_f(s, f), level, bound, budget);
  return FSearchResult{std::move(v), std::move(f)};
}

FSearchResult dt_check(const SetExpr& a, const SetExpr& s, Int f_bound, Int level, Int bound,
                       Int ps_shift_bound, const Limits& limits) {
  if (f_bound < 1) throw Error(Error::Code::InvalidArgument, "F bound must be >= 1");
  Budget budget(limits.budget);
  Verdict pre = ps_impl(s, ps_shift_bound, level, bound, budget);
  if (pre.outcome != Outcome::Certified)
    throw Error(Error::Code::Precondition, "probe is not piecewise-syndetic-certified");

  const std::vector<Int> members = window_members_below(a, f_bound, budget);
  const bool members_complete = !budget.exhausted();
  if (members.empty())
    return FSearchResult{members_complete ? Verdict::refuted(f_bound, false)
                                          : Verdict::unknown(f_bound),
                         {}};

  // S - F grows with F, so the all-members candidate dominates: if it fails,
  // every F up to the bound fails the same search.
  Verdict vmax = thick_impl(probe_minus_f(s, members), level, bound, budget);
  if (vmax.outcome != Outcome::Certified) {
    if (vmax.outcome == Outcome::Refuted && members_complete)
      return FSearchResult{Verdict::refuted(f_bound, vmax.exact), {}};
    return FSearchResult{Verdict::unknown(f_bound), {}};
  }

  FSearchResult result{Verdict::unknown(f_bound), {}};
  enumerate_f_candidates(members, budget, [&](const std::vector<Int>& f) {
    Verdict v = thick_impl(probe_minus_f(s, f), level, bound, budget);
    if (v.outcome == Outcome::Certified) {
      result = FSearchResult{std::move(v), f};
      return true;
    }
    return false;
  });
  return result;
}

PrResult pr_check(const SetExpr& a, const SetExpr& s, Int f_bound, Int window, Int gap_threshold,
                  const Limits& limits) {
  if (f_bound < 1 || window < 1)
    throw Error(Error::Code::InvalidArgument, "bounds must be >= 1");
  const Int threshold = gap_threshold > 0 ? gap_threshold : (window + 9) / 10;
  Budget budget(limits.budget);
  Verdict pre = syndetic_impl(s, window, budget);
  if (pre.outcome != Outcome::Certified)
    throw Error(Error::Code::Precondition, "probe is not syndetic-certified");

  // Maximal gap of S \ (S - F) over 1..window with sentinels at 0 and
  // window + 1.
  auto realized_gap = [&](const std::vector<Int>& f) -> Int {
    Int prev = 0, gap = 0;
    for (Int n = 1; n <= window; ++n) {
      budget.spend();
      if (!s.member(n)) continue;
      bool removed = false;
      for (Int x : f) {
        if (s.member(n + x)) {
          removed = true;
          break;
        }
      }
      if (removed) continue;
      gap = std::max(gap, n - prev);
      prev = n;
    }
    return std::max(gap, window + 1 - prev);
  };

  const std::vector<Int> members = window_members_below(a, f_bound, budget);
  const bool members_complete = !budget.exhausted();
  if (members.empty())
    return PrResult{members_complete ? Verdict::refuted(f_bound, false)
                                     : Verdict::unknown(f_bound),
                    {}, 0};

  // S \ (S - F) shrinks as F grows, so the all-members candidate realizes the
  // largest gap; if even it stays under the threshold, every F fails.
  const Int best_gap = realized_gap(members);
  if (best_gap <= threshold && members_complete)
    return PrResult{Verdict::refuted(f_bound, false), {}, best_gap};

  PrResult result{Verdict::unknown(f_bound), {}, 0};
  enumerate_f_candidates(members, budget, [&](const std::vector<Int>& f) {
    const Int gap = realized_gap(f);
    if (gap > threshold) {
      result = PrResult{Verdict::certified(std::monostate{}, false), f, gap};
      return true;
    }
    return false;
  });
  if (result.verdict.outcome == Outcome::Unknown && budget.exhausted())
    result.verdict = Verdict::unknown(f_bound);
  return result;
}

ShiftCorrelationResult shift_correlation(const SetExpr& b, Int n_bound, Int shift_bound,
                                         Int level, Int bound, const Limits& limits) {
  if (n_bound < 1) throw Error(Error::Code::InvalidArgument, "shift range must be >= 1");
  Budget budget(limits.budget);
  bool all_exact_refuted = true;
  for (Int n = 1; n <= n_bound; ++n) {
    SetExpr corr = SetExpr::intersect({b, SetExpr::shift_down(n, b)});
    Verdict v = ps_impl(corr, shift_bound, level, bound, budget);
    if (v.outcome == Outcome::Certified) return ShiftCorrelationResult{n, std::move(v)};
    if (!(v.outcome == Outcome::Refuted && v.exact)) all_exact_refuted = false;
    if (budget.exhausted()) return ShiftCorrelationResult{0, Verdict::unknown(n)};
  }
  if (all_exact_refuted) return ShiftCorrelationResult{0, Verdict::refuted(n_bound, false)};
  return ShiftCorrelationResult{0, Verdict::unknown(n_bound)};
}

BrauerResult brauer_search(const SetExpr& a, const std::vector<Polynomial>& polys, Int bound,
                           const Limits& limits) {
  if (polys.empty()) throw Error(Error::Code::InvalidArgument, "need at least one polynomial");
  if (bound < 1) throw Error(Error::Code::InvalidArgument, "bound must be >= 1");
  Budget budget(limits.budget);

  int threads = limits.parallel ? (limits.threads > 0
                                       ? limits.threads
                                       : static_cast<int>(std::thread::hardware_concurrency()))
                                : 1;
  threads = std::max(1, std::min<int>(threads, 16));
  if (threads == 1 || bound < threads * 4) {
    BrauerResult r;
    r.verdict = brauer_impl(a, polys, 1, bound, bound, budget, r.y, r.x, r.members);
    return r;
  }

  struct Slice {
    BrauerResult res;
    std::exception_ptr err;
  };
  std::vector<Slice> slices(static_cast<size_t>(threads));
  std::vector<std::thread> pool;
  const Int chunk = (bound + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      Slice& sl = slices[static_cast<size_t>(t)];
      try {
        const Int lo = 1 + t * chunk;
        const Int hi = std::min<Int>(bound, (t + 1) * chunk);
        if (lo > hi) {
          sl.res.verdict = Verdict::refuted(bound, false);
          return;
        }
        sl.res.verdict = brauer_impl(a, polys, lo, hi, bound, budget, sl.res.y, sl.res.x,
                                     sl.res.members);
      } catch (...) {
        sl.err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (Slice& sl : slices)
    if (sl.err) std::rethrow_exception(sl.err);
  BrauerResult best;
  best.verdict = Verdict::refuted(bound, false);
  bool unknown = false;
  for (Slice& sl : slices) {
    if (sl.res.verdict.outcome == Outcome::Certified) {
      if (best.verdict.outcome != Outcome::Certified || sl.res.y < best.y ||
          (sl.res.y == best.y && sl.res.x < best.x))
        best = sl.res;
    } else if (sl.res.verdict.outcome == Outcome::Unknown) {
      unknown = true;
    }
  }
  if (best.verdict.outcome == Outcome::Certified) return best;
  if (unknown) {
    best.verdict = Verdict::unknown(bound);
    return best;
  }
  return best;
}

CompactnessResult compactness_prefix(Int n, const SetExpr& b, Int m_bound, const Limits& limits) {
  if (n < 1 || m_bound < 1)
    throw Error(Error::Code::InvalidArgument, "length and bound must be >= 1");
  Budget budget(limits.budget);
  if (auto form = eventually_periodic_normalize(b)) {
    const EpStats st = ep_stats(*form);
    if (!st.cofinite && st.max_run < n)
      return CompactnessResult{Verdict::refuted(0, true), 0};  // no run anywhere
    Int run = 0;
    const Int theory_limit = form->pre_len + 4 * form->period() + n + 2;
    const Int limit = std::min(m_bound, theory_limit);
    for (Int i = 1; i <= limit; ++i) {
      run = form->contains(i) ? run + 1 : 0;
      if (run >= n)
        return CompactnessResult{
            Verdict::certified(ThickCert{n, {{i - n + 1, i}}}, true), i};
    }
    // Runs exist (stats above), so hitting m_bound first is what stopped us.
    if (limit >= theory_limit) return CompactnessResult{Verdict::refuted(0, true), 0};
    return CompactnessResult{Verdict::refuted(m_bound, true), 0};
  }
  const RunScan rs = scan_runs(b, m_bound, n, budget);
  for (const Interval& r : rs.runs) {
    if (r.length() >= n) {
      const Int m = r.lo + n - 1;
      return CompactnessResult{Verdict::certified(ThickCert{n, {{r.lo, m}}}, false), m};
    }
  }
  if (rs.complete && rs.exhaustive) return CompactnessResult{Verdict::refuted(m_bound, false), 0};
  return CompactnessResult{Verdict::unknown(m_bound), 0};
}

bool revalidate(const SetExpr& s, const SyndeticCert& c) {
  if (c.gap < 1 || c.checked_window < 1) return false;
  Int prev = 0;
  for (Int n = 1; n <= c.checked_window; ++n) {
    if (!s.member(n)) continue;
    if (prev == 0 && n > c.gap) return false;  // first member too late
    if (prev != 0 && n - prev > c.gap) return false;
    prev = n;
  }
  return prev != 0;
}

bool revalidate(const SetExpr& h, const ThickCert& c) {
  if (c.level < 1) return false;
  for (Int l = 1; l <= c.level; ++l) {
    bool covered = false;
    for (const Interval& w : c.witnesses)
      if (w.length() >= l) covered = true;
    if (!covered) return false;
  }
  for (const Interval& w : c.witnesses) {
    if (w.lo < 1 || w.hi < w.lo) return false;
    for (Int n = w.lo; n <= w.hi; ++n)
      if (!h.member(n)) return false;
  }
  return true;
}

bool revalidate(const SetExpr& a, const PsCert& c) {
  if (c.shift < 0) return false;
  return revalidate(shifted_union(a, c.shift), c.inner);
}

bool revalidate(const SetExpr& a, const IpCert& c) {
  if (c.generators.empty()) return false;
  std::vector<Int> sums;
  Int prev = 0;
  for (Int g : c.generators) {
    if (g <= prev) return false;
    prev = g;
    const size_t count = sums.size();
    for (size_t i = 0; i < count; ++i) sums.push_back(sums[i] + g);
    sums.push_back(g);
  }
  for (Int s : sums)
    if (!a.member(s)) return false;
  return true;
}

bool revalidate(const SetExpr& s, const Verdict& v) {
  if (v.outcome != Outcome::Certified) return true;
  if (const auto* c = std::get_if<SyndeticCert>(&v.cert)) return revalidate(s, *c);
  if (const auto* c = std::get_if<ThickCert>(&v.cert)) return revalidate(s, *c);
  if (const auto* c = std::get_if<PsCert>(&v.cert)) return revalidate(s, *c);
  if (const auto* c = std::get_if<IpCert>(&v.cert)) return revalidate(s, *c);
  return true;  // monostate: nothing machine-checkable attached
}

}  // namespace lsc
