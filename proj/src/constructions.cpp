// SPDX-License-Identifier: Apache-2.0
#include "lsc/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace lsc {

namespace {

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Solves x = r1 (mod m1), x = r2 (mod m2) for coprime moduli; returns the
// least nonnegative solution together with m1*m2.
std::pair<Int, Int> crt_combine(Int r1, Int m1, Int r2, Int m2) {
  // Extended gcd for the Bezout coefficient of m1.
  Int a = m1, b = m2, x0 = 1, x1 = 0;
  while (b != 0) {
    Int q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  // a == gcd == 1, x0 * m1 = 1 (mod m2)
  const Int m = m1 * m2;
  __int128 diff = r2 - r1;
  __int128 t = (diff * x0) % m2;
  __int128 x = r1 + t * m1;
  Int r = static_cast<Int>(((x % m) + m) % m);
  return {r, m};
}

void check_schedules_separated(const PrimeResidueParams& params) {
  std::vector<std::pair<Int, Int>> seen;  // (row, col); col 0 = whole row
  const SeparatedFamily* fam = nullptr;
  for (const Schedule& h : params.schedules) {
    if (h.kind() != Schedule::Kind::Separated)
      throw Error(Error::Code::Precondition,
                  "non-IP construction requires separated-family schedules");
    if (fam && !(*fam == h.family()))
      throw Error(Error::Code::Precondition,
                  "non-IP construction requires schedules from one separated family");
    fam = &h.family();
    const std::pair<Int, Int> idx{h.separated_row_index(), h.separated_col_index()};
    for (const auto& other : seen) {
      const bool same = other == idx;
      // A whole-row schedule subsumes every block of its row.
      const bool row_subsumes =
          other.first == idx.first && (other.second == 0 || idx.second == 0);
      if (same || row_subsumes)
        throw Error(Error::Code::Precondition,
                    "separated schedules must occupy disjoint blocks");
    }
    seen.push_back(idx);
  }
}

}  // namespace

SetExpr residue_thick_union(Int k, const std::vector<Schedule>& schedules) {
  if (k < 2) throw Error(Error::Code::InvalidArgument, "modulus must be >= 2");
  if (static_cast<Int>(schedules.size()) != k)
    throw Error(Error::Code::InvalidArgument, "need exactly one schedule per residue class");
  std::vector<SetExpr> parts;
  for (Int i = 0; i < k; ++i)
    parts.push_back(SetExpr::intersect(
        {SetExpr::residue(i, k), SetExpr::thick(schedules[static_cast<size_t>(i)])}));
  return SetExpr::unite(std::move(parts));
}

std::vector<Int> prop41_F_witness(Int k, const std::vector<Schedule>& schedules, Int ell) {
  if (k < 2) throw Error(Error::Code::InvalidArgument, "modulus must be >= 2");
  if (static_cast<Int>(schedules.size()) != k)
    throw Error(Error::Code::InvalidArgument, "need exactly one schedule per residue class");
  if (ell < 1) throw Error(Error::Code::InvalidArgument, "gap bound must be >= 1");
  std::vector<Int> f;
  Int prev_hi = 0;
  for (Int i = 0; i < k; ++i) {
    const Schedule& h = schedules[static_cast<size_t>(i)];
    std::optional<Interval> chosen;
    for (Int j = 1; !chosen; ++j) {
      const auto iv = h.interval(j);
      if (!iv)
        throw Error(Error::Code::Precondition,
                    "schedule exhausted before an interval longer than the gap bound", i);
      if (iv->length() > ell && iv->lo > prev_hi) chosen = *iv;
    }
    for (Int n = chosen->lo; n <= chosen->hi; ++n)
      if (n % k == i) f.push_back(n);
    prev_hi = chosen->hi;
  }
  return f;
}

SetExpr prime_residue_union(const PrimeResidueParams& params, Int truncation) {
  const size_t k = params.primes.size();
  if (k == 0 || params.residues.size() != k || params.schedules.size() != k)
    throw Error(Error::Code::InvalidArgument, "primes, residues and schedules must align");
  if (truncation < 1 || static_cast<size_t>(truncation) > k)
    throw Error(Error::Code::InvalidArgument, "truncation must be in 1..#branches");
  for (size_t i = 0; i < k; ++i) {
    if (!is_prime(params.primes[i]))
      throw Error(Error::Code::InvalidArgument, "moduli must be prime");
    for (size_t j = i + 1; j < k; ++j)
      if (params.primes[i] == params.primes[j])
        throw Error(Error::Code::InvalidArgument, "primes must be pairwise distinct");
  }
  if (params.non_ip) {
    for (size_t i = 0; i < k; ++i) {
      const Int p = params.primes[i];
      const Int c = ((params.residues[i] % p) + p) % p;
      if (c == 0)
        throw Error(Error::Code::Precondition,
                    "non-IP construction requires residues that avoid 0 mod p");
    }
    check_schedules_separated(params);
  }
  std::vector<SetExpr> parts;
  for (Int i = 0; i < truncation; ++i) {
    const auto idx = static_cast<size_t>(i);
    const Int p = params.primes[idx];
    const Int c = ((params.residues[idx] % p) + p) % p;
    parts.push_back(SetExpr::intersect(
        {SetExpr::residue(c, p), SetExpr::thick(params.schedules[idx])}));
  }
  return SetExpr::unite(std::move(parts));
}

Int crt_cover_witness(const std::vector<Int>& primes, const std::vector<Int>& residues) {
  if (primes.empty() || primes.size() != residues.size())
    throw Error(Error::Code::InvalidArgument, "primes and residues must align");
  for (size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(primes[i])) throw Error(Error::Code::InvalidArgument, "moduli must be prime");
    for (size_t j = i + 1; j < primes.size(); ++j)
      if (primes[i] == primes[j])
        throw Error(Error::Code::InvalidArgument, "primes must be pairwise distinct");
  }
  Int r = 0, m = 1;
  for (size_t i = 0; i < primes.size(); ++i) {
    const Int p = primes[i];
    if (m > 4'000'000'000'000'000 / p)
      throw Error(Error::Code::ResourceLimit, "modulus product exceeds the safe range");
    // target: n = a_i - i (mod p_i), with i counted from 1
    const Int want = (((residues[i] - static_cast<Int>(i) - 1) % p) + p) % p;
    std::tie(r, m) = crt_combine(r, m, want, p);
  }
  return r == 0 ? m : r;
}

SeparatedTable separated_thick_family(Int rows, Int cols,
                                      const std::function<Int(Int)>& sep) {
  if (rows < 1 || cols < 1)
    throw Error(Error::Code::InvalidArgument, "table dimensions must be >= 1");
  const Int dmax = std::max(rows, cols);
  Int slope = 1;
  Int prev = 0;
  for (Int d = 1; d <= dmax; ++d) {
    const Int v = sep(d);
    if (v < 1) throw Error(Error::Code::InvalidArgument, "separation must be >= 1");
    if (v < prev)
      throw Error(Error::Code::InvalidArgument, "separation must be monotone increasing");
    prev = v;
    slope = std::max(slope, (v + d - 1) / d);
  }
  SeparatedTable table;
  table.fam = SeparatedFamily{rows, cols, slope};
  for (Int r = 1; r <= rows; ++r) {
    std::vector<Schedule> row;
    for (Int c = 1; c <= cols; ++c) row.push_back(Schedule::separated_block(table.fam, r, c));
    table.blocks.push_back(std::move(row));
  }
  return table;
}

std::optional<Int> min_cross_separation(const SeparatedTable& table, Int d, Int window) {
  if (d < 1) throw Error(Error::Code::InvalidArgument, "truncation must be >= 1");
  // (member, block id) pairs; blocks do not overlap, so a sorted scan of
  // adjacent members from distinct blocks finds the minimum difference.
  std::vector<std::pair<Int, Int>> tagged;
  Int id = 0;
  for (Int r = 1; r <= std::min(d, table.fam.rows); ++r)
    for (Int c = 1; c <= std::min(d, table.fam.cols); ++c) {
      table.block(r, c).for_each_interval(window, [&](Interval iv) {
        for (Int n = iv.lo; n <= std::min(iv.hi, window); ++n) tagged.push_back({n, id});
        return true;
      });
      ++id;
    }
  std::sort(tagged.begin(), tagged.end());
  std::optional<Int> best;
  for (size_t i = 1; i < tagged.size(); ++i) {
    if (tagged[i].second == tagged[i - 1].second) continue;
    const Int diff = tagged[i].first - tagged[i - 1].first;
    if (!best || diff < *best) best = diff;
  }
  return best;
}

SplitResult split_thick(const Schedule& sched, Int level, Int bound, Int check_window,
                        const Limits& limits) {
  if (check_window < 1) throw Error(Error::Code::InvalidArgument, "window must be >= 1");
  SetExpr a1 = SetExpr::thick(Schedule::stride(sched, 1, 2));
  SetExpr a2 = SetExpr::thick(Schedule::stride(sched, 2, 2));
  const Window w1 = a1.window(check_window);
  const Window w2 = a2.window(check_window);
  const Window whole = SetExpr::thick(sched).window(check_window);
  for (Int n = 1; n <= check_window; ++n) {
    if (w1.test(n) && w2.test(n))
      throw Error(Error::Code::InvalidSchedule, "interleaved parts overlap");
    if ((w1.test(n) || w2.test(n)) != whole.test(n))
      throw Error(Error::Code::InvalidSchedule, "interleaved parts do not cover the schedule");
  }
  SplitResult result{a1, a2, check_window, {}, {}};
  result.part_certs.push_back(thick_to_level(a1, level, bound, limits));
  result.part_certs.push_back(thick_to_level(a2, level, bound, limits));
  return result;
}

Extractor interval_extractor(Int m_bound, const Limits& limits) {
  return [m_bound, limits](Int round, const SetExpr& remaining)
             -> std::optional<std::vector<Int>> {
    const CompactnessResult found = compactness_prefix(round, remaining, m_bound, limits);
    if (found.verdict.outcome != Outcome::Certified) return std::nullopt;
    const auto& cert = std::get<ThickCert>(found.verdict.cert);
    std::vector<Int> elems;
    for (Int n = cert.witnesses.front().lo; n <= cert.witnesses.front().hi; ++n)
      elems.push_back(n);
    return elems;
  };
}

SplitResult split_by_filtration(const SetExpr& a, const Extractor& carve, Int rounds,
                                Int check_window, const Limits& limits) {
  (void)limits;  // carving is sequential; extractors carry their own limits
  if (rounds < 1) throw Error(Error::Code::InvalidArgument, "rounds must be >= 1");
  if (check_window < 1) throw Error(Error::Code::InvalidArgument, "window must be >= 1");
  SetExpr remaining = a;
  std::vector<Int> part1, part2;
  std::vector<std::vector<Int>> carved;
  for (Int round = 1; round <= rounds; ++round) {
    auto piece = carve(round, remaining);
    if (!piece || piece->empty())
      throw Error(Error::Code::CarveFailure,
                  "no witness could be carved in round " + std::to_string(round), round);
    for (Int n : *piece)
      if (!remaining.member(n))
        throw Error(Error::Code::CarveFailure,
                    "carved witness left the remaining set in round " + std::to_string(round),
                    round);
    auto& target = (round % 2 == 1) ? part1 : part2;
    target.insert(target.end(), piece->begin(), piece->end());
    remaining = SetExpr::intersect(
        {std::move(remaining), SetExpr::complement(SetExpr::finite(*piece))});
    carved.push_back(std::move(*piece));
  }
  std::sort(part1.begin(), part1.end());
  std::sort(part2.begin(), part2.end());
  SetExpr a1 = part1.empty() ? remaining
                             : SetExpr::unite({remaining, SetExpr::finite(part1)});
  SetExpr a2 = part2.empty() ? SetExpr::empty() : SetExpr::finite(part2);
  const Window wa = a.window(check_window);
  const Window w1 = a1.window(check_window);
  const Window w2 = a2.window(check_window);
  for (Int n = 1; n <= check_window; ++n) {
    if (w1.test(n) && w2.test(n))
      throw Error(Error::Code::CarveFailure, "parts overlap after carving", 0);
    if ((w1.test(n) || w2.test(n)) != wa.test(n))
      throw Error(Error::Code::CarveFailure, "parts do not reassemble the set", 0);
  }
  SplitResult result{std::move(a1), std::move(a2), check_window, {}, std::move(carved)};
  return result;
}

Decomposition structure_decompose(const SetExpr& a, const SetExpr& s, Int n, Int ell_max,
                                  Int ps_shift_bound, Int ps_level, const Limits& limits) {
  if (n < 4) throw Error(Error::Code::InvalidArgument, "window must be >= 4");
  if (ell_max < 1) throw Error(Error::Code::InvalidArgument, "density cap must be >= 1");
  const SetExpr core = SetExpr::intersect({a, s});
  const Verdict ps = piecewise_syndetic(core, ps_shift_bound, ps_level, n, limits);
  if (ps.outcome != Outcome::Certified)
    throw Error(Error::Code::Precondition,
                "structured part requires a piecewise-syndetic intersection");

  const Window w = core.window(n);
  for (Int ell = 1; ell <= ell_max; ++ell) {
    // Positions x where the window [x, x+ell-1] misses the set entirely.
    std::vector<Int> bad;
    Int run = 0;  // consecutive misses ending at i
    for (Int i = 1; i <= n; ++i) {
      run = w.test(i) ? 0 : run + 1;
      if (i >= ell && run >= ell) bad.push_back(i - ell + 1);
    }
    // Maximal intervals free of a full bad window, length >= ell.
    std::vector<Interval> good;
    Int lo = 1;
    for (Int x : bad) {
      const Int hi = x + ell - 2;
      if (hi - lo + 1 >= ell) good.push_back({lo, hi});
      lo = x + 1;
    }
    if (n - lo + 1 >= ell) good.push_back({lo, n});

    std::vector<Interval> chosen;
    for (const Interval& iv : good) {
      const bool longer = chosen.empty() || iv.length() > chosen.back().length();
      const bool apart =
          chosen.empty() || iv.lo > chosen.back().hi + static_cast<Int>(chosen.size());
      if (longer && apart) chosen.push_back(iv);
    }
    const bool qualifies =
        chosen.size() >= 2 || (chosen.size() == 1 && chosen.front().length() * 2 >= n);
    if (!qualifies) continue;

    Schedule g = Schedule::explicit_list(chosen);
    SetExpr thick_g = SetExpr::thick(g);
    SetExpr b = SetExpr::unite(
        {SetExpr::intersect({a, thick_g}), SetExpr::complement(thick_g)});
    Verdict v = syndetic_gap(SetExpr::intersect({b, s}), n, limits);
    if (v.outcome != Outcome::Certified) continue;
    return Decomposition{std::move(b), std::move(g), ell,
                         std::get<SyndeticCert>(v.cert), std::move(chosen)};
  }
  throw Error(Error::Code::Precondition, "no qualifying density constant at this scale");
}

std::vector<RobustProbeReport> robustly_syndetic_check(const std::vector<SetExpr>& collection,
                                                       const std::vector<SetExpr>& probes,
                                                       Int n, const Limits& limits) {
  std::vector<RobustProbeReport> reports;
  for (const SetExpr& probe : probes) {
    RobustProbeReport report;
    for (size_t i = 0; i < collection.size(); ++i) {
      Verdict v = syndetic_gap(SetExpr::intersect({probe, collection[i]}), n, limits);
      if (v.outcome == Outcome::Certified) {
        report = RobustProbeReport{true, i, std::move(v)};
        break;
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace lsc
