// SPDX-License-Identifier: Apache-2.0
#include "lsc/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace lsc {

namespace {

std::set<char> alphabet_of(const WordSpec& spec) {
  std::set<char> out;
  if (const auto* sub = std::get_if<SubstitutionSpec>(&spec)) {
    for (const auto& [letter, image] : sub->rules) {
      out.insert(letter);
      out.insert(image.begin(), image.end());
    }
  } else if (std::holds_alternative<SturmianSpec>(spec)) {
    out.insert('a');
    out.insert('b');
  } else {
    const auto& per = std::get<PeriodicSpec>(spec);
    out.insert(per.block.begin(), per.block.end());
  }
  return out;
}

std::vector<Int> occurrences(const std::string& text, const std::string& pat) {
  std::vector<Int> out;
  for (size_t pos = text.find(pat); pos != std::string::npos; pos = text.find(pat, pos + 1))
    out.push_back(static_cast<Int>(pos));
  return out;
}

}  // namespace

SetExpr return_set(WordSpec word, std::string pattern, ReturnBase base) {
  validate_word(word);
  const std::set<char> sigma = alphabet_of(word);
  for (char c : pattern)
    if (sigma.find(c) == sigma.end())
      throw Error(Error::Code::InvalidWord, "pattern uses a letter outside the alphabet");
  return SetExpr::returns(std::move(word), std::move(pattern), base);
}

RecurrenceProfile uniform_recurrence_profile(const WordSpec& word, Int n_max, Int prefix_len) {
  if (n_max < 1) throw Error(Error::Code::InvalidArgument, "factor length cap must be >= 1");
  if (prefix_len < 20 * n_max)
    throw Error(Error::Code::InvalidArgument, "prefix must be at least 20x the factor cap");
  const std::string text = expand_word(word, prefix_len);
  const Int n_len = static_cast<Int>(text.size());

  RecurrenceProfile profile;
  profile.prefix_len = n_len;
  for (Int n = 1; n <= n_max; ++n) {
    const std::string factor = text.substr(0, static_cast<size_t>(n));
    const std::vector<Int> occ = occurrences(text, factor);
    // occ is nonempty (the prefix occurs at 0). The worst windows are the one
    // before the first occurrence, the one spanning the largest gap, and the
    // tail after the last occurrence.
    Int w = occ.front() + n;
    for (size_t i = 1; i < occ.size(); ++i)
      w = std::max(w, occ[i] - occ[i - 1] + n - 1);
    w = std::max(w, n_len - occ.back());
    profile.w.push_back(w);
  }

  std::unordered_map<std::string, int> counts;
  for (Int n = 1; n <= n_max; ++n)
    for (Int i = 0; i + n <= n_len; ++i) {
      auto [it, fresh] = counts.try_emplace(text.substr(static_cast<size_t>(i),
                                                        static_cast<size_t>(n)), 0);
      if (it->second < 2) ++it->second;
      (void)fresh;
    }
  for (const auto& [factor, count] : counts)
    if (count == 1) profile.non_recurrent.push_back(factor);
  std::sort(profile.non_recurrent.begin(), profile.non_recurrent.end());
  return profile;
}

JointReturnResult joint_return(const std::vector<CyclicSystem>& systems, Int n) {
  if (systems.empty()) throw Error(Error::Code::InvalidArgument, "need at least one system");
  if (n < 1) throw Error(Error::Code::InvalidArgument, "window must be >= 1");
  std::vector<CyclicSystem> sys = systems;
  for (auto& s : sys) {
    if (s.modulus < 1) throw Error(Error::Code::InvalidArgument, "modulus must be >= 1");
    if (s.targets.empty())
      throw Error(Error::Code::InvalidArgument, "target residue set must be nonempty");
    s.start = ((s.start % s.modulus) + s.modulus) % s.modulus;
    for (Int& t : s.targets) t = ((t % s.modulus) + s.modulus) % s.modulus;
  }

  JointReturnResult result;
  result.window = Window(n);
  Int first = 0, prev = 0, gap = 0;
  for (Int i = 1; i <= n; ++i) {
    bool in = true;
    for (const auto& s : sys) {
      const Int r = (s.start + i) % s.modulus;
      if (std::find(s.targets.begin(), s.targets.end(), r) == s.targets.end()) {
        in = false;
        break;
      }
    }
    if (!in) continue;
    result.window.set(i);
    if (first == 0) first = i;
    else gap = std::max(gap, i - prev);
    prev = i;
  }
  result.empty = first == 0;
  result.realized_gap = result.empty ? 0 : std::max(gap, first);

  bool singletons = true;
  for (const auto& s : sys) singletons = singletons && s.targets.size() == 1;
  bool coprime = true;
  for (size_t i = 0; i < sys.size() && coprime; ++i)
    for (size_t j = i + 1; j < sys.size() && coprime; ++j)
      coprime = std::gcd(sys[i].modulus, sys[j].modulus) == 1;
  if (singletons && coprime) {
    Int m = 1;
    for (const auto& s : sys) {
      if (m > 1'000'000 / s.modulus)
        throw Error(Error::Code::ResourceLimit, "combined modulus exceeds the safe range");
      m *= s.modulus;
    }
    // The joint condition pins one residue class mod m; locate it by scan.
    Int r = -1;
    for (Int c = 0; c < m && r < 0; ++c) {
      bool in = true;
      for (const auto& s : sys)
        if ((s.start + c) % s.modulus != s.targets.front()) {
          in = false;
          break;
        }
      if (in) r = c;
    }
    result.residue_form = SetExpr::residue(r, m);
    result.asserted_gap = m;
    for (Int i = 1; i <= n; ++i)
      if (result.window.test(i) != result.residue_form->member(i))
        throw Error(Error::Code::Precondition,
                    "joint return window disagrees with its residue form");
  }
  return result;
}

DynThickResult dyn_thick_from_returns(const std::vector<SetExpr>& returns,
                                      const std::vector<Schedule>& schedules) {
  if (returns.size() != schedules.size())
    throw Error(Error::Code::InvalidArgument, "need one schedule per return set");
  if (returns.empty()) return DynThickResult{SetExpr::empty(), ""};
  std::vector<SetExpr> parts;
  for (size_t i = 0; i < returns.size(); ++i)
    parts.push_back(SetExpr::intersect({returns[i], SetExpr::thick(schedules[i])}));
  return DynThickResult{
      SetExpr::unite(std::move(parts)),
      "joint disjointness/minimality of the underlying systems is user-asserted"};
}

CoverResult cylinder_cover_check(const WordSpec& word, const std::vector<std::string>& patterns,
                                 Int n, Int prefix_len) {
  if (n < 1) throw Error(Error::Code::InvalidArgument, "factor length must be >= 1");
  if (prefix_len < n) throw Error(Error::Code::InvalidArgument, "prefix shorter than the factor");
  for (const auto& p : patterns)
    if (static_cast<Int>(p.size()) > n)
      throw Error(Error::Code::InvalidArgument, "factor length below a pattern length");
  const std::string text = expand_word(word, prefix_len);
  std::set<std::string> seen;
  for (Int i = 0; i + n <= static_cast<Int>(text.size()); ++i) {
    std::string factor = text.substr(static_cast<size_t>(i), static_cast<size_t>(n));
    if (!seen.insert(factor).second) continue;
    bool covered = false;
    for (const auto& p : patterns)
      if (!p.empty() && factor.compare(0, p.size(), p) == 0) {
        covered = true;
        break;
      }
    if (!covered) return CoverResult{false, std::move(factor)};
  }
  return CoverResult{true, ""};
}

}  // namespace lsc
