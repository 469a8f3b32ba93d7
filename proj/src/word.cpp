// SPDX-License-Identifier: Apache-2.0
#include "lsc/word.hpp"

#include <algorithm>
#include <map>

namespace lsc {

namespace {
constexpr Int kWordCap = 64 * 1000 * 1000;  // hard safety cap on expansions

const std::string* find_rule(const SubstitutionSpec& s, char c) {
  for (const auto& [letter, image] : s.rules)
    if (letter == c) return &image;
  return nullptr;
}

void validate_substitution(const SubstitutionSpec& s) {
  if (s.rules.empty()) throw Error(Error::Code::InvalidWord, "substitution has no rules");
  for (const auto& [letter, image] : s.rules) {
    if (image.empty()) throw Error(Error::Code::InvalidWord, "substitution image is empty");
    for (char c : image)
      if (!find_rule(s, c))
        throw Error(Error::Code::InvalidWord, std::string("substitution image uses letter without a rule: ") + c);
  }
  const std::string* seed_image = find_rule(s, s.seed);
  if (!seed_image) throw Error(Error::Code::InvalidWord, "substitution seed has no rule");
  if (seed_image->size() < 2 || (*seed_image)[0] != s.seed)
    throw Error(Error::Code::InvalidWord, "substitution is not prolongable at the seed");
}

void validate_sturmian(const SturmianSpec& s) {
  if (s.terms.empty()) throw Error(Error::Code::InvalidWord, "sturmian spec has no terms");
  for (Int t : s.terms)
    if (t < 1) throw Error(Error::Code::InvalidWord, "sturmian terms must be >= 1");
}

std::string expand_substitution(const SubstitutionSpec& s, Int len) {
  std::string w(1, s.seed);
  // sigma(prefix) is a prefix of sigma(word), so truncating between rounds
  // keeps every kept character final.
  while (static_cast<Int>(w.size()) < len) {
    std::string next;
    next.reserve(static_cast<size_t>(len));
    for (char c : w) {
      next += *find_rule(s, c);
      if (static_cast<Int>(next.size()) >= len) break;
    }
    if (next.size() <= w.size())
      throw Error(Error::Code::InvalidWord, "substitution does not grow");
    w = std::move(next);
  }
  w.resize(static_cast<size_t>(len));
  return w;
}

std::string expand_sturmian(const SturmianSpec& s, Int len) {
  std::string prev = "b";  // s_{-1}
  std::string cur = "a";   // s_0
  for (Int t : s.terms) {
    if (static_cast<Int>(cur.size()) >= len) break;
    std::string next;
    next.reserve(std::min<Int>(len + cur.size(), t * cur.size() + prev.size()));
    for (Int i = 0; i < t && static_cast<Int>(next.size()) < len; ++i) next += cur;
    next += prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (static_cast<Int>(cur.size()) < len)
    throw Error(Error::Code::InvalidWord, "sturmian terms exhausted before requested length");
  cur.resize(static_cast<size_t>(len));
  return cur;
}
}  // namespace

SubstitutionSpec fibonacci_spec() { return SubstitutionSpec{{{'a', "ab"}, {'b', "a"}}, 'a'}; }
SubstitutionSpec thue_morse_spec() { return SubstitutionSpec{{{'0', "01"}, {'1', "10"}}, '0'}; }

void validate_word(const WordSpec& spec) {
  if (const auto* sub = std::get_if<SubstitutionSpec>(&spec)) {
    validate_substitution(*sub);
  } else if (const auto* st = std::get_if<SturmianSpec>(&spec)) {
    validate_sturmian(*st);
  } else {
    const auto& per = std::get<PeriodicSpec>(spec);
    if (per.block.empty()) throw Error(Error::Code::InvalidWord, "periodic block is empty");
  }
}

std::string expand_word(const WordSpec& spec, Int len) {
  if (len < 0) throw Error(Error::Code::InvalidArgument, "expansion length is negative");
  if (len > kWordCap) throw Error(Error::Code::ResourceLimit, "expansion length exceeds safety cap");
  validate_word(spec);
  if (len == 0) return "";
  if (const auto* sub = std::get_if<SubstitutionSpec>(&spec)) return expand_substitution(*sub, len);
  if (const auto* st = std::get_if<SturmianSpec>(&spec)) return expand_sturmian(*st, len);
  const auto& per = std::get<PeriodicSpec>(spec);
  std::string w;
  w.reserve(static_cast<size_t>(len));
  while (static_cast<Int>(w.size()) < len) w += per.block;
  w.resize(static_cast<size_t>(len));
  return w;
}

Word::Word(WordSpec spec) : spec_(std::move(spec)) { validate_word(spec_); }

std::shared_ptr<const std::string> Word::prefix(Int min_len) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (cache_ && static_cast<Int>(cache_->size()) >= min_len) return cache_;
  Int grow = std::max<Int>(min_len, 1024);
  if (cache_) grow = std::max<Int>(grow, 2 * static_cast<Int>(cache_->size()));
  // Sturmian specs have a finite reachable horizon; fall back to the exact
  // request before giving up.
  try {
    cache_ = std::make_shared<const std::string>(expand_word(spec_, grow));
  } catch (const Error&) {
    cache_ = std::make_shared<const std::string>(expand_word(spec_, min_len));
  }
  return cache_;
}

}  // namespace lsc
