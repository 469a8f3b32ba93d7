// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mutex>
#include <string>
#include <variant>
#include <vector>

#include "lsc/core.hpp"

namespace lsc {

// Fixed point of a substitution, read off the seed letter. The seed's image
// must start with the seed and be at least two letters long, every image must
// be nonempty, and every letter mentioned must have a rule; that guarantees an
// infinite fixed point whose prefixes are stable under longer expansion.
struct SubstitutionSpec {
  std::vector<std::pair<char, std::string>> rules;
  char seed = 'a';
};

// Standard-word recursion s_{-1} = "b", s_0 = "a", s_n = s_{n-1}^{t_n} s_{n-2}
// driven by continued-fraction terms t_1, t_2, ... (all >= 1). Every s_n is a
// prefix of the limit word, so no real arithmetic is needed. Terms of all 1s
// reproduce the Fibonacci word.
struct SturmianSpec {
  std::vector<Int> terms;
};

struct PeriodicSpec {
  std::string block;
};

using WordSpec = std::variant<SubstitutionSpec, SturmianSpec, PeriodicSpec>;

SubstitutionSpec fibonacci_spec();   // a -> ab, b -> a
SubstitutionSpec thue_morse_spec();  // 0 -> 01, 1 -> 10

// Validates the spec; throws Error(InvalidWord) on structural problems.
void validate_word(const WordSpec& spec);

// Exactly len characters of the infinite word. Throws Error(InvalidWord) if
// the spec cannot produce that many (e.g. Sturmian terms exhausted).
std::string expand_word(const WordSpec& spec, Int len);

// Immutable word handle with a thread-safe, lazily grown prefix cache.
// Membership queries against return-time sets go through this so that window
// evaluation does one expansion instead of one per position.
class Word {
 public:
  explicit Word(WordSpec spec);

  // A snapshot holding at least min_len characters.
  std::shared_ptr<const std::string> prefix(Int min_len) const;
  const WordSpec& spec() const { return spec_; }

 private:
  WordSpec spec_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const std::string> cache_;
};

}  // namespace lsc
