// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace lsc {

// Positions are elements of N = {1, 2, 3, ...}. Signed so that shifted
// quantities (n - k) can go negative in intermediate arithmetic.
using Int = std::int64_t;

struct Interval {
  Int lo = 0;
  Int hi = 0;  // inclusive
  Int length() const { return hi - lo + 1; }
  bool contains(Int n) const { return lo <= n && n <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

class Error : public std::runtime_error {
 public:
  enum class Code {
    InvalidArgument,   // bad operation input (k = 0, empty pattern, ...)
    InvalidSchedule,   // schedule violates the interval contract
    InvalidWord,       // non-prolongable substitution, bad alphabet, ...
    Parse,             // DSL syntax error (carries line/column)
    Precondition,      // documented operation precondition failed
    ResourceLimit,     // table or horizon would exceed hard safety caps
    CarveFailure,      // splitting round could not extract a witness
  };

  Error(Code code, std::string msg, Int detail = -1)
      : std::runtime_error(std::move(msg)), code_(code), detail_(detail) {}

  Code code() const { return code_; }
  // CarveFailure: failing round index. Parse: byte offset. Otherwise -1.
  Int detail() const { return detail_; }

 private:
  Code code_;
  Int detail_;
};

// Shared search budget, counted in membership evaluations / candidate
// expansions. Atomic so parallel scans can share one gauge.
class Budget {
 public:
  explicit Budget(long long units) : left_(units) {}
  bool spend(long long n = 1) {
    return left_.fetch_sub(n, std::memory_order_relaxed) > 0;
  }
  bool exhausted() const { return left_.load(std::memory_order_relaxed) <= 0; }

 private:
  std::atomic<long long> left_;
};

struct Limits {
  long long budget = 10'000'000;  // LSC_SEARCH_BUDGET overrides
  bool parallel = false;          // deterministic result either way
  int threads = 0;                // 0 = hardware concurrency

  static Limits defaults();  // reads LSC_SEARCH_BUDGET once per process
};

}  // namespace lsc
