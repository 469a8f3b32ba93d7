// SPDX-License-Identifier: Apache-2.0
#include "lsc/core.hpp"

#include <cstdlib>

namespace lsc {

Limits Limits::defaults() {
  static const long long env_budget = [] {
    const char* v = std::getenv("LSC_SEARCH_BUDGET");
    if (!v || !*v) return 10'000'000LL;
    char* end = nullptr;
    const long long parsed = std::strtoll(v, &end, 10);
    if (!end || *end != '\0' || parsed <= 0) return 10'000'000LL;
    return parsed;
  }();
  Limits l;
  l.budget = env_budget;
  return l;
}

}  // namespace lsc
