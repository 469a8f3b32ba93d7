// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "lsc/core.hpp"

namespace lsc {

struct Rational {
  Int num = 0;
  Int den = 1;
  void reduce();
};

// Integer-valued polynomial with rational coefficients and zero constant
// term, e.g. y, y^2 + y, or (y^2 + y)/2 written as "y^2/2 + y/2".
// Integrality is checked on 0..degree+1, which settles it everywhere.
class Polynomial {
 public:
  // coeffs[i] multiplies y^(i+1).
  explicit Polynomial(std::vector<Rational> coeffs);

  // Grammar: term {("+"|"-") term}, term = [int["/"int]] ["y" ["^" int]]
  // ["/" int]. Constant terms are rejected (p(0) = 0 is required).
  static Polynomial parse(const std::string& text);

  Int degree() const { return static_cast<Int>(coeffs_.size()); }
  Int eval(Int y) const;  // exact rational Horner; throws on overflow
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace lsc
