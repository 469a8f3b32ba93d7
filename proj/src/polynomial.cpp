// SPDX-License-Identifier: Apache-2.0
#include "lsc/polynomial.hpp"

#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace lsc {

namespace {
using Wide = __int128;

Int checked_lcm(Int a, Int b) {
  const Int g = std::gcd(a, b);
  Int out;
  if (__builtin_mul_overflow(a / g, b, &out))
    throw Error(Error::Code::InvalidArgument, "polynomial denominators overflow");
  return out;
}
}  // namespace

void Rational::reduce() {
  if (den == 0) throw Error(Error::Code::InvalidArgument, "zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const Int g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().num == 0) coeffs_.pop_back();
  if (coeffs_.empty())
    throw Error(Error::Code::InvalidArgument, "polynomial is identically zero");
  for (Rational& c : coeffs_) c.reduce();
  // Integer values at 0..degree+1 propagate to all of Z by finite
  // differences; eval() itself throws on a non-integer value.
  for (Int y = 0; y <= degree() + 1; ++y) (void)eval(y);
}

Int Polynomial::eval(Int y) const {
  Int d = 1;
  for (const Rational& c : coeffs_) d = checked_lcm(d, c.den);
  Wide acc = 0;  // numerator over common denominator d, Horner from the top
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    acc += Wide(c.num) * (d / c.den);
    acc *= y;
    constexpr Wide cap = Wide(1) << 100;
    if (acc > cap || acc < -cap)
      throw Error(Error::Code::InvalidArgument, "polynomial value overflows");
  }
  if (acc % d != 0)
    throw Error(Error::Code::InvalidArgument, "polynomial is not integer-valued");
  acc /= d;
  constexpr Wide int_max = Wide(INT64_MAX) / 4;
  if (acc > int_max || acc < -int_max)
    throw Error(Error::Code::InvalidArgument, "polynomial value overflows");
  return static_cast<Int>(acc);
}

namespace {
struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  std::optional<Int> integer() {
    skip();
    size_t j = i;
    Int v = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
      v = v * 10 + (s[j] - '0');
      if (v > INT64_MAX / 4) throw Error(Error::Code::InvalidArgument, "coefficient overflows");
      ++j;
    }
    if (j == i) return std::nullopt;
    i = j;
    return v;
  }
};
}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
  Cursor c{text};
  std::vector<Rational> coeffs;
  bool first = true;
  while (true) {
    c.skip();
    if (c.i >= text.size()) break;
    Int sign = 1;
    if (c.eat('-')) sign = -1;
    else if (c.eat('+')) sign = 1;
    else if (!first)
      throw Error(Error::Code::InvalidArgument, "expected + or - between polynomial terms");
    first = false;
    auto num = c.integer();
    Int exp = 0;
    if (c.eat('y')) {
      exp = 1;
      if (c.eat('^')) {
        auto e = c.integer();
        if (!e || *e < 1 || *e > 16)
          throw Error(Error::Code::InvalidArgument, "bad polynomial exponent");
        exp = *e;
      }
    }
    Int den = 1;
    if (c.eat('/')) {
      auto d = c.integer();
      if (!d || *d < 1) throw Error(Error::Code::InvalidArgument, "bad polynomial denominator");
      den = *d;
    }
    if (exp == 0) {
      if (!num || *num != 0)
        throw Error(Error::Code::InvalidArgument, "polynomial must have zero constant term");
      continue;  // explicit "+0" term
    }
    if (static_cast<size_t>(exp) > coeffs.size()) coeffs.resize(static_cast<size_t>(exp));
    Rational& slot = coeffs[static_cast<size_t>(exp - 1)];
    // Accumulate onto a common denominator.
    Rational add{sign * (num ? *num : 1), den};
    add.reduce();
    const Int common = checked_lcm(slot.den == 0 ? 1 : slot.den, add.den);
    Int a, b;
    if (__builtin_mul_overflow(slot.num, common / (slot.den == 0 ? 1 : slot.den), &a) ||
        __builtin_mul_overflow(add.num, common / add.den, &b) ||
        __builtin_add_overflow(a, b, &a))
      throw Error(Error::Code::InvalidArgument, "coefficient overflows");
    slot = Rational{a, common};
    slot.reduce();
  }
  for (Rational& r : coeffs)
    if (r.den == 0) r = Rational{0, 1};
  return Polynomial(std::move(coeffs));
}

std::string Polynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.num == 0) continue;
    if (!first) out << (c.num > 0 ? " + " : " - ");
    else if (c.num < 0) out << "-";
    first = false;
    const Int mag = c.num < 0 ? -c.num : c.num;
    if (mag != 1) out << mag;
    out << "y";
    if (i + 1 >= 2) out << "^" << (i + 1);
    if (c.den != 1) out << "/" << c.den;
  }
  return out.str();
}

}  // namespace lsc
