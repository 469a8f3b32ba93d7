// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "lsc/setexpr.hpp"

namespace lsc {

// Expression grammar (whitespace-insensitive; one operator kind per chain,
// parentheses to mix):
//   set      := term (("|" term)* | ("&" term)*)
//   term     := "empty" | "full"
//             | "fin{" int ("," int)* "}"
//             | "res(" int "," int ")"
//             | "thick(" schedule ")"
//             | "ret(" word "," pattern ["," ("drop0" | "plus1")] ")"
//             | "!" term
//             | "shiftdown(" int "," set ")" | "shiftup(" int "," set ")"
//             | "dilate(" int "," set ")"   | "quot(" int "," set ")"
//             | "(" set ")"
//   schedule := "geom" ("b=" int) ("c=" int)
//             | "expl{" "[" int "," int "]" ("," "[" int "," int "]")* "}"
//             | "seprow" kvs | "sepblk" kvs        (rows, cols, slope, row[, col])
//             | "stride(" int "," int "," schedule ")"   (offset, step, base)
//   word     := "fib" | "tm" | "per(" pattern ")"
//             | "sub(" letter "->" letters ("," letter "->" letters)* ",seed=" letter ")"
//             | "sturm(" int ("," int)* ")"
//   pattern  := '"' [A-Za-z0-9]+ '"'
// Parse failures throw Error(Parse) with line/column in the message and the
// byte offset in detail().
SetExpr parse_set(const std::string& text);
Schedule parse_schedule(const std::string& text);
WordSpec parse_word(const std::string& text);

// Canonical form: parse(print(x)) is window-equal to x. Printed text uses the
// grammar above with no whitespace.
std::string print_set(const SetExpr& e);
std::string print_schedule(const Schedule& s);
std::string print_word(const WordSpec& w);

}  // namespace lsc
