// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "lsc/dsl.hpp"
#include "testgen.h"

using namespace lsc;

TEST_CASE("basic expression parses") {
  const SetExpr r = parse_set("res(1,3)");
  CHECK(r.kind() == SetExpr::Kind::Residue);
  CHECK(r.residue_value() == 1);
  CHECK(r.modulus() == 3);

  const SetExpr mix = parse_set("(res(0,2) & thick(geom b=10 c=1)) | fin{3,7}");
  CHECK(mix.kind() == SetExpr::Kind::Union);
  REQUIRE(mix.children().size() == 2);
  CHECK(mix.children()[0].kind() == SetExpr::Kind::Inter);
  CHECK(mix.children()[1].finite_elements() == std::vector<Int>{3, 7});
  CHECK(mix.member(3));
  CHECK(mix.member(10));   // 10 is even and in [10,11]
  CHECK_FALSE(mix.member(11));

  const SetExpr sd = parse_set("shiftdown(3, res(0,3))");
  CHECK(sd.kind() == SetExpr::Kind::ShiftDown);
  CHECK(sd.amount() == 3);
  CHECK(sd.children()[0].kind() == SetExpr::Kind::Residue);

  CHECK(parse_set("empty").kind() == SetExpr::Kind::Empty);
  CHECK(parse_set("!full").kind() == SetExpr::Kind::Compl);
  CHECK(parse_set("quot(2,full)").kind() == SetExpr::Kind::Quotient);
  CHECK(parse_set("fin{}").window(50).count() == 0);  // printer form of no elements
}

TEST_CASE("whitespace is insignificant") {
  const SetExpr a = parse_set("res(1,3)|fin{2}");
  const SetExpr b = parse_set("  res( 1 , 3 )\n | fin{ 2 }  ");
  CHECK(a.window(50) == b.window(50));
  CHECK(print_set(a) == print_set(b));
}

TEST_CASE("operator chains of one kind only") {
  CHECK_NOTHROW(parse_set("res(0,2)|res(1,3)|fin{5}"));
  CHECK_NOTHROW(parse_set("res(0,2)&res(0,3)&full"));
  CHECK_THROWS_AS(parse_set("res(0,2)|res(1,3)&fin{5}"), Error);
  CHECK_NOTHROW(parse_set("res(0,2)|(res(1,3)&fin{5})"));
}

TEST_CASE("parse errors carry location") {
  const char* bad[] = {
      "",
      "res(1,3",
      "res(,3)",
      "fin{1,}",
      "fin{2",
      "res(1,3))",
      "unknown(1)",
      "thick(geom b=1 c=1)",
      "ret(fib)",
      "ret(fib,\"\")",
      "shiftdown(x,full)",
      "(res(0,2)",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_set(text), Error);
  }
  try {
    parse_set("res(1,3");
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Error::Code::Parse);
    CHECK(err.detail() >= 0);  // byte offset of the failure
  }
}

TEST_CASE("semantic violations surface as errors too") {
  CHECK_THROWS_AS(parse_set("res(3,2)"), Error);
  CHECK_THROWS_AS(parse_set("fin{0}"), Error);
  // A too-short Sturmian term list parses but cannot be evaluated deep.
  CHECK_THROWS_AS(parse_set("ret(sturm(1,1),\"a\")").window(100), Error);
}

TEST_CASE("schedule grammar round trips") {
  const char* texts[] = {
      "geom b=4 c=3",
      "expl{[2,4],[8,8],[12,15]}",
      "seprow rows=2 cols=3 slope=10 row=1",
      "sepblk rows=2 cols=3 slope=10 row=2 col=1",
      "stride(2,3,geom b=3 c=1)",
  };
  for (const char* text : texts) {
    CAPTURE(text);
    const Schedule s = parse_schedule(text);
    CHECK(print_schedule(s) == text);
    const Schedule again = parse_schedule(print_schedule(s));
    for (Int j = 1; j <= 4; ++j) CHECK(s.interval(j) == again.interval(j));
  }
  CHECK_THROWS_AS(parse_schedule("geom b=4"), Error);
  CHECK_THROWS_AS(parse_schedule("expl{}"), Error);
  CHECK_THROWS_AS(parse_schedule("stride(0,3,geom b=3 c=1)"), Error);
}

TEST_CASE("word grammar round trips") {
  // Canonical print fixed points.
  const char* texts[] = {
      "per(\"abba\")",
      "sub(a->ab,b->a,seed=a)",
      "sub(0->01,1->10,seed=0)",
      "sturm(2,1,3,1,1,1,1,1,1,1)",
  };
  for (const char* text : texts) {
    CAPTURE(text);
    const WordSpec w = parse_word(text);
    CHECK(print_word(w) == text);
    CHECK(expand_word(w, 30) == expand_word(parse_word(print_word(w)), 30));
  }

  // Shorthand names parse to the same substitutions as their canonical form.
  CHECK(print_word(parse_word("fib")) == "sub(a->ab,b->a,seed=a)");
  CHECK(print_word(parse_word("tm")) == "sub(0->01,1->10,seed=0)");
  CHECK(expand_word(parse_word("fib"), 30) == expand_word(parse_word("sub(a->ab,b->a,seed=a)"), 30));

  CHECK_THROWS_AS(parse_word("per(\"\")"), Error);
  // The grammar accepts an incomplete rule set; validation rejects it.
  CHECK_THROWS_AS(validate_word(parse_word("sub(a->ab,seed=b)")), Error);
  CHECK_THROWS_AS(parse_word("sturm()"), Error);
}

TEST_CASE("print/parse round trip is window-equal on a generated corpus") {
  testgen::Gen gen(404);
  for (int i = 0; i < 100; ++i) {
    const SetExpr e = gen.any_expr();
    const std::string text = print_set(e);
    CAPTURE(text);
    const SetExpr back = parse_set(text);
    CHECK(e.window(1000) == back.window(1000));
    // Printing is canonical: a second trip is textually stable.
    CHECK(print_set(back) == text);
  }
}

TEST_CASE("schedule and word corpus round trips") {
  testgen::Gen gen(405);
  for (int i = 0; i < 40; ++i) {
    const Schedule s = gen.schedule();
    const Schedule back = parse_schedule(print_schedule(s));
    CHECK(print_schedule(back) == print_schedule(s));
    for (Int j = 1; j <= 6; ++j) CHECK(s.interval(j) == back.interval(j));

    const WordSpec w = gen.word();
    const WordSpec wback = parse_word(print_word(w));
    CHECK(print_word(wback) == print_word(w));
    CHECK(expand_word(w, 60) == expand_word(wback, 60));
  }
}
