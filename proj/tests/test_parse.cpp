#include <doctest.h>

#include <random>

#include "dnkit/error.hpp"
#include "dnkit/parse.hpp"

using namespace dnkit;

namespace {

const JetContext& ctx() {
  static const JetContext c = JetContext::make({"t", "x", "y1"}, 0, 0);
  return c;
}

RatFunc f(const char* text) { return parse_ratfunc(text, ctx().registry()); }

std::string random_expr(std::mt19937_64& rng, int depth) {
  static const char* leaves[] = {"t", "x", "y1", "2", "3", "7", "1"};
  if (depth == 0 || rng() % 4 == 0) return leaves[rng() % 7];
  switch (rng() % 7) {
    case 0: return random_expr(rng, depth - 1) + " + " + random_expr(rng, depth - 1);
    case 1: return random_expr(rng, depth - 1) + " - " + random_expr(rng, depth - 1);
    case 2: return random_expr(rng, depth - 1) + "*" + random_expr(rng, depth - 1);
    case 3: return "(" + random_expr(rng, depth - 1) + ")/(" + random_expr(rng, depth - 1) + " + 11)";
    case 4: return "(" + random_expr(rng, depth - 1) + ")^" + std::to_string(rng() % 3);
    case 5: return "-" + random_expr(rng, depth - 1);
    default: return "(" + random_expr(rng, depth - 1) + ")";
  }
}

}  // namespace

TEST_SUITE("parse") {

TEST_CASE("operators") {
  CHECK(parse_operator("D1.D1") == Operator::power(0, 2));
  CHECK(parse_operator("2*D1 + 3/2*D2.D3") ==
        Operator::letter(0).scaled(Rational(2)) +
            Operator::word(DerivWord({1, 2}), Rational(3, 2)));
  CHECK(parse_operator("D1 - D1").is_zero());
  CHECK(parse_operator("0").is_zero());
  CHECK(parse_operator(" -D2 ") == Operator::letter(1).scaled(Rational(-1)));
  CHECK(parse_operator("id") == Operator::word(DerivWord()));
}

TEST_CASE("operator errors") {
  CHECK_THROWS_AS(parse_operator(""), ParseError);
  CHECK_THROWS_AS(parse_operator("D0"), ParseError);
  CHECK_THROWS_AS(parse_operator("D1 +"), ParseError);
  CHECK_THROWS_AS(parse_operator("D1 D2"), ParseError);
  CHECK_THROWS_AS(parse_operator("1/0*D1"), ParseError);
  CHECK_THROWS_AS(parse_operator("D3", 2), UnknownLetterError);
  try {
    parse_operator("D1 + Q");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("operator round trip") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    Operator op;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) {
      std::vector<std::uint16_t> w(1 + rng() % 3);
      for (auto& l : w) l = static_cast<std::uint16_t>(rng() % 4);
      op += Operator::word(DerivWord(w), Rational(static_cast<long>(rng() % 9) - 4,
                                                  static_cast<long>(rng() % 3) + 1));
    }
    CHECK(parse_operator(op.to_string()) == op);
  }
}

TEST_CASE("rational functions") {
  CHECK(f("t^2 + 2*t + 1") == f("(t+1)^2"));
  CHECK(f("(t^2-1)/(t-1)") == f("t+1"));
  CHECK_THROWS_AS(f("1/0"), DivisionByZeroError);
  CHECK_THROWS_AS(f("t/(x-x)"), DivisionByZeroError);
  CHECK_THROWS_AS(f("z"), ParseError);
  CHECK_THROWS_AS(f("t +"), ParseError);
  CHECK_THROWS_AS(f("(t"), ParseError);
  CHECK_THROWS_AS(f(""), ParseError);
  CHECK_THROWS_AS(f("t^x"), ParseError);
}

TEST_CASE("precedence") {
  CHECK(f("-t^2") == -f("t*t"));
  CHECK(f("1 - 2 - 3") == RatFunc(-4L));
  CHECK(f("8/2/2") == RatFunc(2L));
  CHECK(f("2*3^2") == RatFunc(18L));
  CHECK(f("2 + 3*4") == RatFunc(14L));
  CHECK(f("t^-1") == f("1/t"));
  CHECK(f("-(t+1)^2") == -f("t^2 + 2*t + 1"));
  CHECK(f("x - -t") == f("x + t"));
}

TEST_CASE("render and parse round trip") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const std::string text = random_expr(rng, 4);
    RatFunc value;
    try {
      value = f(text.c_str());
    } catch (const DivisionByZeroError&) {
      continue;
    }
    CHECK_MESSAGE(f(ctx().render(value).c_str()) == value, text);
  }
}

TEST_CASE("lists") {
  const ParsedTuple p = parse_ratfunc_list("t, t^2, t^3");
  CHECK(p.funcs.size() == 3);
  CHECK(p.context.num_generators() == 1);
  CHECK(variable_names("y2 + x*y2 - a") == std::vector<std::string>{"a", "x", "y2"});
  try {
    parse_ratfunc_list("t, t +");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

}
