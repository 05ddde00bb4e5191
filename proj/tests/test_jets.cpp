#include <doctest.h>

#include <random>

#include "dnkit/error.hpp"
#include "dnkit/jets.hpp"
#include "dnkit/parse.hpp"
#include "support/jet_oracle.hpp"

using namespace dnkit;

namespace {

// Random rational function in the generators and jets of length <= max_len.
RatFunc random_func(std::mt19937_64& rng, const JetContext& ctx, std::size_t max_len) {
  std::vector<VarId> pool;
  for (std::uint32_t i = 0; i < ctx.num_variables(); ++i) {
    const VarId v = ctx.registry().id(i);
    if (ctx.word_of(v).length() <= max_len) pool.push_back(v);
  }
  auto poly = [&]() {
    MPoly p(Rational(static_cast<long>(rng() % 5) - 2));
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < terms; ++k) {
      MPoly m(Rational(static_cast<long>(rng() % 7) - 3));
      m *= MPoly::variable(pool[rng() % pool.size()], 1 + static_cast<std::uint32_t>(rng() % 2));
      if (rng() % 2) m *= MPoly::variable(pool[rng() % pool.size()]);
      p += m;
    }
    return p;
  };
  MPoly den = poly();
  if (den.is_zero() || rng() % 3 == 0) den = MPoly(Rational(1));
  return RatFunc(poly(), den);
}

Operator random_operator(std::mt19937_64& rng, unsigned alphabet, std::size_t max_len) {
  Operator op;
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < terms; ++k) {
    std::vector<std::uint16_t> letters(1 + rng() % max_len);
    for (auto& l : letters) l = static_cast<std::uint16_t>(rng() % alphabet);
    op += Operator::word(DerivWord(letters), Rational(static_cast<long>(rng() % 5) - 2));
  }
  return op;
}

}  // namespace

TEST_SUITE("jets") {

TEST_CASE("context sizes") {
  CHECK(JetContext::make(1, 1, 2).num_variables() == 3);
  CHECK(JetContext::make(3, 2, 1).num_variables() == 9);
  CHECK(JetContext::make(2, 2, 2).num_variables() == 2 + 2 * (2 + 4));
  CHECK_THROWS_AS(JetContext::make(2, 3, 6, 100), CapacityError);
}

TEST_CASE("degenerate context rejects derivation") {
  const JetContext ctx = JetContext::make(1, 1, 0);
  CHECK(ctx.num_variables() == 1);
  CHECK_THROWS_AS(ctx.derive(0, ctx.gen(0)), WordLengthError);
}

TEST_CASE("single letter rules") {
  const JetContext ctx = JetContext::make(1, 1, 2);
  const RatFunc x = ctx.gen(0);
  const RatFunc dx = RatFunc::variable(ctx.jet(0, DerivWord({0})));
  const RatFunc ddx = RatFunc::variable(ctx.jet(0, DerivWord({0, 0})));
  CHECK(ctx.derive(0, x * x) == x * dx * RatFunc(2L));
  CHECK(ctx.derive(0, RatFunc(7L)).is_zero());
  CHECK(ctx.derive(0, x.inverse()) == -dx / (x * x));
  CHECK(ctx.render(ctx.derive(0, x.inverse())) == "-D1(x)/x^2");
  CHECK_THROWS_AS(ctx.derive(1, x), UnknownLetterError);
  CHECK_THROWS_AS(ctx.derive(0, ddx), WordLengthError);
}

TEST_CASE("operators on the generic point") {
  const JetContext ctx = JetContext::make(1, 2, 2);
  const RatFunc x = ctx.gen(0);
  auto jet = [&](std::vector<std::uint16_t> w) { return RatFunc::variable(ctx.jet(0, DerivWord(w))); };
  CHECK(ctx.apply(Operator::power(0, 2), x * x) ==
        jet({0}).pow(2).scaled(Rational(2)) + (x * jet({0, 0})).scaled(Rational(2)));
  CHECK(ctx.apply(parse_operator("D1 + 2*D2"), x) == jet({0}) + jet({1}).scaled(Rational(2)));
}

TEST_CASE("length two words are not derivations") {
  const JetContext ctx = JetContext::make({"x", "y"}, 1, 2);
  const RatFunc x = ctx.gen(0), y = ctx.gen(1);
  const Operator dd = Operator::power(0, 2);
  const RatFunc diff = ctx.apply(dd, x * y) - (ctx.apply(dd, x) * y + x * ctx.apply(dd, y));
  CHECK(diff == RatFunc::variable(ctx.jet(0, DerivWord({0}))) *
                    RatFunc::variable(ctx.jet(1, DerivWord({0}))) * RatFunc(2L));
  CHECK(ctx.render(diff) == "2*D1(x)*D1(y)");
}

TEST_CASE("leibniz on random inputs") {
  const JetContext ctx = JetContext::make(2, 2, 3);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const RatFunc f = random_func(rng, ctx, 2), g = random_func(rng, ctx, 2);
    const auto letter = static_cast<std::uint16_t>(rng() % 2);
    CHECK(ctx.derive(letter, f * g) == ctx.derive(letter, f) * g + f * ctx.derive(letter, g));
    CHECK(ctx.derive(letter, f + g) == ctx.derive(letter, f) + ctx.derive(letter, g));
  }
}

TEST_CASE("composition and linearity") {
  const JetContext ctx = JetContext::make(2, 2, 3);
  std::mt19937_64 rng(34);
  for (int i = 0; i < 60; ++i) {
    const Operator outer = random_operator(rng, 2, 1), inner = random_operator(rng, 2, 2);
    const RatFunc f = random_func(rng, ctx, 0), g = random_func(rng, ctx, 0);
    CHECK(ctx.apply(outer.compose(inner), f) == ctx.apply(outer, ctx.apply(inner, f)));
    const Rational a(static_cast<long>(rng() % 9) - 4), b(static_cast<long>(rng() % 9) - 4);
    CHECK(ctx.apply(inner, f.scaled(a) + g.scaled(b)) ==
          ctx.apply(inner, f).scaled(a) + ctx.apply(inner, g).scaled(b));
    CHECK(ctx.apply(inner + outer, f) == ctx.apply(inner, f) + ctx.apply(outer, f));
  }
}

TEST_CASE("words on products agree with the shuffle oracle") {
  const JetContext ctx = JetContext::make(3, 2, 3);
  std::mt19937_64 rng(55);
  for (int i = 0; i < 40; ++i) {
    const Operator op = random_operator(rng, 2, 3);
    std::vector<std::size_t> factors(1 + rng() % 4);
    RatFunc prod(1L);
    for (auto& g : factors) {
      g = rng() % 3;
      prod *= ctx.gen(g);
    }
    const auto [assignment, point] = oracle::random_point(ctx, rng());
    CHECK(ctx.apply(op, prod).evaluate(assignment) == oracle::op_on_product(op, factors, point));
  }
}

TEST_CASE("words and operators print and order") {
  CHECK(DerivWord({0, 1}).to_string() == "D1.D2");
  CHECK(DerivWord().to_string() == "id");
  CHECK(DerivWord({0}) < DerivWord({1}));
  CHECK(DerivWord({1}) < DerivWord({0, 0}));
  CHECK(Operator().to_string() == "0");
  CHECK(Operator::letter(0).compose(Operator::letter(1)) == Operator::word(DerivWord({0, 1})));
  CHECK((Operator::letter(0) - Operator::letter(0)).is_zero());
  CHECK(Operator::power(2, 3).alphabet_needed() == 3);
}

}
