#include <doctest.h>

#include <random>

#include "dnkit/dclass.hpp"
#include "dnkit/error.hpp"
#include "dnkit/suite.hpp"
#include "support/jet_oracle.hpp"

using namespace dnkit;

namespace {

const Operator kD = Operator::letter(0);
const Operator kDD = Operator::power(0, 2);

RatFunc jet(const JetContext& ctx, std::size_t g, std::vector<std::uint16_t> w) {
  return RatFunc::variable(ctx.jet(g, DerivWord(std::move(w))));
}

}  // namespace

TEST_SUITE("dclass") {

TEST_CASE("defect at the generic point") {
  const JetContext ctx = JetContext::make(1, 1, 2);
  const RatFunc x = ctx.gen(0);
  CHECK(dn_defect(ctx, kD, 1, x).is_zero());
  CHECK(dn_defect(ctx, kDD, 1, x) == jet(ctx, 0, {0}).pow(2).scaled(Rational(2)));
  CHECK(dn_defect(ctx, kDD, 2, x).is_zero());
  // D^2(x^3) by hand
  const RatFunc lhs = ctx.apply(kDD, x.pow(3));
  CHECK(lhs == (x * jet(ctx, 0, {0}).pow(2)).scaled(Rational(6)) +
                   (x * x * jet(ctx, 0, {0, 0})).scaled(Rational(3)));
}

TEST_CASE("membership") {
  CHECK(is_in_dn(kD, 1).in_dn);
  CHECK_FALSE(is_in_dn(kD, 1).witness.has_value());
  CHECK(is_in_dn(Operator::word(DerivWord({0, 1})), 3).in_dn);
  CHECK(is_in_dn(Operator(), 1).in_dn);
  for (unsigned n = 1; n <= 5; ++n) {
    const MembershipVerdict v = is_in_dn(Operator::power(0, n + 1), n);
    CHECK_FALSE(v.in_dn);
    REQUIRE(v.witness.has_value());
    CHECK_FALSE(v.witness->value.is_zero());
    CHECK(v.defect.value.evaluate(v.witness->assignment) == v.witness->value);
  }
}

TEST_CASE("level bounds") {
  CHECK_THROWS_AS(is_in_dn(kD, 0), PreconditionError);
  CHECK_THROWS_AS(is_in_dn(kD, 7), PreconditionError);
  CHECK_NOTHROW(is_in_dn(kD, 7, DclassConfig{7, 0}));
}

TEST_CASE("polarization") {
  CHECK(polarization_defect(kD, 1).is_zero());
  const SymbolicDefect dd = polarization_defect(kDD, 1);
  CHECK(dd.value == (jet(dd.context, 0, {0}) * jet(dd.context, 1, {0})).scaled(Rational(2)));
  CHECK(polarization_defect(kDD, 2).is_zero());
}

TEST_CASE("odd extraction") {
  CHECK(odd_extraction_check(kD, 1));
  CHECK(odd_extraction_check(kDD, 2));
  CHECK(odd_extraction_check(Operator::power(0, 3), 4));
  CHECK_THROWS_AS(odd_extraction_check(kDD, 1), PreconditionError);
}

TEST_CASE("inductive subsum vanishes") {
  for (unsigned n = 1; n <= 4; ++n) CHECK(inductive_subsum(n).is_zero());
}

TEST_CASE("separation witnesses") {
  const Separation one = separation_witness(1);
  CHECK(one.witness.value == Rational(2));
  const JetContext& ctx = one.defect.context;
  CHECK(one.witness.assignment.at(ctx.generator(0)) == Rational(0));
  CHECK(one.witness.assignment.at(ctx.jet(0, DerivWord({0}))) == Rational(1));
  CHECK(one.witness.assignment.at(ctx.jet(0, DerivWord({0, 0}))) == Rational(0));
  for (unsigned n : {2U, 4U}) {
    const Separation s = separation_witness(n);
    CHECK_FALSE(s.witness.value.is_zero());
    CHECK(s.defect.value.evaluate(s.witness.assignment) == s.witness.value);
  }
}

TEST_CASE("witness search is seeded") {
  const MembershipVerdict a = is_in_dn(kDD, 1, DclassConfig{6, 9});
  const MembershipVerdict b = is_in_dn(kDD, 1, DclassConfig{6, 9});
  REQUIRE(a.witness);
  CHECK(a.witness->assignment == b.witness->assignment);
  CHECK_FALSE(find_witness(RatFunc(), a.defect.context, 0).has_value());
}

TEST_CASE("defects agree with the shuffle oracle") {
  std::uint64_t seed = 1;
  for (const Operator& op : operator_test_set(0)) {
    for (unsigned n = 1; n <= 3; ++n) {
      const MembershipVerdict v = is_in_dn(op, n);
      const SymbolicDefect p = polarization_defect(op, n);
      for (int k = 0; k < 3; ++k) {
        const auto [a1, pt1] = oracle::random_point(v.defect.context, seed++);
        CHECK(v.defect.value.evaluate(a1) == oracle::dn_value(op, n, pt1));
        const auto [a2, pt2] = oracle::random_point(p.context, seed++);
        CHECK(p.value.evaluate(a2) == oracle::polarization_value(op, n, pt2));
      }
      CHECK(v.in_dn == p.is_zero());
    }
  }
}

TEST_CASE("random evaluation agrees with symbolic verdicts") {
  const MembershipVerdict in = is_in_dn(kD, 1);
  const MembershipVerdict out = is_in_dn(kDD, 1);
  CHECK(random_evaluation_agrees(in.defect.value, in.defect.context, 0));
  CHECK(random_evaluation_agrees(out.defect.value, out.defect.context, 0));
}

}
