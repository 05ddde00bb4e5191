#include "dnkit/dclass.hpp"

#include <random>
#include <string>
#include <vector>

#include "dnkit/error.hpp"

namespace dnkit {

namespace {

Rational sign_power(unsigned e) { return Rational(e % 2 == 0 ? 1 : -1); }

std::vector<std::string> generator_names(unsigned count) {
  if (count == 1) return {"x"};
  std::vector<std::string> names;
  for (unsigned i = 1; i <= count; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

// Product of the generators whose bit is set in `mask`.
RatFunc product(const JetContext& ctx, unsigned mask) {
  MPoly p(Rational(1));
  for (std::size_t i = 0; i < ctx.num_generators(); ++i) {
    if ((mask >> i) & 1U) p *= MPoly::variable(ctx.generator(i));
  }
  return RatFunc(p);
}

bool evaluate_at(const RatFunc& f, const Assignment& a, Rational& out) {
  try {
    out = f.evaluate(a);
    return true;
  } catch (const PoleError&) {
    return false;
  }
}

}  // namespace

void check_level(unsigned n, const DclassConfig& config) {
  if (n < 1 || n > config.max_n) {
    throw PreconditionError("level n = " + std::to_string(n) +
                            " is outside 1.." + std::to_string(config.max_n));
  }
}

RatFunc dn_defect(const JetContext& ctx, const Operator& op, unsigned n,
                  const RatFunc& f, const DclassConfig& config) {
  check_level(n, config);
  std::vector<RatFunc> powers{RatFunc(1L)};
  for (unsigned k = 1; k <= n + 1; ++k) powers.push_back(powers.back() * f);

  RatFunc defect = ctx.apply(op, powers[n + 1]);
  for (unsigned i = 1; i <= n; ++i) {
    const Rational c = binom(n + 1, i) * sign_power(n - i);
    defect -= (powers[n + 1 - i] * ctx.apply(op, powers[i])).scaled(c);
  }
  return defect;
}

MembershipVerdict is_in_dn(const Operator& op, unsigned n,
                           const DclassConfig& config) {
  const JetContext ctx = JetContext::for_operator({"x"}, op);
  MembershipVerdict verdict{false, {ctx, dn_defect(ctx, op, n, ctx.gen(0), config)}, {}};
  verdict.in_dn = verdict.defect.is_zero();
  if (!verdict.in_dn) {
    verdict.witness = find_witness(verdict.defect.value, ctx, config.seed);
    if (!verdict.witness) {
      throw SearchExhaustedError("no witness found for a nonzero D_n defect");
    }
  }
  return verdict;
}

RatFunc polarization_rhs(const JetContext& ctx, const Operator& op,
                         unsigned n) {
  const unsigned gens = n + 1;
  const unsigned all = (1U << gens) - 1U;
  std::vector<std::optional<RatFunc>> image(all + 1);
  auto image_of = [&](unsigned mask) -> const RatFunc& {
    if (!image[mask]) image[mask] = ctx.apply(op, product(ctx, mask));
    return *image[mask];
  };
  RatFunc sum;
  for (unsigned chosen = 1; chosen < all; ++chosen) {
    const auto k = static_cast<unsigned>(__builtin_popcount(chosen));
    const RatFunc term = product(ctx, chosen) * image_of(all & ~chosen);
    sum += term.scaled(sign_power(k + 1));
  }
  return sum;
}

SymbolicDefect polarization_defect(const Operator& op, unsigned n,
                                   const DclassConfig& config) {
  check_level(n, config);
  const JetContext ctx = JetContext::for_operator(generator_names(n + 1), op);
  const unsigned all = (1U << (n + 1)) - 1U;
  RatFunc value = ctx.apply(op, product(ctx, all)) - polarization_rhs(ctx, op, n);
  return {ctx, std::move(value)};
}

bool odd_extraction_check(const Operator& op, unsigned n,
                          const DclassConfig& config) {
  check_level(n, config);
  {
    const JetContext generic = JetContext::for_operator({"x"}, op);
    if (!dn_defect(generic, op, n, generic.gen(0), config).is_zero()) {
      throw PreconditionError(op.to_string() + " is not in D_" + std::to_string(n));
    }
  }
  const JetContext ctx = JetContext::for_operator(generator_names(n + 1), op);
  const std::vector<VarId> gens = ctx.generators();
  const unsigned all = (1U << (n + 1)) - 1U;
  const Rational scale = factorial(n + 1);

  RatFunc s;
  for (const VarId v : gens) s += RatFunc::variable(v);
  std::vector<RatFunc> powers{RatFunc(1L)};
  for (unsigned k = 1; k <= n + 1; ++k) powers.push_back(powers.back() * s);

  auto odd = [&](const RatFunc& f) {
    if (!f.is_polynomial()) throw Error("internal: expected a polynomial");
    return odd_component(f.num(), gens, ctx.registry());
  };

  const MPoly lhs_odd = odd(ctx.apply(op, powers[n + 1]));
  const RatFunc lhs_expected = ctx.apply(op, product(ctx, all)).scaled(scale);

  RatFunc rhs;
  for (unsigned i = 1; i <= n; ++i) {
    const Rational c = binom(n + 1, i) * sign_power(n - i);
    rhs += (powers[n + 1 - i] * ctx.apply(op, powers[i])).scaled(c);
  }
  const MPoly rhs_odd = odd(rhs);
  const RatFunc rhs_expected = polarization_rhs(ctx, op, n).scaled(scale);

  return RatFunc(lhs_odd) == lhs_expected && RatFunc(rhs_odd) == rhs_expected;
}

SymbolicDefect inductive_subsum(unsigned n, const DclassConfig& config) {
  check_level(n, config);
  const JetContext ctx = JetContext::make(1, 1, n);
  const RatFunc x = ctx.gen(0);
  const DerivWord d({0});
  const DerivWord dn = DerivWord::power(0, n);
  RatFunc sum;
  for (unsigned i = 1; i <= n + 1; ++i) {
    const Rational c = binom(n + 2, i) * sign_power(n + 1 - i);
    sum += (ctx.apply(d, x.pow(static_cast<int>(n + 2 - i))) *
            ctx.apply(dn, x.pow(static_cast<int>(i))))
               .scaled(c);
  }
  return {ctx, std::move(sum)};
}

Separation separation_witness(unsigned n, const DclassConfig& config) {
  check_level(n, config);
  MembershipVerdict v = is_in_dn(Operator::power(0, n + 1), n, config);
  if (v.in_dn || !v.witness) {
    throw SearchExhaustedError("D^" + std::to_string(n + 1) +
                               " unexpectedly satisfies the D_" +
                               std::to_string(n) + " equation");
  }
  return {std::move(v.defect), std::move(*v.witness)};
}

std::optional<Witness> find_witness(const RatFunc& f, const JetContext& ctx,
                                    std::uint64_t seed) {
  if (f.is_zero()) return std::nullopt;
  const std::size_t nvars = ctx.num_variables();
  const VarRegistry& reg = ctx.registry();
  Assignment point;
  for (std::uint32_t i = 0; i < nvars; ++i) point[reg.id(i)] = Rational(0);

  Rational value;
  auto hit = [&]() { return evaluate_at(f, point, value) && !value.is_zero(); };

  if (hit()) return Witness{point, value};
  for (auto& [var, val] : point) {
    val = Rational(1);
    if (hit()) return Witness{point, value};
    val = Rational(0);
  }

  std::mt19937_64 rng(seed);
  for (const long range : {3L, 10L, 100L, 1000L}) {
    const auto width = static_cast<std::uint64_t>(2 * range + 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      for (auto& [var, val] : point) {
        val = Rational(static_cast<long>(rng() % width) - range);
      }
      if (hit()) return Witness{point, value};
    }
  }
  return std::nullopt;
}

bool random_evaluation_agrees(const RatFunc& f, const JetContext& ctx,
                              std::uint64_t seed, unsigned points) {
  std::mt19937_64 rng(seed ^ 0x5DEECE66DULL);
  const VarRegistry& reg = ctx.registry();
  bool all_zero = true;
  unsigned evaluated = 0;
  // Poles are skipped; a bounded number of retries keeps this total.
  for (unsigned attempt = 0; evaluated < points && attempt < 20 * points; ++attempt) {
    Assignment a;
    for (std::uint32_t i = 0; i < ctx.num_variables(); ++i) {
      const long num = static_cast<long>(rng() % 2001) - 1000;
      const long den = static_cast<long>(rng() % 1000) + 1;
      a[reg.id(i)] = Rational(num, den);
    }
    Rational v;
    if (!evaluate_at(f, a, v)) continue;
    ++evaluated;
    all_zero = all_zero && v.is_zero();
  }
  return evaluated == points && all_zero == f.is_zero();
}

}  // namespace dnkit
