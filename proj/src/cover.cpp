#include "dnkit/cover.hpp"

#include "dnkit/error.hpp"

namespace dnkit {

namespace {

void same_context(const CoverPoint& p, const CoverPoint& q) {
  if (!(p.context() == q.context())) throw ContextMismatchError();
}

Rational sign_power(unsigned e) { return Rational(e % 2 == 0 ? 1 : -1); }

}  // namespace

std::string CoverPoint::to_string() const {
  return "(" + ctx_.render(base_) + " | " + ctx_.render(fiber_) + ")";
}

CoverPoint oplus(const CoverPoint& p, const CoverPoint& q) {
  same_context(p, q);
  return {p.context(), p.base() + q.base(), p.fiber() + q.fiber()};
}

CoverPoint ominus(const CoverPoint& p, const CoverPoint& q) {
  same_context(p, q);
  return {p.context(), p.base() - q.base(), p.fiber() - q.fiber()};
}

CoverPoint scalar(const Rational& c, const CoverPoint& p) {
  return {p.context(), p.base().scaled(c), p.fiber().scaled(c)};
}

CoverPoint star(const RatFunc& beta, const CoverPoint& p) {
  return {p.context(), p.base(), p.fiber() + beta};
}

CoverPoint otimes(const CoverPoint& p, const CoverPoint& q) {
  same_context(p, q);
  return {p.context(), p.base() * q.base(),
          p.base() * q.fiber() + q.base() * p.fiber()};
}

CoverPoint sigma(const Operator& op, const CoverPoint& p) {
  return star(p.context().apply(op, pi(p)), p);
}

RatFunc rn_forced_fiber(unsigned n, const RatFunc& alpha,
                        std::span<const RatFunc> fibers) {
  if (fibers.size() < n) throw ArityError(n, fibers.size());
  RatFunc sum;
  for (unsigned i = 1; i <= n; ++i) {
    const Rational c = binom(n + 1, i) * sign_power(n - i);
    sum += (alpha.pow(static_cast<int>(n + 1 - i)) * fibers[i - 1]).scaled(c);
  }
  return sum;
}

bool rn_holds(const CoverModel& model, std::span<const CoverPoint> points) {
  const unsigned n = model.n;
  if (points.size() != n + 1) throw ArityError(n + 1, points.size());
  for (const CoverPoint& p : points) {
    if (!(p.context() == model.context)) throw ContextMismatchError();
  }
  const RatFunc& alpha = points[0].base();
  for (unsigned i = 1; i <= n + 1; ++i) {
    if (points[i - 1].base() != alpha.pow(static_cast<int>(i))) return false;
  }
  std::vector<RatFunc> fibers;
  for (unsigned i = 0; i < n; ++i) fibers.push_back(points[i].fiber());
  return points[n].fiber() == rn_forced_fiber(n, alpha, fibers);
}

std::vector<CoverPoint> generic_rn_point(const JetContext& ctx, unsigned n) {
  if (ctx.num_generators() < n + 1) {
    throw PreconditionError("generic R_n point needs n+1 generators");
  }
  const RatFunc alpha = ctx.gen(0);
  std::vector<RatFunc> fibers;
  for (unsigned i = 1; i <= n; ++i) fibers.push_back(ctx.gen(i));
  std::vector<CoverPoint> points;
  for (unsigned i = 1; i <= n; ++i) {
    points.emplace_back(ctx, alpha.pow(static_cast<int>(i)), fibers[i - 1]);
  }
  points.emplace_back(ctx, alpha.pow(static_cast<int>(n + 1)),
                      rn_forced_fiber(n, alpha, fibers));
  return points;
}

namespace {

std::vector<std::string> rn_generator_names(unsigned n) {
  std::vector<std::string> names{"x"};
  for (unsigned i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
  return names;
}

}  // namespace

MembershipVerdict rn_preservation(const Operator& op, unsigned n,
                                  const DclassConfig& config) {
  check_level(n, config);
  const JetContext ctx = JetContext::for_operator(rn_generator_names(n), op);
  std::vector<CoverPoint> moved;
  for (const CoverPoint& p : generic_rn_point(ctx, n)) moved.push_back(sigma(op, p));

  // σ_F fixes P pointwise, so only the fiber equation can break.
  const RatFunc& alpha = moved[0].base();
  for (unsigned i = 1; i <= n + 1; ++i) {
    if (moved[i - 1].base() != alpha.pow(static_cast<int>(i))) {
      throw Error("internal: sigma moved a base coordinate");
    }
  }
  std::vector<RatFunc> fibers;
  for (unsigned i = 0; i < n; ++i) fibers.push_back(moved[i].fiber());
  RatFunc defect = moved[n].fiber() - rn_forced_fiber(n, alpha, fibers);

  MembershipVerdict verdict{defect.is_zero(), {ctx, std::move(defect)}, {}};
  if (!verdict.in_dn) {
    verdict.witness = find_witness(verdict.defect.value, ctx, config.seed);
    if (!verdict.witness) {
      throw SearchExhaustedError("no witness found for a nonzero R_n defect");
    }
  }
  return verdict;
}

namespace {

// The unique z with R_1(a, z).
CoverPoint r1_partner(const CoverPoint& a) {
  const RatFunc& alpha = a.base();
  const RatFunc fibers[] = {a.fiber()};
  return {a.context(), alpha.pow(2), rn_forced_fiber(1, alpha, fibers)};
}

}  // namespace

CoverPoint psi(const CoverPoint& a, const CoverPoint& b) {
  same_context(a, b);
  const CoverPoint z1 = r1_partner(a);
  const CoverPoint z2 = r1_partner(b);
  const CoverPoint z3 = r1_partner(oplus(a, b));
  const CoverModel m1{1, a.context()};
  for (const auto& [p, z] : {std::pair{a, z1}, std::pair{b, z2},
                             std::pair{oplus(a, b), z3}}) {
    const CoverPoint pair[] = {p, z};
    if (!rn_holds(m1, pair)) throw Error("internal: R_1 partner rejected");
  }
  return scalar(Rational(1, 2), ominus(ominus(z3, z2), z1));
}

bool psi_defines_otimes() {
  const JetContext ctx = JetContext::make({"x", "u", "y", "v"}, 0, 0);
  const CoverPoint a(ctx, ctx.gen(0), ctx.gen(1));
  const CoverPoint b(ctx, ctx.gen(2), ctx.gen(3));
  return psi(a, b) == otimes(a, b);
}

bool rn_reduct_check(unsigned n, const DclassConfig& config) {
  check_level(n, config);

  // a_1^{⊗i} for i = 1..n+1.
  auto tensor_powers = [n](const CoverPoint& a1) {
    std::vector<CoverPoint> powers{a1};
    for (unsigned i = 2; i <= n + 1; ++i) powers.push_back(otimes(powers.back(), a1));
    return powers;
  };
  // ε_{n+1} as demanded by the constraint; eps[i] holds ε_i, eps[0..1] unused.
  auto constrained_top = [n](const RatFunc& alpha, const std::vector<RatFunc>& eps) {
    RatFunc sum;
    for (unsigned i = 2; i <= n; ++i) {
      const Rational c = binom(n + 1, i) * sign_power(n - i);
      sum += (alpha.pow(static_cast<int>(n + 1 - i)) * eps[i]).scaled(c);
    }
    return sum;
  };

  // Forward: a generic R_n tuple determines ε_i = a′_i - fiber(a_1^{⊗i})
  // (⋆ is free, so the shift is unique) and these satisfy the constraint.
  bool forward = true;
  {
    std::vector<std::string> names{"x"};
    for (unsigned i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    const JetContext ctx = JetContext::make(names, 0, 0);
    const std::vector<CoverPoint> a = generic_rn_point(ctx, n);
    const std::vector<CoverPoint> pw = tensor_powers(a[0]);
    std::vector<RatFunc> eps(n + 2);
    for (unsigned i = 2; i <= n + 1; ++i) {
      forward = forward && pi(a[i - 1]) == pi(pw[i - 1]);
      eps[i] = a[i - 1].fiber() - pw[i - 1].fiber();
      forward = forward && star(eps[i], pw[i - 1]) == a[i - 1];
    }
    forward = forward && eps[n + 1] == constrained_top(pi(a[0]), eps);
  }

  // Backward: free a_1 and ε_2..ε_n, ε_{n+1} from the constraint; the
  // tuple a_i = ε_i ⋆ a_1^{⊗i} must satisfy R_n.
  bool backward = false;
  {
    std::vector<std::string> names{"x", "u"};
    for (unsigned i = 2; i <= n; ++i) names.push_back("e" + std::to_string(i));
    const JetContext ctx = JetContext::make(names, 0, 0);
    const CoverPoint a1(ctx, ctx.gen(0), ctx.gen(1));
    std::vector<RatFunc> eps(n + 2);
    for (unsigned i = 2; i <= n; ++i) eps[i] = ctx.gen(i);
    eps[n + 1] = constrained_top(pi(a1), eps);
    const std::vector<CoverPoint> pw = tensor_powers(a1);
    std::vector<CoverPoint> tuple{a1};
    for (unsigned i = 2; i <= n + 1; ++i) tuple.push_back(star(eps[i], pw[i - 1]));
    backward = rn_holds(CoverModel{n, ctx}, tuple);
  }
  return forward && backward;
}

RingCheck sigma_ring_check(const Operator& op) {
  const JetContext ctx = JetContext::for_operator({"x", "u", "y", "v"}, op);
  const CoverPoint a(ctx, ctx.gen(0), ctx.gen(1));
  const CoverPoint b(ctx, ctx.gen(2), ctx.gen(3));
  CoverPoint defect =
      ominus(sigma(op, otimes(a, b)), otimes(sigma(op, a), sigma(op, b)));
  const bool holds = defect.base().is_zero() && defect.fiber().is_zero();
  return {holds, std::move(defect)};
}

}  // namespace dnkit
