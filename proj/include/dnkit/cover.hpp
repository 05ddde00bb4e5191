#ifndef DNKIT_COVER_HPP
#define DNKIT_COVER_HPP

#include <span>
#include <string>
#include <vector>

#include "dnkit/dclass.hpp"

namespace dnkit {

/// Element (α, a′) of the cover sort S = C × C; both coordinates are
/// fractions in one jet context.
class CoverPoint {
 public:
  CoverPoint(JetContext ctx, RatFunc base, RatFunc fiber)
      : ctx_(std::move(ctx)), base_(std::move(base)), fiber_(std::move(fiber)) {}

  const JetContext& context() const { return ctx_; }
  const RatFunc& base() const { return base_; }
  const RatFunc& fiber() const { return fiber_; }

  /// "(base | fiber)".
  std::string to_string() const;

  friend bool operator==(const CoverPoint& a, const CoverPoint& b) {
    return a.ctx_ == b.ctx_ && a.base_ == b.base_ && a.fiber_ == b.fiber_;
  }

 private:
  JetContext ctx_;
  RatFunc base_;
  RatFunc fiber_;
};

/// The lifted group law and its inverse; scalar() is Q-scaling in the
/// uniquely divisible group (S, ⊕).
CoverPoint oplus(const CoverPoint& p, const CoverPoint& q);
CoverPoint ominus(const CoverPoint& p, const CoverPoint& q);
CoverPoint scalar(const Rational& c, const CoverPoint& p);

/// β ⋆ (α, a′) = (α, a′ + β).
CoverPoint star(const RatFunc& beta, const CoverPoint& p);
inline const RatFunc& pi(const CoverPoint& p) { return p.base(); }

/// Dual-number product (α, a′) ⊗ (β, b′) = (αβ, αb′ + βa′).
CoverPoint otimes(const CoverPoint& p, const CoverPoint& q);

/// σ_F(p) = F(π(p)) ⋆ p.
CoverPoint sigma(const Operator& op, const CoverPoint& p);

struct CoverModel {
  unsigned n = 1;
  JetContext context;
};

/// Fiber coordinate forced by R_n on the last point:
///   sum_{i=1..n} C(n+1,i) (-1)^(n-i) α^(n+1-i) a′_i.
RatFunc rn_forced_fiber(unsigned n, const RatFunc& alpha,
                        std::span<const RatFunc> fibers);

/// R_n on n+1 points: α_i = α_1^i for all i and the last fiber equals the
/// forced value. Throws ArityError or ContextMismatchError.
bool rn_holds(const CoverModel& model, std::span<const CoverPoint> points);

/// The n+1 points of the generic R_n relation: α = x, fibers a1..an free,
/// last fiber forced.
std::vector<CoverPoint> generic_rn_point(const JetContext& ctx, unsigned n);

/// Moves the generic R_n point by σ_F and returns the defect of the R_n
/// fiber equation afterwards; zero iff σ_F preserves R_n.
MembershipVerdict rn_preservation(const Operator& op, unsigned n,
                                  const DclassConfig& config = {});

/// The ψ construction: (z3 ⊖ z2 ⊖ z1) / 2 with z1, z2, z3 the R_1-partners
/// of a, b and a ⊕ b.
CoverPoint psi(const CoverPoint& a, const CoverPoint& b);
bool psi_defines_otimes();

/// Both directions of the reduct presentation of R_n through ⊗, ⋆ and π
/// at generic points. For n = 1 the constraint sum is empty and forces
/// ε_2 = 0.
bool rn_reduct_check(unsigned n, const DclassConfig& config = {});

struct RingCheck {
  bool holds = false;
  /// σ_F(a ⊗ b) ⊖ σ_F(a) ⊗ σ_F(b); the base is always 0 and the fiber is
  /// F(αβ) - αF(β) - βF(α).
  CoverPoint defect;
};
/// Whether σ_F respects ⊗ at generic a = (x, u), b = (y, v).
RingCheck sigma_ring_check(const Operator& op);

}  // namespace dnkit

#endif  // DNKIT_COVER_HPP
