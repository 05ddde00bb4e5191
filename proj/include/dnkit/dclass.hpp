#ifndef DNKIT_DCLASS_HPP
#define DNKIT_DCLASS_HPP

#include <cstdint>
#include <optional>

#include "dnkit/jets.hpp"

namespace dnkit {

/// Settings shared by the D_n checks.
struct DclassConfig {
  /// Largest level n any check may use.
  unsigned max_n = 6;
  /// Seed for witness search and random cross-checks.
  std::uint64_t seed = 0;
};

/// A point where a defect does not vanish.
struct Witness {
  Assignment assignment;
  Rational value;
};

/// Defect of an identity together with the context that names its symbols.
struct SymbolicDefect {
  JetContext context;
  RatFunc value;
  bool is_zero() const { return value.is_zero(); }
};

/// Outcome of a membership test: `in_dn` holds exactly when the defect is
/// zero; a nonzero defect carries a point where it evaluates to nonzero.
struct MembershipVerdict {
  bool in_dn = false;
  SymbolicDefect defect;
  std::optional<Witness> witness;
};

/// The D_n equation at `f`:
///   F(f^(n+1)) - sum_{i=1..n} C(n+1,i) (-1)^(n-i) f^(n+1-i) F(f^i).
RatFunc dn_defect(const JetContext& ctx, const Operator& op, unsigned n,
                  const RatFunc& f, const DclassConfig& config = {});

/// Membership at the generic point: one fresh generator `x` in a free jet
/// context. A word-algebra operator satisfies the D_n equation for every
/// complex instantiation iff its defect there is the zero polynomial.
MembershipVerdict is_in_dn(const Operator& op, unsigned n,
                           const DclassConfig& config = {});

/// G_{F,n}(x_1..x_{n+1}): the alternating sum over nonempty proper index
/// sets S of (-1)^(|S|+1) x_S F(product of the remaining generators).
RatFunc polarization_rhs(const JetContext& ctx, const Operator& op,
                         unsigned n);

/// F(x_1 ... x_{n+1}) - G_{F,n} in a context with n+1 generators.
SymbolicDefect polarization_defect(const Operator& op, unsigned n,
                                   const DclassConfig& config = {});

/// For F in D_n, checks that the part of F((x_1+...+x_{n+1})^(n+1)) odd in
/// every x_i is (n+1)! F(x_1...x_{n+1}) and that the same extraction on the
/// right side of the D_n equation gives (n+1)! G_{F,n}. Throws
/// PreconditionError when F is not in D_n.
bool odd_extraction_check(const Operator& op, unsigned n,
                          const DclassConfig& config = {});

/// sum_{i=1..n+1} C(n+2,i) (-1)^(n+1-i) D(x^(n+2-i)) D^n(x^i) for a single
/// derivation D; vanishes identically.
SymbolicDefect inductive_subsum(unsigned n, const DclassConfig& config = {});

/// Nonzero point of the defect of D^(n+1) at level n. Throws
/// SearchExhaustedError if none is found.
struct Separation {
  SymbolicDefect defect;
  Witness witness;
};
Separation separation_witness(unsigned n, const DclassConfig& config = {});

/// Deterministic search for a point where `f` is defined and nonzero: the
/// origin, then each unit point, then seeded draws from {-r..r} over all
/// context variables for r = 3, 10, 100, 1000 (1000 draws each).
std::optional<Witness> find_witness(const RatFunc& f, const JetContext& ctx,
                                    std::uint64_t seed);

/// Randomized identity test: evaluates `f` at `points` seeded random
/// rational assignments and reports whether "all values zero" matches
/// "f is the zero fraction".
bool random_evaluation_agrees(const RatFunc& f, const JetContext& ctx,
                              std::uint64_t seed, unsigned points = 5);

/// Throws PreconditionError unless 1 <= n <= config.max_n.
void check_level(unsigned n, const DclassConfig& config);

}  // namespace dnkit

#endif  // DNKIT_DCLASS_HPP
