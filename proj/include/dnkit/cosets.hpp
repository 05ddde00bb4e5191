#ifndef DNKIT_COSETS_HPP
#define DNKIT_COSETS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dnkit/ratfunc.hpp"

namespace dnkit {

/// ε_1 f_1 + ... + ε_n f_n = ε_{n+1} with rational ε, not all ε_1..ε_n
/// zero, scaled so that the first nonzero ε_i is 1.
struct AffineRelation {
  std::vector<Rational> coefficients;
  Rational constant;

  friend bool operator==(const AffineRelation&, const AffineRelation&) = default;
};

/// Whether the relation holds for `funcs` as an identity of fractions.
bool satisfies(const AffineRelation& rel, std::span<const RatFunc> funcs);

/// A nontrivial affine relation over Q among `funcs`, or nullopt when the
/// tuple lies on no proper linear variety over the constants.
///
/// Solving over Q also decides the question over the algebraic numbers:
/// the system has rational data, and a rational linear system with a
/// nonzero solution over an extension field has one over Q.
std::optional<AffineRelation> affine_relation(std::span<const RatFunc> funcs);

/// (t, t^2, ..., t^n) satisfies no affine relation.
bool coset_free_powers(unsigned n);

/// "f1 - 1/2*f2 = -3/2".
std::string to_string(const AffineRelation& rel);

/// Nullspace vector of a rational matrix (rows of equal length) obtained
/// from its reduced row echelon form by setting the first free column to 1;
/// nullopt when the columns are independent.
std::optional<std::vector<Rational>> first_kernel_vector(
    std::vector<std::vector<Rational>> rows, std::size_t columns);

}  // namespace dnkit

#endif  // DNKIT_COSETS_HPP
