#ifndef DNKIT_POLY_HPP
#define DNKIT_POLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dnkit/rational.hpp"

namespace dnkit {

enum class VarKind : std::uint8_t { generator, jet };

/// Handle for a variable allocated by a VarRegistry. Indices are dense.
struct VarId {
  std::uint32_t index = 0;
  VarKind kind = VarKind::generator;

  friend bool operator==(const VarId&, const VarId&) = default;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

struct VarInfo {
  std::string name;
  VarKind kind = VarKind::generator;
  /// Index of the base generator; a generator is its own base.
  std::uint32_t base = 0;
};

/// Dense table of variable names and kinds. Polynomials only store indices,
/// so rendering and parity grading go through the registry that allocated
/// them.
class VarRegistry {
 public:
  VarId add_generator(std::string name);
  VarId add_jet(std::string name, VarId base);

  std::size_t size() const { return vars_.size(); }
  const VarInfo& info(std::uint32_t index) const { return vars_.at(index); }
  VarId id(std::uint32_t index) const {
    return {index, vars_.at(index).kind};
  }
  std::optional<VarId> find(const std::string& name) const;

 private:
  std::vector<VarInfo> vars_;
  std::unordered_map<std::string, std::uint32_t> by_name_;
};

using Assignment = std::map<VarId, Rational>;

/// Process-wide bound on the total degree of any polynomial product.
unsigned degree_limit();
void set_degree_limit(unsigned limit);

class ScopedDegreeLimit {
 public:
  explicit ScopedDegreeLimit(unsigned limit) : saved_(degree_limit()) {
    set_degree_limit(limit);
  }
  ~ScopedDegreeLimit() { set_degree_limit(saved_); }
  ScopedDegreeLimit(const ScopedDegreeLimit&) = delete;
  ScopedDegreeLimit& operator=(const ScopedDegreeLimit&) = delete;

 private:
  unsigned saved_;
};

namespace detail {
// Suspends the degree check on this thread; gcd uses it for intermediate
// remainders, whose degree says nothing about the inputs or the result.
class UnguardedDegree {
 public:
  UnguardedDegree();
  ~UnguardedDegree();
  UnguardedDegree(const UnguardedDegree&) = delete;
  UnguardedDegree& operator=(const UnguardedDegree&) = delete;
};
}  // namespace detail

struct VarPower {
  std::uint32_t var;
  std::uint32_t exp;
  friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Power product, stored sparsely with variables in increasing index order.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(std::uint32_t var, std::uint32_t exp = 1);

  std::span<const VarPower> factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  std::uint32_t exponent(std::uint32_t var) const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  /// Quotient when `divisor` divides this monomial.
  std::optional<Monomial> divide(const Monomial& divisor) const;
  /// Drops `var` entirely.
  Monomial without(std::uint32_t var) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.factors_ == b.factors_;
  }
  /// Graded lexicographic order: total degree first, then the exponent of
  /// the lowest-indexed variable decides.
  friend std::strong_ordering operator<=>(const Monomial& a,
                                          const Monomial& b);

 private:
  friend class MPoly;
  std::vector<VarPower> factors_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial monomial;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in decreasing graded-lex order with no zero coefficients,
/// so two polynomials are equal exactly when their term lists are.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static MPoly variable(VarId v, std::uint32_t exp = 1);
  static MPoly monomial(Monomial m, Rational c);
  /// Builds from arbitrary (possibly unsorted, duplicated) terms.
  static MPoly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (zero for polynomials without one).
  Rational constant_term() const;
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const;
  unsigned degree(std::uint32_t var) const;
  std::vector<std::uint32_t> variables() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const Rational& c) const;
  MPoly times_monomial(const Monomial& m, const Rational& c) const;
  MPoly pow(unsigned exponent) const;

  /// Exact quotient, or nullopt when `divisor` does not divide this.
  std::optional<MPoly> divide(const MPoly& divisor) const;

  Rational evaluate(const Assignment& assignment,
                    const VarRegistry* names = nullptr) const;

  /// Coefficients of this polynomial viewed as univariate in `var`; entry k
  /// is the coefficient of var^k.
  std::vector<MPoly> coefficients_in(std::uint32_t var) const;
  static MPoly from_coefficients(std::uint32_t var,
                                 std::span<const MPoly> coeffs);

  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  void check_degree(unsigned degree) const;
  std::vector<Term> terms_;
};

/// Positive rational factor `c` such that `c * p` has coprime integer
/// coefficients and a positive leading coefficient. `p` must be nonzero.
Rational normalizing_factor(const MPoly& p);

/// Greatest common divisor, normalized: coprime integer coefficients and
/// positive leading coefficient. gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

/// Terms whose graded degree is odd in every listed generator; a jet symbol
/// counts towards the degree of its base generator.
MPoly odd_component(const MPoly& f, std::span<const VarId> vars,
                    const VarRegistry& registry);

/// Canonical text: terms in graded-lex order, `*` between factors and `^`
/// for powers, e.g. `3/2*t^2*y - t + 1`.
std::string render(const MPoly& p, const VarRegistry& registry);

}  // namespace dnkit

#endif  // DNKIT_POLY_HPP
