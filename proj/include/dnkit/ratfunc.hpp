#ifndef DNKIT_RATFUNC_HPP
#define DNKIT_RATFUNC_HPP

#include <string>

#include "dnkit/poly.hpp"

namespace dnkit {

/// Reduced fraction of polynomials over Q.
///
/// Canonical form: gcd(num, den) = 1 and den has coprime integer
/// coefficients with a positive leading coefficient. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const MPoly& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RatFunc(const Rational& c) : RatFunc(MPoly(c)) {}         // NOLINT
  RatFunc(long c) : RatFunc(MPoly(Rational(c))) {}          // NOLINT
  /// Reduces num/den; throws DivisionByZeroError when den is zero.
  RatFunc(const MPoly& num, const MPoly& den);

  static RatFunc variable(VarId v) { return RatFunc(MPoly::variable(v)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  unsigned total_degree() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& other);
  RatFunc& operator-=(const RatFunc& other);
  RatFunc& operator*=(const RatFunc& other);
  RatFunc& operator/=(const RatFunc& other);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc scaled(const Rational& c) const;
  /// Integer power; negative exponents invert.
  RatFunc pow(int exponent) const;
  RatFunc inverse() const;

  /// Throws MissingVariableError or PoleError.
  Rational evaluate(const Assignment& assignment,
                    const VarRegistry* names = nullptr) const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// Skips the gcd: the caller guarantees num and den are coprime. Only the
  /// normalization of the denominator is applied.
  static RatFunc from_coprime(MPoly num, MPoly den);

 private:
  struct Reduced {};
  RatFunc(MPoly num, MPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  MPoly num_;
  MPoly den_;
};

/// `p` or `(p)/(q)`; parenthesizes only multi-term parts.
std::string render(const RatFunc& f, const VarRegistry& registry);

}  // namespace dnkit

#endif  // DNKIT_RATFUNC_HPP
