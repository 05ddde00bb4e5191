#include "dnkit/ratfunc.hpp"

#include <algorithm>

#include "dnkit/error.hpp"

namespace dnkit {

namespace {

MPoly exact(const MPoly& a, const MPoly& b) {
  auto q = a.divide(b);
  if (!q) throw Error("internal: inexact division by a gcd");
  return std::move(*q);
}

}  // namespace

RatFunc::RatFunc(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw DivisionByZeroError();
  if (num.is_zero()) {
    *this = RatFunc();
    return;
  }
  if (den.is_constant()) {
    *this = RatFunc(num.scaled(den.constant_term().inverse()));
    return;
  }
  const MPoly g = gcd(num, den);
  *this = from_coprime(exact(num, g), exact(den, g));
}

RatFunc RatFunc::from_coprime(MPoly num, MPoly den) {
  if (num.is_zero()) return RatFunc();
  const Rational c = normalizing_factor(den);
  if (den.is_constant()) return RatFunc(num.scaled(c), MPoly(Rational(1)), Reduced{});
  return RatFunc(num.scaled(c), den.scaled(c), Reduced{});
}

unsigned RatFunc::total_degree() const {
  return std::max(num_.total_degree(), den_.total_degree());
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc& RatFunc::operator+=(const RatFunc& other) {
  if (other.is_zero()) return *this;
  if (is_polynomial() && other.is_polynomial()) {
    num_ += other.num_;
    return *this;
  }
  if (den_ == other.den_) {
    *this = RatFunc(num_ + other.num_, den_);
    return *this;
  }
  // a/b + c/d = (a d' + c b') / (b d') with g = gcd(b, d), b = g b', d = g d'.
  const MPoly g = gcd(den_, other.den_);
  const MPoly b1 = exact(den_, g);
  const MPoly d1 = exact(other.den_, g);
  MPoly num = num_ * d1 + other.num_ * b1;
  MPoly den = den_ * d1;
  if (g.is_constant()) {
    *this = from_coprime(std::move(num), std::move(den));
  } else {
    *this = RatFunc(num, den);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& other) { return *this += -other; }

RatFunc& RatFunc::operator*=(const RatFunc& other) {
  if (is_zero() || other.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  if (is_polynomial() && other.is_polynomial()) {
    num_ *= other.num_;
    return *this;
  }
  // Cross-cancel; the result is then already coprime.
  const MPoly g1 = gcd(num_, other.den_);
  const MPoly g2 = gcd(other.num_, den_);
  MPoly num = exact(num_, g1) * exact(other.num_, g2);
  MPoly den = exact(den_, g2) * exact(other.den_, g1);
  *this = from_coprime(std::move(num), std::move(den));
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& other) {
  return *this *= other.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  return from_coprime(den_, num_);
}

RatFunc RatFunc::scaled(const Rational& c) const {
  if (c.is_zero()) return RatFunc();
  return RatFunc(num_.scaled(c), den_, Reduced{});
}

RatFunc RatFunc::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  // Powers of coprime polynomials stay coprime.
  return from_coprime(num_.pow(e), den_.pow(e));
}

Rational RatFunc::evaluate(const Assignment& assignment,
                           const VarRegistry* names) const {
  const Rational d = den_.evaluate(assignment, names);
  if (d.is_zero()) throw PoleError();
  return num_.evaluate(assignment, names) / d;
}

std::string render(const RatFunc& f, const VarRegistry& registry) {
  if (f.is_polynomial()) return render(f.num(), registry);
  std::string num = render(f.num(), registry);
  if (f.num().size() > 1) num = "(" + num + ")";
  std::string den = render(f.den(), registry);
  // Only a bare power of one variable can follow '/' unparenthesized.
  const Term& lead = f.den().leading();
  if (f.den().size() > 1 || !lead.coeff.is_one() ||
      lead.monomial.factors().size() != 1) {
    den = "(" + den + ")";
  }
  return num + "/" + den;
}

}  // namespace dnkit
