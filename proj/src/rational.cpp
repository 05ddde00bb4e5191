#include "dnkit/rational.hpp"

#include <algorithm>
#include <ostream>

#include "dnkit/error.hpp"

namespace dnkit {

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZeroError();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  auto read = [](const std::string& part, mpz_class& out) {
    if (part.empty() || out.set_str(part, 10) != 0) {
      throw Error("malformed rational literal");
    }
  };
  if (slash == std::string::npos) {
    read(s, num);
  } else {
    read(s.substr(0, slash), num);
    read(s.substr(slash + 1), den);
  }
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DivisionByZeroError();
  value_ /= other.value_;
  return *this;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::pow(unsigned exponent) const {
  Rational result(1);
  Rational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string Rational::to_string() const { return value_.get_str(); }

std::size_t Rational::hash() const {
  // Low limbs of numerator and denominator are enough to spread values.
  const auto limb = [](const mpz_class& z) -> std::size_t {
    return mpz_size(z.get_mpz_t()) == 0
               ? 0
               : static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
  };
  std::size_t h = limb(value_.get_num()) * 0x9E3779B97F4A7C15ULL;
  h ^= limb(value_.get_den()) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(sgn(value_) + 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

Rational binom(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  k = std::min(k, n - k);
  // Each partial product is C(n - k + i, i), so the division is exact.
  mpz_class result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i);
  }
  return Rational(result);
}

Rational factorial(unsigned n) {
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return Rational(result);
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace dnkit
