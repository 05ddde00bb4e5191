// Multivariate gcd over Q by the recursive primitive polynomial remainder
// sequence: split off the content in the main variable, run a primitive PRS
// on the primitive parts, recombine.

#include <algorithm>
#include <iterator>
#include <map>
#include <optional>
#include <unordered_map>

#include "dnkit/error.hpp"
#include "dnkit/poly.hpp"

namespace dnkit {

namespace {

using Univariate = std::vector<MPoly>;

MPoly normalized(const MPoly& p) {
  return p.is_zero() ? p : p.scaled(normalizing_factor(p));
}

std::size_t deg(const Univariate& u) { return u.size() - 1; }

void trim(Univariate& u) {
  while (u.size() > 1 && u.back().is_zero()) u.pop_back();
}

bool is_zero(const Univariate& u) { return u.size() == 1 && u[0].is_zero(); }

MPoly content(const Univariate& u) {
  MPoly c;
  for (const MPoly& k : u) {
    c = gcd(c, k);
    if (c.is_constant() && !c.is_zero()) break;
  }
  return c;
}

Univariate divide_all(const Univariate& u, const MPoly& d) {
  Univariate out;
  out.reserve(u.size());
  for (const MPoly& k : u) {
    auto q = k.divide(d);
    if (!q) throw Error("internal: content does not divide coefficient");
    out.push_back(std::move(*q));
  }
  return out;
}

// Sparse pseudo-remainder: repeatedly cancels the top coefficient of `a`
// by cross-multiplying with the leading coefficient of `b`.
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const MPoly& lc_b = b.back();
  while (!is_zero(a) && deg(a) >= deg(b)) {
    const std::size_t shift = deg(a) - deg(b);
    const MPoly lc_a = a.back();
    for (MPoly& k : a) k *= lc_b;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= lc_a * b[i];
    a.pop_back();
    if (a.empty()) a.emplace_back();
    trim(a);
  }
  return a;
}

// Also strips the rational content, otherwise the pseudo-remainders grow
// integer factors without bound.
Univariate primitive_part(const Univariate& u) {
  Univariate out = divide_all(u, content(u));
  mpz_class num = 0, den = 1;
  for (const MPoly& k : out) {
    for (const Term& t : k.terms()) {
      num = gcd(num, t.coeff.numerator());
      den = lcm(den, t.coeff.denominator());
    }
  }
  if (num == 0) return out;
  const Rational factor(den, num);
  if (factor.is_one()) return out;
  for (MPoly& k : out) k = k.scaled(factor);
  return out;
}

// gcd of two primitive univariate polynomials of positive degree.
Univariate primitive_prs(Univariate a, Univariate b) {
  if (deg(a) < deg(b)) std::swap(a, b);
  while (true) {
    Univariate r = pseudo_remainder(a, b);
    if (is_zero(r)) return b;
    if (deg(r) == 0) return Univariate{MPoly(Rational(1))};
    a = std::move(b);
    b = primitive_part(r);
  }
}

// gcd of a single term with p: the monomial of smallest exponents.
MPoly monomial_gcd(const Monomial& m, const MPoly& p) {
  std::vector<std::uint32_t> exps;
  for (const VarPower& f : m.factors()) exps.push_back(f.exp);
  for (const Term& t : p.terms()) {
    for (std::size_t i = 0; i < exps.size(); ++i) {
      exps[i] = std::min(exps[i], t.monomial.exponent(m.factors()[i].var));
    }
  }
  MPoly out(Rational(1));
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 0) out *= MPoly::variable({m.factors()[i].var, VarKind::generator}, exps[i]);
  }
  return out;
}

// Content of p with respect to the variables in `only`: gcd of the
// coefficients obtained by grouping terms on their `only` part.
MPoly content_in(const MPoly& p, const std::vector<std::uint32_t>& only, const MPoly& other) {
  std::map<std::vector<std::pair<std::uint32_t, std::uint32_t>>, std::vector<Term>> groups;
  for (const Term& t : p.terms()) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> key;
    Monomial rest = t.monomial;
    for (const VarPower& f : t.monomial.factors()) {
      if (std::binary_search(only.begin(), only.end(), f.var)) {
        key.emplace_back(f.var, f.exp);
        rest = rest.without(f.var);
      }
    }
    groups[key].push_back({rest, t.coeff});
  }
  // Start from the smallest group; it bounds the gcd.
  std::vector<MPoly> coeffs;
  for (auto& [key, terms] : groups) coeffs.push_back(MPoly::from_terms(std::move(terms)));
  std::sort(coeffs.begin(), coeffs.end(),
            [](const MPoly& x, const MPoly& y) { return x.size() < y.size(); });
  MPoly g = other;
  for (const MPoly& c : coeffs) {
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

using Dense = std::vector<Rational>;

void trim_dense(Dense& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

std::size_t dense_gcd_degree(Dense a, Dense b) {
  trim_dense(a);
  trim_dense(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const Rational inv = b.back().inverse();
    while (a.size() >= b.size()) {
      const Rational q = a.back() * inv;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
      a.pop_back();
      trim_dense(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

Dense image(const Univariate& u, const std::unordered_map<std::uint32_t, Rational>& at) {
  Dense out;
  for (const MPoly& k : u) {
    Rational sum;
    for (const Term& t : k.terms()) {
      Rational v = t.coeff;
      for (const VarPower& f : t.monomial.factors()) v *= at.at(f.var).pow(f.exp);
      sum += v;
    }
    out.push_back(std::move(sum));
  }
  return out;
}

// Degree in `var` of the gcd of an image of a and b under a substitution of
// the other variables that keeps both leading coefficients. It bounds the
// degree of the true gcd from above. Fixed points keep the result
// deterministic; nullopt when every tried point is unlucky.
std::optional<std::size_t> image_degree(const Univariate& ua, const Univariate& ub,
                                        std::uint32_t var,
                                        const std::vector<std::uint32_t>& vars) {
  for (long attempt = 0; attempt < 4; ++attempt) {
    std::unordered_map<std::uint32_t, Rational> at;
    long k = 0;
    for (std::uint32_t v : vars) {
      if (v != var) at.emplace(v, Rational(2 + (k++ * 7 + attempt * 11) % 89));
    }
    Dense ia = image(ua, at), ib = image(ub, at);
    if (ia.back().is_zero() || ib.back().is_zero()) continue;
    return dense_gcd_degree(std::move(ia), std::move(ib));
  }
  return std::nullopt;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return MPoly(Rational(1));
  if (a == b) return normalized(a);
  const detail::UnguardedDegree unguarded;
  if (a.size() == 1) return monomial_gcd(a.leading().monomial, b);
  if (b.size() == 1) return monomial_gcd(b.leading().monomial, a);

  const auto va = a.variables();
  const auto vb = b.variables();
  std::vector<std::uint32_t> only_a, only_b, shared;
  std::set_difference(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(only_a));
  std::set_difference(vb.begin(), vb.end(), va.begin(), va.end(), std::back_inserter(only_b));
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(shared));

  // Variables missing from one side can only contribute through content.
  if (!only_a.empty()) return content_in(a, only_a, b);
  if (!only_b.empty()) return content_in(b, only_b, a);

  // A variable whose image gcd is constant is absent from the gcd, which
  // then divides every coefficient in that variable.
  bool tried_division = false;
  for (std::uint32_t v : shared) {
    const Univariate ua = a.coefficients_in(v);
    const Univariate ub = b.coefficients_in(v);
    const auto d = image_degree(ua, ub, v, shared);
    if (!d) continue;
    if (*d == 0) return gcd(content(ua), content(ub));
    if (!tried_division) {
      tried_division = true;
      if (*d == deg(ub) && deg(ub) <= deg(ua) && a.divide(b)) return normalized(b);
      if (*d == deg(ua) && deg(ua) <= deg(ub) && b.divide(a)) return normalized(a);
    }
  }

  // Main variable: the shared one of smallest degree.
  std::uint32_t main = shared.front();
  unsigned best = ~0U;
  for (std::uint32_t v : shared) {
    const unsigned d = std::max(a.degree(v), b.degree(v));
    if (d < best) {
      best = d;
      main = v;
    }
  }

  const Univariate ua = a.coefficients_in(main);
  const Univariate ub = b.coefficients_in(main);
  const MPoly ca = content(ua);
  const MPoly cb = content(ub);
  const MPoly c = gcd(ca, cb);
  const Univariate g = primitive_part(
      primitive_prs(divide_all(ua, ca), divide_all(ub, cb)));
  return normalized(c * MPoly::from_coefficients(main, g));
}

}  // namespace dnkit
