#include <algorithm>
#include <atomic>
#include <sstream>

#include "dnkit/error.hpp"
#include "dnkit/poly.hpp"

namespace dnkit {

namespace {

std::atomic<unsigned> g_degree_limit{64};

}  // namespace

unsigned degree_limit() { return g_degree_limit.load(); }
void set_degree_limit(unsigned limit) { g_degree_limit.store(limit); }

namespace {
thread_local unsigned t_unguarded = 0;
}

detail::UnguardedDegree::UnguardedDegree() { ++t_unguarded; }
detail::UnguardedDegree::~UnguardedDegree() { --t_unguarded; }

// ---------------------------------------------------------------------------
// VarRegistry

VarId VarRegistry::add_generator(std::string name) {
  const auto index = static_cast<std::uint32_t>(vars_.size());
  by_name_.emplace(name, index);
  vars_.push_back({std::move(name), VarKind::generator, index});
  return {index, VarKind::generator};
}

VarId VarRegistry::add_jet(std::string name, VarId base) {
  const auto index = static_cast<std::uint32_t>(vars_.size());
  by_name_.emplace(name, index);
  vars_.push_back({std::move(name), VarKind::jet, base.index});
  return {index, VarKind::jet};
}

std::optional<VarId> VarRegistry::find(const std::string& name) const {
  const auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return id(it->second);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exp) {
  Monomial m;
  if (exp != 0) {
    m.factors_.push_back({var, exp});
    m.degree_ = exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
  const auto it = std::lower_bound(
      factors_.begin(), factors_.end(), var,
      [](const VarPower& f, std::uint32_t v) { return f.var < v; });
  return (it != factors_.end() && it->var == var) ? it->exp : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->var < b->var) {
      r.factors_.push_back(*a++);
    } else if (b->var < a->var) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.factors_.insert(r.factors_.end(), b, other.factors_.end());
  r.degree_ = degree_ + other.degree_;
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& divisor) const {
  if (divisor.degree_ > degree_) return std::nullopt;
  Monomial r;
  auto a = factors_.begin();
  for (const VarPower& d : divisor.factors_) {
    while (a != factors_.end() && a->var < d.var) r.factors_.push_back(*a++);
    if (a == factors_.end() || a->var != d.var || a->exp < d.exp) {
      return std::nullopt;
    }
    if (a->exp > d.exp) r.factors_.push_back({a->var, a->exp - d.exp});
    ++a;
  }
  r.factors_.insert(r.factors_.end(), a, factors_.end());
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::without(std::uint32_t var) const {
  Monomial r;
  for (const VarPower& f : factors_) {
    if (f.var == var) continue;
    r.factors_.push_back(f);
    r.degree_ += f.exp;
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (const VarPower& f : factors_) {
    h ^= (static_cast<std::size_t>(f.var) << 20) ^ f.exp;
    h *= 1099511628211ULL;
  }
  return h;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const VarPower& x = a.factors_[i];
    const VarPower& y = b.factors_[i];
    // The side holding the lower-indexed variable is bigger.
    if (x.var != y.var) {
      return x.var < y.var ? std::strong_ordering::greater
                           : std::strong_ordering::less;
    }
    if (x.exp != y.exp) return x.exp <=> y.exp;
  }
  // Equal degree and equal common prefix implies equal length.
  return a.factors_.size() <=> b.factors_.size();
}

// ---------------------------------------------------------------------------
// MPoly

namespace {

bool greater_term(const Term& a, const Term& b) {
  return a.monomial > b.monomial;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

MPoly MPoly::variable(VarId v, std::uint32_t exp) {
  return monomial(Monomial::variable(v.index, exp), Rational(1));
}

MPoly MPoly::monomial(Monomial m, Rational c) {
  MPoly p;
  if (!c.is_zero()) {
    p.check_degree(m.degree());
    p.terms_.push_back({std::move(m), std::move(c)});
  }
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), greater_term);
  MPoly p;
  p.terms_.reserve(terms.size());
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty()) p.check_degree(p.total_degree());
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) {
    return terms_.back().coeff;
  }
  return Rational(0);
}

unsigned MPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

unsigned MPoly::degree(std::uint32_t var) const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial.exponent(var));
  return d;
}

std::vector<std::uint32_t> MPoly::variables() const {
  std::vector<std::uint32_t> vars;
  for (const Term& t : terms_) {
    for (const VarPower& f : t.monomial.factors()) vars.push_back(f.var);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

void MPoly::check_degree(unsigned degree) const {
  if (t_unguarded > 0) return;
  const unsigned limit = degree_limit();
  if (degree > limit) throw DegreeLimitError(degree, limit);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge of two sorted term lists; `sign` = -1 subtracts.
std::vector<Term> merge_terms(const std::vector<Term>& a,
                              std::span<const Term> b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    const auto c = i->monomial <=> j->monomial;
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({j->monomial, subtract ? -j->coeff : j->coeff});
      ++j;
    } else {
      Rational s = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
      if (!s.is_zero()) out.push_back({i->monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.end());
  for (; j != b.end(); ++j) {
    out.push_back({j->monomial, subtract ? -j->coeff : j->coeff});
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  a.check_degree(a.total_degree() + b.total_degree());
  if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
  if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].monomial, b.terms_[0].coeff);
  if (a.size() == 1) return b.times_monomial(a.terms_[0].monomial, a.terms_[0].coeff);

  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial);
      it->second += s.coeff * t.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), greater_term);
  MPoly r;
  r.terms_ = std::move(terms);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly MPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return MPoly();
  MPoly r = *this;
  if (c.is_one()) return r;
  for (Term& t : r.terms_) t.coeff *= c;
  return r;
}

MPoly MPoly::times_monomial(const Monomial& m, const Rational& c) const {
  if (c.is_zero() || is_zero()) return MPoly();
  check_degree(total_degree() + m.degree());
  MPoly r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the graded-lex order.
  for (const Term& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

MPoly MPoly::pow(unsigned exponent) const {
  if (exponent == 0) return MPoly(Rational(1));
  if (is_zero()) return MPoly();
  check_degree(total_degree() * exponent);
  MPoly result(Rational(1));
  MPoly base = *this;
  while (true) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent == 0) break;
    base *= base;
  }
  return result;
}

std::optional<MPoly> MPoly::divide(const MPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZeroError();
  if (is_zero()) return MPoly();
  if (divisor.is_constant()) return scaled(divisor.terms_[0].coeff.inverse());
  const Term& lead = divisor.leading();
  const Rational lead_inv = lead.coeff.inverse();
  MPoly quotient;
  MPoly rest = *this;
  std::vector<Term> q_terms;
  while (!rest.is_zero()) {
    const Term& top = rest.leading();
    auto m = top.monomial.divide(lead.monomial);
    if (!m) return std::nullopt;
    const Rational c = top.coeff * lead_inv;
    q_terms.push_back({*m, c});
    rest -= divisor.times_monomial(*m, c);
  }
  // Quotient terms are produced in decreasing order.
  quotient.terms_ = std::move(q_terms);
  return quotient;
}

Rational MPoly::evaluate(const Assignment& assignment,
                         const VarRegistry* names) const {
  std::unordered_map<std::uint32_t, const Rational*> values;
  Rational sum;
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (const VarPower& f : t.monomial.factors()) {
      auto it = values.find(f.var);
      if (it == values.end()) {
        auto a = std::find_if(assignment.begin(), assignment.end(),
                              [&](const auto& kv) { return kv.first.index == f.var; });
        if (a == assignment.end()) {
          throw MissingVariableError(names != nullptr
                                         ? names->info(f.var).name
                                         : "#" + std::to_string(f.var));
        }
        it = values.emplace(f.var, &a->second).first;
      }
      v *= it->second->pow(f.exp);
    }
    sum += v;
  }
  return sum;
}

std::vector<MPoly> MPoly::coefficients_in(std::uint32_t var) const {
  std::vector<std::vector<Term>> buckets(degree(var) + 1);
  for (const Term& t : terms_) {
    buckets[t.monomial.exponent(var)].push_back({t.monomial.without(var), t.coeff});
  }
  std::vector<MPoly> coeffs;
  coeffs.reserve(buckets.size());
  for (auto& b : buckets) coeffs.push_back(from_terms(std::move(b)));
  return coeffs;
}

MPoly MPoly::from_coefficients(std::uint32_t var,
                               std::span<const MPoly> coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Monomial xk = Monomial::variable(var, static_cast<std::uint32_t>(k));
    for (const Term& t : coeffs[k].terms()) {
      terms.push_back({t.monomial * xk, t.coeff});
    }
  }
  return from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------

Rational normalizing_factor(const MPoly& p) {
  if (p.is_zero()) throw DivisionByZeroError();
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const Term& t : p.terms()) {
    den_lcm = lcm(den_lcm, t.coeff.denominator());
    num_gcd = gcd(num_gcd, t.coeff.numerator());
  }
  Rational factor(den_lcm, num_gcd);
  if (p.leading().coeff.sign() < 0) factor = -factor;
  return factor;
}

MPoly odd_component(const MPoly& f, std::span<const VarId> vars,
                    const VarRegistry& registry) {
  std::vector<Term> kept;
  std::unordered_map<std::uint32_t, unsigned> degree;
  for (const Term& t : f.terms()) {
    degree.clear();
    for (const VarPower& p : t.monomial.factors()) {
      degree[registry.info(p.var).base] += p.exp;
    }
    const bool odd_everywhere = std::all_of(vars.begin(), vars.end(), [&](VarId v) {
      const auto it = degree.find(v.index);
      return it != degree.end() && it->second % 2 == 1;
    });
    if (odd_everywhere) kept.push_back(t);
  }
  return MPoly::from_terms(std::move(kept));
}

std::string render(const MPoly& p, const VarRegistry& registry) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      c = c.abs();
    }
    first = false;
    bool need_star = false;
    if (!c.is_one() || t.monomial.is_one()) {
      os << c;
      need_star = true;
    }
    for (const VarPower& f : t.monomial.factors()) {
      if (need_star) os << '*';
      os << registry.info(f.var).name;
      if (f.exp != 1) os << '^' << f.exp;
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace dnkit
