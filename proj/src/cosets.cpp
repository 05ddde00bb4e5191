#include "dnkit/cosets.hpp"

#include <map>
#include <sstream>

#include "dnkit/error.hpp"
#include "dnkit/jets.hpp"

namespace dnkit {

namespace {

MPoly exact(const MPoly& a, const MPoly& b) {
  auto q = a.divide(b);
  if (!q) throw Error("internal: inexact division");
  return std::move(*q);
}

}  // namespace

std::optional<std::vector<Rational>> first_kernel_vector(
    std::vector<std::vector<Rational>> rows, std::size_t columns) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < columns; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::size_t free_col = columns;
  for (std::size_t c = 0, j = 0; c < columns; ++c) {
    if (j < pivot_col.size() && pivot_col[j] == c) {
      ++j;
    } else {
      free_col = c;
      break;
    }
  }
  if (free_col == columns) return std::nullopt;

  std::vector<Rational> v(columns);
  v[free_col] = Rational(1);
  for (std::size_t j = 0; j < pivot_col.size(); ++j) {
    v[pivot_col[j]] = -rows[j][free_col];
  }
  return v;
}

bool satisfies(const AffineRelation& rel, std::span<const RatFunc> funcs) {
  if (rel.coefficients.size() != funcs.size()) return false;
  RatFunc sum;
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    sum += funcs[i].scaled(rel.coefficients[i]);
  }
  return sum == RatFunc(rel.constant);
}

std::optional<AffineRelation> affine_relation(std::span<const RatFunc> funcs) {
  if (funcs.empty()) throw PreconditionError("affine_relation needs a nonempty tuple");
  const std::size_t n = funcs.size();

  MPoly common(Rational(1));
  for (const RatFunc& f : funcs) {
    common = exact(common * f.den(), gcd(common, f.den()));
  }
  // Columns 0..n-1 carry ε_i N_i, column n carries -common.
  std::vector<MPoly> columns;
  for (const RatFunc& f : funcs) columns.push_back(f.num() * exact(common, f.den()));
  columns.push_back(-common);

  std::map<Monomial, std::vector<Rational>> by_monomial;
  for (std::size_t c = 0; c <= n; ++c) {
    for (const Term& t : columns[c].terms()) {
      auto& row = by_monomial[t.monomial];
      row.resize(n + 1);
      row[c] = t.coeff;
    }
  }
  std::vector<std::vector<Rational>> rows;
  rows.reserve(by_monomial.size());
  for (auto& [m, row] : by_monomial) rows.push_back(std::move(row));

  auto kernel = first_kernel_vector(std::move(rows), n + 1);
  if (!kernel) return std::nullopt;

  std::size_t lead = 0;
  while (lead < n && (*kernel)[lead].is_zero()) ++lead;
  if (lead == n) throw Error("internal: relation without a function coefficient");
  const Rational scale = (*kernel)[lead].inverse();

  AffineRelation rel;
  for (std::size_t i = 0; i < n; ++i) rel.coefficients.push_back((*kernel)[i] * scale);
  rel.constant = (*kernel)[n] * scale;
  if (!satisfies(rel, funcs)) throw Error("internal: relation does not verify");
  return rel;
}

bool coset_free_powers(unsigned n) {
  if (n < 1) throw PreconditionError("coset_free_powers needs n >= 1");
  const JetContext ctx = JetContext::make({"t"}, 0, 0);
  std::vector<RatFunc> powers;
  for (unsigned k = 1; k <= n; ++k) powers.push_back(ctx.gen(0).pow(static_cast<int>(k)));
  return !affine_relation(powers).has_value();
}

std::string to_string(const AffineRelation& rel) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < rel.coefficients.size(); ++i) {
    Rational c = rel.coefficients[i];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    c = c.abs();
    if (!c.is_one()) os << c << '*';
    os << 'f' << (i + 1);
  }
  os << " = " << rel.constant;
  return os.str();
}

}  // namespace dnkit
