#include "geoprove/polynomial.hpp"

#include <algorithm>

#include "geoprove/errors.hpp"

namespace geoprove {

Polynomial Polynomial::constant(VariableTablePtr table, const Rational& c) {
  Polynomial p(std::move(table));
  if (!c.is_zero()) p.terms_.emplace(Monomial::unit(), c);
  return p;
}

Polynomial Polynomial::variable(VariableTablePtr table, std::uint32_t index) {
  if (index >= table->size())
    throw UniverseMismatchError("variable index out of range");
  Polynomial p(std::move(table));
  p.terms_.emplace(Monomial::variable(index), Rational(1));
  return p;
}

Polynomial Polynomial::from_terms(VariableTablePtr table,
                                  std::vector<std::pair<Monomial, Rational>> terms) {
  Polynomial p(std::move(table));
  for (auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::require_same_table(const Polynomial& o) const {
  if (table_ != o.table_)
    throw UniverseMismatchError("operands use different variable universes");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_table(o);
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_table(o);
  Polynomial out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(table_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_table(o);
  Polynomial out(table_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(table_);
  if (c.is_zero()) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial out(table_);
  if (c.is_zero()) return out;
  for (const auto& [mm, coef] : terms_) out.terms_.emplace(mm * m, coef * c);
  return out;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial out = constant(table_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return table_ == o.table_ && terms_ == o.terms_;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw ZeroPolynomialError("leading_term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  int deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.total_degree());
  return deg;
}

Rational Polynomial::evaluate(const std::map<std::uint32_t, Rational>& point) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [var, exp] : m.entries()) {
      auto it = point.find(var);
      if (it == point.end()) throw MissingAssignmentError(table_->name(var));
      for (std::uint32_t i = 0; i < exp; ++i) term *= it->second;
    }
    acc += term;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::map<std::uint32_t, Polynomial>& map) const {
  Polynomial out(table_);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(table_, c);
    for (const auto& [var, exp] : m.entries()) {
      auto it = map.find(var);
      const Polynomial base = (it != map.end()) ? it->second : variable(table_, var);
      term = term * base.pow(exp);
    }
    out = out + term;
  }
  return out;
}

Polynomial Polynomial::substitute_values(const std::map<std::uint32_t, Rational>& values) const {
  std::map<std::uint32_t, Polynomial> map;
  for (const auto& [var, value] : values) map.emplace(var, constant(table_, value));
  return substitute(map);
}

Rational Polynomial::normalization_factor() const {
  if (terms_.empty()) throw ZeroPolynomialError("normalize of zero polynomial");
  // lcm of denominators, then gcd of the resulting integers (the content)
  mpz_class den_lcm(1), num_gcd(0);
  for (const auto& [m, c] : terms_) den_lcm = integer_lcm(den_lcm, c.denominator());
  for (const auto& [m, c] : terms_) {
    mpz_class scaled_num = c.numerator() * (den_lcm / c.denominator());
    num_gcd = integer_gcd(num_gcd, scaled_num);
  }
  Rational factor(mpq_class(mpq_class(den_lcm) / mpq_class(num_gcd)));
  if ((leading_term(default_order(*table_)).second * factor).sign() < 0)
    factor = -factor;
  return factor;
}

Polynomial Polynomial::normalized() const { return scaled(normalization_factor()); }

Polynomial Polynomial::rebase(const VariableTablePtr& bigger) const {
  if (bigger == table_) return *this;
  if (!VariableTable::is_extension_of(*bigger, *table_))
    throw UniverseMismatchError("target table is not an extension");
  Polynomial out(bigger);
  out.terms_ = terms_;
  return out;
}

std::vector<std::uint32_t> Polynomial::support_variables() const {
  std::vector<std::uint32_t> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [var, exp] : m.entries()) out.push_back(var);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string Polynomial::to_string(const MonomialOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, Rational>*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& term : terms_) sorted.push_back(&term);
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto* a, const auto* b) { return ord.greater(a->first, b->first); });

  std::string out;
  bool first = true;
  for (const auto* term : sorted) {
    const auto& [m, c] = *term;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (m.is_unit()) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += m.to_string(*table_);
    }
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(default_order(*table_)); }

MonomialOrder default_order(const VariableTable& table) {
  return MonomialOrder::lex(table.all_indices());
}

}  // namespace geoprove
