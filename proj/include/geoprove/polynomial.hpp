// Sparse multivariate polynomials with exact rational coefficients.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "geoprove/monomial.hpp"
#include "geoprove/rational.hpp"
#include "geoprove/variable.hpp"

namespace geoprove {

// Immutable value type. Terms are kept in a fixed storage order with no
// zero coefficients; anything order-sensitive (leading term, rendering)
// takes the active MonomialOrder explicitly. Binary operations require
// both operands to share one variable table object.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialStorageLess>;

  explicit Polynomial(VariableTablePtr table) : table_(std::move(table)) {}
  static Polynomial zero(VariableTablePtr table) { return Polynomial(std::move(table)); }
  static Polynomial constant(VariableTablePtr table, const Rational& c);
  static Polynomial variable(VariableTablePtr table, std::uint32_t index);
  static Polynomial from_terms(VariableTablePtr table,
                               std::vector<std::pair<Monomial, Rational>> terms);

  const VariableTablePtr& table() const { return table_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(std::uint32_t e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // ord-maximal term; throws ZeroPolynomial on the zero polynomial.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const;

  // -1 for the zero polynomial.
  int total_degree() const;

  Rational evaluate(const std::map<std::uint32_t, Rational>& point) const;

  // Replace variables by polynomials (unlisted variables stay themselves).
  Polynomial substitute(const std::map<std::uint32_t, Polynomial>& map) const;
  Polynomial substitute_values(const std::map<std::uint32_t, Rational>& values) const;

  // Scale so coefficients are coprime integers and the lex-leading
  // coefficient is positive. Idempotent. Throws ZeroPolynomial.
  Polynomial normalized() const;
  // The c with normalized() == scaled(c).
  Rational normalization_factor() const;

  // Same polynomial over an index-preserving extension of its table.
  Polynomial rebase(const VariableTablePtr& bigger) const;

  std::vector<std::uint32_t> support_variables() const;

  // Canonical text: terms in decreasing `ord`, explicit '*', '^' powers,
  // e.g. "2*x^2*y - 3*y + 1". Round-trips through parse_polynomial.
  std::string to_string(const MonomialOrder& ord) const;
  // Convenience: decreasing lex over the full table, declaration priority.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  void require_same_table(const Polynomial& o) const;

  VariableTablePtr table_;
  TermMap terms_;
};

// Lex order with declaration priority (variable 0 largest), the fixed
// tie-break order used by normalization and default rendering.
MonomialOrder default_order(const VariableTable& table);

}  // namespace geoprove
