#include "geoprove/rational.hpp"

#include <functional>
#include <stdexcept>

namespace geoprove {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpq_class(mpz_class(text, 10)));
    }
    mpz_class num(text.substr(0, slash), 10);
    mpz_class den(text.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q;
    q.get_num() = num;
    q.get_den() = den;
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal '" + text + "'");
  }
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  return Rational(mpq_class(value_ / o.value_));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::invalid_argument("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool Rational::in_canonical_form() const {
  if (sgn(value_.get_den()) <= 0) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), value_.get_num().get_mpz_t(),
          value_.get_den().get_mpz_t());
  return g == 1;
}

std::size_t Rational::hash() const {
  std::hash<std::string> h;
  return h(to_string());
}

mpz_class integer_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class integer_lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace geoprove
