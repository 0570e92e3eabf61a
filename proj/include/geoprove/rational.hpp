// Exact rational numbers (GMP-backed). Always canonical: lowest terms,
// positive denominator, zero stored as 0/1.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace geoprove {

class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : value_(q) { canonicalize(); }

  // Accepts "p", "-p", "p/q". Throws std::invalid_argument on junk.
  static Rational from_string(const std::string& text);

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  bool operator!=(const Rational& o) const { return value_ != o.value_; }
  bool operator<(const Rational& o) const { return value_ < o.value_; }
  bool operator<=(const Rational& o) const { return value_ <= o.value_; }
  bool operator>(const Rational& o) const { return value_ > o.value_; }
  bool operator>=(const Rational& o) const { return value_ >= o.value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  // "p" when integral, "p/q" otherwise.
  std::string to_string() const;

  // Canonical-form audit used by tests: gcd(|num|,den)==1 and den>0.
  bool in_canonical_form() const;

  std::size_t hash() const;

 private:
  void canonicalize() { value_.canonicalize(); }
  mpq_class value_;
};

// gcd/lcm over the integer parts, used by polynomial normalization.
mpz_class integer_gcd(const mpz_class& a, const mpz_class& b);
mpz_class integer_lcm(const mpz_class& a, const mpz_class& b);

}  // namespace geoprove
