#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace cubcert {

/// Arbitrary-precision rational, always canonical (positive denominator,
/// gcd(|num|, den) = 1). Thin value wrapper over GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den);
  explicit Rational(mpz_class n) : v_(std::move(n)) {}
  Rational(mpz_class num, mpz_class den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p", "p/q", and plain decimal strings like "3.14159" or "-0.5".
  static Rational parse(const std::string& text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  mpz_class floor() const;
  mpz_class ceil() const;

  /// Integer exponent; negative allowed for nonzero values.
  Rational pow(long e) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// "p" or "p/q".
  std::string str() const;

  /// Truncated (toward zero) decimal expansion with `digits` fractional
  /// digits. For display only; exact values always travel as str().
  std::string decimal(int digits) const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

mpz_class binomial(long n, long k);
mpz_class factorial(long n);

/// (n)!! with (-1)!! = 0!! = 1.
mpz_class double_factorial(long n);

/// 10^e as an exact integer, e >= 0.
mpz_class pow10(long e);

}  // namespace cubcert
