#include "cubcert/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace cubcert {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den)
    : v_(mpq_class(std::move(num)) / mpq_class(std::move(den))) {}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  // strip surrounding whitespace
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("Rational::parse: empty string");
  s = s.substr(b, e - b + 1);

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw std::invalid_argument("Rational::parse: mixed decimal and fraction: " + text);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    long frac = static_cast<long>(s.size() - dot - 1);
    if (frac == 0 || digits.empty())
      throw std::invalid_argument("Rational::parse: malformed decimal: " + text);
    mpz_class num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw std::invalid_argument("Rational::parse: malformed decimal: " + text);
    return Rational(num, pow10(frac));
  }

  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("Rational::parse: malformed rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator: " + text);
  q.canonicalize();
  return Rational(q);
}

mpz_class Rational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return out;
}

mpz_class Rational::ceil() const {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return out;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool inv = e < 0;
  unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv && is_zero()) throw std::invalid_argument("Rational::pow: zero to negative power");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), n);
  return inv ? Rational(den, num) : Rational(num, den);
}

std::string Rational::str() const { return v_.get_str(); }

std::string Rational::decimal(int digits) const {
  mpz_class scaled;
  mpz_class p = pow10(digits);
  mpz_class num = v_.get_num() * p;
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), v_.get_den().get_mpz_t());
  bool neg = scaled < 0;
  mpz_class a = ::abs(scaled);
  std::string ds = a.get_str();
  if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  std::string out = ds.substr(0, ds.size() - digits);
  if (digits > 0) out += "." + ds.substr(ds.size() - digits);
  return neg ? "-" + out : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double_factorial: argument below -1");
  mpz_class out = 1;
  for (long i = n; i > 1; i -= 2) out *= i;
  return out;
}

mpz_class pow10(long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return out;
}

}  // namespace cubcert
