#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubcert/rational.hpp"

namespace cubcert {

/// Exact scalar division customization point. For Rational this is plain
/// division; for nested polynomials it is exact polynomial division and
/// throws when the quotient does not exist in the ring.
inline Rational exact_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  return a / b;
}

/// Dense univariate polynomial over a commutative coefficient ring R
/// (Rational, or Poly<Rational> for symbolic-dimension work). Coefficients
/// are stored ascending and kept trimmed: empty vector == zero polynomial.
template <class R>
class Poly {
 public:
  Poly() = default;
  Poly(const R& constant) { c_.push_back(constant); trim(); }
  Poly(long n) : Poly(R(n)) {}
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly variable() { return monomial(R(1), 1); }
  static Poly monomial(const R& coeff, int deg) {
    std::vector<R> v(static_cast<size_t>(deg) + 1, R(0));
    v.back() = coeff;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return R(0);
    return c_[static_cast<size_t>(i)];
  }
  const R& leading() const {
    if (is_zero()) throw std::domain_error("Poly: leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = R(0) - c;
    return out;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const R& s) const {
    Poly out = *this;
    for (auto& c : out.c_) c = c * s;
    out.trim();
    return out;
  }
  /// Exact division of every coefficient by s.
  Poly divided(const R& s) const {
    Poly out = *this;
    for (auto& c : out.c_) c = exact_div(c, s);
    out.trim();
    return out;
  }
  /// Multiply by x^n.
  Poly shifted_up(int n) const {
    if (is_zero()) return Poly();
    std::vector<R> out(static_cast<size_t>(n), R(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return Poly(std::move(out));
  }

  Poly pow(int e) const {
    Poly out(R(1));
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> out;
    out.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * R(static_cast<long>(i)));
    return Poly(std::move(out));
  }

  /// Horner evaluation in any ring T that embeds R via T(R).
  template <class T>
  T eval(const T& x) const {
    if (is_zero()) return T(R(0));
    T acc(c_.back());
    for (int i = degree() - 1; i >= 0; --i) acc = acc * x + T(c_[static_cast<size_t>(i)]);
    return acc;
  }

  /// Horner evaluation with an explicit coefficient lift (for targets that
  /// cannot be constructed from R alone, e.g. field elements).
  template <class T, class Lift>
  T eval_with(const T& x, Lift lift) const {
    T acc = lift(is_zero() ? R(0) : c_.back());
    for (int i = degree() - 1; i >= 0; --i) acc = acc * x + lift(c_[static_cast<size_t>(i)]);
    return acc;
  }

  Poly compose(const Poly& inner) const { return eval<Poly>(inner); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c_ == b.c_); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
  }
  std::vector<R> c_;
};

using QPoly = Poly<Rational>;

/// Exact division in the ring R[x]; throws if b does not divide a.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b);

/// Euclidean division a = q*b + r with deg r < deg b. Needs the leading
/// coefficient of b invertible in R (always true for monic b); otherwise
/// the per-step exact_div throws.
template <class R>
std::pair<Poly<R>, Poly<R>> poly_divrem(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
  Poly<R> rem = a;
  if (a.degree() < b.degree()) return {Poly<R>(), rem};
  std::vector<R> q(static_cast<size_t>(a.degree() - b.degree()) + 1, R(0));
  const R& lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    R factor = exact_div(rem.leading(), lead);
    q[static_cast<size_t>(shift)] = factor;
    rem -= b.scaled(factor).shifted_up(shift);
  }
  return {Poly<R>(std::move(q)), rem};
}

template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: polynomial division not exact");
  return q;
}

/// Monic gcd over field coefficients; gcd(0, 0) = 0.
template <class R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    auto [q, r] = poly_divrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.divided(a.leading());
}

/// Extended gcd over field coefficients: returns (g, u, v) monic with
/// g = u*a + v*b.
template <class R>
std::tuple<Poly<R>, Poly<R>, Poly<R>> poly_extended_gcd(const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r0 = a, r1 = b;
  Poly<R> u0(R(1)), u1, v0, v1(R(1));
  while (!r1.is_zero()) {
    auto [q, r] = poly_divrem(r0, r1);
    Poly<R> u2 = u0 - q * u1;
    Poly<R> v2 = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  const R lead = r0.leading();
  return {r0.divided(lead), u0.divided(lead), v0.divided(lead)};
}

/// For p with only even-degree terms, returns q with q(x^2) = p(x).
template <class R>
Poly<R> even_part(const Poly<R>& p) {
  std::vector<R> out;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i % 2 == 1) {
      if (!(p.coeff(i) == R(0)))
        throw std::domain_error("even_part: polynomial has an odd-degree term");
    } else {
      out.push_back(p.coeff(i));
    }
  }
  return Poly<R>(std::move(out));
}

/// Substitute x -> x^2 (inverse of even_part).
template <class R>
Poly<R> inflate(const Poly<R>& p) {
  if (p.is_zero()) return p;
  std::vector<R> out(static_cast<size_t>(2 * p.degree()) + 1, R(0));
  for (int i = 0; i <= p.degree(); ++i) out[static_cast<size_t>(2 * i)] = p.coeff(i);
  return Poly<R>(std::move(out));
}

/// x^n * p(1/x) for n >= deg p.
template <class R>
Poly<R> reverse_to_degree(const Poly<R>& p, int n) {
  if (p.degree() > n) throw std::domain_error("reverse_to_degree: n below degree");
  std::vector<R> out(static_cast<size_t>(n) + 1, R(0));
  for (int i = 0; i <= p.degree(); ++i) out[static_cast<size_t>(n - i)] = p.coeff(i);
  return Poly<R>(std::move(out));
}

/// Exact square root of a monic even-degree polynomial over a field.
/// Throws if p is not a perfect square.
template <class R>
Poly<R> poly_sqrt(const Poly<R>& p) {
  if (p.is_zero()) return p;
  if (p.degree() % 2 != 0 || !(p.leading() == R(1)))
    throw std::domain_error("poly_sqrt: needs a monic even-degree polynomial");
  int h = p.degree() / 2;
  std::vector<R> s(static_cast<size_t>(h) + 1, R(0));
  s[static_cast<size_t>(h)] = R(1);
  for (int i = h - 1; i >= 0; --i) {
    // coefficient of x^(h+i) in s^2 is 2*s_i*s_h + sum over u+v = h+i, i<u,v<h
    R conv(0);
    for (int u = i + 1; u <= h - 1; ++u) {
      int v = h + i - u;
      if (v >= i + 1 && v <= h - 1) conv += s[static_cast<size_t>(u)] * s[static_cast<size_t>(v)];
    }
    s[static_cast<size_t>(i)] = exact_div(p.coeff(h + i) - conv, R(2));
  }
  Poly<R> out(std::move(s));
  if (!(out * out == p)) throw std::domain_error("poly_sqrt: polynomial is not a perfect square");
  return out;
}

namespace detail {
inline std::string poly_coeff_str(const Rational& r) { return r.str(); }
template <class R>
std::string poly_coeff_str(const Poly<R>& p);
}  // namespace detail

/// "x^3 + 1/2 x^2 - 1/2 x - 1/8" style rendering, descending powers.
template <class R>
std::string to_string(const Poly<R>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    R c = p.coeff(i);
    if (c == R(0)) continue;
    std::string cs = detail::poly_coeff_str(c);
    bool neg = !cs.empty() && cs[0] == '-';
    std::string mag = neg ? cs.substr(1) : cs;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string power =
        i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (i == 0) {
      out += mag;
    } else if (mag == "1") {
      out += power;
    } else {
      out += mag + " " + power;
    }
  }
  return out;
}

namespace detail {
template <class R>
std::string poly_coeff_str(const Poly<R>& p) {
  if (p.is_constant()) return poly_coeff_str(p.coeff(0));
  return "(" + to_string(p, "d") + ")";
}
}  // namespace detail

}  // namespace cubcert
