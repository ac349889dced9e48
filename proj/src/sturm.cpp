#include "cubcert/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubcert {

namespace {

std::vector<QPoly> sturm_chain(const QPoly& q) {
  std::vector<QPoly> chain{q, q.derivative()};
  while (!chain.back().is_zero()) {
    const QPoly& a = chain[chain.size() - 2];
    const QPoly& b = chain.back();
    auto [quot, rem] = poly_divrem(a, b);
    chain.push_back(-rem);
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

/// Roots of squarefree q in the open interval (a, b); q(a), q(b) must be
/// nonzero.
int open_count(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

/// Count for squarefree q over [a, b) with no assumptions on endpoint
/// values: deflates endpoint roots first.
int halfopen_count_sqfree(QPoly q, Rational a, Rational b) {
  if (a >= b) return 0;
  int add = 0;
  QPoly x_minus_a(std::vector<Rational>{-a, Rational(1)});
  if (q.eval(a).is_zero()) {
    q = exact_div(q, x_minus_a);
    add = 1;
  }
  if (q.eval(b).is_zero()) {
    QPoly x_minus_b(std::vector<Rational>{-b, Rational(1)});
    q = exact_div(q, x_minus_b);
  }
  if (q.is_constant()) return add;
  return add + open_count(sturm_chain(q), a, b);
}

void isolate_rec(const QPoly& q, const Rational& a, const Rational& b,
                 std::vector<IntervalRat>& out) {
  int n = halfopen_count_sqfree(q, a, b);
  if (n == 0) return;
  if (n == 1) {
    if (q.eval(a).is_zero()) {
      out.emplace_back(a, a);
    } else {
      out.emplace_back(a, b);
    }
    return;
  }
  Rational m = (a + b) / Rational(2);
  isolate_rec(q, a, m, out);
  isolate_rec(q, m, b, out);
}

}  // namespace

QPoly squarefree_part(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (p.degree() == 0) return QPoly(Rational(1));
  QPoly g = poly_gcd(p, p.derivative());
  QPoly q = exact_div(p, g);
  return q.divided(q.leading());
}

int sturm_count(const QPoly& p, const IntervalRat& window) {
  if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
  if (p.degree() == 0) return 0;
  return halfopen_count_sqfree(squarefree_part(p), window.lo(), window.hi());
}

std::vector<IntervalRat> isolate_real_roots(const QPoly& p, const IntervalRat& window) {
  if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
  if (p.degree() == 0) return {};
  std::vector<IntervalRat> out;
  isolate_rec(squarefree_part(p), window.lo(), window.hi(), out);
  return out;
}

IntervalRat refine_root(const QPoly& p, const IntervalRat& isolating, const Rational& max_width) {
  QPoly q = squarefree_part(p);
  Rational a = isolating.lo(), b = isolating.hi();
  if (q.eval(a).is_zero()) return IntervalRat(a, a);
  if (a == b) throw std::domain_error("refine_root: point interval is not a root");

  // Clean the right endpoint so sign bisection is available.
  while (q.eval(b).is_zero()) {
    Rational m = (a + b) / Rational(2);
    if (q.eval(m).is_zero()) return IntervalRat(m, m);
    if (halfopen_count_sqfree(q, a, m) == 1)
      b = m;
    else
      a = m;
  }
  int sa = q.eval(a).sign();
  if (sa * q.eval(b).sign() >= 0)
    throw std::domain_error("refine_root: interval does not isolate a root");
  while (b - a > max_width) {
    Rational m = (a + b) / Rational(2);
    int sm = q.eval(m).sign();
    if (sm == 0) return IntervalRat(m, m);
    if (sa * sm < 0)
      b = m;
    else {
      a = m;
      sa = sm;
    }
  }
  return IntervalRat(a, b);
}

std::vector<mpz_class> to_integer_coeffs(const QPoly& p) {
  if (p.is_zero()) return {};
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_class d = c.denominator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  for (auto& v : out) v /= content;
  return out;
}

Rational cauchy_root_bound(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("cauchy_root_bound: zero polynomial");
  Rational lead = p.leading().abs();
  Rational mx(0);
  for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, p.coeff(i).abs());
  return Rational(1) + mx / lead;
}

std::vector<Rational> rational_roots_in(const QPoly& p, const IntervalRat& window) {
  if (p.is_zero()) throw std::domain_error("rational_roots_in: zero polynomial");
  std::vector<Rational> out;
  if (p.degree() == 0) return out;
  QPoly q = squarefree_part(p);

  // Monic integer transform: with integer coefficients a_n..a_0, the roots
  // of h(y) = y^n + a_{n-1} y^{n-1} + a_n a_{n-2} y^{n-2} + ... match the
  // roots of q under y = a_n x, and every rational root of h is an integer.
  std::vector<mpz_class> a = to_integer_coeffs(q);
  int n = static_cast<int>(a.size()) - 1;
  mpz_class lead = a.back();
  std::vector<Rational> h(static_cast<size_t>(n) + 1, Rational(0));
  h[static_cast<size_t>(n)] = Rational(1);
  mpz_class scale = 1;
  for (int i = n - 1; i >= 0; --i) {
    h[static_cast<size_t>(i)] = Rational(mpz_class(a[static_cast<size_t>(i)] * scale));
    scale *= lead;
  }
  QPoly hp(std::move(h));

  Rational lead_q(lead);
  for (const auto& iso : isolate_real_roots(hp, IntervalRat(-cauchy_root_bound(hp), cauchy_root_bound(hp)))) {
    IntervalRat tight = refine_root(hp, iso, Rational(1, 3));
    if (!tight.contains_integer()) continue;
    Rational cand(tight.lo().ceil());
    if (!hp.eval(cand).is_zero()) continue;
    Rational root = cand / lead_q;
    if (root >= window.lo() && root < window.hi()) out.push_back(root);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<mpz_class> integer_roots(const QPoly& p) {
  Rational bound = cauchy_root_bound(squarefree_part(p));
  std::vector<mpz_class> out;
  for (const auto& r : rational_roots_in(p, IntervalRat(-bound, bound)))
    if (r.is_integer()) out.push_back(r.numerator());
  return out;
}

}  // namespace cubcert
