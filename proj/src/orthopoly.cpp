#include "cubcert/orthopoly.hpp"

#include <stdexcept>

#include "cubcert/sturm.hpp"

namespace cubcert {

namespace {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

QPoly cheb_recurrence(int n, const QPoly& first) {
  QPoly prev2(Rational(1));
  if (n == 0) return prev2;
  QPoly prev1 = first;
  QPoly two_x = QPoly::variable().scaled(Rational(2));
  for (int i = 2; i <= n; ++i) {
    QPoly cur = two_x * prev1 - prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

}  // namespace

QPoly chebyshev_t(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_t: negative degree");
  return cheb_recurrence(n, QPoly::variable());
}

QPoly chebyshev_u(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_u: negative degree");
  return cheb_recurrence(n, QPoly::variable().scaled(Rational(2)));
}

QPoly minimal_poly_cos(int p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("minimal_poly_cos: p must be an odd prime, got " +
                                std::to_string(p));
  QPoly tp_minus_1 = chebyshev_t(p) - QPoly(Rational(1));
  QPoly x_minus_1(std::vector<Rational>{Rational(-1), Rational(1)});
  QPoly q = exact_div(tp_minus_1, x_minus_1);
  // T_p(x) - 1 = 2^{p-1} (x - 1) m(x)^2 with m the target polynomial.
  QPoly q_monic = q.divided(q.leading());
  QPoly root = poly_sqrt(q_monic);  // throws if not a perfect square
  if (root.degree() != (p - 1) / 2)
    throw std::logic_error("minimal_poly_cos: unexpected degree");
  return root;
}

mpz_class dim_harm(int d, int l) {
  if (d < 1 || l < 0) throw std::invalid_argument("dim_harm: bad arguments");
  return binomial(d + l - 1, l) - binomial(d + l - 3, l - 2);
}

mpz_class moeller_bound(int d, int halfdeg, bool origin) {
  if (d < 1 || halfdeg < 0) throw std::invalid_argument("moeller_bound: bad arguments");
  mpz_class dim = 0;
  for (int j = halfdeg % 2; j <= halfdeg; j += 2) dim += binomial(d + j - 1, j);
  if (halfdeg % 2 == 0 && origin) return 2 * dim - 1;
  return 2 * dim;
}

mpz_class point_count_nonorigin(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("point_count_nonorigin: bad arguments");
  mpz_class sum = 0;
  for (int i = 0; i < k; ++i) sum += binomial(d + 2 * k - 1 - 2 * i, 2 * k - 2 * i);
  return 2 * sum;
}

OrthoBasis gram_schmidt(const MomentSequence& moments, int count) {
  auto inner = [&moments](const QPoly& a, const QPoly& b) {
    ScaledRational sum(Rational(0), moments.unit());
    for (int i = 0; i <= a.degree(); ++i)
      for (int j = 0; j <= b.degree(); ++j)
        sum = sum + ScaledRational(a.coeff(i) * b.coeff(j), 0) * moments.moment(i + j);
    return sum;
  };

  OrthoBasis basis;
  for (int j = 0; j <= count; ++j) {
    QPoly q = QPoly::monomial(Rational(1), j);
    for (int i = 0; i < j; ++i) {
      Rational coef = inner(q, basis.polys[i]).value / basis.norm_sq[i].value;
      q -= basis.polys[i].scaled(coef);
    }
    ScaledRational n = inner(q, q);
    if (n.value.sign() <= 0)
      throw std::domain_error("gram_schmidt: nonpositive norm at degree " + std::to_string(j) +
                              " (invalid moment sequence)");
    basis.polys.push_back(std::move(q));
    basis.norm_sq.push_back(std::move(n));
  }
  return basis;
}

FieldPtr cos_field(int p) {
  QPoly f = minimal_poly_cos(p);
  auto roots = isolate_real_roots(f, IntervalRat(Rational(-1), Rational(1)));
  if (roots.size() != static_cast<size_t>((p - 1) / 2))
    throw std::logic_error("cos_field: expected (p-1)/2 real roots in (-1, 1)");
  // cos is decreasing on (0, pi), so cos(2*pi/p) is the largest root.
  return NumberField::create(f, "c", roots.back());
}

}  // namespace cubcert
