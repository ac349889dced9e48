#pragma once

#include <vector>

#include "cubcert/moments.hpp"
#include "cubcert/numberfield.hpp"
#include "cubcert/poly.hpp"

namespace cubcert {

/// Chebyshev polynomials of the first / second kind by recurrence.
QPoly chebyshev_t(int n);
QPoly chebyshev_u(int n);

/// Gegenbauer polynomial C_l^(lambda) from the three-term recurrence
/// l C_l = 2(l + lambda - 1) t C_{l-1} - (l + 2 lambda - 2) C_{l-2}.
/// Works over Rational lambda and over symbolic-dimension lambda given as a
/// polynomial in d (e.g. (d-2)/2), in which case coefficients live in Q[d].
template <class R>
Poly<R> gegenbauer(int l, const R& lambda) {
  if (l < 0) throw std::invalid_argument("gegenbauer: negative degree");
  Poly<R> prev2(R(1));
  if (l == 0) return prev2;
  Poly<R> t = Poly<R>::variable();
  Poly<R> prev1 = t.scaled(lambda * R(2));
  if (l == 1) return prev1;
  for (int n = 2; n <= l; ++n) {
    R two_n_lam_m1 = (lambda + R(n - 1)) * R(2);
    R n_lam2_m2 = lambda * R(2) + R(n - 2);
    Poly<R> cur = (t * prev1).scaled(two_n_lam_m1) - prev2.scaled(n_lam2_m2);
    cur = cur.divided(R(n));
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

/// Monic minimal polynomial of cos(2*pi/p) for an odd prime p; degree
/// (p-1)/2, computed as the exact polynomial square root of
/// (T_p(x) - 1) / ((x - 1) 2^{p-1}).
QPoly minimal_poly_cos(int p);

/// dim Harm_l(R^d) = binom(d+l-1, l) - binom(d+l-3, l-2).
mpz_class dim_harm(int d, int l);

/// Lower point bound for a rule of degree 2*halfdeg+1 over a spherically
/// symmetric integral: 2 dim P*_halfdeg - 1 when halfdeg is even and the
/// origin is a node, else 2 dim P*_halfdeg. Degree-(4k+1) rules use
/// halfdeg = 2k.
mpz_class moeller_bound(int d, int halfdeg, bool origin);

/// 2 * sum_{i=0}^{k-1} binom(d + 2k - 1 - 2i, 2k - 2i): the non-origin
/// point count of a minimal degree-(4k+1) rule.
mpz_class point_count_nonorigin(int d, int k);

/// Monic orthogonal basis with separately stored squared norms (monic
/// storage keeps every entry in Q; kernels only ever consume q*q/normSq).
struct OrthoBasis {
  std::vector<QPoly> polys;           // polys[j] monic of degree j, variable r^2
  std::vector<ScaledRational> norm_sq;
  int size() const { return static_cast<int>(polys.size()); }
};

/// Gram-Schmidt against a moment functional: returns q_0..q_count, monic,
/// pairwise orthogonal under <s^a, s^b> = moment(a+b). Needs moments
/// through exponent 2*count; throws on a nonpositive norm.
OrthoBasis gram_schmidt(const MomentSequence& moments, int count);

/// Q[c]/(f_p) with c embedded as cos(2*pi/p), the largest real root of the
/// minimal polynomial.
FieldPtr cos_field(int p);

}  // namespace cubcert
