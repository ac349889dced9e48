#pragma once

#include <vector>

#include "cubcert/interval.hpp"
#include "cubcert/poly.hpp"
#include "cubcert/rational.hpp"

namespace cubcert {

/// p with repeated roots collapsed: p / gcd(p, p').
QPoly squarefree_part(const QPoly& p);

/// Exact count of distinct real roots of p in the half-open window
/// [window.lo, window.hi). p must be nonzero; multiplicities ignored.
int sturm_count(const QPoly& p, const IntervalRat& window);

/// Disjoint enclosures, one per distinct real root of p in [lo, hi).
/// Each returned interval contains exactly one root; point intervals are
/// exact roots. A root may sit at an interval's left endpoint, never at
/// the right one.
std::vector<IntervalRat> isolate_real_roots(const QPoly& p, const IntervalRat& window);

/// Shrinks an isolating interval until width <= max_width (or collapses to
/// an exact point root). The interval must contain exactly one root of p,
/// possibly at its left endpoint.
IntervalRat refine_root(const QPoly& p, const IntervalRat& isolating, const Rational& max_width);

/// All rational roots of p inside [lo, hi), ascending. Exact: uses the
/// monic integer transform y = lc*x, so no integer factorization is needed.
std::vector<Rational> rational_roots_in(const QPoly& p, const IntervalRat& window);

/// All integer roots of p, ascending.
std::vector<mpz_class> integer_roots(const QPoly& p);

/// Primitive integer coefficient vector with the same roots as p
/// (denominators cleared, content divided out).
std::vector<mpz_class> to_integer_coeffs(const QPoly& p);

/// 1 + max |a_i| / |a_n|; every real root lies in (-B, B).
Rational cauchy_root_bound(const QPoly& p);

}  // namespace cubcert
