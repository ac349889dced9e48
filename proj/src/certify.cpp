#include "cubcert/certify.hpp"

#include <stdexcept>
#include <thread>

#include "cubcert/orthopoly.hpp"
#include "cubcert/sturm.hpp"
#include "cubcert/verifier.hpp"
#include "cubcert/version.hpp"

namespace cubcert {

namespace {

/// C_{2i}^{(1)}(sqrt((1+c)/2))^2 as a polynomial in c.
QPoly cheb_factor_sq(int i) {
  QPoly half(std::vector<Rational>{Rational(1, 2), Rational(1, 2)});  // (1+c)/2
  QPoly e = even_part(chebyshev_u(2 * i)).compose(half);
  return e * e;
}

template <class S>
Poly<Poly<S>> zero_eq_poly(int k, const S& half_d) {
  const Rational scale = Rational(1) / Rational(4).pow(k);
  Poly<Poly<S>> eq;
  for (int j = 0; j <= k; ++j) {
    int i = k - j;
    QPoly pc = cheb_factor_sq(i).scaled(scale);
    Poly<S> ga = even_part(gegenbauer(2 * j, half_d));
    for (int s = 0; s <= pc.degree(); ++s) {
      Poly<S> term;
      for (int u = 0; u <= ga.degree(); ++u)
        term += Poly<S>::monomial(ga.coeff(u) * S(pc.coeff(s)), u);
      eq += Poly<Poly<S>>::monomial(term, s);
    }
  }
  return eq;
}

int require_prime_2k1(int k) {
  if (k < 1) throw std::invalid_argument("zero_equation: k must be >= 1");
  const int p = 2 * k + 1;
  for (int q = 3; q * q <= p; q += 2)
    if (p % q == 0)
      throw std::invalid_argument("zero_equation: 2k+1 = " + std::to_string(p) + " is composite");
  return p;
}

template <class S>
CoefficientSystem<S> reduce_impl(const ZeroEquation<S>& eq) {
  QPoly f = minimal_poly_cos(2 * eq.k + 1);
  Poly<Poly<S>> f_lift;
  for (int i = 0; i <= f.degree(); ++i)
    f_lift += Poly<Poly<S>>::monomial(Poly<S>(S(f.coeff(i))), i);
  Poly<Poly<S>> rem = poly_divrem(eq.poly, f_lift).second;
  CoefficientSystem<S> sys;
  sys.k = eq.k;
  sys.d = eq.d;
  sys.modulus = f;
  for (int i = 0; i < f.degree(); ++i) sys.entries.push_back(rem.coeff(i));
  return sys;
}

}  // namespace

ZeroEquation<Rational> zero_equation_numeric(int k, int d) {
  require_prime_2k1(k);
  if (d < 3) throw std::invalid_argument("zero_equation: d must be >= 3");
  ZeroEquation<Rational> eq;
  eq.k = k;
  eq.d = d;
  eq.poly = zero_eq_poly(k, Rational(d, 2));
  return eq;
}

ZeroEquation<QPoly> zero_equation_symbolic(int k) {
  require_prime_2k1(k);
  ZeroEquation<QPoly> eq;
  eq.k = k;
  eq.poly = zero_eq_poly(k, QPoly::variable().divided(Rational(2)));
  return eq;
}

CoefficientSystem<Rational> reduce_and_extract(const ZeroEquation<Rational>& eq) {
  return reduce_impl(eq);
}
CoefficientSystem<QPoly> reduce_and_extract(const ZeroEquation<QPoly>& eq) {
  return reduce_impl(eq);
}

DimRatFunc::DimRatFunc(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("DimRatFunc: zero denominator");
  if (num.is_zero()) {
    den = QPoly(Rational(1));
    return;
  }
  QPoly g = poly_gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  Rational lead = den.leading();
  num = num.divided(lead);
  den = den.divided(lead);
}

DimRatFunc operator+(const DimRatFunc& a, const DimRatFunc& b) {
  return DimRatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}
DimRatFunc operator*(const DimRatFunc& a, const DimRatFunc& b) {
  return DimRatFunc(a.num * b.num, a.den * b.den);
}
bool operator==(const DimRatFunc& a, const DimRatFunc& b) {
  return a.num == b.num && a.den == b.den;
}
std::string DimRatFunc::str() const {
  if (den == QPoly(Rational(1))) return to_string(num, "d");
  return "(" + to_string(num, "d") + ") / (" + to_string(den, "d") + ")";
}

namespace {

DimRatFunc eval_at_ratfunc(const Poly<QPoly>& p, const DimRatFunc& a) {
  DimRatFunc acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * a + DimRatFunc(p.coeff(i), QPoly(Rational(1)));
  }
  return acc;
}

}  // namespace

SymbolicTrace eliminate_symbolic(const CoefficientSystem<QPoly>& sys) {
  if (sys.d != 0)
    throw std::invalid_argument("eliminate_symbolic: system is not in symbolic-dimension mode");
  SymbolicTrace trace;
  trace.k = sys.k;
  QPoly dvar = QPoly::variable();

  Poly<QPoly> pinned;  // the equation the forced A gets substituted into
  if (sys.k == 3) {
    // Clear the documented prefactors d(d+2)/384, d/384, d/46080 from the
    // three remainder coefficients, then eliminate: (second) - (d+2)(first)
    // is linear in A.
    QPoly p2 = (dvar * (dvar + QPoly(Rational(2)))).divided(Rational(384));
    QPoly p1 = dvar.divided(Rational(384));
    QPoly p0 = dvar.divided(Rational(46080));
    Poly<QPoly> e1 = sys.entries[2].divided(p2);
    Poly<QPoly> e2 = sys.entries[1].divided(p1);
    trace.linear = e2 - e1.scaled(dvar + QPoly(Rational(2)));
    pinned = e1;
    (void)sys.entries[0].divided(p0);  // prefactor must clear exactly
  } else if (sys.k == 5) {
    trace.f34 = sys.entries[3] - sys.entries[4];
    trace.f21 = sys.entries[2] - sys.entries[1];
    trace.linear = trace.f34 - trace.f21;
    pinned = trace.f34;
  } else {
    throw std::invalid_argument("eliminate_symbolic: only k = 3 and k = 5 are scripted");
  }

  if (trace.linear.degree() != 1)
    throw std::logic_error("eliminate_symbolic: eliminating combination is not linear in A");
  trace.forced_a = DimRatFunc(-trace.linear.coeff(0), trace.linear.coeff(1));
  trace.final_value = eval_at_ratfunc(pinned, trace.forced_a);
  trace.contradiction = trace.final_value.num;
  trace.integer_roots = integer_roots(trace.contradiction);
  return trace;
}

NumericElimination eliminate_numeric(const CoefficientSystem<Rational>& sys, int d) {
  if (sys.d != d)
    throw std::invalid_argument("eliminate_numeric: system dimension mismatch");
  auto pre = rationality_preconditions(sys.k, d);
  if (!pre.elimination_applicable())
    throw std::invalid_argument(
        "eliminate_numeric: rational-layer preconditions fail at d = " + std::to_string(d));

  NumericElimination out;
  QPoly g;
  for (const auto& e : sys.entries) g = poly_gcd(g, e);
  out.gcd = g;
  if (g.is_zero()) {
    out.verdict = NumericVerdict::inconclusive;  // vacuous system
    return out;
  }
  // Admissible range for A = <x,y>^2/R^2 with x, y distinct non-antipodal
  // points of one layer: Cauchy-Schwarz gives <x,y>^2 <= R^2 with equality
  // only for y = +-x, so A lies in [0, 1) with 0 attained by orthogonal
  // pairs.
  IntervalRat unit(Rational(0), Rational(1));
  out.roots_in_unit = g.degree() == 0 ? 0 : sturm_count(g, unit);
  if (g.degree() > 0) out.rational_roots_in_unit = rational_roots_in(g, unit);
  out.verdict = (out.roots_in_unit == 0 && out.rational_roots_in_unit.empty())
                    ? NumericVerdict::contradiction
                    : NumericVerdict::inconclusive;
  return out;
}

FieldElement appendix_count_exact(int k, int d) {
  const int p = require_prime_2k1(k);
  if (d < 3) throw std::invalid_argument("appendix_count_exact: d must be >= 3");
  FieldPtr field = cos_field(p);
  FieldElement c = FieldElement::generator(field);
  auto lift = [&field](const Rational& r) { return FieldElement::constant(field, r); };
  FieldElement total = lift(Rational(0));
  for (int m = 0; m <= k; ++m) {
    Rational dim(dim_harm(d, 2 * m));
    for (int j = 0; j <= k - m; ++j) {
      // sin^2((2j+1)pi/p) = (1 - cos(2(2j+1)pi/p))/2 = (1 - T_{2j+1}(c))/2
      FieldElement cos_multiple = chebyshev_t(2 * j + 1).eval_with(c, lift);
      total = total + (Rational(1) - cos_multiple) * Rational(1, 2) * dim;
    }
  }
  return total * Rational(8, p);
}

IntervalRat builtin_pi_bracket() {
  static const Rational lo = Rational(
      mpz_class("3141592653589793238462643383279502884197169399375105820974944"), pow10(60));
  static const Rational hi = lo + Rational(mpz_class(1), pow10(60));
  return IntervalRat(lo, hi);
}

IntervalRat appendix_count_interval(int k, int d, int n, const Rational& pi_lo,
                                    const Rational& pi_hi) {
  const int p = require_prime_2k1(k);
  if (d < 3) throw std::invalid_argument("appendix_count_interval: d must be >= 3");
  if (n < 1) throw std::invalid_argument("appendix_count_interval: n must be >= 1");
  IntervalRat builtin = builtin_pi_bracket();
  if (!(pi_lo < pi_hi) || pi_lo > builtin.lo() || pi_hi < builtin.hi())
    throw std::invalid_argument(
        "appendix_count_interval: pi bracket invalid (must satisfy lo <= pi <= hi against the "
        "built-in 60-digit bracket)");

  // Per-j certified enclosure of sin((2j+1)pi/p) from the grouped
  // alternating series; the square is taken as a sound interval square, so
  // the j = k term (argument exactly pi) contributes its true lower bound 0.
  std::vector<IntervalRat> sin_sq;
  for (int j = 0; j <= k; ++j) {
    Rational ratio(2 * j + 1, p);
    Rational x_lo = ratio * pi_lo, x_hi = ratio * pi_hi;
    Rational s1(0), s2(0);
    for (int l = 0; l < n; ++l) {
      Rational inv_a(1);
      inv_a /= Rational(factorial(4 * l + 1));
      Rational inv_b(1);
      inv_b /= Rational(factorial(4 * l + 3));
      s1 += x_lo.pow(4 * l + 1) * inv_a - x_hi.pow(4 * l + 3) * inv_b;
      s2 += x_hi.pow(4 * l + 1) * inv_a - x_lo.pow(4 * l + 3) * inv_b;
    }
    s2 += pi_hi.pow(4 * n) / Rational(factorial(4 * n));
    sin_sq.push_back(IntervalRat(s1, s2).sqr());
  }

  IntervalRat total(Rational(0));
  for (int m = 0; m <= k; ++m) {
    Rational dim(dim_harm(d, 2 * m));
    for (int j = 0; j <= k - m; ++j) total = total + dim * sin_sq[static_cast<size_t>(j)];
  }
  return Rational(8, p) * total;
}

std::string route_name(Route r) {
  switch (r) {
    case Route::rational_elimination: return "rational-elimination";
    case Route::integer_gap_exact: return "integer-gap-exact";
    case Route::integer_gap_interval: return "integer-gap-interval";
    case Route::unsupported: return "unsupported";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  return v == Verdict::nonexistence ? "nonexistence" : "inconclusive";
}

Certificate certify(int k, int d, const CertifyOptions& options) {
  require_prime_2k1(k);
  if (d < 2) throw std::invalid_argument("certify: d must be >= 2");
  Certificate cert;
  cert.k = k;
  cert.d = d;
  cert.version = kVersion;
  cert.pi_lo = options.pi_lo.value_or(builtin_pi_bracket().lo());
  cert.pi_hi = options.pi_hi.value_or(builtin_pi_bracket().hi());

  if (d == 2) {
    cert.route = Route::unsupported;
    cert.verdict = Verdict::inconclusive;
    cert.note =
        "d = 2 is outside this certifier's scope (two-dimensional minimal rules are settled "
        "by other means); no verdict is asserted";
    return cert;
  }

  // The rational-layer argument needs k >= 2 and d >= 4k^2-2k+1; anything
  // else falls through to the integer-gap cardinality test.
  const int threshold = 4 * k * k - 2 * k + 1;
  if (k >= 2 && d >= threshold) {
    auto sys = reduce_and_extract(zero_equation_numeric(k, d));
    auto elim = eliminate_numeric(sys, d);
    cert.route = Route::rational_elimination;
    cert.elimination = EliminationEvidence{elim.gcd, elim.roots_in_unit,
                                           elim.rational_roots_in_unit};
    cert.verdict = elim.verdict == NumericVerdict::contradiction ? Verdict::nonexistence
                                                                 : Verdict::inconclusive;
    cert.note = "coefficient system from one rational layer; the minimal polynomial of "
                "cos(2l*pi/(2k+1)) is independent of l for prime 2k+1, so one reduction "
                "covers every layer choice; a gcd over A with no admissible root in [0,1) "
                "contradicts existence";
    return cert;
  }

  // Small dimensions: first-layer cardinality must be an integer.
  GapEvidence gap;
  gap.modulus = minimal_poly_cos(2 * k + 1);
  FieldElement exact = appendix_count_exact(k, d);
  gap.residue = exact.residue();
  auto rat = exact.as_rational();
  gap.exact_is_rational = rat.has_value();
  gap.exact_is_integer = rat.has_value() && rat->is_integer();

  for (int n = options.n_start; n <= options.n_cap; n *= 2) {
    IntervalRat iv = appendix_count_interval(k, d, n, cert.pi_lo, cert.pi_hi);
    gap.n_used = n;
    gap.interval = iv;
    gap.below = iv.lo().floor();
    gap.above = iv.hi().ceil();
    if (iv.width() < Rational(1, 2) && !iv.contains_integer()) {
      gap.interval_excludes = true;
      break;
    }
  }

  cert.gap = gap;
  if (options.interval_only) {
    cert.route = Route::integer_gap_interval;
    cert.verdict = gap.interval_excludes ? Verdict::nonexistence : Verdict::inconclusive;
    cert.note = "certified interval for the first-layer cardinality; nonexistence iff the "
                "interval contains no integer";
  } else {
    cert.route = Route::integer_gap_exact;
    bool not_integer = !gap.exact_is_rational || !gap.exact_is_integer;
    cert.verdict = not_integer ? Verdict::nonexistence : Verdict::inconclusive;
    cert.note = gap.exact_is_rational
                    ? (gap.exact_is_integer
                           ? "exact cardinality is an integer; no contradiction from this route"
                           : "exact cardinality is rational but not an integer")
                    : "exact cardinality has a nonzero generator component, hence is "
                      "irrational and not an integer";
  }
  return cert;
}

std::vector<Certificate> certify_range(int k, int dmin, int dmax, const CertifyOptions& options,
                                       int workers) {
  if (dmin > dmax) throw std::invalid_argument("certify_range: dmin > dmax");
  const int count = dmax - dmin + 1;
  std::vector<std::optional<Certificate>> slots(static_cast<size_t>(count));
  if (workers < 1) workers = 1;
  workers = std::min(workers, count);

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (int idx = w; idx < count; idx += workers)
          slots[static_cast<size_t>(idx)] = certify(k, dmin + idx, options);
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<Certificate> out;
  out.reserve(static_cast<size_t>(count));
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

bool replay(const Certificate& cert) {
  switch (cert.route) {
    case Route::unsupported:
      return cert.verdict == Verdict::inconclusive;
    case Route::rational_elimination: {
      if (!cert.elimination) return false;
      auto sys = reduce_and_extract(zero_equation_numeric(cert.k, cert.d));
      auto elim = eliminate_numeric(sys, cert.d);
      bool evidence_ok = elim.gcd == cert.elimination->gcd &&
                         elim.roots_in_unit == cert.elimination->roots_in_unit &&
                         elim.rational_roots_in_unit == cert.elimination->rational_roots_in_unit;
      Verdict expect = elim.verdict == NumericVerdict::contradiction ? Verdict::nonexistence
                                                                     : Verdict::inconclusive;
      return evidence_ok && expect == cert.verdict;
    }
    case Route::integer_gap_exact:
    case Route::integer_gap_interval: {
      if (!cert.gap) return false;
      const GapEvidence& g = *cert.gap;
      if (minimal_poly_cos(2 * cert.k + 1) != g.modulus) return false;
      FieldElement exact = appendix_count_exact(cert.k, cert.d);
      if (exact.residue() != g.residue) return false;
      auto rat = exact.as_rational();
      if (g.exact_is_rational != rat.has_value()) return false;
      if (g.exact_is_integer != (rat.has_value() && rat->is_integer())) return false;
      if (g.n_used > 0) {
        IntervalRat iv = appendix_count_interval(cert.k, cert.d, g.n_used, cert.pi_lo, cert.pi_hi);
        if (!(iv == g.interval)) return false;
        if (g.below != iv.lo().floor() || g.above != iv.hi().ceil()) return false;
        if (g.interval_excludes != (iv.width() < Rational(1, 2) && !iv.contains_integer()))
          return false;
      }
      Verdict expect;
      if (cert.route == Route::integer_gap_interval)
        expect = g.interval_excludes ? Verdict::nonexistence : Verdict::inconclusive;
      else
        expect = (!g.exact_is_rational || !g.exact_is_integer) ? Verdict::nonexistence
                                                               : Verdict::inconclusive;
      return expect == cert.verdict;
    }
  }
  return false;
}

}  // namespace cubcert
