#include <doctest.h>

#include "cubcert/certify.hpp"
#include "cubcert/sturm.hpp"
#include "cubcert/verifier.hpp"
#include "cubcert/kernels.hpp"
#include "cubcert/orthopoly.hpp"
#include "cubcert/quadrature.hpp"
#include "test_support.hpp"

using namespace cubcert;

namespace {

using DP = QPoly;        // polynomials in d
using AP = Poly<DP>;     // polynomials in A over Q[d]

DP dv() { return DP::variable(); }
DP dshift(long a) { return dv() + DP(Rational(a)); }
DP dprod(std::vector<long> shifts) {
  DP r(Rational(1));
  for (long s : shifts) r = r * dshift(s);
  return r;
}

/// The three bracketed polynomials of the k = 3 remainder display.
std::array<AP, 3> k3_display_brackets() {
  AP e_c2 = AP::monomial(dprod({4, 6}), 2) + AP::monomial(dprod({4}).scaled(Rational(-6)), 1) +
            AP(DP(Rational(3)));
  AP e_c1 = AP::monomial(dprod({2, 4, 6}), 2) +
            AP::monomial(dprod({2, 3}).scaled(Rational(-6)), 1) + AP(dv().scaled(Rational(3)));
  DP q1 = dv() * dv() + dv().scaled(Rational(6)) + DP(Rational(24));
  DP q2 = dv() * dv() + DP(Rational(44));
  AP e_c0 = AP::monomial(dprod({2, 4, 6, 8, 10}), 3) +
            AP::monomial((dprod({2, 4}) * dshift(6) * dshift(6)).scaled(Rational(-15)), 2) +
            AP::monomial((dshift(2) * q1).scaled(Rational(45)), 1) +
            AP(q2.scaled(Rational(-15)));
  return {e_c0, e_c1, e_c2};
}

/// The displayed f_{3,4} and f_{2,1} of the k = 5 elimination, which print
/// the differences c3 - c4 and c2 - c1 after dividing by d.
std::pair<AP, AP> k5_display_f() {
  DP cubic = dprod({2, 4, 6});                                  // d^3+12d^2+44d+48
  DP f34_lin = (dv() * dv() + dv().scaled(Rational(6)) + DP(Rational(8))).scaled(Rational(-6));
  DP f21_lin = (dv() * dv() * Rational(2) + dv().scaled(Rational(13)) + DP(Rational(18)))
                   .scaled(Rational(-3));
  AP f34 = (AP::monomial(cubic, 2) + AP::monomial(f34_lin, 1) +
            AP(dshift(2).scaled(Rational(3))))
               .divided(DP(Rational(3072)));
  AP f21 = (AP::monomial(cubic, 2) + AP::monomial(f21_lin, 1) +
            AP(dshift(3).scaled(Rational(3))))
               .divided(DP(Rational(3072)));
  return {f34, f21};
}

Poly<Rational> evaluate_at_d(const AP& p, int d) {
  std::vector<Rational> c;
  for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i).eval(Rational(d)));
  return Poly<Rational>(std::move(c));
}

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("k = 1 zero equation in closed form") {
  // (2c+1)^2/4 + (d(d+2)A/2 - d/2)/4, pinned from a hand expansion.
  auto eq = zero_equation_symbolic(1);
  CHECK(eq.poly.degree() == 2);  // c-degree 2k
  AP expect_c0 = AP::monomial((dv() * dshift(2)).divided(Rational(8)), 1) +
                 AP(dv().scaled(Rational(-1, 8)) + DP(Rational(1, 4)));
  CHECK(eq.poly.coeff(0) == expect_c0);
  CHECK(eq.poly.coeff(1) == AP(DP(Rational(1))));        // 4c/4
  CHECK(eq.poly.coeff(2) == AP(DP(Rational(1))));        // 4c^2/4
  auto num = zero_equation_numeric(1, 5);
  for (int i = 0; i <= 2; ++i) CHECK(num.poly.coeff(i) == evaluate_at_d(eq.poly.coeff(i), 5));

  CHECK_THROWS(zero_equation_numeric(4, 10));  // 2k+1 = 9 composite
  CHECK_THROWS(zero_equation_numeric(1, 2));
}

TEST_CASE("degree bounds of the zero equation") {
  for (int k : {1, 2, 3}) {
    auto eq = zero_equation_symbolic(k);
    CHECK(eq.poly.degree() == 2 * k);  // c-degree before reduction
    int deg_a = 0;
    for (int i = 0; i <= eq.poly.degree(); ++i) deg_a = std::max(deg_a, eq.poly.coeff(i).degree());
    CHECK(deg_a == k);
  }
}

TEST_CASE("k = 3 reduction reproduces the published system") {
  auto sys = reduce_and_extract(zero_equation_symbolic(3));
  REQUIRE(sys.entries.size() == 3);
  CHECK(sys.modulus == minimal_poly_cos(7));

  auto [e0, e1, e2] = k3_display_brackets();
  DP pref_c2 = (dv() * dshift(2)).divided(Rational(384));
  DP pref_c1 = dv().divided(Rational(384));
  DP pref_c0 = dv().divided(Rational(46080));
  CHECK(sys.entries[2].divided(pref_c2) == e2);
  CHECK(sys.entries[1].divided(pref_c1) == e1);
  CHECK(sys.entries[0].divided(pref_c0) == e0);
}

TEST_CASE("k = 3 symbolic elimination") {
  auto trace = eliminate_symbolic(reduce_and_extract(zero_equation_symbolic(3)));
  CHECK(trace.forced_a == DimRatFunc(DP(Rational(1)), dshift(2)));  // A = 1/(d+2)
  REQUIRE(trace.integer_roots.size() == 2);
  CHECK(trace.integer_roots[0] == -6);
  CHECK(trace.integer_roots[1] == -1);
  // substituted first equation: -2(d+1)(d+6)/(d+2)^2
  CHECK(trace.final_value ==
        DimRatFunc((dshift(1) * dshift(6)).scaled(Rational(-2)), dshift(2) * dshift(2)));
}

TEST_CASE("k = 5 differences match the published displays up to the d factor") {
  auto sys = reduce_and_extract(zero_equation_symbolic(5));
  REQUIRE(sys.entries.size() == 5);
  auto trace = eliminate_symbolic(sys);
  auto [f34_display, f21_display] = k5_display_f();
  CHECK(trace.f34 == f34_display.scaled(dv()));
  CHECK(trace.f21 == f21_display.scaled(dv()));

  // f34 - f21 = d((d+2)A - 1)/1024
  AP lin_expected = (AP::monomial(dv() * dshift(2), 1) - AP(dv())).divided(DP(Rational(1024)));
  CHECK(trace.linear == lin_expected);
  CHECK(trace.forced_a == DimRatFunc(DP(Rational(1)), dshift(2)));
  // f34 at A = 1/(d+2) is -d(d+1)(d+6)/(1536(d+2))
  CHECK(trace.final_value ==
        DimRatFunc((dv() * dshift(1) * dshift(6)).scaled(Rational(-1, 1536)), dshift(2)));
}

TEST_CASE("low-degree equations pass through reduction unchanged") {
  ZeroEquation<Rational> eq;
  eq.k = 3;
  eq.d = 31;
  eq.poly = Poly<Poly<Rational>>::monomial(Poly<Rational>::monomial(Rational(5), 2), 1);
  auto sys = reduce_and_extract(eq);
  CHECK(sys.entries[1] == Poly<Rational>::monomial(Rational(5), 2));
  CHECK(sys.entries[0].is_zero());
  CHECK(sys.entries[2].is_zero());
}

TEST_CASE("unscripted k rejected by the symbolic script") {
  CHECK_THROWS(eliminate_symbolic(reduce_and_extract(zero_equation_symbolic(2))));
}

TEST_CASE("numeric elimination contradicts at the boundary dimensions") {
  auto sys31 = reduce_and_extract(zero_equation_numeric(3, 31));
  auto r31 = eliminate_numeric(sys31, 31);
  CHECK(r31.verdict == NumericVerdict::contradiction);
  CHECK(r31.gcd.degree() == 0);  // gcd constant
  CHECK(r31.roots_in_unit == 0);
  CHECK(r31.rational_roots_in_unit.empty());

  auto sys91 = reduce_and_extract(zero_equation_numeric(5, 91));
  auto r91 = eliminate_numeric(sys91, 91);
  CHECK(r91.verdict == NumericVerdict::contradiction);

  CHECK_THROWS(eliminate_numeric(reduce_and_extract(zero_equation_numeric(3, 30)), 30));
}

TEST_CASE("k = 1 is outside the rational-layer argument") {
  // the combinatorial preconditions need k >= 2
  auto sys = reduce_and_extract(zero_equation_numeric(1, 5));
  CHECK_THROWS(eliminate_numeric(sys, 5));
  // and indeed the system itself admits the admissible root A = 1/(d+2)
  QPoly g;
  for (const auto& e : sys.entries) g = poly_gcd(g, e);
  auto roots = rational_roots_in(g, IntervalRat(Rational(0), Rational(1)));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == Rational(1, 7));
}

TEST_CASE("numeric systems equal symbolic systems evaluated at d") {
  for (int k : {3, 5}) {
    auto sym = reduce_and_extract(zero_equation_symbolic(k));
    for (int d : {4 * k * k - 2 * k + 1, 4 * k * k, 4 * k * k + 29}) {
      auto num = reduce_and_extract(zero_equation_numeric(k, d));
      REQUIRE(num.entries.size() == sym.entries.size());
      for (size_t i = 0; i < num.entries.size(); ++i)
        CHECK(num.entries[i] == evaluate_at_d(sym.entries[i], d));
    }
  }
}

TEST_CASE("exact appendix count") {
  FieldElement count = appendix_count_exact(3, 20);
  CHECK_FALSE(count.as_rational().has_value());  // irrational, hence no integer
  IntervalRat enc = count.enclosure(Rational(1, pow10(8)));
  CHECK(Rational::parse("47868.2") < enc.lo());
  CHECK(enc.hi() < Rational::parse("47868.8"));

  // k = 1 collapses to the rational count d(d+1)
  for (int d : {3, 7, 12})
    CHECK(appendix_count_exact(1, d).as_rational() == Rational(d * (d + 1)));
}

TEST_CASE("exact count equals Lambda_1 / w_1 from layers and kernel diagonal") {
  const int k = 3, d = 20, p = 7;
  auto layers = gauss_layers(k);
  FieldPtr field = layers[0].radius_sq.field();
  FieldElement c = FieldElement::generator(field);
  auto lift = [&field](const Rational& r) { return FieldElement::constant(field, r); };
  // first-layer radius r_1 = -1/(4c^3 - 3c) = -1/T_3(c) since
  // cos(pi/7) = -cos(6pi/7) = -T_3(cos(2pi/7))
  FieldElement r1 = -(chebyshev_t(3).eval_with(c, lift)).inverse();
  CHECK(r1 * r1 == layers[0].radius_sq);
  std::vector<FieldElement> x(static_cast<size_t>(d), lift(Rational(0)));
  x[0] = r1;
  ScaledField diag = kernel_eval(xu_kernel(d, k), x, x);
  ScaledField w1(diag.value.inverse() * Rational(1, 2), -diag.unit);
  CHECK(w1.unit == 1);
  FieldElement ratio = layers[0].weight_sum.value / w1.value;
  CHECK(ratio == appendix_count_exact(k, d));
}

TEST_CASE("interval appendix count reproduces the published bounds") {
  IntervalRat a = appendix_count_interval(3, 20, 5, Rational::parse("3.14159"),
                                          Rational::parse("3.14160"));
  CHECK(Rational::parse("47868.2") < a.lo());
  CHECK(a.hi() < Rational::parse("47868.8"));
  CHECK_FALSE(a.contains_integer());

  IntervalRat b = appendix_count_interval(5, 80, 11, Rational::parse("3.1415926535897"),
                                          Rational::parse("3.1415926535898"));
  CHECK(Rational::parse("318122993450.96") < b.lo());
  CHECK(b.width() < Rational(1, 2));
  CHECK_FALSE(b.contains_integer());

  // soundness: the exact value lies inside the interval
  IntervalRat exact = appendix_count_exact(3, 20).enclosure(Rational(1, pow10(12)));
  CHECK(a.lo() <= exact.lo());
  CHECK(exact.hi() <= a.hi());
}

TEST_CASE("interval refinement is monotone in n") {
  IntervalRat prev = appendix_count_interval(3, 20, 1, builtin_pi_bracket().lo(),
                                             builtin_pi_bracket().hi());
  for (int n = 2; n <= 8; ++n) {
    IntervalRat cur = appendix_count_interval(3, 20, n, builtin_pi_bracket().lo(),
                                              builtin_pi_bracket().hi());
    CHECK(cur.width() <= prev.width());
    prev = cur;
  }
}

TEST_CASE("pi bracket validation") {
  CHECK_THROWS(appendix_count_interval(3, 20, 5, Rational::parse("3.1416"),
                                       Rational::parse("3.1415")));
  // a bracket tighter than the built-in validation bracket is refused
  CHECK_THROWS(appendix_count_interval(3, 20, 5,
                                       builtin_pi_bracket().lo() + Rational(1, pow10(70)),
                                       builtin_pi_bracket().hi()));
  CHECK_THROWS(appendix_count_interval(3, 20, 0, Rational(3), Rational(4)));
}

TEST_CASE("certificates by route") {
  Certificate gap = certify(3, 20);
  CHECK(gap.route == Route::integer_gap_exact);
  CHECK(gap.verdict == Verdict::nonexistence);
  REQUIRE(gap.gap.has_value());
  CHECK_FALSE(gap.gap->exact_is_rational);
  CHECK(gap.gap->interval_excludes);
  CHECK(replay(gap));

  Certificate elim = certify(3, 31);
  CHECK(elim.route == Route::rational_elimination);
  CHECK(elim.verdict == Verdict::nonexistence);
  REQUIRE(elim.elimination.has_value());
  CHECK(replay(elim));

  Certificate unsupported = certify(3, 2);
  CHECK(unsupported.route == Route::unsupported);
  CHECK(unsupported.verdict == Verdict::inconclusive);
  CHECK_FALSE(unsupported.note.empty());
  CHECK(replay(unsupported));

  CertifyOptions interval_only;
  interval_only.interval_only = true;
  Certificate via_interval = certify(3, 20, interval_only);
  CHECK(via_interval.route == Route::integer_gap_interval);
  CHECK(via_interval.verdict == Verdict::nonexistence);
  CHECK(replay(via_interval));

  // k = 1 honest outcome: the rational-layer argument needs k >= 2, and
  // the first-layer cardinality is the genuine integer d(d+1)
  Certificate k1 = certify(1, 6);
  CHECK(k1.route == Route::integer_gap_exact);
  CHECK(k1.verdict == Verdict::inconclusive);
  REQUIRE(k1.gap.has_value());
  CHECK(k1.gap->exact_is_integer);
  CHECK(replay(k1));

  CHECK_THROWS(certify(4, 10));  // composite 2k+1
  CHECK_THROWS(certify(3, 1));
}

TEST_CASE("range certification is deterministic across worker counts") {
  auto one = certify_range(3, 18, 24, {}, 1);
  auto four = certify_range(3, 18, 24, {}, 4);
  REQUIRE(one.size() == 7);
  REQUIRE(four.size() == 7);
  for (size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].d == 18 + static_cast<int>(i));
    CHECK(one[i].verdict == four[i].verdict);
    CHECK(one[i].route == four[i].route);
    if (one[i].gap) {
      CHECK(one[i].gap->residue == four[i].gap->residue);
      CHECK(one[i].gap->interval == four[i].gap->interval);
    }
  }
}

TEST_CASE("tampered evidence fails replay") {
  Certificate cert = certify(3, 31);
  cert.elimination->roots_in_unit = 1;
  CHECK_FALSE(replay(cert));

  Certificate gap = certify(3, 20);
  gap.gap->residue = gap.gap->residue + QPoly(Rational(1));
  CHECK_FALSE(replay(gap));

  Certificate fake = certify(1, 6);
  fake.verdict = Verdict::nonexistence;
  CHECK_FALSE(replay(fake));
}

}  // TEST_SUITE
