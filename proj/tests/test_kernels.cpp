#include <doctest.h>

#include "cubcert/kernels.hpp"
#include "cubcert/quadrature.hpp"
#include "test_support.hpp"

using namespace cubcert;
using cubcert::test::random_rational;

namespace {

std::vector<FieldElement> qvec(const FieldPtr& f, std::vector<Rational> vals) {
  std::vector<FieldElement> out;
  for (auto& v : vals) out.push_back(FieldElement::constant(f, v));
  return out;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("moment-driven and closed-form kernels agree exactly") {
  for (int k = 1; k <= 4; ++k)
    for (int d : {3, 5, 10})
      CHECK(canonical_trivariate(build_kernel(xu_full_moments(k), d, k)) ==
            canonical_trivariate(xu_kernel(d, k)));
}

TEST_CASE("canonical form has angular degree at most k") {
  // On one layer the kernel is a polynomial of degree <= k in <x,y>^2.
  for (int k = 1; k <= 4; ++k) CHECK(canonical_trivariate(xu_kernel(5, k)).degree() <= k);
}

TEST_CASE("k = 0 kernel is the constant 1/moment(0)") {
  KernelRep kernel = build_kernel(xu_full_moments(0), 3, 0);
  FieldPtr q = NumberField::rationals();
  ScaledField v = kernel_eval_origin(kernel, q, {});
  CHECK(v.unit == -1);
  CHECK(v.value.as_rational() == Rational(4));  // moment(0) = 1/4 for k = 0
}

TEST_CASE("evaluation symmetries on random rational points") {
  FieldPtr q = NumberField::rationals();
  XuKernel kernel = xu_kernel(3, 2);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Rational> xs, ys;
    for (int i = 0; i < 3; ++i) {
      xs.push_back(random_rational(4, 2));
      ys.push_back(random_rational(4, 2));
    }
    Rational nx(0), ny(0);
    for (int i = 0; i < 3; ++i) {
      nx += xs[i] * xs[i];
      ny += ys[i] * ys[i];
    }
    if (nx.is_zero() || ny.is_zero()) continue;
    auto x = qvec(q, xs), y = qvec(q, ys);
    ScaledField at_xy = kernel_eval(kernel, x, y);
    ScaledField at_yx = kernel_eval(kernel, y, x);
    CHECK(at_xy.value == at_yx.value);
    // flipping y uses only even angular indices
    std::vector<Rational> neg;
    for (const auto& v : ys) neg.push_back(-v);
    auto ny_vec = qvec(q, neg);
    CHECK(kernel_eval(kernel, x, ny_vec).value == at_xy.value);
    // diagonal positivity
    CHECK(kernel_eval(kernel, x, x).value.sign() == 1);
  }
}

TEST_CASE("pinned evaluation: k = 1, d = 3 at orthogonal rational points") {
  FieldPtr q = NumberField::rationals();
  auto x = qvec(q, {Rational(2), Rational(0), Rational(0)});
  auto y = qvec(q, {Rational(0), Rational(2), Rational(0)});
  ScaledField closed = kernel_eval(xu_kernel(3, 1), x, y);
  CHECK(closed.unit == -1);
  CHECK(closed.value.as_rational() == Rational(-96));
  ScaledField moment = kernel_eval(build_kernel(xu_full_moments(1), 3, 1), x, y);
  CHECK(moment.unit == -1);
  CHECK(moment.value.as_rational() == Rational(-96));
}

TEST_CASE("origin branch: k = 1 value fixed by hand") {
  // Moments M(t) = u_ext(1-t)/8: M0 = 1/32, M1 = 1/16, M2 = 1/4.
  // q1 = s - 2, n1 = M2 - 4 M1 + 4 M0 = 1/8, so
  // K(0,0) = 1/M0 + q1(0)^2/n1 = 32 + 32 = 64.
  KernelRep kernel = build_kernel(xu_full_moments(1), 3, 1);
  FieldPtr q = NumberField::rationals();
  CHECK(kernel.radial[0].polys[1] ==
        QPoly(std::vector<Rational>{Rational(-2), Rational(1)}));
  CHECK(kernel.radial[0].norm_sq[1].value == Rational(1, 8));
  ScaledField origin = kernel_eval_origin(kernel, q, {});
  CHECK(origin.value.as_rational() == Rational(64));
  CHECK(origin.unit == -1);
  // K(x, 0) with |x|^2 = 4 vanishes: 4 is the single Gauss radius
  auto x = qvec(q, {Rational(2), Rational(0), Rational(0)});
  CHECK(kernel_eval_origin(kernel, q, x).value.is_zero());
}

TEST_CASE("m = 0 block reproduces radial polynomials") {
  // sum_j q_j(s) <q_j, t^e>/|q_j|^2 = s^e for e <= k.
  int k = 3, d = 5;
  MomentSequence base = xu_full_moments(k);
  KernelRep kernel = build_kernel(base, d, k);
  const OrthoBasis& basis = kernel.radial[0];
  auto inner_with_power = [&base](const QPoly& p, int e) {
    Rational s(0);
    for (int i = 0; i <= p.degree(); ++i) s += p.coeff(i) * base.moment(i + e).value;
    return s;
  };
  for (int e = 0; e <= k; ++e) {
    QPoly reproduced;
    for (int j = 0; j < basis.size(); ++j)
      reproduced += basis.polys[j].scaled(inner_with_power(basis.polys[j], e) /
                                          basis.norm_sq[j].value);
    CHECK(reproduced == QPoly::monomial(Rational(1), e));
  }
}

TEST_CASE("kernel inversion identity for the Chebyshev pair") {
  // mu(x) = sqrt(x^2-1) x^{-(4k+3)} on [1, inf): moments (1/8) u_ext(2k-1-t);
  // its dual weight is sqrt(1-y^2) on (0, 1] with moments Catalan(t)/4^{t+1}
  // (up to the shared 1/8), computed here independently of the mapping.
  for (int k = 0; k <= 5; ++k) {
    MomentSequence mu("mu:k=" + std::to_string(k), 1, 2 * k, [k](int t) {
      return cheb_u_moment_ext(2 * k - 1 - t) / Rational(8);
    });
    MomentSequence gamma("sqrt(1-y^2)", 1, 2 * k, [](int t) {
      return Rational(binomial(2 * t, t)) / Rational(t + 1) / Rational(4).pow(t + 1);
    });
    CHECK(sv_identity_check(k, mu, gamma));
    CHECK(sv_identity_check(k, mu));  // derived-dual self-consistency

    // the index-reversal mapping reproduces those direct gamma moments
    MomentSequence dual = sv_dual_moments(k, mu);
    for (int t = 0; t <= 2 * k; ++t) CHECK(dual.moment(t).value == gamma.moment(t).value);
  }
}

TEST_CASE("perturbing one moment breaks the inversion identity") {
  // adding mass at t = 0 keeps the functional positive definite
  int k = 2;
  MomentSequence mu("mu:k=2", 1, 2 * k, [k](int t) {
    return cheb_u_moment_ext(2 * k - 1 - t) / Rational(8);
  });
  MomentSequence bad_gamma("gamma:perturbed", 1, 2 * k, [k](int t) {
    Rational v = cheb_u_moment_ext(2 * k - 1 - (2 * k - t)) / Rational(8);
    return t == 0 ? v + Rational(1) : v;
  });
  CHECK_FALSE(sv_identity_check(k, mu, bad_gamma));
}

TEST_CASE("zero vectors rejected by the nonzero branch") {
  FieldPtr q = NumberField::rationals();
  auto x = qvec(q, {Rational(1), Rational(0)});
  auto z = qvec(q, {Rational(0), Rational(0)});
  XuKernel kernel = xu_kernel(3, 1);
  CHECK_THROWS(void(kernel_eval(kernel, x, z)));
  CHECK_THROWS(void(kernel_eval(kernel, z, x)));
}

TEST_CASE("icosahedral evaluation in a quartic field") {
  // s^4 - 4 s^2 + 16/5 = 0, s = 2/sqrt(2+phi): the scale putting the
  // icosahedron on the k = 1 Gauss sphere of squared radius 4.
  QPoly mod(std::vector<Rational>{Rational(16, 5), Rational(0), Rational(-4), Rational(0),
                                  Rational(1)});
  FieldPtr f = NumberField::create(mod, "s", IntervalRat(Rational(1), Rational(6, 5)));
  FieldElement s = FieldElement::generator(f);
  // phi = (12 - 5 s^2)/4 in this field
  FieldElement phi = (Rational(12) - s * s * Rational(5)) * Rational(1, 4);
  FieldElement zero = FieldElement::constant(f, Rational(0));
  std::vector<FieldElement> x{zero, s, s * phi};
  std::vector<FieldElement> y{s, s * phi, zero};
  std::vector<FieldElement> minus_x{zero, -s, -(s * phi)};
  XuKernel kernel = xu_kernel(3, 1);
  // same layer, non-antipodal: the kernel vanishes (A = 1/5 = 1/(d+2))
  CHECK(kernel_eval(kernel, x, y).value.is_zero());
  // the antipode is excluded from the pair condition for a reason
  CHECK(kernel_eval(kernel, x, minus_x).value.as_rational() == Rational(384));
  CHECK(kernel_eval(kernel, x, x).value.as_rational() == Rational(384));
}

TEST_CASE("build_kernel argument validation") {
  CHECK_THROWS(build_kernel(xu_full_moments(1), 2, 1));
  CHECK_THROWS(xu_kernel(3, 0));
  CHECK_THROWS(xu_kernel(2, 1));
}

}  // TEST_SUITE
