#include "cubcert/kernels.hpp"

#include <stdexcept>

namespace cubcert {

namespace {

struct PointFrame {
  FieldPtr field;
  FieldElement a, b, q2;  // |x|^2, |y|^2, <x,y>^2
};

PointFrame frame_of(std::span<const FieldElement> x, std::span<const FieldElement> y) {
  if (x.empty() || y.empty() || x.size() != y.size())
    throw std::invalid_argument("kernel_eval: dimension mismatch");
  FieldPtr field = x.front().field();
  FieldElement a = FieldElement::constant(field, Rational(0));
  FieldElement b = a, q = a;
  for (size_t i = 0; i < x.size(); ++i) {
    a = a + x[i] * x[i];
    b = b + y[i] * y[i];
    q = q + x[i] * y[i];
  }
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("kernel_eval: zero vector passed to nonzero branch");
  return PointFrame{field, a, b, q * q};
}

FieldElement eval_at(const QPoly& p, const FieldElement& x) {
  return p.eval_with(x, [&x](const Rational& r) { return FieldElement::constant(x.field(), r); });
}

/// (ab)^m * C_even(Q/(ab)) = sum_i c_i Q^i (ab)^{m-i}, exact in the field.
FieldElement angular_value(const QPoly& c_even, int m, const PointFrame& f) {
  FieldElement ab = f.a * f.b;
  FieldElement sum = FieldElement::constant(f.field, Rational(0));
  for (int i = 0; i <= c_even.degree(); ++i)
    sum = sum + c_even.coeff(i) * f.q2.pow(i) * ab.pow(m - i);
  return sum;
}

/// Same expansion as a trivariate polynomial (a inner, b middle, Q outer).
TriPoly angular_tripoly(const QPoly& c_even, int m) {
  TriPoly out;
  for (int i = 0; i <= c_even.degree(); ++i) {
    QPoly a_part = QPoly::monomial(c_even.coeff(i), m - i);
    Poly<QPoly> ab_part = Poly<QPoly>::monomial(a_part, m - i);
    out += TriPoly::monomial(ab_part, i);
  }
  return out;
}

/// pa(a) * pb(b) as a polynomial in b with coefficients in Q[a].
Poly<QPoly> bivariate_ab(const QPoly& pa, const QPoly& pb) {
  Poly<QPoly> out;
  for (int j = 0; j <= pb.degree(); ++j) out += Poly<QPoly>::monomial(pa.scaled(pb.coeff(j)), j);
  return out;
}

}  // namespace

KernelRep build_kernel(const MomentSequence& base, int d, int k) {
  if (d < 3) throw std::invalid_argument("build_kernel: d must be >= 3");
  if (k < 0) throw std::invalid_argument("build_kernel: negative k");
  KernelRep kernel;
  kernel.k = k;
  kernel.d = d;
  Rational lambda(d - 2, 2);
  for (int m = 0; m <= k; ++m) {
    kernel.radial.push_back(gram_schmidt(base.shifted(2 * m), k - m));
    Rational multiplier = Rational(d + 4 * m - 2) / Rational(d - 2);
    kernel.angular_even.push_back(even_part(gegenbauer(2 * m, lambda)).scaled(multiplier));
  }
  return kernel;
}

XuKernel xu_kernel(int d, int k) {
  if (k < 1) throw std::invalid_argument("xu_kernel: k must be >= 1");
  if (d < 3) throw std::invalid_argument("xu_kernel: d must be >= 3");
  XuKernel kernel;
  kernel.k = k;
  kernel.d = d;
  kernel.prefactor = ScaledRational(Rational(4) / Rational(d - 2), -1);
  Rational lambda(d - 2, 2);
  for (int j = 0; j <= k; ++j) kernel.chebu_even.push_back(even_part(chebyshev_u(2 * j)));
  for (int m = 0; m <= k; ++m)
    kernel.geg_even.push_back(even_part(gegenbauer(2 * m, lambda)).scaled(Rational(d + 4 * m - 2)));
  return kernel;
}

XuKernelSym xu_kernel_symbolic(int k) {
  if (k < 1) throw std::invalid_argument("xu_kernel_symbolic: k must be >= 1");
  XuKernelSym kernel;
  kernel.k = k;
  QPoly dvar = QPoly::variable();
  QPoly lambda = (dvar - QPoly(Rational(2))).divided(Rational(2));
  for (int j = 0; j <= k; ++j) kernel.chebu_even.push_back(even_part(chebyshev_u(2 * j)));
  for (int m = 0; m <= k; ++m) {
    QPoly multiplier = dvar + QPoly(Rational(4 * m - 2));
    kernel.geg_even.push_back(even_part(gegenbauer(2 * m, lambda)).scaled(multiplier));
  }
  return kernel;
}

ScaledField kernel_eval(const KernelRep& kernel, std::span<const FieldElement> x,
                        std::span<const FieldElement> y) {
  PointFrame f = frame_of(x, y);
  FieldElement total = FieldElement::constant(f.field, Rational(0));
  for (int m = 0; m <= kernel.k; ++m) {
    const OrthoBasis& basis = kernel.radial[static_cast<size_t>(m)];
    FieldElement radial = FieldElement::constant(f.field, Rational(0));
    for (int j = 0; j < basis.size(); ++j) {
      FieldElement qa = eval_at(basis.polys[static_cast<size_t>(j)], f.a);
      FieldElement qb = eval_at(basis.polys[static_cast<size_t>(j)], f.b);
      radial = radial + qa * qb * basis.norm_sq[static_cast<size_t>(j)].value.pow(-1);
    }
    total = total + radial * angular_value(kernel.angular_even[static_cast<size_t>(m)], m, f);
  }
  return ScaledField(total * kernel.prefactor.value, kernel.prefactor.unit);
}

ScaledField kernel_eval(const XuKernel& kernel, std::span<const FieldElement> x,
                        std::span<const FieldElement> y) {
  PointFrame f = frame_of(x, y);
  FieldElement total = FieldElement::constant(f.field, Rational(0));
  for (int m = 0; m <= kernel.k; ++m) {
    FieldElement cheb_sum = FieldElement::constant(f.field, Rational(0));
    for (int j = 0; j + m <= kernel.k; ++j) {
      // a^{k-m} * ChebEven_j(1/a) is polynomial in a since j <= k-m.
      QPoly rev = reverse_to_degree(kernel.chebu_even[static_cast<size_t>(j)], kernel.k - m);
      cheb_sum = cheb_sum + eval_at(rev, f.a) * eval_at(rev, f.b);
    }
    total = total + cheb_sum * angular_value(kernel.geg_even[static_cast<size_t>(m)], m, f);
  }
  return ScaledField(total * kernel.prefactor.value, kernel.prefactor.unit);
}

ScaledField kernel_eval_origin(const KernelRep& kernel, FieldPtr field,
                               std::span<const FieldElement> x) {
  if (kernel.radial.empty()) throw std::invalid_argument("kernel_eval_origin: missing m=0 block");
  FieldElement a = FieldElement::constant(field, Rational(0));
  for (const auto& xi : x) a = a + xi * xi;
  const OrthoBasis& basis = kernel.radial.front();
  FieldElement sum = FieldElement::constant(field, Rational(0));
  for (int j = 0; j < basis.size(); ++j) {
    FieldElement qa = eval_at(basis.polys[static_cast<size_t>(j)], a);
    Rational q0 = basis.polys[static_cast<size_t>(j)].eval(Rational(0));
    sum = sum + qa * q0 * basis.norm_sq[static_cast<size_t>(j)].value.pow(-1);
  }
  return ScaledField(sum * kernel.prefactor.value, kernel.prefactor.unit);
}

TriPoly canonical_trivariate(const KernelRep& kernel) {
  TriPoly total;
  for (int m = 0; m <= kernel.k; ++m) {
    const OrthoBasis& basis = kernel.radial[static_cast<size_t>(m)];
    Poly<QPoly> radial;
    for (int j = 0; j < basis.size(); ++j) {
      const QPoly& q = basis.polys[static_cast<size_t>(j)];
      radial += bivariate_ab(q.divided(basis.norm_sq[static_cast<size_t>(j)].value), q);
    }
    total += TriPoly(radial) * angular_tripoly(kernel.angular_even[static_cast<size_t>(m)], m);
  }
  return total * TriPoly(Poly<QPoly>(QPoly(kernel.prefactor.value)));
}

TriPoly canonical_trivariate(const XuKernel& kernel) {
  TriPoly total;
  for (int m = 0; m <= kernel.k; ++m) {
    Poly<QPoly> cheb_sum;
    for (int j = 0; j + m <= kernel.k; ++j) {
      QPoly rev = reverse_to_degree(kernel.chebu_even[static_cast<size_t>(j)], kernel.k - m);
      cheb_sum += bivariate_ab(rev, rev);
    }
    total += TriPoly(cheb_sum) * angular_tripoly(kernel.geg_even[static_cast<size_t>(m)], m);
  }
  return total * TriPoly(Poly<QPoly>(QPoly(kernel.prefactor.value)));
}

MomentSequence sv_dual_moments(int k, const MomentSequence& mu_moments) {
  if (mu_moments.horizon() < 2 * k)
    throw std::out_of_range("sv_dual_moments: moment horizon below 2k");
  return MomentSequence(mu_moments.label() + ":dual", mu_moments.unit(), 2 * k,
                        [mu_moments, k](int t) { return mu_moments.moment(2 * k - t).value; });
}

bool sv_identity_check(int k, const MomentSequence& mu_moments,
                       const MomentSequence& gamma_moments) {
  OrthoBasis k1 = gram_schmidt(mu_moments, k);
  OrthoBasis k2 = gram_schmidt(gamma_moments, k);

  // Both sides as bivariate polynomials in u = x^2, v = y^2.
  Poly<QPoly> lhs, rhs;
  for (int j = 0; j <= k; ++j) {
    const QPoly& p2 = k2.polys[static_cast<size_t>(j)];
    lhs += bivariate_ab(p2.divided(k2.norm_sq[static_cast<size_t>(j)].value), p2);
    QPoly rev = reverse_to_degree(k1.polys[static_cast<size_t>(j)], k);
    rhs += bivariate_ab(rev.divided(k1.norm_sq[static_cast<size_t>(j)].value), rev);
  }
  return lhs == rhs;
}

bool sv_identity_check(int k, const MomentSequence& mu_moments) {
  return sv_identity_check(k, mu_moments, sv_dual_moments(k, mu_moments));
}

}  // namespace cubcert
