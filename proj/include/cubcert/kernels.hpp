#pragma once

#include <span>
#include <vector>

#include "cubcert/moments.hpp"
#include "cubcert/orthopoly.hpp"

namespace cubcert {

// Reproducing kernels of the even polynomial space of degree 2k. Kernels
// are stored as exact polynomial data plus a separate unit-scaled
// prefactor: the zero test ignores the prefactor while weight formulas use
// it, so pi*|S^{d-1}| is never evaluated. Everything is expressed in the
// squared quantities a = |x|^2, b = |y|^2, Q = <x,y>^2; odd powers of
// norms cannot occur by construction.

/// Moment-driven kernel (general spherically symmetric integral): one
/// monic orthogonal basis per angular block m = 0..k, plus the even part
/// of the degree-2m Gegenbauer factor with its (d+4m-2)/(d-2) multiplier.
struct KernelRep {
  int k = 0;
  int d = 0;
  std::vector<OrthoBasis> radial;    // radial[m]: basis q_{m,0}..q_{m,k-m} in r^2
  std::vector<QPoly> angular_even;   // angular_even[m](w), w = Q/(ab), multiplier folded in
  ScaledRational prefactor{Rational(1), -1};
};

/// Closed-form kernel of the degree-(4k+1) integral: double sum over
/// (m, j) of (d+4m-2) C_{2j}^{(1)}(1/|x|) C_{2j}^{(1)}(1/|y|)
/// C_{2m}^{((d-2)/2)}(cos angle), with the (|x||y|)^{2k} factor implicit
/// and prefactor 4/((d-2) U).
struct XuKernel {
  int k = 0;
  int d = 0;
  std::vector<QPoly> chebu_even;   // even part of C_{2j}^{(1)}, j = 0..k
  std::vector<QPoly> geg_even;     // even part of C_{2m}^{((d-2)/2)}, m = 0..k
  ScaledRational prefactor{Rational(1), -1};
};

/// Same data with symbolic dimension: Gegenbauer coefficients in Q[d].
struct XuKernelSym {
  int k = 0;
  std::vector<QPoly> chebu_even;
  std::vector<Poly<QPoly>> geg_even;
};

/// Builds the moment-driven kernel; `base` must be the full-space moment
/// functional (unit U = pi*|S^{d-1}|) with horizon 2k.
KernelRep build_kernel(const MomentSequence& base, int d, int k);

XuKernel xu_kernel(int d, int k);
XuKernelSym xu_kernel_symbolic(int k);

/// Exact kernel evaluation at nonzero points with coordinates in one
/// field. Throws on a zero vector (use kernel_eval_origin).
ScaledField kernel_eval(const KernelRep& kernel, std::span<const FieldElement> x,
                        std::span<const FieldElement> y);
ScaledField kernel_eval(const XuKernel& kernel, std::span<const FieldElement> x,
                        std::span<const FieldElement> y);

/// Second kernel branch: K(x, 0) uses only the m = 0 radial block. An
/// empty span denotes the origin, so kernel_eval_origin(K, {}) is K(0, 0).
ScaledField kernel_eval_origin(const KernelRep& kernel, FieldPtr field,
                               std::span<const FieldElement> x);

/// Canonical trivariate form: polynomial in a (inner), b (middle),
/// Q (outer), with the rational prefactor folded in; the shared U^{-1} is
/// implicit. Two kernels agree iff their canonical forms are equal.
using TriPoly = Poly<Poly<QPoly>>;
TriPoly canonical_trivariate(const KernelRep& kernel);
TriPoly canonical_trivariate(const XuKernel& kernel);

/// One-dimensional reproducing-kernel inversion identity: builds the
/// kernel K1 for mu on [1, inf) and the kernel K2 for the supplied dual
/// moments on (0, 1], and checks K2(x, y) = (xy)^{2k} K1(1/x, 1/y) as an
/// exact bivariate polynomial identity. For the genuine dual weight
/// gamma(y) = y^{-4k-2} mu(1/y) the dual moments are the index reversal
/// gamma_moment(t) = mu_moment(2k - t) (substitution x = 1/y), so passing
/// an independently computed gamma family checks that correspondence.
bool sv_identity_check(int k, const MomentSequence& mu_moments,
                       const MomentSequence& gamma_moments);

/// Same check with the dual moments derived by the index reversal.
bool sv_identity_check(int k, const MomentSequence& mu_moments);

/// The index-reversed dual moment functional.
MomentSequence sv_dual_moments(int k, const MomentSequence& mu_moments);

}  // namespace cubcert
