#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cubcert/scaled.hpp"

namespace cubcert {

// One-dimensional Chebyshev-type moments, all exact rationals measured in
// units of pi. Derived from the substitution r -> sqrt(2/(t+1)), which
// turns the radial weight sqrt(r^2-1) r^{-(4k+3)} dr on [1, inf) into
// ((t+1)/2)^{2k-1-l} sqrt(1-t^2) dt / 8 on [-1, 1]; the Gauss-quadrature
// side of the same substitution uses the weight sqrt((1-t)/(1+t)), and the
// two families bridge via w_moment(m) = u_moment(m-1)/2.

/// (1/pi) * Integral_{-1}^{1} ((t+1)/2)^e sqrt(1-t^2) dt, e >= 0.
Rational cheb_u_moment(int e);

/// cheb_u_moment extended to e = -1 (the integrand degenerates to
/// 2*sqrt((1-t)/(1+t)), total mass 2*pi).
Rational cheb_u_moment_ext(int e);

/// (1/pi) * Integral_{-1}^{1} ((t+1)/2)^m sqrt((1-t)/(1+t)) dt, m >= 0.
Rational cheb_w_moment(int m);

/// Radial moment functional of one spherically symmetric integral: maps an
/// exponent t to Integral r^{2t} d(weight) as a unit-scaled rational,
/// defined for 0 <= t <= horizon. Immutable.
class MomentSequence {
 public:
  MomentSequence(std::string label, int unit, int horizon, std::function<Rational(int)> fn);

  ScaledRational moment(int t) const;
  const std::string& label() const { return label_; }
  int unit() const { return unit_; }
  int horizon() const { return horizon_; }

  /// View with exponents shifted by delta (for the r^{d+4m-1}W(r) block
  /// weights: shift by 2m).
  MomentSequence shifted(int delta) const;

 private:
  std::string label_;
  int unit_;
  int horizon_;
  std::function<Rational(int)> fn_;
};

/// Average of the monomial x^alpha over the unit sphere S^{d-1}:
/// prod (alpha_i - 1)!! / (d (d+2) ... (d + |alpha| - 2)) for even alpha,
/// zero when any exponent is odd.
Rational sphere_monomial_average(int d, const std::vector<int>& alpha);

}  // namespace cubcert
