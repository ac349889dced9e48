#pragma once

#include <vector>

#include "cubcert/moments.hpp"
#include "cubcert/orthopoly.hpp"

namespace cubcert {

// Closed-form radial Gaussian layer data for the integral
//   Int_{1 <= |x| < inf} f(x) sqrt(|x|^2 - 1) |x|^{-(4k+d+2)} dx,
// whose radial part is k-dependent but dimension-free.

/// Full-space moment functional: t -> Int |x|^{2t} W dx as U * rational
/// with U = pi*|S^{d-1}|; defined for 0 <= t <= 2k.
MomentSequence xu_full_moments(int k);

/// Int |x|^{2*ell} W dx for the degree-(4k+1) integral, ell in [0, 2k].
ScaledRational radial_moment(int k, int ell);

/// One concentric layer of a minimal rule: exact field data over
/// Q[c]/(f_{2k+1}) with c = cos(2*pi/(2k+1)).
struct LayerData {
  int index;                 // 1..k
  FieldElement radius_sq;    // R_i = 2/(1 + cos(2*i*pi/(2k+1)))
  ScaledField weight_sum;    // Lambda_i, unit U^1
  FieldElement node;         // cos(2*i*pi/(2k+1)), the 1-d Gauss node
  ScaledField node_weight;   // scaled node weight, unit pi^1
};

/// All k layers; requires 2k+1 prime (single-field representation).
std::vector<LayerData> gauss_layers(int k);

/// Exact check that the layer nodes/weights integrate ((t+1)/2)^m against
/// sqrt((1-t)/(1+t)) for every m = 0..2k-1, as field-element equalities.
bool quadrature_exactness(int k);

}  // namespace cubcert
