#include "cubcert/quadrature.hpp"

#include <stdexcept>

namespace cubcert {

MomentSequence xu_full_moments(int k) {
  if (k < 0) throw std::invalid_argument("xu_full_moments: negative k");
  return MomentSequence("xu-4k1:k=" + std::to_string(k), /*unit=*/1, /*horizon=*/2 * k,
                        [k](int t) { return cheb_u_moment_ext(2 * k - 1 - t) / Rational(8); });
}

ScaledRational radial_moment(int k, int ell) {
  if (ell < 0 || ell > 2 * k)
    throw std::out_of_range("radial_moment: exponent outside [0, 2k]");
  return xu_full_moments(k).moment(ell);
}

std::vector<LayerData> gauss_layers(int k) {
  if (k < 1) throw std::invalid_argument("gauss_layers: k must be >= 1");
  const int p = 2 * k + 1;
  FieldPtr field = cos_field(p);  // rejects composite 2k+1
  FieldElement c = FieldElement::generator(field);
  Rational inv_p(1, p);

  std::vector<LayerData> layers;
  layers.reserve(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) {
    // cos(2*i*pi/p) = T_i(c); half-angle gives sin^2 and cos^2 of i*pi/p.
    FieldElement node = chebyshev_t(i).eval_with(
        c, [&](const Rational& r) { return FieldElement::constant(field, r); });
    FieldElement sin2 = (Rational(1) - node) * Rational(1, 2);
    FieldElement cos2 = (node + Rational(1)) * Rational(1, 2);
    FieldElement radius_sq = (node + Rational(1)).inverse() * Rational(2);
    ScaledField weight_sum(sin2 * cos2.pow(2 * k) * inv_p, 1);    // U = pi*|S^{d-1}|
    ScaledField node_weight((Rational(1) - node) * Rational(2, p), 1);  // unit pi
    layers.push_back(LayerData{i, radius_sq, weight_sum, node, node_weight});
  }
  return layers;
}

bool quadrature_exactness(int k) {
  auto layers = gauss_layers(k);
  FieldPtr field = layers.front().radius_sq.field();
  auto constant = [&](const Rational& r) { return FieldElement::constant(field, r); };
  for (int m = 0; m < 2 * k; ++m) {
    FieldElement sum = constant(Rational(0));
    for (const auto& layer : layers) {
      FieldElement half = (layer.node + Rational(1)) * Rational(1, 2);
      sum = sum + layer.node_weight.value * half.pow(m);
    }
    if (!(sum == constant(cheb_w_moment(m)))) return false;
  }
  return true;
}

}  // namespace cubcert
