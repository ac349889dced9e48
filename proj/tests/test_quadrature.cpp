#include <doctest.h>

#include "cubcert/quadrature.hpp"
#include "test_support.hpp"

using namespace cubcert;

TEST_SUITE("quadrature") {

TEST_CASE("k = 1 layer data in closed form") {
  auto layers = gauss_layers(1);
  REQUIRE(layers.size() == 1);
  const auto& L = layers[0];
  CHECK(L.node.as_rational() == Rational(-1, 2));        // cos(2pi/3)
  CHECK(L.node_weight.value.as_rational() == Rational(1));  // 4pi/3 sin^2(pi/3) = pi
  CHECK(L.node_weight.unit == 1);
  CHECK(L.radius_sq.as_rational() == Rational(4));       // (1/cos(pi/3))^2
  CHECK(L.weight_sum.value.as_rational() == Rational(1, 64));
  CHECK(L.weight_sum.unit == 1);
}

TEST_CASE("layer invariants for k = 3") {
  auto layers = gauss_layers(3);
  REQUIRE(layers.size() == 3);
  FieldPtr field = layers[0].radius_sq.field();
  FieldElement c = FieldElement::generator(field);
  auto lift = [&field](const Rational& r) { return FieldElement::constant(field, r); };
  for (const auto& L : layers) {
    // R_i = 2/(1 + node) exactly in the field
    CHECK(L.radius_sq * (L.node + Rational(1)) == lift(Rational(2)));
    // node is cos of the doubled layer angle: T_i(c)
    CHECK(L.node == chebyshev_t(L.index).eval_with(c, lift));
    // weight sums relate to node weights by Lambda = R^{-2k} * scaled/4
    CHECK(L.weight_sum.value * L.radius_sq.pow(2 * 3) * Rational(4) == L.node_weight.value);
  }
  // radii pairwise distinct and increasing (certified embeddings)
  Rational w(1, pow10(100));
  for (size_t i = 0; i + 1 < layers.size(); ++i) {
    CHECK_FALSE(layers[i].radius_sq == layers[i + 1].radius_sq);
    CHECK(layers[i].radius_sq.enclosure(w).hi() < layers[i + 1].radius_sq.enclosure(w).lo());
  }
  CHECK(Rational(1) < layers[0].radius_sq.enclosure(w).lo());
}

TEST_CASE("quadrature exactness for all tested primes") {
  for (int k : {1, 2, 3, 5, 6}) CHECK(quadrature_exactness(k));
}

TEST_CASE("perturbing a node weight breaks exactness") {
  int k = 3;
  auto layers = gauss_layers(k);
  FieldPtr field = layers[0].radius_sq.field();
  auto lift = [&field](const Rational& r) { return FieldElement::constant(field, r); };
  bool all_match = true;
  for (int m = 0; m < 2 * k && all_match; ++m) {
    FieldElement sum = lift(Rational(0));
    for (const auto& L : layers) {
      FieldElement w = L.node_weight.value;
      if (L.index == 1) w = w + Rational(1, 1000);
      sum = sum + w * ((L.node + Rational(1)) * Rational(1, 2)).pow(m);
    }
    all_match = sum == lift(cheb_w_moment(m));
  }
  CHECK_FALSE(all_match);
}

TEST_CASE("layer weight sums reproduce the radial moments") {
  // sum_i Lambda_i R_i^l equals the full-space moment of |x|^{2l} for
  // l = 1..2k-1 (the origin carries the remaining l = 0 mass).
  for (int k : {1, 2, 3}) {
    auto layers = gauss_layers(k);
    FieldPtr field = layers[0].radius_sq.field();
    auto lift = [&field](const Rational& r) { return FieldElement::constant(field, r); };
    for (int l = 1; l < 2 * k; ++l) {
      FieldElement sum = lift(Rational(0));
      for (const auto& L : layers) sum = sum + L.weight_sum.value * L.radius_sq.pow(l);
      CHECK(sum == lift(radial_moment(k, l).value));
    }
  }
}

TEST_CASE("composite 2k+1 rejected") {
  CHECK_THROWS(gauss_layers(4));   // 9
  CHECK_THROWS(gauss_layers(7));   // 15
  CHECK_THROWS(gauss_layers(0));
}

TEST_CASE("radial moment range checks") {
  CHECK(radial_moment(1, 0).value == Rational(1, 32));
  CHECK(radial_moment(1, 0).unit == 1);
  CHECK(radial_moment(1, 2).value == Rational(1, 4));  // the e = -1 endpoint
  CHECK_THROWS(radial_moment(1, 3));
  CHECK_THROWS(radial_moment(1, -1));
}

}  // TEST_SUITE
