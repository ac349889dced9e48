#pragma once

#include <stdexcept>

#include "cubcert/numberfield.hpp"
#include "cubcert/rational.hpp"

namespace cubcert {

/// Value carrying an integer power of a formal positive unit. The unit
/// symbol is fixed by the producing site (the full-space moment and weight
/// quantities ride on U = pi*|S^{d-1}|; one-dimensional radial data rides
/// on pi alone) and never mixes across sites: addition insists on equal
/// exponents, multiplication adds them.
template <class V>
struct Scaled {
  V value;
  int unit = 0;

  Scaled(V v, int u) : value(std::move(v)), unit(u) {}

  friend Scaled operator+(const Scaled& a, const Scaled& b) {
    if (a.unit != b.unit) throw std::invalid_argument("Scaled: adding mismatched unit exponents");
    return Scaled(a.value + b.value, a.unit);
  }
  friend Scaled operator-(const Scaled& a, const Scaled& b) {
    if (a.unit != b.unit)
      throw std::invalid_argument("Scaled: subtracting mismatched unit exponents");
    return Scaled(a.value - b.value, a.unit);
  }
  friend Scaled operator*(const Scaled& a, const Scaled& b) {
    return Scaled(a.value * b.value, a.unit + b.unit);
  }
  friend bool operator==(const Scaled& a, const Scaled& b) {
    return a.unit == b.unit && a.value == b.value;
  }
};

using ScaledRational = Scaled<Rational>;
using ScaledField = Scaled<FieldElement>;

inline ScaledField lift(const ScaledRational& s, const FieldPtr& field) {
  return ScaledField(FieldElement::constant(field, s.value), s.unit);
}

}  // namespace cubcert
