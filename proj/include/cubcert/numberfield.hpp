#pragma once

#include <memory>
#include <optional>
#include <string>

#include "cubcert/interval.hpp"
#include "cubcert/poly.hpp"

namespace cubcert {

/// Single algebraic extension Q[c]/(f) for a monic modulus f together with
/// a declared real embedding: an isolating bracket selecting which real
/// root of f the generator denotes. Irreducibility of f is a construction
/// precondition owed by the caller. Immutable after construction.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> create(QPoly monic_modulus, std::string generator,
                                                   IntervalRat root_bracket);

  /// Q itself, presented as the degree-1 field Q[c]/(c).
  static std::shared_ptr<const NumberField> rationals();

  const QPoly& modulus() const { return modulus_; }
  const std::string& generator() const { return generator_; }
  const IntervalRat& root_bracket() const { return bracket_; }
  int degree() const { return modulus_.degree(); }

  /// Degree-1 fields hold only rationals.
  bool is_trivial() const { return degree() == 1; }

  /// Index of the embedded root among all real roots of the modulus,
  /// ascending. Two fields are interoperable iff modulus and root index
  /// agree.
  int root_index() const { return root_index_; }

  bool same_field(const NumberField& o) const {
    return modulus_ == o.modulus_ && root_index_ == o.root_index_;
  }

  /// Certified bracket of the embedded root with width <= max_width.
  IntervalRat refined_bracket(const Rational& max_width) const;

 private:
  NumberField(QPoly modulus, std::string generator, IntervalRat bracket, int root_index);
  QPoly modulus_;
  std::string generator_;
  IntervalRat bracket_;
  int root_index_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a NumberField: residue polynomial of degree < deg(modulus)
/// in the generator. Arithmetic reduces modulo the modulus; inverses come
/// from the extended Euclidean algorithm.
class FieldElement {
 public:
  FieldElement(FieldPtr field, const QPoly& value);
  static FieldElement constant(FieldPtr field, Rational v);
  static FieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const QPoly& residue() const { return residue_; }
  bool is_zero() const { return residue_.is_zero(); }

  /// Constant term when the residue has no generator component, per
  /// field_is_rational; nullopt signals "irrational over this
  /// representation".
  std::optional<Rational> as_rational() const;

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend FieldElement operator+(const FieldElement& a, const Rational& b);
  friend FieldElement operator*(const FieldElement& a, const Rational& b);
  friend FieldElement operator-(const FieldElement& a, const Rational& b);
  friend FieldElement operator+(const Rational& b, const FieldElement& a) { return a + b; }
  friend FieldElement operator*(const Rational& b, const FieldElement& a) { return a * b; }
  friend FieldElement operator-(const Rational& b, const FieldElement& a) { return -(a - b); }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Certified rational enclosure of the real embedding, width <= max_width.
  IntervalRat enclosure(const Rational& max_width) const;

  /// Certified sign of the real embedding (-1, 0, +1); exact for rational
  /// residues, bracket refinement otherwise.
  int sign() const;

  /// Truncated decimal of the embedding with `digits` fractional digits.
  std::string approx_decimal(int digits) const;

  std::string str() const;

 private:
  static void require_same_field(const FieldElement& a, const FieldElement& b);
  FieldPtr field_;
  QPoly residue_;
};

}  // namespace cubcert
