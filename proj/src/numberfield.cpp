#include "cubcert/numberfield.hpp"

#include <stdexcept>

#include "cubcert/sturm.hpp"

namespace cubcert {

namespace {

int count_in_closed(const QPoly& f, const IntervalRat& w) {
  int n = sturm_count(f, w);
  if (f.eval(w.hi()).is_zero()) ++n;
  return n;
}

}  // namespace

NumberField::NumberField(QPoly modulus, std::string generator, IntervalRat bracket, int root_index)
    : modulus_(std::move(modulus)),
      generator_(std::move(generator)),
      bracket_(std::move(bracket)),
      root_index_(root_index) {}

std::shared_ptr<const NumberField> NumberField::create(QPoly monic_modulus, std::string generator,
                                                       IntervalRat root_bracket) {
  if (monic_modulus.degree() < 1 || !(monic_modulus.leading() == Rational(1)))
    throw std::invalid_argument("NumberField: modulus must be monic of degree >= 1");
  if (count_in_closed(monic_modulus, root_bracket) != 1)
    throw std::invalid_argument("NumberField: bracket does not isolate exactly one root");

  Rational bound = cauchy_root_bound(monic_modulus);
  auto roots = isolate_real_roots(monic_modulus, IntervalRat(-bound, bound));
  // Canonical isolating intervals hold their root in [lo, hi); intersect
  // with the (closed) bracket under those semantics to pick the root index.
  int index = -1;
  for (size_t i = 0; i < roots.size(); ++i) {
    Rational lo = std::max(roots[i].lo(), root_bracket.lo());
    Rational hi = std::min(roots[i].hi(), root_bracket.hi());
    if (lo > hi) continue;
    int n = sturm_count(monic_modulus, IntervalRat(lo, hi));
    if (hi < roots[i].hi() && monic_modulus.eval(hi).is_zero()) ++n;
    if (n == 1) {
      index = static_cast<int>(i);
      break;
    }
  }
  if (index < 0) throw std::logic_error("NumberField: failed to locate embedded root");
  return std::shared_ptr<const NumberField>(new NumberField(
      std::move(monic_modulus), std::move(generator), std::move(root_bracket), index));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
  static const std::shared_ptr<const NumberField> q = create(
      QPoly::variable(), "c", IntervalRat(Rational(0), Rational(0)));
  return q;
}

IntervalRat NumberField::refined_bracket(const Rational& max_width) const {
  return refine_root(modulus_, bracket_, max_width);
}

FieldElement::FieldElement(FieldPtr field, const QPoly& value) : field_(std::move(field)) {
  if (!field_) throw std::invalid_argument("FieldElement: null field");
  residue_ = poly_divrem(value, field_->modulus()).second;
}

FieldElement FieldElement::constant(FieldPtr field, Rational v) {
  return FieldElement(std::move(field), QPoly(std::move(v)));
}

FieldElement FieldElement::generator(FieldPtr field) {
  return FieldElement(std::move(field), QPoly::variable());
}

std::optional<Rational> FieldElement::as_rational() const {
  if (residue_.degree() >= 1) return std::nullopt;
  return residue_.coeff(0);
}

void FieldElement::require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field_ == b.field_) return;
  if (!a.field_->same_field(*b.field_))
    throw std::invalid_argument("FieldElement: mixed incompatible fields");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_field(a, b);
  return FieldElement(a.field_, a.residue_ + b.residue_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_field(a, b);
  return FieldElement(a.field_, a.residue_ - b.residue_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_field(a, b);
  return FieldElement(a.field_, a.residue_ * b.residue_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::operator-() const { return FieldElement(field_, -residue_); }

FieldElement operator+(const FieldElement& a, const Rational& b) {
  return FieldElement(a.field_, a.residue_ + QPoly(b));
}
FieldElement operator-(const FieldElement& a, const Rational& b) {
  return FieldElement(a.field_, a.residue_ - QPoly(b));
}
FieldElement operator*(const FieldElement& a, const Rational& b) {
  return FieldElement(a.field_, a.residue_.scaled(b));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_field(a, b);
  return a.residue_ == b.residue_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: inversion of zero element");
  auto [g, u, v] = poly_extended_gcd(residue_, field_->modulus());
  if (g.degree() != 0)
    throw std::domain_error("FieldElement: residue shares a factor with the modulus");
  return FieldElement(field_, u.divided(g.coeff(0)));
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement base = *this;
  FieldElement acc = FieldElement::constant(field_, Rational(1));
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

IntervalRat FieldElement::enclosure(const Rational& max_width) const {
  if (auto r = as_rational()) return IntervalRat(*r, *r);
  Rational w = field_->root_bracket().width();
  if (w.is_zero()) w = Rational(1);
  for (int rounds = 0; rounds < 20000; ++rounds) {
    IntervalRat c = field_->refined_bracket(w);
    IntervalRat value = residue_.eval(c);
    if (value.width() <= max_width) return value;
    w = w / Rational(16);
  }
  throw std::runtime_error("FieldElement::enclosure: refinement did not converge");
}

int FieldElement::sign() const {
  if (is_zero()) return 0;
  if (auto r = as_rational()) return r->sign();
  Rational w = field_->root_bracket().width();
  if (w.is_zero()) w = Rational(1);
  for (int rounds = 0; rounds < 20000; ++rounds) {
    IntervalRat c = field_->refined_bracket(w);
    IntervalRat value = residue_.eval(c);
    if (value.lo().sign() > 0) return 1;
    if (value.hi().sign() < 0) return -1;
    w = w / Rational(16);
  }
  // A nonzero residue cannot vanish at a root of an irreducible modulus,
  // so reaching this means the modulus was not irreducible after all.
  throw std::runtime_error("FieldElement::sign: undecidable (modulus irreducible?)");
}

std::string FieldElement::approx_decimal(int digits) const {
  Rational target = Rational(1) / Rational(pow10(digits + 2));
  return enclosure(target).midpoint().decimal(digits);
}

std::string FieldElement::str() const { return to_string(residue_, field_->generator()); }

}  // namespace cubcert
