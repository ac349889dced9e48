#pragma once

#include <algorithm>
#include <stdexcept>

#include "cubcert/rational.hpp"

namespace cubcert {

/// Closed interval [lo, hi] with exact rational endpoints. All operations
/// are outward-exact (no rounding happens anywhere), so an IntervalRat that
/// encloses a real number keeps enclosing it through arithmetic.
class IntervalRat {
 public:
  IntervalRat() : lo_(0), hi_(0) {}
  IntervalRat(Rational point) : lo_(point), hi_(std::move(point)) {}
  IntervalRat(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("IntervalRat: lo > hi");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / Rational(2); }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const IntervalRat& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

  /// Closed-interval convention: an endpoint equal to an integer counts.
  bool contains_integer() const { return lo_.ceil() <= hi_.floor(); }

  IntervalRat operator-() const { return IntervalRat(-hi_, -lo_); }

  friend IntervalRat operator+(const IntervalRat& a, const IntervalRat& b) {
    return IntervalRat(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend IntervalRat operator-(const IntervalRat& a, const IntervalRat& b) {
    return IntervalRat(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend IntervalRat operator*(const IntervalRat& a, const IntervalRat& b) {
    Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return IntervalRat(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
  }
  friend IntervalRat operator*(const Rational& s, const IntervalRat& a) {
    return s.sign() >= 0 ? IntervalRat(s * a.lo_, s * a.hi_) : IntervalRat(s * a.hi_, s * a.lo_);
  }
  friend IntervalRat operator+(const IntervalRat& a, const Rational& s) {
    return IntervalRat(a.lo_ + s, a.hi_ + s);
  }

  /// Exact enclosure of x^2 over the interval; tight even when 0 is inside.
  IntervalRat sqr() const {
    if (lo_.sign() >= 0) return IntervalRat(lo_ * lo_, hi_ * hi_);
    if (hi_.sign() <= 0) return IntervalRat(hi_ * hi_, lo_ * lo_);
    return IntervalRat(Rational(0), std::max(lo_ * lo_, hi_ * hi_));
  }

  IntervalRat pow(long e) const {
    IntervalRat out(Rational(1));
    IntervalRat base = *this;
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
  }

  friend bool operator==(const IntervalRat& a, const IntervalRat& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_, hi_;
};

}  // namespace cubcert
