#include "cubcert/moments.hpp"

#include <stdexcept>

namespace cubcert {

namespace {

Rational catalan(long j) { return Rational(binomial(2 * j, j)) / Rational(j + 1); }

}  // namespace

Rational cheb_u_moment(int e) {
  if (e < 0) throw std::invalid_argument("cheb_u_moment: negative exponent");
  // (1/pi) Int t^{2j} sqrt(1-t^2) dt = Catalan(j) / (2*4^j)
  Rational sum(0);
  for (int j = 0; 2 * j <= e; ++j)
    sum += Rational(binomial(e, 2 * j)) * catalan(j) / Rational(2) / Rational(4).pow(j);
  return sum / Rational(2).pow(e);
}

Rational cheb_u_moment_ext(int e) {
  if (e == -1) return Rational(2);
  return cheb_u_moment(e);
}

Rational cheb_w_moment(int m) {
  if (m < 0) throw std::invalid_argument("cheb_w_moment: negative exponent");
  if (m == 0) return Rational(1);
  return cheb_u_moment(m - 1) / Rational(2);
}

MomentSequence::MomentSequence(std::string label, int unit, int horizon,
                               std::function<Rational(int)> fn)
    : label_(std::move(label)), unit_(unit), horizon_(horizon), fn_(std::move(fn)) {
  if (horizon_ < 0) throw std::invalid_argument("MomentSequence: negative horizon");
  if (fn_(0).sign() <= 0)
    throw std::invalid_argument("MomentSequence: total mass must be positive");
}

ScaledRational MomentSequence::moment(int t) const {
  if (t < 0 || t > horizon_)
    throw std::out_of_range("MomentSequence(" + label_ + "): exponent " + std::to_string(t) +
                            " outside horizon " + std::to_string(horizon_));
  return ScaledRational(fn_(t), unit_);
}

MomentSequence MomentSequence::shifted(int delta) const {
  auto fn = fn_;
  return MomentSequence(label_ + "<<" + std::to_string(delta), unit_, horizon_ - delta,
                        [fn, delta](int t) { return fn(t + delta); });
}

Rational sphere_monomial_average(int d, const std::vector<int>& alpha) {
  long total = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("sphere_monomial_average: negative exponent");
    if (a % 2 == 1) return Rational(0);
    total += a;
  }
  Rational num(1);
  for (int a : alpha) num *= Rational(double_factorial(a - 1));
  Rational den(1);
  for (long j = 0; j < total / 2; ++j) den *= Rational(d + 2 * j);
  return num / den;
}

}  // namespace cubcert
