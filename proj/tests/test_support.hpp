#pragma once

#include <random>
#include <vector>

#include "cubcert/poly.hpp"
#include "cubcert/rational.hpp"

namespace cubcert::test {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

inline Rational random_rational(long num_range = 12, long den_range = 6) {
  std::uniform_int_distribution<long> num(-num_range, num_range);
  std::uniform_int_distribution<long> den(1, den_range);
  return Rational(num(rng()), den(rng()));
}

inline Rational random_nonzero_rational(long num_range = 12, long den_range = 6) {
  for (;;) {
    Rational r = random_rational(num_range, den_range);
    if (!r.is_zero()) return r;
  }
}

inline QPoly random_poly(int max_deg, long num_range = 8, long den_range = 4) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int n = deg(rng());
  std::vector<Rational> c;
  for (int i = 0; i <= n; ++i) c.push_back(random_rational(num_range, den_range));
  return QPoly(std::move(c));
}

inline QPoly random_nonzero_poly(int max_deg) {
  for (;;) {
    QPoly p = random_poly(max_deg);
    if (!p.is_zero()) return p;
  }
}

}  // namespace cubcert::test
