#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubcert/interval.hpp"
#include "cubcert/numberfield.hpp"
#include "cubcert/poly.hpp"

namespace cubcert {

// Nonexistence pipeline for minimal rules of degree 4k+1 (2k+1 prime).
// Large dimensions: the kernel-zero equation on a rational layer, reduced
// modulo the minimal polynomial of cos(2*pi/(2k+1)), must have a common
// root A = <x,y>^2/R^2 in [0,1) with rational value; showing none exists
// certifies nonexistence. Small dimensions: the first-layer cardinality
// must be an integer; the exact field computation (or a certified
// interval) showing it strictly between consecutive integers certifies
// nonexistence.

/// Kernel-zero equation on one layer, after the half-angle substitution:
/// polynomial in c = cos(2*l*pi/(2k+1)) (outer variable) and
/// A = <x,y>^2/R^2 (inner variable). Scalars S are Rational (numeric
/// dimension) or Poly<Rational> in d (symbolic dimension).
///
/// The telescoped diagonal form is used:
///   sum_{i+j=k} 4^{-k} C_{2i}^{(1)}(sqrt((1+c)/2))^2 C_{2j}^{(d/2)}(sqrt(A)),
/// which equals (d-2) pi |S^{d-1}| / (4 R^{2k} ... ) times the closed-form
/// kernel on the layer via the Gegenbauer contiguous relation
/// ((n+l)/l) C_n^{(l)} = C_n^{(l+1)} - C_{n-2}^{(l+1)}.
template <class S>
struct ZeroEquation {
  int k = 0;
  int d = 0;  // 0 in symbolic mode
  Poly<Poly<S>> poly;  // outer c, inner A
};

/// Coefficients of powers of c in the remainder modulo the minimal
/// polynomial: entries[i] multiplies c^i and is a polynomial in A.
template <class S>
struct CoefficientSystem {
  int k = 0;
  int d = 0;  // 0 in symbolic mode
  QPoly modulus;
  std::vector<Poly<S>> entries;
};

ZeroEquation<Rational> zero_equation_numeric(int k, int d);
ZeroEquation<QPoly> zero_equation_symbolic(int k);

CoefficientSystem<Rational> reduce_and_extract(const ZeroEquation<Rational>& eq);
CoefficientSystem<QPoly> reduce_and_extract(const ZeroEquation<QPoly>& eq);

/// Normalized rational function over Q[d].
struct DimRatFunc {
  QPoly num, den;
  DimRatFunc() : num(), den(Rational(1)) {}
  DimRatFunc(QPoly n, QPoly d);
  friend DimRatFunc operator+(const DimRatFunc& a, const DimRatFunc& b);
  friend DimRatFunc operator*(const DimRatFunc& a, const DimRatFunc& b);
  friend bool operator==(const DimRatFunc& a, const DimRatFunc& b);
  std::string str() const;
};

/// Replay of the scripted symbolic eliminations (k = 3 and k = 5).
struct SymbolicTrace {
  int k = 0;
  Poly<QPoly> linear;            // the A-linear combination that pins A
  DimRatFunc forced_a;           // 1/(d+2)
  DimRatFunc final_value;        // the pinned equation at A = forced_a
  QPoly contradiction;           // its numerator, a polynomial in d
  std::vector<mpz_class> integer_roots;
  // k = 5 intermediates (c3 - c4 and c2 - c1); empty for k = 3.
  Poly<QPoly> f34, f21;
};
SymbolicTrace eliminate_symbolic(const CoefficientSystem<QPoly>& sys);

enum class NumericVerdict { contradiction, inconclusive };

struct NumericElimination {
  NumericVerdict verdict = NumericVerdict::inconclusive;
  QPoly gcd;                       // gcd of all system entries, in A
  int roots_in_unit = 0;           // Sturm count of gcd over [0, 1)
  std::vector<Rational> rational_roots_in_unit;
};
NumericElimination eliminate_numeric(const CoefficientSystem<Rational>& sys, int d);

/// Exact first-layer cardinality (8/(2k+1)) sum sin^2((2j+1)pi/(2k+1))
/// * dim Harm_{2m}(R^d) as an element of Q[c]/(f_{2k+1}); equals
/// Lambda_1 / w_1, unit exponents cancelled.
FieldElement appendix_count_exact(int k, int d);

/// Certified interval [N1, N2] enclosing the same cardinality from
/// truncated sine series with directed pi brackets; sound for n >= 1.
IntervalRat appendix_count_interval(int k, int d, int n, const Rational& pi_lo,
                                    const Rational& pi_hi);

/// Built-in 60-digit rational bracket of pi used to validate user input.
IntervalRat builtin_pi_bracket();

enum class Route { rational_elimination, integer_gap_exact, integer_gap_interval, unsupported };
enum class Verdict { nonexistence, inconclusive };

std::string route_name(Route r);
std::string verdict_name(Verdict v);

struct EliminationEvidence {
  QPoly gcd;
  int roots_in_unit = 0;
  std::vector<Rational> rational_roots_in_unit;
};

struct GapEvidence {
  QPoly modulus;
  QPoly residue;               // exact count in powers of c
  bool exact_is_rational = false;
  bool exact_is_integer = false;
  bool interval_excludes = false;  // interval found with no integer inside
  int n_used = 0;
  IntervalRat interval;        // [N1, N2] for n_used (when computed)
  mpz_class below;             // floor(N1)
  mpz_class above;             // ceil(N2)
};

struct CertifyOptions {
  int n_start = 2;
  int n_cap = 64;
  std::optional<Rational> pi_lo;   // defaults to the built-in bracket
  std::optional<Rational> pi_hi;
  bool interval_only = false;      // force route integer-gap-interval
};

struct Certificate {
  int k = 0;
  int d = 0;
  Route route = Route::unsupported;
  Verdict verdict = Verdict::inconclusive;
  std::optional<EliminationEvidence> elimination;
  std::optional<GapEvidence> gap;
  Rational pi_lo{0}, pi_hi{0};
  std::string note;
  std::string version;
};

/// One certificate for dimension d: rational elimination when
/// d >= 4k^2-2k+1, the integer-gap tests for 3 <= d below that, and an
/// explicit "unsupported" verdict for d = 2.
Certificate certify(int k, int d, const CertifyOptions& options = {});

/// Independent per-d certificates, ordered by d; workers > 1 distributes
/// across threads.
std::vector<Certificate> certify_range(int k, int dmin, int dmax,
                                       const CertifyOptions& options = {}, int workers = 1);

/// Recomputes a certificate's evidence from its parameters and compares
/// field by field. True iff everything reproduces bit-identically.
bool replay(const Certificate& cert);

}  // namespace cubcert
