#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubcert/kernels.hpp"
#include "cubcert/quadrature.hpp"

namespace cubcert {

// Candidate-formula checking. "Verified minimal" is operationally the
// conjunction of the Mysovskikh kernel conditions (pair vanishing and the
// weight formula), the Moeller point count, and the structural layer
// facts; the independent oracle verify_direct tests plain monomial
// exactness instead and never looks at kernels.

/// A cubature formula candidate: points with exact coordinates in one
/// number field, positive unit-scaled weights.
struct CandidateFormula {
  int dimension = 0;
  int degree = 0;             // 4k+1
  std::string integral;       // only "xu-4k1" is known
  FieldPtr field;
  std::vector<std::vector<FieldElement>> points;
  std::vector<ScaledField> weights;

  /// (degree - 1) / 4; throws unless degree = 4k+1, k >= 1... k >= 0.
  int k() const;
  /// Size/positivity/duplicate invariants; throws on violation.
  void validate() const;
  bool is_origin(int i) const;
};

struct LayerProfile {
  FieldElement radius_sq;
  std::vector<int> members;              // indices into points
  bool antipodal = false;
  bool constant_weight = true;
  std::vector<FieldElement> inner_products;  // A(X_i) = <x,y>/r^2, x != y, deduped
};

struct ConditionResult {
  bool pass = true;
  std::vector<std::string> witnesses;    // sorted, deterministic
};

struct VerifyReport {
  ConditionResult kernel_pairs;       // K(x,y) = 0 for x != +-y
  ConditionResult weight_formula;     // w(x) = 1/(2K(x,x)), w(0) = 1/K(0,0)
  ConditionResult moeller_count;
  ConditionResult antipodality;
  ConditionResult origin_membership;
  ConditionResult constant_weight;
  ConditionResult design_strength_2k3;  // each layer similar to a (2k+3)-design
  bool overall() const;
};

/// Kernel-based verification (conditions of the minimal-formula
/// characterization plus the structural layer facts).
VerifyReport verify_mysovskikh(const CandidateFormula& formula);

/// Independent oracle: exact monomial exactness through degree maxdeg.
bool verify_direct(const CandidateFormula& formula, int maxdeg);

/// Groups non-origin points into concentric layers (exact radius-squared
/// equality) with antipodality, weight-constancy and inner-product data.
std::vector<LayerProfile> layer_analysis(const CandidateFormula& formula);

bool formula_has_origin(const CandidateFormula& formula);

/// Gegenbauer design criterion: X on one sphere of squared radius r2 is a
/// t-design iff sum_{x,y in X} C_j^{((d-2)/2)}(<x,y>/r2) = 0 for every
/// j = 1..t. For d = 2 the same test runs with Chebyshev T_j (the
/// lambda -> 0 limit). This is the definition of design strength in use.
bool design_strength(const std::vector<std::vector<FieldElement>>& points,
                     const FieldElement& radius_sq, int d, int t);

/// Larman-Rogers-Seidel products: for each i,
/// prod_{j != i} a_j^2 / (a_j^2 - a_i^2), with an is-integer flag.
std::vector<std::pair<Rational, bool>> lrs_ratios(const std::vector<Rational>& distances_sq);

/// Combinatorial preconditions for the rational-layer argument.
struct RationalityReport {
  int p = 0, d = 0;
  mpz_class nonorigin_count;   // supplied N, or the theoretical count
  Rational pigeonhole_share;   // nonorigin_count / p
  mpz_class dgs_threshold;     // 4 binom(d+2p-2, 2p-1) + 2
  bool pigeonhole_ok = false;  // share >= threshold
  bool dimension_ok = false;   // d >= 4p^2 - 2p + 1
  bool elimination_applicable() const { return pigeonhole_ok && dimension_ok; }
};
RationalityReport rationality_preconditions(int p, int d,
                                            std::optional<mpz_class> point_count = std::nullopt);

}  // namespace cubcert
