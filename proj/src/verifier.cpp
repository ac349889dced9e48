#include "cubcert/verifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubcert {

namespace {

FieldElement fe_zero(const FieldPtr& f) { return FieldElement::constant(f, Rational(0)); }

FieldElement inner_product(const std::vector<FieldElement>& x, const std::vector<FieldElement>& y) {
  FieldElement s = fe_zero(x.front().field());
  for (size_t i = 0; i < x.size(); ++i) s = s + x[i] * y[i];
  return s;
}

FieldElement norm_sq(const std::vector<FieldElement>& x) { return inner_product(x, x); }

bool is_negation(const std::vector<FieldElement>& x, const std::vector<FieldElement>& y) {
  for (size_t i = 0; i < x.size(); ++i)
    if (!(x[i] == -y[i])) return false;
  return true;
}

void fail(ConditionResult& c, std::string witness) {
  c.pass = false;
  c.witnesses.push_back(std::move(witness));
}

void finish(ConditionResult& c) { std::sort(c.witnesses.begin(), c.witnesses.end()); }

}  // namespace

int CandidateFormula::k() const {
  if (degree < 1 || (degree - 1) % 4 != 0)
    throw std::invalid_argument("CandidateFormula: degree must be 4k+1, got " +
                                std::to_string(degree));
  return (degree - 1) / 4;
}

bool CandidateFormula::is_origin(int i) const {
  for (const auto& c : points[static_cast<size_t>(i)])
    if (!c.is_zero()) return false;
  return true;
}

void CandidateFormula::validate() const {
  if (!field) throw std::invalid_argument("CandidateFormula: missing field");
  if (dimension < 1) throw std::invalid_argument("CandidateFormula: dimension must be >= 1");
  if (points.size() != weights.size())
    throw std::invalid_argument("CandidateFormula: |points| != |weights|");
  if (points.empty()) throw std::invalid_argument("CandidateFormula: no points");
  (void)k();
  for (const auto& pt : points)
    if (static_cast<int>(pt.size()) != dimension)
      throw std::invalid_argument("CandidateFormula: point arity != dimension");
  for (const auto& w : weights)
    if (w.value.sign() <= 0) throw std::invalid_argument("CandidateFormula: nonpositive weight");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      bool same = true;
      for (size_t t = 0; t < points[i].size(); ++t)
        if (!(points[i][t] == points[j][t])) { same = false; break; }
      if (same)
        throw std::invalid_argument("CandidateFormula: duplicate points " + std::to_string(i) +
                                    "," + std::to_string(j));
    }
}

bool formula_has_origin(const CandidateFormula& formula) {
  for (size_t i = 0; i < formula.points.size(); ++i)
    if (formula.is_origin(static_cast<int>(i))) return true;
  return false;
}

std::vector<LayerProfile> layer_analysis(const CandidateFormula& formula) {
  std::vector<LayerProfile> layers;
  for (size_t i = 0; i < formula.points.size(); ++i) {
    if (formula.is_origin(static_cast<int>(i))) continue;
    FieldElement r2 = norm_sq(formula.points[i]);
    LayerProfile* layer = nullptr;
    for (auto& L : layers)
      if (L.radius_sq == r2) { layer = &L; break; }
    if (!layer) {
      layers.push_back(LayerProfile{r2, {}, true, true, {}});
      layer = &layers.back();
    }
    layer->members.push_back(static_cast<int>(i));
  }

  for (auto& L : layers) {
    for (size_t a = 1; a < L.members.size(); ++a) {
      const auto& w0 = formula.weights[static_cast<size_t>(L.members[0])];
      const auto& wa = formula.weights[static_cast<size_t>(L.members[a])];
      if (!(w0.unit == wa.unit && w0.value == wa.value)) L.constant_weight = false;
    }
    for (int i : L.members) {
      bool has_neg = false;
      for (int j : L.members)
        if (is_negation(formula.points[static_cast<size_t>(i)],
                        formula.points[static_cast<size_t>(j)])) {
          has_neg = true;
          break;
        }
      if (!has_neg) { L.antipodal = false; break; }
    }
    for (size_t a = 0; a < L.members.size(); ++a)
      for (size_t b = 0; b < L.members.size(); ++b) {
        if (a == b) continue;
        FieldElement alpha = inner_product(formula.points[static_cast<size_t>(L.members[a])],
                                           formula.points[static_cast<size_t>(L.members[b])]) /
                             L.radius_sq;
        bool seen = false;
        for (const auto& v : L.inner_products)
          if (v == alpha) { seen = true; break; }
        if (!seen) L.inner_products.push_back(alpha);
      }
  }
  return layers;
}

bool design_strength(const std::vector<std::vector<FieldElement>>& points,
                     const FieldElement& radius_sq, int d, int t) {
  if (points.empty()) throw std::invalid_argument("design_strength: empty point set");
  if (d < 2) throw std::invalid_argument("design_strength: d must be >= 2");
  FieldPtr field = points.front().front().field();
  for (const auto& pt : points)
    if (!(norm_sq(pt) == radius_sq))
      throw std::invalid_argument("design_strength: mixed radii");

  auto lift = [&field](const Rational& r) { return FieldElement::constant(field, r); };
  for (int j = 1; j <= t; ++j) {
    QPoly gj = d == 2 ? chebyshev_t(j) : gegenbauer(j, Rational(d - 2, 2));
    FieldElement sum = fe_zero(field);
    for (const auto& x : points)
      for (const auto& y : points)
        sum = sum + gj.eval_with(inner_product(x, y) / radius_sq, lift);
    if (!sum.is_zero()) return false;
  }
  return true;
}

VerifyReport verify_mysovskikh(const CandidateFormula& formula) {
  formula.validate();
  if (formula.integral != "xu-4k1")
    throw std::invalid_argument("verify_mysovskikh: unknown integral '" + formula.integral + "'");
  const int k = formula.k();
  const int d = formula.dimension;
  if (d < 3) throw std::invalid_argument("verify_mysovskikh: kernels need d >= 3");

  VerifyReport report;
  // The closed form needs k >= 1; the moment-driven kernel covers k = 0
  // and the origin branch.
  std::optional<XuKernel> xu;
  if (k >= 1) xu = xu_kernel(d, k);
  KernelRep rep = build_kernel(xu_full_moments(k), d, k);
  auto eval_nonzero = [&](std::span<const FieldElement> a, std::span<const FieldElement> b) {
    return xu ? kernel_eval(*xu, a, b) : kernel_eval(rep, a, b);
  };
  const auto one = FieldElement::constant(formula.field, Rational(1));

  // Condition (i): kernel vanishing over unordered non-antipodal pairs;
  // pairs involving the origin use the K(x, 0) branch.
  for (size_t i = 0; i < formula.points.size(); ++i) {
    for (size_t j = i + 1; j < formula.points.size(); ++j) {
      bool oi = formula.is_origin(static_cast<int>(i));
      bool oj = formula.is_origin(static_cast<int>(j));
      ScaledField v(FieldElement::constant(formula.field, Rational(0)), 0);
      if (oi || oj) {
        v = kernel_eval_origin(rep, formula.field, oi ? formula.points[j] : formula.points[i]);
      } else {
        if (is_negation(formula.points[i], formula.points[j])) continue;
        v = eval_nonzero(formula.points[i], formula.points[j]);
      }
      if (!v.value.is_zero())
        fail(report.kernel_pairs, "K(x_" + std::to_string(i) + ", x_" + std::to_string(j) +
                                      ") = " + v.value.str());
    }
  }

  // Condition (ii): weights against the kernel diagonal; origin uses the
  // moment-driven kernel's m = 0 block.
  for (size_t i = 0; i < formula.points.size(); ++i) {
    const ScaledField& w = formula.weights[i];
    ScaledField kv = formula.is_origin(static_cast<int>(i))
                         ? kernel_eval_origin(rep, formula.field, {})
                         : eval_nonzero(formula.points[i], formula.points[i]);
    Rational factor = formula.is_origin(static_cast<int>(i)) ? Rational(1) : Rational(2);
    if (w.unit + kv.unit != 0) {
      fail(report.weight_formula, "w(x_" + std::to_string(i) + ") unit exponent mismatch");
      continue;
    }
    if (!(w.value * kv.value * factor == one))
      fail(report.weight_formula, "w(x_" + std::to_string(i) + ") != 1/(" +
                                      (factor == Rational(2) ? "2" : "1") + " K(x, x))");
  }

  bool origin = formula_has_origin(formula);
  if (!origin) fail(report.origin_membership, "origin is not a node");

  mpz_class bound = moeller_bound(d, 2 * k, origin);
  if (mpz_class(formula.points.size()) != bound)
    fail(report.moeller_count, "|X| = " + std::to_string(formula.points.size()) +
                                   ", bound = " + bound.get_str());

  auto layers = layer_analysis(formula);
  if (static_cast<int>(layers.size()) != k && k > 0)
    fail(report.moeller_count,
         "layers = " + std::to_string(layers.size()) + ", expected " + std::to_string(k));
  for (size_t li = 0; li < layers.size(); ++li) {
    const auto& L = layers[li];
    if (!L.antipodal) fail(report.antipodality, "layer " + std::to_string(li) + " not antipodal");
    if (!L.constant_weight)
      fail(report.constant_weight, "layer " + std::to_string(li) + " weight not constant");
    std::vector<std::vector<FieldElement>> pts;
    for (int m : L.members) pts.push_back(formula.points[static_cast<size_t>(m)]);
    if (!design_strength(pts, L.radius_sq, d, 2 * k + 3))
      fail(report.design_strength_2k3,
           "layer " + std::to_string(li) + " is not a (2k+3)-design");
  }

  finish(report.kernel_pairs);
  finish(report.weight_formula);
  finish(report.moeller_count);
  finish(report.antipodality);
  finish(report.origin_membership);
  finish(report.constant_weight);
  finish(report.design_strength_2k3);
  return report;
}

bool VerifyReport::overall() const {
  return kernel_pairs.pass && weight_formula.pass && moeller_count.pass && antipodality.pass &&
         origin_membership.pass && constant_weight.pass && design_strength_2k3.pass;
}

namespace {

bool direct_check_rec(const CandidateFormula& formula, std::vector<int>& alpha, int coord,
                      int remaining) {
  if (coord == formula.dimension) {
    long total = 0;
    for (int a : alpha) total += a;
    // Exact moment: sphere average times the radial moment; zero for odd
    // monomials.
    Rational avg = sphere_monomial_average(formula.dimension, alpha);
    ScaledField lhs(FieldElement::constant(formula.field, Rational(0)), 1);
    for (size_t i = 0; i < formula.points.size(); ++i) {
      FieldElement mono = FieldElement::constant(formula.field, Rational(1));
      for (size_t c = 0; c < alpha.size(); ++c)
        mono = mono * formula.points[i][c].pow(alpha[c]);
      lhs = lhs + ScaledField(formula.weights[i].value * mono, formula.weights[i].unit);
    }
    Rational rhs_value =
        avg.is_zero() ? Rational(0) : avg * radial_moment(formula.k(), static_cast<int>(total / 2)).value;
    return lhs.value == FieldElement::constant(formula.field, rhs_value);
  }
  for (int a = 0; a <= remaining; ++a) {
    alpha[static_cast<size_t>(coord)] = a;
    if (!direct_check_rec(formula, alpha, coord + 1, remaining - a)) return false;
  }
  alpha[static_cast<size_t>(coord)] = 0;
  return true;
}

}  // namespace

bool verify_direct(const CandidateFormula& formula, int maxdeg) {
  formula.validate();
  if (formula.integral != "xu-4k1")
    throw std::invalid_argument("verify_direct: unknown integral '" + formula.integral + "'");
  if (maxdeg > formula.degree)
    throw std::out_of_range("verify_direct: moments unavailable beyond the formula degree");
  for (const auto& w : formula.weights)
    if (w.unit != 1)
      throw std::invalid_argument("verify_direct: weights must carry unit exponent 1");
  std::vector<int> alpha(static_cast<size_t>(formula.dimension), 0);
  return direct_check_rec(formula, alpha, 0, maxdeg);
}

std::vector<std::pair<Rational, bool>> lrs_ratios(const std::vector<Rational>& distances_sq) {
  for (size_t i = 0; i < distances_sq.size(); ++i) {
    if (distances_sq[i].sign() <= 0)
      throw std::invalid_argument("lrs_ratios: distances must be positive");
    for (size_t j = i + 1; j < distances_sq.size(); ++j)
      if (distances_sq[i] == distances_sq[j])
        throw std::invalid_argument("lrs_ratios: duplicate distances");
  }
  std::vector<std::pair<Rational, bool>> out;
  for (size_t i = 0; i < distances_sq.size(); ++i) {
    Rational prod(1);
    for (size_t j = 0; j < distances_sq.size(); ++j) {
      if (j == i) continue;
      prod *= distances_sq[j] / (distances_sq[j] - distances_sq[i]);
    }
    out.emplace_back(prod, prod.is_integer());
  }
  return out;
}

RationalityReport rationality_preconditions(int p, int d, std::optional<mpz_class> point_count) {
  if (p < 2) throw std::invalid_argument("rationality_preconditions: p must be >= 2");
  RationalityReport r;
  r.p = p;
  r.d = d;
  r.nonorigin_count = point_count ? *point_count : point_count_nonorigin(d, p);
  r.pigeonhole_share = Rational(r.nonorigin_count, mpz_class(p));
  r.dgs_threshold = 4 * binomial(d + 2 * p - 2, 2 * p - 1) + 2;
  r.pigeonhole_ok = r.pigeonhole_share >= Rational(r.dgs_threshold);
  r.dimension_ok = d >= 4 * p * p - 2 * p + 1;
  return r;
}

}  // namespace cubcert
