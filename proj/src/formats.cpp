#include "cubcert/formats.hpp"

#include <chrono>
#include <fstream>

#include "cubcert/sturm.hpp"
#include "cubcert/version.hpp"

namespace cubcert {

using nlohmann::json;

namespace {

json qpoly_to_json(const QPoly& p) {
  json out = json::array();
  for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).str());
  return out;
}

QPoly qpoly_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected a coefficient array");
  std::vector<Rational> coeffs;
  for (size_t i = 0; i < j.size(); ++i)
    coeffs.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return QPoly(std::move(coeffs));
}

json scaled_rational_to_json(const ScaledRational& s) {
  return json{{"value", s.value.str()}, {"unitExp", s.unit}};
}

FieldElement entry_from_json(const json& j, const FieldPtr& field, const std::string& where) {
  if (j.is_string())
    return FieldElement::constant(field, rational_from_json(j, where));
  if (j.is_array()) return FieldElement(field, qpoly_from_json(j, where));
  throw FormatError(where + ": expected \"p/q\" or a residue coefficient array");
}

json entry_to_json(const FieldElement& e) {
  if (auto r = e.as_rational()) return r->str();
  return qpoly_to_json(e.residue());
}

const json& need(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(where + ": missing \"" + key + "\"");
  return *it;
}

int need_int(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_number_integer()) throw FormatError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

}  // namespace

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw FormatError(where + ": exact numbers must be strings like \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw FormatError(where + ": " + e.what());
  }
}

json field_element_to_json(const FieldElement& e) {
  json out;
  out["residue"] = qpoly_to_json(e.residue());
  if (auto r = e.as_rational()) out["rational"] = r->str();
  out["approx"] = e.approx_decimal(50);
  return out;
}

CandidateFormula candidate_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("candidate: expected a JSON object");
  CandidateFormula f;
  f.dimension = need_int(j, "dimension", "candidate");
  f.degree = need_int(j, "degree", "candidate");
  const json& integral = need(j, "integral", "candidate");
  if (!integral.is_string()) throw FormatError("candidate.integral: expected a string");
  f.integral = integral.get<std::string>();

  if (auto it = j.find("field"); it != j.end() && !it->is_null()) {
    const json& fj = *it;
    QPoly modulus = qpoly_from_json(need(fj, "modulus", "candidate.field"),
                                    "candidate.field.modulus");
    std::string gen = "c";
    if (auto g = fj.find("generator"); g != fj.end()) {
      if (!g->is_string()) throw FormatError("candidate.field.generator: expected a string");
      gen = g->get<std::string>();
    }
    IntervalRat bracket(Rational(0), Rational(0));
    if (auto e = fj.find("embedding"); e != fj.end()) {
      if (!e->is_array() || e->size() != 2)
        throw FormatError("candidate.field.embedding: expected [\"lo\",\"hi\"]");
      bracket = IntervalRat(rational_from_json((*e)[0], "candidate.field.embedding[0]"),
                            rational_from_json((*e)[1], "candidate.field.embedding[1]"));
    } else {
      // Default embedding: the largest real root of the modulus.
      Rational bound = cauchy_root_bound(modulus);
      auto roots = isolate_real_roots(modulus, IntervalRat(-bound, bound));
      if (roots.empty())
        throw FormatError("candidate.field.modulus: no real roots; supply \"embedding\"");
      bracket = roots.back();
    }
    try {
      f.field = NumberField::create(std::move(modulus), gen, bracket);
    } catch (const std::exception& e) {
      throw FormatError(std::string("candidate.field: ") + e.what());
    }
  } else {
    f.field = NumberField::rationals();
  }

  const json& pts = need(j, "points", "candidate");
  if (!pts.is_array()) throw FormatError("candidate.points: expected an array");
  for (size_t i = 0; i < pts.size(); ++i) {
    const json& row = pts[i];
    std::string where = "candidate.points[" + std::to_string(i) + "]";
    if (!row.is_array()) throw FormatError(where + ": expected an array of entries");
    std::vector<FieldElement> pt;
    for (size_t c = 0; c < row.size(); ++c)
      pt.push_back(entry_from_json(row[c], f.field, where + "[" + std::to_string(c) + "]"));
    f.points.push_back(std::move(pt));
  }

  const json& ws = need(j, "weights", "candidate");
  if (!ws.is_array()) throw FormatError("candidate.weights: expected an array");
  for (size_t i = 0; i < ws.size(); ++i) {
    const json& w = ws[i];
    std::string where = "candidate.weights[" + std::to_string(i) + "]";
    if (!w.is_object()) throw FormatError(where + ": expected {\"value\", \"unitExp\"}");
    FieldElement value = entry_from_json(need(w, "value", where), f.field, where + ".value");
    f.weights.emplace_back(value, need_int(w, "unitExp", where));
  }
  try {
    f.validate();
  } catch (const std::exception& e) {
    throw FormatError(std::string("candidate: ") + e.what());
  }
  return f;
}

json candidate_to_json(const CandidateFormula& f) {
  json out;
  out["dimension"] = f.dimension;
  out["degree"] = f.degree;
  out["integral"] = f.integral;
  if (!f.field->is_trivial()) {
    out["field"] = json{{"modulus", qpoly_to_json(f.field->modulus())},
                        {"generator", f.field->generator()},
                        {"embedding", json::array({f.field->root_bracket().lo().str(),
                                                   f.field->root_bracket().hi().str()})}};
  }
  out["points"] = json::array();
  for (const auto& pt : f.points) {
    json row = json::array();
    for (const auto& c : pt) row.push_back(entry_to_json(c));
    out["points"].push_back(std::move(row));
  }
  out["weights"] = json::array();
  for (const auto& w : f.weights)
    out["weights"].push_back(json{{"value", entry_to_json(w.value)}, {"unitExp", w.unit}});
  return out;
}

CandidateFormula load_candidate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
  return candidate_from_json(j);
}

namespace {

json condition_to_json(const ConditionResult& c) {
  return json{{"pass", c.pass}, {"witnesses", c.witnesses}};
}

}  // namespace

json verify_report_to_json(const VerifyReport& report, const std::vector<LayerProfile>& layers,
                           bool has_origin, bool direct_pass, int direct_maxdeg) {
  json out;
  out["overall"] = report.overall();
  out["conditions"] = json{{"kernelPairs", condition_to_json(report.kernel_pairs)},
                           {"weightFormula", condition_to_json(report.weight_formula)},
                           {"moellerCount", condition_to_json(report.moeller_count)},
                           {"antipodality", condition_to_json(report.antipodality)},
                           {"originMembership", condition_to_json(report.origin_membership)},
                           {"constantWeight", condition_to_json(report.constant_weight)},
                           {"designStrength", condition_to_json(report.design_strength_2k3)}};
  out["hasOrigin"] = has_origin;
  out["directCheck"] = json{{"pass", direct_pass}, {"maxDegree", direct_maxdeg}};
  out["layers"] = json::array();
  for (const auto& L : layers) {
    json lj;
    lj["radiusSq"] = field_element_to_json(L.radius_sq);
    lj["members"] = L.members;
    lj["antipodal"] = L.antipodal;
    lj["constantWeight"] = L.constant_weight;
    lj["innerProducts"] = json::array();
    for (const auto& ip : L.inner_products) lj["innerProducts"].push_back(entry_to_json(ip));
    out["layers"].push_back(std::move(lj));
  }
  return out;
}

json certificate_to_json(const Certificate& cert, bool with_timestamp) {
  json evidence;
  evidence["note"] = cert.note;
  if (cert.elimination) {
    json e;
    e["gcd"] = qpoly_to_json(cert.elimination->gcd);
    e["sturmRootsInUnit"] = cert.elimination->roots_in_unit;
    json rr = json::array();
    for (const auto& r : cert.elimination->rational_roots_in_unit) rr.push_back(r.str());
    e["rationalRootsInUnit"] = std::move(rr);
    evidence["elimination"] = std::move(e);
  }
  if (cert.gap) {
    json g;
    g["modulus"] = qpoly_to_json(cert.gap->modulus);
    g["residue"] = qpoly_to_json(cert.gap->residue);
    g["exactIsRational"] = cert.gap->exact_is_rational;
    g["exactIsInteger"] = cert.gap->exact_is_integer;
    g["intervalExcludes"] = cert.gap->interval_excludes;
    if (cert.gap->n_used > 0) {
      g["interval"] = json::array(
          {cert.gap->interval.lo().str(), cert.gap->interval.hi().str()});
      g["below"] = cert.gap->below.get_str();
      g["above"] = cert.gap->above.get_str();
    }
    evidence["gap"] = std::move(g);
  }

  json out;
  out["k"] = cert.k;
  out["d"] = cert.d;
  out["route"] = route_name(cert.route);
  out["verdict"] = verdict_name(cert.verdict);
  out["evidence"] = std::move(evidence);
  out["params"] = json{{"n", cert.gap ? cert.gap->n_used : 0},
                       {"piLo", cert.pi_lo.str()},
                       {"piHi", cert.pi_hi.str()}};
  out["version"] = cert.version;
  if (with_timestamp) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    out["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
  }
  return out;
}

Certificate certificate_from_json(const json& j) {
  Certificate cert;
  cert.k = need_int(j, "k", "certificate");
  cert.d = need_int(j, "d", "certificate");
  std::string route = need(j, "route", "certificate").get<std::string>();
  if (route == "rational-elimination") cert.route = Route::rational_elimination;
  else if (route == "integer-gap-exact") cert.route = Route::integer_gap_exact;
  else if (route == "integer-gap-interval") cert.route = Route::integer_gap_interval;
  else if (route == "unsupported") cert.route = Route::unsupported;
  else throw FormatError("certificate.route: unknown route " + route);
  std::string verdict = need(j, "verdict", "certificate").get<std::string>();
  if (verdict == "nonexistence") cert.verdict = Verdict::nonexistence;
  else if (verdict == "inconclusive") cert.verdict = Verdict::inconclusive;
  else throw FormatError("certificate.verdict: unknown verdict " + verdict);

  const json& params = need(j, "params", "certificate");
  cert.pi_lo = rational_from_json(need(params, "piLo", "certificate.params"),
                                  "certificate.params.piLo");
  cert.pi_hi = rational_from_json(need(params, "piHi", "certificate.params"),
                                  "certificate.params.piHi");
  cert.version = need(j, "version", "certificate").get<std::string>();

  const json& evidence = need(j, "evidence", "certificate");
  if (auto it = evidence.find("note"); it != evidence.end()) cert.note = it->get<std::string>();
  if (auto it = evidence.find("elimination"); it != evidence.end()) {
    EliminationEvidence e;
    e.gcd = qpoly_from_json(need(*it, "gcd", "certificate.evidence.elimination"),
                            "certificate.evidence.elimination.gcd");
    e.roots_in_unit = need_int(*it, "sturmRootsInUnit", "certificate.evidence.elimination");
    for (const auto& r : need(*it, "rationalRootsInUnit", "certificate.evidence.elimination"))
      e.rational_roots_in_unit.push_back(
          rational_from_json(r, "certificate.evidence.elimination.rationalRootsInUnit[]"));
    cert.elimination = std::move(e);
  }
  if (auto it = evidence.find("gap"); it != evidence.end()) {
    GapEvidence g;
    g.modulus = qpoly_from_json(need(*it, "modulus", "certificate.evidence.gap"),
                                "certificate.evidence.gap.modulus");
    g.residue = qpoly_from_json(need(*it, "residue", "certificate.evidence.gap"),
                                "certificate.evidence.gap.residue");
    g.exact_is_rational = need(*it, "exactIsRational", "certificate.evidence.gap").get<bool>();
    g.exact_is_integer = need(*it, "exactIsInteger", "certificate.evidence.gap").get<bool>();
    g.interval_excludes = need(*it, "intervalExcludes", "certificate.evidence.gap").get<bool>();
    g.n_used = need_int(need(j, "params", "certificate"), "n", "certificate.params");
    if (g.n_used > 0) {
      const json& iv = need(*it, "interval", "certificate.evidence.gap");
      g.interval = IntervalRat(rational_from_json(iv[0], "certificate.evidence.gap.interval[0]"),
                               rational_from_json(iv[1], "certificate.evidence.gap.interval[1]"));
      g.below = mpz_class(need(*it, "below", "certificate.evidence.gap").get<std::string>());
      g.above = mpz_class(need(*it, "above", "certificate.evidence.gap").get<std::string>());
    }
    cert.gap = std::move(g);
  }
  return cert;
}

json layers_to_json(int k, const std::vector<LayerData>& layers) {
  json out;
  out["k"] = k;
  const FieldPtr& field = layers.front().radius_sq.field();
  out["field"] = json{{"modulus", qpoly_to_json(field->modulus())},
                      {"generator", field->generator()}};
  out["layers"] = json::array();
  for (const auto& L : layers) {
    json lj;
    lj["index"] = L.index;
    lj["radiusSq"] = field_element_to_json(L.radius_sq);
    lj["node"] = field_element_to_json(L.node);
    lj["weightSum"] = json{{"value", entry_to_json(L.weight_sum.value)},
                           {"unitExp", L.weight_sum.unit},
                           {"approx", L.weight_sum.value.approx_decimal(50)}};
    lj["nodeWeight"] = json{{"value", entry_to_json(L.node_weight.value)},
                            {"unitExp", L.node_weight.unit},
                            {"approx", L.node_weight.value.approx_decimal(50)}};
    out["layers"].push_back(std::move(lj));
  }
  return out;
}

json kernel_to_json(const KernelRep& kernel) {
  json out;
  out["type"] = "moment-kernel";
  out["k"] = kernel.k;
  out["d"] = kernel.d;
  out["prefactor"] = scaled_rational_to_json(kernel.prefactor);
  out["radial"] = json::array();
  for (const auto& basis : kernel.radial) {
    json bj;
    bj["polys"] = json::array();
    bj["normSq"] = json::array();
    for (const auto& p : basis.polys) bj["polys"].push_back(qpoly_to_json(p));
    for (const auto& n : basis.norm_sq) bj["normSq"].push_back(scaled_rational_to_json(n));
    out["radial"].push_back(std::move(bj));
  }
  out["angularEven"] = json::array();
  for (const auto& a : kernel.angular_even) out["angularEven"].push_back(qpoly_to_json(a));
  return out;
}

json kernel_to_json(const XuKernel& kernel) {
  json out;
  out["type"] = "closed-form-kernel";
  out["k"] = kernel.k;
  out["d"] = kernel.d;
  out["prefactor"] = scaled_rational_to_json(kernel.prefactor);
  out["chebuEven"] = json::array();
  for (const auto& p : kernel.chebu_even) out["chebuEven"].push_back(qpoly_to_json(p));
  out["gegEven"] = json::array();
  for (const auto& p : kernel.geg_even) out["gegEven"].push_back(qpoly_to_json(p));
  return out;
}

}  // namespace cubcert
