#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "cubcert/certify.hpp"
#include "cubcert/kernels.hpp"
#include "cubcert/quadrature.hpp"
#include "cubcert/verifier.hpp"

namespace cubcert {

/// Raised on malformed input documents; the message names the offending
/// field. The CLI maps it to exit code 2.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// All machine formats carry exact numbers as strings ("p/q") or residue
// coefficient arrays; decimal embeddings appear only in "approx" fields.
// nlohmann::json orders object keys, so serialization is deterministic.

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json field_element_to_json(const FieldElement& e);

/// Candidate formula document:
/// { "dimension", "degree", "integral", "field"?: {"modulus": [..],
///   "generator": "c", "embedding"?: ["lo","hi"]}, "points": [[entry..]..],
///   "weights": [{"value": entry, "unitExp": int}..] }
/// where entry is "p/q" or a residue coefficient array. Without "field"
/// (or without "embedding") rational coordinates / the largest real root
/// are assumed.
CandidateFormula candidate_from_json(const nlohmann::json& j);
nlohmann::json candidate_to_json(const CandidateFormula& f);
CandidateFormula load_candidate(const std::string& path);

nlohmann::json verify_report_to_json(const VerifyReport& report,
                                     const std::vector<LayerProfile>& layers, bool has_origin,
                                     bool direct_pass, int direct_maxdeg);

nlohmann::json certificate_to_json(const Certificate& cert, bool with_timestamp = false);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json layers_to_json(int k, const std::vector<LayerData>& layers);

nlohmann::json kernel_to_json(const KernelRep& kernel);
nlohmann::json kernel_to_json(const XuKernel& kernel);

}  // namespace cubcert
