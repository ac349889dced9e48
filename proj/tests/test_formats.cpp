#include <doctest.h>

#include <fstream>

#include "cubcert/formats.hpp"
#include "test_support.hpp"

using namespace cubcert;

namespace {

std::string fixture(const std::string& name) {
  return std::string(CUBCERT_SOURCE_DIR) + "/tests/fixtures/" + name;
}

std::string golden(const std::string& name) {
  return std::string(CUBCERT_SOURCE_DIR) + "/golden/" + name;
}

}  // namespace

TEST_SUITE("formats") {

TEST_CASE("candidate round-trip is identity") {
  for (const char* name : {"origin_only_k0_d3.json", "icosahedron_k1_d3.json",
                           "cross_polytope_d3.json", "two_layer_k2_d3.json", "hexagon_d2.json"}) {
    CandidateFormula f = load_candidate(fixture(name));
    nlohmann::json out = candidate_to_json(f);
    CandidateFormula g = candidate_from_json(out);
    CHECK(f.dimension == g.dimension);
    CHECK(f.degree == g.degree);
    CHECK(f.integral == g.integral);
    REQUIRE(f.points.size() == g.points.size());
    for (size_t i = 0; i < f.points.size(); ++i)
      for (size_t c = 0; c < f.points[i].size(); ++c)
        CHECK(f.points[i][c] == FieldElement(f.field, g.points[i][c].residue()));
    for (size_t i = 0; i < f.weights.size(); ++i) {
      CHECK(f.weights[i].unit == g.weights[i].unit);
      CHECK(f.weights[i].value == FieldElement(f.field, g.weights[i].value.residue()));
    }
    // serialized form is byte-stable
    CHECK(out.dump() == candidate_to_json(g).dump());
  }
}

TEST_CASE("parse errors carry the offending path") {
  CHECK_THROWS_WITH_AS(load_candidate(fixture("malformed.json")),
                       doctest::Contains("malformed.json"), FormatError);

  nlohmann::json bad = nlohmann::json::parse(std::ifstream(fixture("origin_only_k0_d3.json")));
  bad.erase("degree");
  CHECK_THROWS_WITH_AS(candidate_from_json(bad), doctest::Contains("degree"), FormatError);

  bad = nlohmann::json::parse(std::ifstream(fixture("origin_only_k0_d3.json")));
  bad["points"][0][1] = "7/q";
  CHECK_THROWS_WITH_AS(candidate_from_json(bad), doctest::Contains("points[0][1]"), FormatError);

  bad = nlohmann::json::parse(std::ifstream(fixture("origin_only_k0_d3.json")));
  bad["weights"][0]["value"] = "-1/4";
  CHECK_THROWS_AS(candidate_from_json(bad), FormatError);  // positivity is structural
}

TEST_CASE("certificate serialization round-trips through replay") {
  for (Certificate cert : {certify(3, 20), certify(3, 31), certify(3, 2), certify(1, 6)}) {
    nlohmann::json j = certificate_to_json(cert);
    Certificate back = certificate_from_json(j);
    CHECK(replay(back) == replay(cert));
    CHECK(certificate_to_json(back).dump() == j.dump());
    CHECK(j.find("timestamp") == j.end());
  }
  CHECK(certificate_to_json(certify(3, 20), /*with_timestamp=*/true).contains("timestamp"));
}

TEST_CASE("layer dump carries exact residues and labeled approximations") {
  nlohmann::json j = layers_to_json(3, gauss_layers(3));
  CHECK(j["layers"].size() == 3);
  CHECK(j["field"]["modulus"] == nlohmann::json({"-1/8", "-1/2", "1/2", "1"}));
  for (const auto& L : j["layers"]) {
    CHECK(L["radiusSq"].contains("residue"));
    CHECK(L["radiusSq"].contains("approx"));
    CHECK(L["weightSum"]["unitExp"] == 1);
  }
  // 50-digit embeddings
  std::string approx = j["layers"][0]["radiusSq"]["approx"].get<std::string>();
  CHECK(approx.substr(0, 9) == "1.2319141");
  CHECK(approx.size() >= 50);
}

TEST_CASE("kernel dumps match the golden files") {
  nlohmann::json moment = kernel_to_json(build_kernel(xu_full_moments(1), 3, 1));
  nlohmann::json closed = kernel_to_json(xu_kernel(5, 2));
  std::ifstream m(golden("kernel_moment_k1_d3.json"));
  std::ifstream c(golden("kernel_closed_k2_d5.json"));
  REQUIRE(m.good());
  REQUIRE(c.good());
  CHECK(moment == nlohmann::json::parse(m));
  CHECK(closed == nlohmann::json::parse(c));
}

TEST_CASE("certificate dumps are deterministic") {
  Certificate cert = certify(3, 25);
  CHECK(certificate_to_json(cert).dump() == certificate_to_json(certify(3, 25)).dump());
}

}  // TEST_SUITE
