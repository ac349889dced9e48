// cubcert: exact construction, verification and nonexistence certification
// for minimal cubature formulas of degree 4k+1 over the spherically
// symmetric integral with weight sqrt(|x|^2-1) |x|^{-(4k+d+2)}.
//
// Exit codes: 0 success (verify: pass / certify: all nonexistence),
//             1 failed verification / any inconclusive certificate,
//             2 invalid input (arguments, parse errors, preconditions).

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cubcert/formats.hpp"
#include "cubcert/version.hpp"

using namespace cubcert;

namespace {

int worker_count(int from_flag) {
  if (from_flag > 0) return from_flag;
  if (const char* env = std::getenv("CUBCERT_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw FormatError("cannot open output file " + path);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cubature kernel, verification and nonexistence toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // minpoly
  int minpoly_p = 0;
  auto* cmd_minpoly = app.add_subcommand("minpoly", "minimal polynomial of cos(2*pi/p)");
  cmd_minpoly->add_option("p", minpoly_p, "odd prime")->required();

  // radii
  int radii_k = 0;
  std::string radii_out;
  auto* cmd_radii = app.add_subcommand("radii", "Gaussian layer data for degree 4k+1");
  cmd_radii->add_option("k", radii_k, "half-degree index (2k+1 must be prime)")->required();
  cmd_radii->add_option("--out", radii_out, "output path (default: stdout)");

  // kernel
  int kernel_k = 0, kernel_d = 0;
  std::string kernel_form = "both", kernel_out;
  auto* cmd_kernel = app.add_subcommand("kernel", "dump kernel data as JSON");
  cmd_kernel->add_option("--k", kernel_k, "half-degree index")->required();
  cmd_kernel->add_option("--d", kernel_d, "dimension (>= 3)")->required();
  cmd_kernel->add_option("--form", kernel_form, "moment | closed | both (default both)");
  cmd_kernel->add_option("--out", kernel_out, "output path (default: stdout)");

  // verify
  std::string verify_path, verify_out;
  auto* cmd_verify = app.add_subcommand("verify", "verify a candidate formula file");
  cmd_verify->add_option("file", verify_path, "candidate JSON file")->required();
  cmd_verify->add_option("--out", verify_out, "output path (default: stdout)");

  // certify
  int certify_k = 0, certify_d = -1, certify_dmin = -1, certify_dmax = -1;
  int certify_n = 2, certify_ncap = 64, certify_workers = 0;
  std::string certify_pilo, certify_pihi, certify_out, certify_gap_route = "auto";
  bool certify_timestamp = false;
  std::string certify_replay;
  auto* cmd_certify = app.add_subcommand("certify", "emit nonexistence certificates");
  cmd_certify->add_option("--k", certify_k, "half-degree index (2k+1 prime)");
  cmd_certify->add_option("--d", certify_d, "single dimension");
  cmd_certify->add_option("--dmin", certify_dmin, "range start");
  cmd_certify->add_option("--dmax", certify_dmax, "range end");
  cmd_certify->add_option("--n", certify_n, "starting sine-series depth (default 2)");
  cmd_certify->add_option("--n-cap", certify_ncap, "refinement cap (default 64)");
  cmd_certify->add_option("--pi-lo", certify_pilo, "lower pi bracket (decimal or p/q)");
  cmd_certify->add_option("--pi-hi", certify_pihi, "upper pi bracket (decimal or p/q)");
  cmd_certify->add_option("--gap-route", certify_gap_route,
                          "auto | interval (force the interval-only gap route)");
  cmd_certify->add_option("--workers", certify_workers,
                          "parallel workers (env CUBCERT_WORKERS as fallback)");
  cmd_certify->add_flag("--timestamp", certify_timestamp, "include a timestamp field");
  cmd_certify->add_option("--out", certify_out, "output path (default: stdout)");
  cmd_certify->add_option("--replay", certify_replay,
                          "re-verify a certificate JSONL stream instead of certifying");

  // design-check
  std::string design_path;
  int design_t = 0;
  auto* cmd_design = app.add_subcommand("design-check",
                                        "check spherical design strength of one layer");
  cmd_design->add_option("file", design_path, "candidate JSON file (single-layer points)")
      ->required();
  cmd_design->add_option("--t", design_t, "strength to test")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_minpoly->parsed()) {
      std::cout << to_string(minimal_poly_cos(minpoly_p)) << "\n";
      return 0;
    }

    if (cmd_radii->parsed()) {
      auto layers = gauss_layers(radii_k);
      std::ofstream file;
      open_out(file, radii_out) << layers_to_json(radii_k, layers).dump(2) << "\n";
      return 0;
    }

    if (cmd_kernel->parsed()) {
      nlohmann::json out;
      if (kernel_form == "moment" || kernel_form == "both")
        out["moment"] = kernel_to_json(build_kernel(xu_full_moments(kernel_k), kernel_d, kernel_k));
      if (kernel_form == "closed" || kernel_form == "both")
        out["closed"] = kernel_to_json(xu_kernel(kernel_d, kernel_k));
      if (out.empty()) throw FormatError("kernel: --form must be moment, closed or both");
      std::ofstream file;
      open_out(file, kernel_out) << out.dump(2) << "\n";
      return 0;
    }

    if (cmd_verify->parsed()) {
      CandidateFormula f = load_candidate(verify_path);
      VerifyReport report = verify_mysovskikh(f);
      auto layers = layer_analysis(f);
      bool direct = verify_direct(f, f.degree);
      nlohmann::json out =
          verify_report_to_json(report, layers, formula_has_origin(f), direct, f.degree);
      std::ofstream file;
      open_out(file, verify_out) << out.dump(2) << "\n";
      return report.overall() ? 0 : 1;
    }

    if (cmd_certify->parsed() && !certify_replay.empty()) {
      std::ifstream in(certify_replay);
      if (!in) throw FormatError("cannot open " + certify_replay);
      std::string line;
      int n = 0, ok = 0;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++n;
        Certificate cert = certificate_from_json(nlohmann::json::parse(line));
        bool good = replay(cert);
        ok += good ? 1 : 0;
        std::cout << "certificate k=" << cert.k << " d=" << cert.d << " "
                  << (good ? "replayed" : "MISMATCH") << "\n";
      }
      if (n == 0) throw FormatError(certify_replay + ": no certificates found");
      std::cout << ok << "/" << n << " certificates replayed\n";
      return ok == n ? 0 : 1;
    }

    if (cmd_certify->parsed()) {
      if (certify_k <= 0) throw FormatError("certify: --k is required");
      if ((certify_d >= 0) == (certify_dmin >= 0 || certify_dmax >= 0))
        throw FormatError("certify: give either --d or --dmin/--dmax");
      int dmin = certify_d >= 0 ? certify_d : certify_dmin;
      int dmax = certify_d >= 0 ? certify_d : certify_dmax;
      if (dmin < 0 || dmax < 0) throw FormatError("certify: incomplete --dmin/--dmax range");

      CertifyOptions options;
      options.n_start = certify_n;
      options.n_cap = certify_ncap;
      if (!certify_pilo.empty()) options.pi_lo = Rational::parse(certify_pilo);
      if (!certify_pihi.empty()) options.pi_hi = Rational::parse(certify_pihi);
      if (certify_gap_route == "interval") options.interval_only = true;
      else if (certify_gap_route != "auto")
        throw FormatError("certify: --gap-route must be auto or interval");

      auto certs = certify_range(certify_k, dmin, dmax, options, worker_count(certify_workers));
      std::ofstream file;
      std::ostream& os = open_out(file, certify_out);
      bool all_nonexistence = true;
      for (const auto& cert : certs) {
        os << certificate_to_json(cert, certify_timestamp).dump() << "\n";
        all_nonexistence = all_nonexistence && cert.verdict == Verdict::nonexistence;
      }
      return all_nonexistence ? 0 : 1;
    }

    if (cmd_design->parsed()) {
      CandidateFormula f = load_candidate(design_path);
      auto layers = layer_analysis(f);
      if (layers.size() != 1)
        throw FormatError("design-check: file must contain exactly one layer, found " +
                          std::to_string(layers.size()));
      std::vector<std::vector<FieldElement>> pts;
      for (int m : layers[0].members) pts.push_back(f.points[static_cast<size_t>(m)]);
      bool pass = design_strength(pts, layers[0].radius_sq, f.dimension, design_t);
      nlohmann::json out{{"strength", design_t},
                         {"pass", pass},
                         {"points", static_cast<int>(pts.size())}};
      std::cout << out.dump(2) << "\n";
      return pass ? 0 : 1;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
