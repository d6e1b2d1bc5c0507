// strata: Schmidt decomposition, stratum chart coordinates, embedding
// inversion and dimension certification from the command line. Every
// subcommand emits a deterministic report envelope; --json switches from
// the human formatting to the raw payload.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "strata/embedding.hpp"
#include "strata/geometry.hpp"
#include "strata/io.hpp"
#include "strata/lemma.hpp"
#include "strata/orbits.hpp"
#include "strata/states.hpp"
#include "strata/version.hpp"

namespace {

using strata::io::json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCertificationFailed = 2;

void emit(const strata::io::ReportEnvelope& report, bool as_json) {
  if (as_json)
    std::cout << report.to_json().dump(2) << '\n';
  else
    std::cout << report.human_readable();
}

int emit_error(strata::io::ReportEnvelope report, const std::string& kind,
               const std::string& message, bool as_json) {
  report.result = json::object();
  report.result["error"] = {{"kind", kind}, {"message", message}};
  emit(report, as_json);
  return kExitInputError;
}

json pivot_cols_one_based(const std::vector<int>& pivots) {
  json out = json::array();
  for (int p : pivots) out.push_back(p + 1);
  return out;
}

json grassmann_to_json(const strata::GrassmannChartPoint& g) {
  json out;
  out["ambient_dim"] = g.ambient_dim();
  out["k"] = g.k();
  out["pivot_cols"] = pivot_cols_one_based(g.pivot_cols());
  out["coeffs"] = strata::io::matrix_to_json(g.coeffs());
  return out;
}

json stratum_point_to_json(const strata::StratumPoint& p) {
  json out;
  out["k"] = p.k();
  out["left"] = grassmann_to_json(p.left());
  json core;
  core["matrix"] = strata::io::matrix_to_json(p.core().representative());
  core["det_modulus"] = p.core().det_modulus();
  out["core"] = core;
  out["right"] = grassmann_to_json(p.right());
  return out;
}

json certificate_to_json(const strata::DimensionCertificate& cert) {
  json out;
  out["claimed"] = cert.claimed;
  out["measured"] = cert.measured;
  out["gap_ratio"] = std::isfinite(cert.gap_ratio) ? json(cert.gap_ratio) : json("inf");
  out["singular_values"] = strata::io::real_vector_to_json(cert.singular_values);
  out["passed"] = cert.passed;
  return out;
}

struct SchmidtArgs {
  std::string state_path;
  double tol = strata::kDefaultRankTol;
  bool as_json = false;
};

int run_schmidt(const SchmidtArgs& args) {
  strata::io::ReportEnvelope report;
  report.command = "schmidt";
  report.inputs["state_file"] = args.state_path;
  report.inputs["tol"] = args.tol;
  try {
    auto loaded = strata::io::load_state_file(args.state_path);
    report.warnings = loaded.warnings;
    const auto sd = strata::schmidt_decompose(loaded.state, args.tol);
    report.result["n"] = loaded.state.left_dim();
    report.result["m"] = loaded.state.right_dim();
    report.result["factors_swapped"] = loaded.state.swapped();
    report.result["rank"] = sd.rank();
    report.result["coefficients"] = strata::io::real_vector_to_json(sd.coefficients);
    report.result["degenerate"] = sd.degenerate;
    report.result["left_frame"] = strata::io::matrix_to_json(sd.left_frame);
    report.result["right_frame"] = strata::io::matrix_to_json(sd.right_frame);
    if (sd.degenerate)
      report.warnings.push_back("degenerate Schmidt coefficients (gap below 1e-8)");
    emit(report, args.as_json);
    return kExitOk;
  } catch (const strata::Error& e) {
    return emit_error(report, e.kind(), e.what(), args.as_json);
  }
}

struct InvertEmbedArgs {
  std::string state_path;
  std::vector<int> sample;  // n m k
  std::uint64_t seed = 0;
  bool seed_given = false;
  double tol = strata::kDefaultRankTol;
  bool as_json = false;
};

int run_invert_embed(const InvertEmbedArgs& args) {
  strata::io::ReportEnvelope report;
  report.command = "invert-embed";
  report.inputs["tol"] = args.tol;
  try {
    std::optional<strata::PureState> state;
    if (!args.sample.empty()) {
      if (!args.seed_given)
        throw strata::Error("UsageError", "--sample requires an explicit --seed");
      report.inputs["sample"] = {{"n", args.sample[0]},
                                 {"m", args.sample[1]},
                                 {"k", args.sample[2]}};
      report.inputs["seed"] = args.seed;
      state = strata::sample_state(args.sample[0], args.sample[1], args.sample[2],
                                   args.seed);
    } else {
      if (args.state_path.empty())
        throw strata::Error("UsageError", "need a state file or --sample n m k");
      report.inputs["state_file"] = args.state_path;
      auto loaded = strata::io::load_state_file(args.state_path);
      report.warnings = loaded.warnings;
      state = loaded.state;
    }

    const auto point = strata::to_stratum_point(*state, args.tol);
    const double fidelity = state->fidelity(strata::embed(point));
    report.result["stratum_point"] = stratum_point_to_json(point);
    report.result["roundtrip_fidelity"] = fidelity;
    emit(report, args.as_json);
    return fidelity >= 1.0 - 1e-8 ? kExitOk : kExitCertificationFailed;
  } catch (const strata::Error& e) {
    return emit_error(report, e.kind(), e.what(), args.as_json);
  }
}

struct CertifyArgs {
  std::vector<int> stratum;  // n m k
  std::vector<int> orbit;    // n m k
  std::vector<double> mu;
  std::uint64_t seed = 0;
  double fd_step = strata::kDefaultFdStep;
  bool as_json = false;
};

int run_certify(const CertifyArgs& args) {
  strata::io::ReportEnvelope report;
  report.command = "certify";
  report.inputs["seed"] = args.seed;
  report.inputs["fd_step"] = args.fd_step;
  try {
    strata::DimensionCertificate cert;
    if (!args.stratum.empty()) {
      report.inputs["stratum"] = {{"n", args.stratum[0]},
                                  {"m", args.stratum[1]},
                                  {"k", args.stratum[2]}};
      cert = strata::certify_stratum_dimension(args.stratum[0], args.stratum[1],
                                               args.stratum[2], args.seed, args.fd_step);
    } else if (!args.orbit.empty()) {
      if (static_cast<int>(args.mu.size()) != args.orbit[2])
        throw strata::Error("UsageError", "--mu needs exactly k values");
      report.inputs["orbit"] = {{"n", args.orbit[0]},
                                {"m", args.orbit[1]},
                                {"k", args.orbit[2]}};

      strata::RVec mu(args.orbit[2]);
      for (int i = 0; i < args.orbit[2]; ++i) mu(i) = args.mu[i];
      report.inputs["mu"] = strata::io::real_vector_to_json(mu);
      double adjustment = 0.0;
      const auto spec = strata::OrbitSpec::normalized(args.orbit[0], args.orbit[1],
                                                      std::move(mu), &adjustment);
      if (adjustment > 1e-9)
        report.warnings.push_back("coefficients renormalized to unit square-sum");
      cert = strata::certify_orbit_dimension(spec, args.seed, args.fd_step);
    } else {
      throw strata::Error("UsageError", "need --stratum n m k or --orbit n m k");
    }

    report.result["certificate"] = certificate_to_json(cert);
    for (const auto& w : cert.warnings) report.warnings.push_back(w);
    emit(report, args.as_json);

    if (cert.passed) return kExitOk;
    // Degenerate coefficients: measured rank reported, no formula verdict.
    if (cert.degenerate_coefficients() && !cert.ill_conditioned()) return kExitOk;
    return kExitCertificationFailed;
  } catch (const strata::Error& e) {
    return emit_error(report, e.kind(), e.what(), args.as_json);
  }
}

struct LemmaArgs {
  std::string expr1_path;
  std::string expr2_path;
  double tol = strata::kLemmaTol;
  bool as_json = false;
};

int run_lemma(const LemmaArgs& args) {
  strata::io::ReportEnvelope report;
  report.command = "lemma";
  report.inputs["expression_file_1"] = args.expr1_path;
  report.inputs["expression_file_2"] = args.expr2_path;
  report.inputs["tol"] = args.tol;
  try {
    const auto expr1 = strata::io::load_expression_file(args.expr1_path);
    const auto expr2 = strata::io::load_expression_file(args.expr2_path);
    const auto cert = strata::recover_change_of_basis(expr1, expr2, args.tol);
    report.result["C"] = strata::io::matrix_to_json(cert.C);
    report.result["residual_z"] = cert.residual_z;
    report.result["residual_w"] = cert.residual_w;
    report.result["block_residual"] = cert.block_residual;
    report.result["certified"] = cert.certified;
    emit(report, args.as_json);
    return cert.certified ? kExitOk : kExitCertificationFailed;
  } catch (const strata::Error& e) {
    return emit_error(report, e.kind(), e.what(), args.as_json);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schmidt-rank stratification toolkit for bipartite pure states"};
  app.set_version_flag("--version", strata::kVersion);
  app.require_subcommand(1);

  SchmidtArgs schmidt_args;
  auto* schmidt = app.add_subcommand("schmidt", "Schmidt decomposition of a state file");
  schmidt->add_option("state-file", schmidt_args.state_path, "JSON state file")
      ->required();
  schmidt->add_option("--tol", schmidt_args.tol, "relative rank tolerance");
  schmidt->add_flag("--json", schmidt_args.as_json, "emit the JSON report envelope");

  InvertEmbedArgs invert_args;
  auto* invert = app.add_subcommand(
      "invert-embed", "Chart coordinates of a rank-k state and embedding roundtrip");
  invert->add_option("state-file", invert_args.state_path, "JSON state file");
  invert->add_option("--sample", invert_args.sample, "sample a rank-k state: n m k")
      ->expected(3);
  auto* invert_seed = invert->add_option("--seed", invert_args.seed, "sampling seed");
  invert->add_option("--tol", invert_args.tol, "relative rank tolerance");
  invert->add_flag("--json", invert_args.as_json, "emit the JSON report envelope");

  CertifyArgs certify_args;
  auto* certify =
      app.add_subcommand("certify", "numerical Jacobian-rank dimension certification");
  certify->add_option("--stratum", certify_args.stratum, "certify rank-k stratum: n m k")
      ->expected(3);
  certify->add_option("--orbit", certify_args.orbit, "certify coefficient orbit: n m k")
      ->expected(3);
  certify->add_option("--mu", certify_args.mu, "orbit Schmidt coefficients (k values)")
      ->expected(-1);
  certify->add_option("--seed", certify_args.seed, "base-point seed")->required();
  certify->add_option("--fd-step", certify_args.fd_step, "finite difference step");
  certify->add_flag("--json", certify_args.as_json, "emit the JSON report envelope");

  LemmaArgs lemma_args;
  auto* lemma = app.add_subcommand(
      "lemma", "recover the change of basis between two expressions of one state");
  lemma->add_option("expr-file-1", lemma_args.expr1_path, "first expression file")
      ->required();
  lemma->add_option("expr-file-2", lemma_args.expr2_path, "second expression file")
      ->required();
  lemma->add_option("--tol", lemma_args.tol, "certification tolerance");
  lemma->add_flag("--json", lemma_args.as_json, "emit the JSON report envelope");

  CLI11_PARSE(app, argc, argv);

  try {
    if (schmidt->parsed()) return run_schmidt(schmidt_args);
    if (invert->parsed()) {
      invert_args.seed_given = invert_seed->count() > 0;
      return run_invert_embed(invert_args);
    }
    if (certify->parsed()) return run_certify(certify_args);
    if (lemma->parsed()) return run_lemma(lemma_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
