// Copyright 2026 The qutrit-phases Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qutrit/qutrit.hpp"

namespace {

using namespace qutrit;

// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 domain
// error, 4 numerical failure.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;

json load_input(const std::string& input) {
  std::string text;
  if (!input.empty() && (input[0] == '{' || input[0] == '[')) {
    text = input;  // inline JSON
  } else {
    std::ifstream file(input);
    if (!file) throw InputError("cannot open input file: " + input);
    std::stringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON input: ") + e.what());
  }
}

void emit(const json& payload) { std::cout << payload.dump(2) << std::endl; }

// ---------------------------------------------------------------------
// bloch

int run_bloch(const std::string& input) {
  const ParsedState state = state_from_json(load_input(input));
  const Bloch8 n = bloch_from_density(state.rho);
  const Vec8 star_residual = star(n.n, n.n) - n.n;
  const double norm_dev = std::abs(n.n.dot(n.n) - 1.0);
  const double star_dev = star_residual.cwiseAbs().maxCoeff();
  const bool pure = is_pure_bloch(n, 1e-8);

  json out = bloch_to_json(n);
  out["pure"] = pure;
  out["checks"] = {{"norm_deviation", norm_dev},
                   {"star_deviation", star_dev},
                   {"min_eigenvalue", state.rho.min_eigenvalue()}};
  if (state.pure) {
    out["angles"] = angles_to_json(state.pure->angles())["angles"];
  }
  if (pure) {
    json angles = json::object();
    for (int level = 1; level <= 3; ++level) {
      angles[std::to_string(level)] =
          opening_angle(n, bloch_from_pure(basis_state(level)));
    }
    out["opening_angles"] = angles;
  }
  emit(out);
  std::cerr << "state is " << (pure ? "pure" : "mixed")
            << "; |n| = " << n.n.norm() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------
// phase-ops

int run_phase_ops() {
  json ops = json::object();
  for (LevelPair pair : {LevelPair::p12, LevelPair::p23, LevelPair::p13}) {
    const auto polar = polar_decompose(pair);
    const auto [i, j] = levels_of(pair);
    const double residual =
        (polar.modulus * polar.phase.matrix - transition(i, j).matrix).norm();
    json eigen = json::array();
    for (const auto& pair_k : polar.phase.eigensystem) {
      eigen.push_back(
          {{"phase", pair_k.phase},
           {"eigenvalue", complex_to_json(pair_k.eigenvalue)},
           {"eigenvector",
            amplitudes_to_json(pair_k.eigenvector)["amplitudes"]}});
    }
    ops[pair_name(pair)] = {{"matrix", matrix_to_json(polar.phase.matrix)},
                            {"modulus", matrix_to_json(polar.modulus)},
                            {"eigensystem", eigen},
                            {"polar_residual", residual},
                            {"spectator_level", spectator_of(pair)}};
  }
  const auto report = check_noncommutativity();
  json commutators = json::object();
  for (const auto& [name, value] : report.commutator_norms) {
    commutators[name] = value;
  }
  emit(json{{"operators", ops},
            {"noncommutativity",
             {{"phase_product_deviation", report.phase_product_deviation},
              {"commutators", commutators}}}});
  return kExitOk;
}

// ---------------------------------------------------------------------
// phase-dist

int run_phase_dist(const std::string& input, const std::string& output,
                   int resolution, double gamma) {
  if (resolution < 4 || resolution > 4096) {
    throw InputError("resolution must lie in [4, 4096]");
  }
  const ParsedState state = state_from_json(load_input(input));
  const PovmParams params = PovmParams::symmetric(gamma);
  const PhaseGrid grid = phase_distribution(state.rho, params, resolution);
  const double total = grid_probability_sum(grid);

  const json check = {{"resolution", resolution},
                      {"gamma", gamma},
                      {"probability_sum", total},
                      {"normalization_deviation", std::abs(total - 1.0)}};
  if (output.empty() || output == "-") {
    write_phase_grid_csv(std::cout, grid);
    std::cerr << check.dump(2) << "\n";
  } else {
    std::ofstream file(output);
    if (!file) throw InputError("cannot open output file: " + output);
    write_phase_grid_csv(file, grid);
    emit(check);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  double deviation;
  double threshold;
};

json checks_to_json(const std::vector<Check>& checks, bool& all_pass) {
  json arr = json::array();
  for (const auto& check : checks) {
    const bool pass = check.deviation <= check.threshold;
    all_pass = all_pass && pass;
    arr.push_back({{"name", check.name},
                   {"deviation", check.deviation},
                   {"threshold", check.threshold},
                   {"pass", pass}});
  }
  return arr;
}

std::vector<Check> verify_algebra(double tol) {
  const auto& basis = gellmann_matrices();
  const auto& t = su3_structure();
  const Complex imag_unit(0.0, 1.0);

  double ortho = 0, comm = 0, anti = 0, jacobi = 0;
  for (int r = 0; r < 8; ++r) {
    for (int s = 0; s < 8; ++s) {
      ortho = std::max(ortho, std::abs((basis[r] * basis[s]).trace() -
                                       (r == s ? 2.0 : 0.0)));
      Matrix3 comm_rhs = Matrix3::Zero();
      Matrix3 anti_rhs = (r == s ? 4.0 / 3.0 : 0.0) * Matrix3::Identity();
      for (int u = 0; u < 8; ++u) {
        comm_rhs +=
            2.0 * imag_unit * t.f[StructureTensors::flat(r, s, u)] * basis[u];
        anti_rhs += 2.0 * t.d[StructureTensors::flat(r, s, u)] * basis[u];
      }
      comm = std::max(
          comm, (basis[r] * basis[s] - basis[s] * basis[r] - comm_rhs).norm());
      anti = std::max(
          anti, (basis[r] * basis[s] + basis[s] * basis[r] - anti_rhs).norm());
    }
  }
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      for (int c = 0; c < 8; ++c) {
        for (int d = 0; d < 8; ++d) {
          double acc = 0;
          for (int e = 0; e < 8; ++e) {
            acc += t.f[StructureTensors::flat(a, b, e)] *
                       t.f[StructureTensors::flat(e, c, d)] +
                   t.f[StructureTensors::flat(c, b, e)] *
                       t.f[StructureTensors::flat(a, e, d)] +
                   t.f[StructureTensors::flat(d, b, e)] *
                       t.f[StructureTensors::flat(a, c, e)];
          }
          jacobi = std::max(jacobi, std::abs(acc));
        }
      }
    }
  }
  return {{"trace_orthonormality", ortho, tol},
          {"commutator_closure", comm, tol},
          {"anticommutator_closure", anti, tol},
          {"jacobi_identity", jacobi, tol}};
}

std::vector<Check> verify_povm(int resolution, std::uint64_t seed, double tol) {
  const PovmParams params;  // gamma = 1
  const auto axioms = verify_povm_axioms(params, resolution);

  SeededSampler sampler(seed);
  std::vector<std::pair<double, double>> shifts;
  for (int k = 0; k < 100; ++k) {
    shifts.emplace_back(sampler.uniform() * 2 * M_PI,
                        sampler.uniform() * 2 * M_PI);
  }
  const double covariance = verify_covariance(params, shifts);

  double rank_one = 0;
  const double cell = 1.0 / (4 * M_PI * M_PI);
  const double step = 2 * M_PI / resolution;
  for (int a = 0; a < resolution; ++a) {
    for (int b = 0; b < resolution; ++b) {
      const PhasePoint point(a * step, b * step);
      const PureState u = phase_state(point);
      rank_one = std::max(
          rank_one, (delta(point, params) - 3 * cell * u.projector()).norm());
    }
  }

  return {{"hermiticity", axioms.hermiticity_deviation, 1e-14},
          {"positivity", std::max(0.0, -axioms.min_eigenvalue), tol},
          {"normalization", axioms.normalization_deviation, tol},
          {"covariance", covariance, tol},
          {"rank_one_structure", rank_one, tol}};
}

std::vector<Check> verify_coherent(const QuadratureScheme& scheme,
                                   std::uint64_t seed, json& extra) {
  SeededSampler sampler(seed);
  const auto draw_label = [&](int num_qutrits) {
    const auto draw = [&] {
      const double radius = 0.1 + 1.4 * sampler.uniform();
      return radius * std::exp(Complex(0, 2 * M_PI * sampler.uniform()));
    };
    return CoherentLabel{num_qutrits, draw(), draw()};
  };

  double overlap_dev = 0, mean_dev = 0, additivity_dev = 0;
  for (int num_qutrits = 1; num_qutrits <= 5; ++num_qutrits) {
    std::array<Eigen::MatrixXcd, 3> diag = {
        collective_operator(1, 1, num_qutrits),
        collective_operator(2, 2, num_qutrits),
        collective_operator(3, 3, num_qutrits)};
    std::array<Eigen::MatrixXcd, 3> trans = {
        collective_operator(3, 2, num_qutrits),
        collective_operator(2, 1, num_qutrits),
        collective_operator(3, 1, num_qutrits)};
    for (int k = 0; k < 20; ++k) {
      const CoherentLabel a = draw_label(num_qutrits);
      const CoherentLabel b = draw_label(num_qutrits);
      overlap_dev =
          std::max(overlap_dev,
                   std::abs(overlap(a, b) -
                            inner(coherent_state(a), coherent_state(b))));
      const Eigen::VectorXcd psi = coherent_state(a).coefficients();
      const auto means = mean_values(a);
      const std::array<Complex, 3> closed_diag = {means.n1, means.n2, means.n3};
      const std::array<Complex, 3> closed_trans = {means.s32, means.s21,
                                                   means.s31};
      for (int q = 0; q < 3; ++q) {
        mean_dev = std::max(
            mean_dev, std::abs(psi.dot(diag[q] * psi) - closed_diag[q]));
        mean_dev = std::max(
            mean_dev, std::abs(psi.dot(trans[q] * psi) - closed_trans[q]));
      }
      const double sum =
          reduce_angle_2pi(std::arg(means.s32) + std::arg(means.s21));
      double gap = std::abs(reduce_angle_2pi(std::arg(means.s31)) - sum);
      gap = std::min(gap, 2 * M_PI - gap);
      additivity_dev = std::max(additivity_dev, gap);
    }
  }

  const double identity1 = verify_identity_resolution(1, scheme);
  const double identity2 = verify_identity_resolution(2, scheme);

  const auto report = radial_povm_report(PhasePoint(0.7, 1.3),
                                         scheme.radial_nodes);
  extra["radial_povm_report"] = radial_povm_report_to_json(report);
  double diag_dev = 0;
  for (double d : report.diagonal) {
    diag_dev = std::max(diag_dev, std::abs(d - 1.0 / (4 * M_PI * M_PI)));
  }

  return {{"overlap_closed_form", overlap_dev, 1e-12},
          {"mean_values_closed_form", mean_dev, 1e-12},
          {"phase_additivity", additivity_dev, 1e-12},
          {"identity_resolution_n1", identity1, 1e-6},
          {"identity_resolution_n2", identity2, 1e-5},
          {"radial_povm_diagonal", diag_dev, 1e-6},
          {"radial_povm_offdiag_ratio",
           std::abs(report.offdiag_to_diagonal_ratio - M_PI / 96), 1e-6}};
}

int run_verify(const std::string& suite, int resolution,
               const QuadratureScheme& scheme, std::uint64_t seed,
               std::optional<double> tol_override) {
  const double tol = tol_override.value_or(1e-12);
  json suites = json::object();
  bool all_pass = true;

  if (suite == "algebra" || suite == "all") {
    suites["algebra"] = checks_to_json(verify_algebra(tol), all_pass);
  }
  if (suite == "povm" || suite == "all") {
    suites["povm"] = checks_to_json(verify_povm(resolution, seed, tol), all_pass);
  }
  if (suite == "coherent" || suite == "all") {
    json extra = json::object();
    suites["coherent"] = checks_to_json(verify_coherent(scheme, seed, extra),
                                        all_pass);
    suites["coherent_diagnostics"] = extra;
  }
  if (suites.empty()) {
    throw InputError("unknown suite: " + suite +
                     " (expected algebra, povm, coherent or all)");
  }

  emit(json{{"suite", suite}, {"seed", seed}, {"passed", all_pass},
            {"results", suites}});
  std::cerr << "verify " << suite << ": "
            << (all_pass ? "all checks passed" : "some checks FAILED") << "\n";
  return all_pass ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------
// reconstruct

int run_reconstruct(const std::string& input) {
  const json in = load_input(input);
  if (!in.is_object() || !in.contains("samples") || !in["samples"].is_array()) {
    throw InputError("reconstruct expects {\"samples\": [...]} ");
  }
  const json& rows = in["samples"];
  if (rows.size() != 6) {
    throw InputError("reconstruct needs exactly 6 samples, got " +
                     std::to_string(rows.size()));
  }
  std::array<PhaseSample, 6> samples;
  for (int k = 0; k < 6; ++k) {
    const json& row = rows[k];
    for (const char* key : {"phi12", "phi23", "P"}) {
      if (!row.contains(key) || !row[key].is_number()) {
        throw InputError(std::string("sample is missing numeric field ") + key);
      }
    }
    samples[k] = {PhasePoint(row["phi12"].get<double>(),
                             row["phi23"].get<double>()),
                  row["P"].get<double>()};
  }
  const OffDiagonals result = reconstruct_offdiagonals(samples);
  emit(json{{"rho12", complex_to_json(result.rho12)},
            {"rho23", complex_to_json(result.rho23)},
            {"rho13", complex_to_json(result.rho13)},
            {"condition_number", result.condition_number}});
  return kExitOk;
}

// ---------------------------------------------------------------------
// coherent

int run_coherent(const std::string& input) {
  const json in = load_input(input);
  if (!in.is_object() || !in.contains("N") ||
      !in["N"].is_number_integer() || !in.contains("alpha") ||
      !in.contains("beta")) {
    throw InputError("coherent expects {\"N\": int, \"alpha\": [re, im], "
                     "\"beta\": [re, im]}");
  }
  const int num_qutrits = in["N"].get<int>();
  if (num_qutrits < 1 || num_qutrits > 20) {
    throw InputError("N must lie in [1, 20]");
  }
  const CoherentLabel label{num_qutrits, complex_from_json(in["alpha"]),
                            complex_from_json(in["beta"])};
  const auto means = mean_values(label);
  const SymmetricFockState state = coherent_state(label);

  json out = {
      {"N", num_qutrits},
      {"capacity", label.capacity()},
      {"norm", state.norm()},
      {"populations", {{"n1", means.n1}, {"n2", means.n2}, {"n3", means.n3}}},
      {"population_ratios",
       {1.0, std::norm(label.alpha),
        std::norm(label.alpha) * std::norm(label.beta)}},
      {"transitions",
       {{"s32", complex_to_json(means.s32)},
        {"s21", complex_to_json(means.s21)},
        {"s31", complex_to_json(means.s31)}}}};
  if (in.contains("other")) {
    const json& other = in["other"];
    if (!other.is_object() || !other.contains("alpha") ||
        !other.contains("beta")) {
      throw InputError("other label needs alpha and beta");
    }
    const CoherentLabel second{num_qutrits, complex_from_json(other["alpha"]),
                               complex_from_json(other["beta"])};
    out["overlap"] = complex_to_json(overlap(label, second));
  }
  emit(out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qutrit phase toolkit: Bloch geometry, phase operators, "
               "covariant phase POVMs and su(3) coherent states"};
  app.require_subcommand(1);

  std::string input, output, suite = "all";
  int resolution = 64;
  double gamma = 1.0;
  QuadratureScheme scheme;
  std::uint64_t seed = 12345;
  std::optional<double> tol;

  auto* cmd_bloch = app.add_subcommand(
      "bloch", "Bloch vector, purity checks and opening angles of a state");
  cmd_bloch->add_option("--input,-i", input, "state JSON (inline or path)")
      ->required();

  auto* cmd_phase_ops = app.add_subcommand(
      "phase-ops", "phase operators, eigensystems and commutator table");
  (void)cmd_phase_ops;

  auto* cmd_phase_dist = app.add_subcommand(
      "phase-dist", "phase probability density on a grid, as CSV");
  cmd_phase_dist->add_option("--input,-i", input, "state JSON (inline or path)")
      ->required();
  cmd_phase_dist->add_option("--output,-o", output, "CSV path (default stdout)");
  cmd_phase_dist->add_option("--resolution", resolution,
                             "grid points per axis (4..4096)");
  cmd_phase_dist->add_option("--gamma", gamma, "symmetric POVM gamma in [0,1]");

  auto* cmd_verify = app.add_subcommand(
      "verify", "run a verification suite and report deviations");
  cmd_verify->add_option("--suite", suite, "algebra | povm | coherent | all");
  cmd_verify->add_option("--resolution", resolution, "POVM grid resolution");
  cmd_verify->add_option("--radial-nodes", scheme.radial_nodes,
                         "radial quadrature nodes");
  cmd_verify->add_option("--phase-nodes", scheme.phase_nodes,
                         "phase quadrature nodes");
  cmd_verify->add_option("--seed", seed, "seed for randomized checks");
  double tol_value = 0;
  auto* tol_opt = cmd_verify->add_option(
      "--tol", tol_value, "override the 1e-12 pass threshold");

  auto* cmd_reconstruct = app.add_subcommand(
      "reconstruct", "recover off-diagonals from six density samples");
  cmd_reconstruct->add_option("--input,-i", input,
                              "samples JSON (inline or path)")
      ->required();

  auto* cmd_coherent = app.add_subcommand(
      "coherent", "mean values and overlaps of coherent-state labels");
  cmd_coherent->add_option("--input,-i", input, "label JSON (inline or path)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  if (tol_opt->count() > 0) tol = tol_value;

  try {
    if (cmd_bloch->parsed()) return run_bloch(input);
    if (cmd_phase_ops->parsed()) return run_phase_ops();
    if (cmd_phase_dist->parsed()) {
      return run_phase_dist(input, output, resolution, gamma);
    }
    if (cmd_verify->parsed()) {
      return run_verify(suite, resolution, scheme, seed, tol);
    }
    if (cmd_reconstruct->parsed()) return run_reconstruct(input);
    if (cmd_coherent->parsed()) return run_coherent(input);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotAState& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotPure& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const BadLevel& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const BadLevelPair& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotNormalized& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const MismatchedN& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    // SingularDesign, QuadratureBudgetExceeded, NonFiniteIntegrand
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitInput;
}
