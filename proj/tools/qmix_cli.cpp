// Copyright 2026 The qmix Authors
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

// qmix command-line front end. Talks to the library only through qmix.h.
//
// Exit codes: 0 success, 1 usage error, 2 domain violation, 3 parse or I/O
// failure, 4 oracle certification failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmix/qmix.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitParse = 3;
constexpr int kExitOracleFail = 4;

constexpr double kOracleThreshold = 1e-6;

struct MatrixDeleter {
  void operator()(qmix_matrix* m) const { qmix_matrix_free(m); }
};
struct DensityDeleter {
  void operator()(qmix_density* d) const { qmix_density_free(d); }
};
using MatrixPtr = std::unique_ptr<qmix_matrix, MatrixDeleter>;
using DensityPtr = std::unique_ptr<qmix_density, DensityDeleter>;

// Failed library call; carries the exit code it maps to.
struct CommandError {
  int exit_code;
  std::string message;
};

int exit_code_for(qmix_status status) {
  return (status == QMIX_ERR_PARSE || status == QMIX_ERR_IO) ? kExitParse : kExitDomain;
}

void check(qmix_status status) {
  if (status != QMIX_OK) throw CommandError{exit_code_for(status), qmix_last_error()};
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct Options {
  std::string format = "json";
  qmix_tolerances tol{};
  std::vector<std::string> files;
  qmix_oracle_params oracle{};
  double length = 0.0;
  std::string direction = "0,0,1";
  int steps = 11;
  bool grid_check = false;
  int theta_steps = 721;
  int phi_steps = 1441;
};

DensityPtr load_density(const std::string& path, const qmix_tolerances& tol) {
  qmix_matrix* raw = nullptr;
  check(qmix_matrix_load_json(path.c_str(), &raw));
  MatrixPtr m(raw);
  qmix_density* rho = nullptr;
  check(qmix_density_validate(m.get(), &tol, &rho));
  return DensityPtr(rho);
}

struct Direction {
  double x, y, z;
};

Direction parse_direction(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CommandError{kExitUsage, "--dir expects three comma-separated numbers"};
    }
  }
  if (parts.size() != 3) throw CommandError{kExitUsage, "--dir expects three comma-separated numbers"};
  const double len = std::sqrt(parts[0] * parts[0] + parts[1] * parts[1] + parts[2] * parts[2]);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw CommandError{kExitDomain, "InvalidArgument: direction vector has zero length"};
  }
  return {parts[0] / len, parts[1] / len, parts[2] / len};
}

int cmd_validate(const Options& opt) {
  qmix_matrix* raw = nullptr;
  check(qmix_matrix_load_json(opt.files[0].c_str(), &raw));
  MatrixPtr m(raw);
  qmix_density* rho = nullptr;
  const qmix_status status = qmix_density_validate(m.get(), &opt.tol, &rho);
  if (status != QMIX_OK) {
    std::cout << "invalid " << qmix_last_error() << "\n";
    return exit_code_for(status);
  }
  DensityPtr owned(rho);
  std::cout << "valid dim=" << qmix_density_dim(rho) << "\n";
  return kExitOk;
}

int cmd_analyze(const Options& opt) {
  DensityPtr rho = load_density(opt.files[0], opt.tol);
  if (opt.format == "json") {
    char* json = nullptr;
    check(qmix_report_json(rho.get(), &json));
    std::cout << json << "\n";
    qmix_string_free(json);
    return kExitOk;
  }

  qmix_report r{};
  std::vector<double> eig(qmix_density_dim(rho.get()));
  check(qmix_analyze(rho.get(), &r, eig.data()));
  if (opt.format == "csv") {
    std::cout << "dim,purity,von_neumann_entropy,linear_entropy,geometric_measure,lambda_max\n"
              << r.dim << "," << num(r.purity) << "," << num(r.von_neumann_entropy) << ","
              << num(r.linear_entropy) << "," << num(r.geometric_measure) << ","
              << num(r.lambda_max) << "\n";
    return kExitOk;
  }
  std::string eig_text;
  for (double e : eig) eig_text += (eig_text.empty() ? "" : " ") + short_num(e);
  const double max_d = qmix_max_geometric_mixing(r.dim);
  std::printf("%-28s %zu\n", "dimension", r.dim);
  std::printf("%-28s %s\n", "purity", short_num(r.purity).c_str());
  std::printf("%-28s %s\n", "von Neumann entropy (nats)", short_num(r.von_neumann_entropy).c_str());
  std::printf("%-28s %s\n", "von Neumann entropy (bits)",
              short_num(r.von_neumann_entropy / std::log(2.0)).c_str());
  std::printf("%-28s %s\n", "linear entropy", short_num(r.linear_entropy).c_str());
  std::printf("%-28s %s\n", "geometric measure D", short_num(r.geometric_measure).c_str());
  std::printf("%-28s %s\n", "maximal D for dimension", short_num(max_d).c_str());
  std::printf("%-28s %s\n", "lambda_max", short_num(r.lambda_max).c_str());
  std::printf("%-28s %s\n", "eigenvalues", eig_text.c_str());
  return kExitOk;
}

int cmd_distance(const Options& opt) {
  DensityPtr a = load_density(opt.files[0], opt.tol);
  DensityPtr b = load_density(opt.files[1], opt.tol);
  double d2 = 0.0;
  check(qmix_hs_distance_sq(a.get(), b.get(), &d2));
  std::cout << "{\"d_squared\": " << num(d2) << ", \"d\": " << num(std::sqrt(d2)) << "}\n";
  return kExitOk;
}

int cmd_oracle(const Options& opt) {
  DensityPtr rho = load_density(opt.files[0], opt.tol);
  qmix_report r{};
  check(qmix_analyze(rho.get(), &r, nullptr));
  qmix_oracle_result o{};
  check(qmix_oracle_minimize(rho.get(), &opt.oracle, &o, nullptr, nullptr));
  const double gap = std::abs(o.d_estimate - r.geometric_measure);
  const bool pass = gap <= kOracleThreshold;
  std::cout << "{\"D_closed\": " << num(r.geometric_measure)
            << ", \"d_estimate\": " << num(o.d_estimate) << ", \"gap\": " << num(gap)
            << ", \"threshold\": " << num(kOracleThreshold) << ", \"status\": \""
            << (pass ? "PASS" : "FAIL") << "\", \"restarts\": " << o.restarts_used
            << ", \"refine_iters\": " << o.refinement_iterations << ", \"seed\": " << o.seed
            << "}\n";
  return pass ? kExitOk : kExitOracleFail;
}

struct QubitRow {
  double length;
  double lambda1, lambda2;
  qmix_report report;
  double analytic;
  double bloch[3];
};

QubitRow qubit_row(double length, const Direction& dir, DensityPtr* keep = nullptr) {
  if (length < 0.0) {
    throw CommandError{kExitDomain, "OutOfRange: Bloch length must be nonnegative"};
  }
  qmix_density* raw = nullptr;
  check(qmix_density_from_bloch(length * dir.x, length * dir.y, length * dir.z, &raw));
  DensityPtr rho(raw);
  QubitRow row{};
  row.length = length;
  double eig[2];
  check(qmix_analyze(rho.get(), &row.report, eig));
  row.lambda1 = eig[0];
  row.lambda2 = eig[1];
  check(qmix_qubit_geometric_mixing(std::min(length, 1.0), &row.analytic));
  check(qmix_bloch_from_density(rho.get(), row.bloch));
  if (keep) *keep = std::move(rho);
  return row;
}

int cmd_bloch(const Options& opt) {
  const Direction dir = parse_direction(opt.direction);
  const QubitRow row = qubit_row(opt.length, dir);
  const qmix_report& r = row.report;
  if (opt.format == "human") {
    std::printf("%-28s (%s, %s, %s)\n", "Bloch vector", short_num(row.bloch[0]).c_str(),
                short_num(row.bloch[1]).c_str(), short_num(row.bloch[2]).c_str());
    std::printf("%-28s %s\n", "length", short_num(row.length).c_str());
    std::printf("%-28s %s %s\n", "eigenvalues", short_num(row.lambda1).c_str(),
                short_num(row.lambda2).c_str());
    std::printf("%-28s %s\n", "purity", short_num(r.purity).c_str());
    std::printf("%-28s %s\n", "linear entropy", short_num(r.linear_entropy).c_str());
    std::printf("%-28s %s\n", "von Neumann entropy (nats)",
                short_num(r.von_neumann_entropy).c_str());
    std::printf("%-28s %s\n", "D (eigenvalues)", short_num(r.geometric_measure).c_str());
    std::printf("%-28s %s\n", "D = (1 - a)^2 / 2", short_num(row.analytic).c_str());
    return kExitOk;
  }
  std::cout << "{\"bloch\": [" << num(row.bloch[0]) << ", " << num(row.bloch[1]) << ", "
            << num(row.bloch[2]) << "], \"a\": " << num(row.length)
            << ", \"lambda1\": " << num(row.lambda1) << ", \"lambda2\": " << num(row.lambda2)
            << ", \"purity\": " << num(r.purity) << ", \"linear_entropy\": "
            << num(r.linear_entropy) << ", \"von_neumann_entropy\": "
            << num(r.von_neumann_entropy) << ", \"D_closed\": " << num(r.geometric_measure)
            << ", \"D_analytic\": " << num(row.analytic) << "}\n";
  return kExitOk;
}

int cmd_bloch_sweep(const Options& opt) {
  const Direction dir = parse_direction(opt.direction);
  std::cout << "a,lambda1,lambda2,purity,linear_entropy,von_neumann_entropy,D_closed";
  if (opt.grid_check) std::cout << ",D_grid";
  std::cout << "\n";
  for (int k = 0; k < opt.steps; ++k) {
    const double length = static_cast<double>(k) / (opt.steps - 1);
    DensityPtr rho;
    const QubitRow row = qubit_row(length, dir, &rho);
    std::cout << num(length) << "," << num(row.lambda1) << "," << num(row.lambda2) << ","
              << num(row.report.purity) << "," << num(row.report.linear_entropy) << ","
              << num(row.report.von_neumann_entropy) << "," << num(row.report.geometric_measure);
    if (opt.grid_check) {
      qmix_oracle_result g{};
      check(qmix_oracle_grid_qubit(rho.get(), opt.theta_steps, opt.phi_steps, &g));
      std::cout << "," << num(g.d_estimate);
    }
    std::cout << "\n";
  }
  return kExitOk;
}

void add_tolerance_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--tol-herm", opt.tol.herm, "Hermiticity tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--tol-trace", opt.tol.trace, "Unit-trace tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--tol-psd", opt.tol.psd, "Negative-eigenvalue tolerance")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  qmix_default_tolerances(&opt.tol);
  qmix_default_oracle_params(&opt.oracle);

  CLI::App app{"Geometric measure of mixedness and related entropies of quantum states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qmix_version());

  auto* validate = app.add_subcommand("validate", "Check that a matrix file is a density matrix");
  validate->add_option("file", opt.files, "Matrix JSON file")->required()->expected(1);
  add_tolerance_flags(validate, opt);

  auto* analyze = app.add_subcommand("analyze", "Purity, entropies and geometric measure");
  analyze->add_option("file", opt.files, "Matrix JSON file")->required()->expected(1);
  analyze->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "human", "csv"}));
  add_tolerance_flags(analyze, opt);

  auto* distance = app.add_subcommand("distance", "Squared Hilbert-Schmidt distance of two states");
  distance->add_option("files", opt.files, "Two matrix JSON files")->required()->expected(2);
  add_tolerance_flags(distance, opt);

  auto* oracle = app.add_subcommand("oracle", "Certify the closed form by direct minimization");
  oracle->add_option("file", opt.files, "Matrix JSON file")->required()->expected(1);
  oracle->add_option("--restarts", opt.oracle.restarts, "Random restarts")
      ->check(CLI::PositiveNumber);
  oracle->add_option("--refine-iters", opt.oracle.refine_iters, "Power-map steps per restart")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--seed", opt.oracle.seed, "RNG seed");
  add_tolerance_flags(oracle, opt);

  auto* bloch = app.add_subcommand("bloch", "Measures of a qubit given its Bloch vector");
  bloch->add_option("--a", opt.length, "Bloch vector length")->required();
  bloch->add_option("--dir", opt.direction, "Direction x,y,z (normalized internally)");
  bloch->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "human"}));

  auto* sweep = app.add_subcommand("bloch-sweep", "CSV sweep of qubit measures over Bloch length");
  sweep->add_option("--steps", opt.steps, "Number of lengths in [0, 1]")
      ->required()
      ->check(CLI::Range(2, 1000000));
  sweep->add_option("--dir", opt.direction, "Direction x,y,z (normalized internally)");
  sweep->add_flag("--grid-check", opt.grid_check, "Add exhaustive grid minimum D_grid");
  sweep->add_option("--theta-steps", opt.theta_steps, "Grid points in theta")
      ->check(CLI::Range(2, 100000));
  sweep->add_option("--phi-steps", opt.phi_steps, "Grid points in phi")
      ->check(CLI::Range(2, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(opt);
    if (*analyze) return cmd_analyze(opt);
    if (*distance) return cmd_distance(opt);
    if (*oracle) return cmd_oracle(opt);
    if (*bloch) return cmd_bloch(opt);
    if (*sweep) return cmd_bloch_sweep(opt);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return kExitUsage;
}
