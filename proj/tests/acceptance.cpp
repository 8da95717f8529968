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

// Acceptance suite. Prints one line per criterion and exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qmix/bloch.hpp"
#include "qmix/eigen.hpp"
#include "qmix/measures.hpp"
#include "qmix/oracle.hpp"
#include "support/golden.hpp"
#include "support/testing.hpp"

using namespace qmix;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

BlochVector random_direction(Rng& rng, double length) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng.uniform();
  const double r = std::sqrt(1.0 - z * z);
  return {length * r * std::cos(phi), length * r * std::sin(phi), length * z};
}

double pipeline_d(const DensityMatrix& rho) { return geometric_mixing(density_spectrum(rho)); }

DensityMatrix mix_with_identity(const DensityMatrix& rho, double t) {
  const std::size_t n = rho.dim();
  SquareMatrix m = rho.matrix();
  m *= Complex(1.0 - t);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += t / static_cast<double>(n);
  return validate_density(m);
}

Outcome qubit_closed_form() {
  Rng rng(1001);
  double worst = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double a = 0.05 * k;
    for (int dir = 0; dir < 20; ++dir) {
      const double d = pipeline_d(density_from_bloch(random_direction(rng, a)));
      worst = std::max(worst, std::abs(d - 0.5 * (1.0 - a) * (1.0 - a)));
    }
  }
  return {worst <= 1e-10, "max |D - (1-a)^2/2| = " + fmt("%.3g", worst), {}};
}

Outcome qubit_endpoints() {
  Rng rng(1002);
  double worst = 0.0;
  for (int dir = 0; dir < 20; ++dir) {
    worst = std::max(worst, std::abs(pipeline_d(density_from_bloch(random_direction(rng, 1.0)))));
  }
  worst = std::max(worst, std::abs(pipeline_d(density_from_bloch({0.0, 0.0, 0.0})) - 0.5));
  worst = std::max(worst, std::abs(qubit_geometric_mixing(1.0)));
  worst = std::max(worst, std::abs(qubit_geometric_mixing(0.0) - 0.5));
  return {worst <= 1e-12, "max endpoint error = " + fmt("%.3g", worst), {}};
}

Outcome maximal_mixedness() {
  Rng rng(1003);
  double worst_max = 0.0;
  double worst_excess = -1.0;
  for (std::size_t n = 1; n <= 16; ++n) {
    const double bound = 1.0 - 1.0 / static_cast<double>(n);
    worst_max = std::max(worst_max, std::abs(report(maximally_mixed(n)).geometric_measure - bound));
    for (int k = 0; k < 1000; ++k) {
      const double d = pipeline_d(testing::random_density_any_rank(n, rng));
      worst_excess = std::max(worst_excess, d - bound);
    }
  }
  return {worst_max <= 1e-12 && worst_excess <= 1e-9,
          "max |D(1/n) - (1-1/n)| = " + fmt("%.3g", worst_max) +
              ", max random excess = " + fmt("%.3g", worst_excess),
          {}};
}

Outcome uniform_distance() {
  Rng rng(1004);
  double worst = 0.0;
  for (std::size_t n : {2u, 3u, 4u, 8u}) {
    const DensityMatrix mm = maximally_mixed(n);
    for (int k = 0; k < 100; ++k) {
      const double d2 = hs_distance_sq(mm, pure_projector(sample_pure_state(n, rng)));
      worst = std::max(worst, std::abs(d2 - (1.0 - 1.0 / static_cast<double>(n))));
    }
  }
  return {worst <= 1e-10, "max |d^2 - (1-1/n)| = " + fmt("%.3g", worst), {}};
}

Outcome oracle_equivalence() {
  Rng rng(1005);
  const OracleParams params{200, 500, 42};
  double worst = 0.0;
  for (std::size_t n : {2u, 3u, 4u, 6u}) {
    for (int k = 0; k < 50; ++k) {
      const DensityMatrix rho = testing::random_density(n, rng);
      const double gap = std::abs(minimize_over_pure(rho, params).d_estimate - pipeline_d(rho));
      worst = std::max(worst, gap);
    }
  }
  return {worst <= 1e-6, "max |oracle - closed form| = " + fmt("%.3g", worst), {}};
}

Outcome qubit_grid() {
  double worst = 0.0;
  for (double a : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double d = grid_minimize_qubit(density_from_bloch({0.0, 0.0, a}), 721, 1441).d_estimate;
    worst = std::max(worst, std::abs(d - 0.5 * (1.0 - a) * (1.0 - a)));
  }
  return {worst <= 1e-4, "max |grid - (1-a)^2/2| = " + fmt("%.3g", worst), {}};
}

Outcome eigensolver_soundness() {
  Rng rng(1007);
  double recon = 0.0, ortho = 0.0, sum = 0.0, charpoly = 0.0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 16);
    const DensityMatrix rho = testing::random_density_any_rank(n, rng);
    const Spectrum s = hermitian_eig(rho.matrix());
    const SquareMatrix& v = s.eigenvectors;

    SquareMatrix lambda(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      lambda(i, i) = s.eigenvalues[i];
      total += s.eigenvalues[i];
    }
    recon = std::max(recon, max_abs_diff(matmul(matmul(v, lambda), v.adjoint()), rho.matrix()));
    ortho = std::max(ortho, max_abs_diff(matmul(v.adjoint(), v), SquareMatrix::identity(n)));
    sum = std::max(sum, std::abs(total - 1.0));

    if (n <= 3) {
      const std::vector<double> ref = testing::charpoly_eigenvalues(rho.matrix());
      for (std::size_t i = 0; i < n; ++i) {
        charpoly = std::max(charpoly, std::abs(ref[i] - s.eigenvalues[i]));
      }
    }
  }
  return {recon <= 1e-10 && ortho <= 1e-10 && sum <= 1e-10 && charpoly <= 1e-8,
          "reconstruction " + fmt("%.3g", recon) + ", orthonormality " + fmt("%.3g", ortho) +
              ", trace " + fmt("%.3g", sum) + ", charpoly " + fmt("%.3g", charpoly),
          {}};
}

Outcome measure_inequalities() {
  Rng rng(1008);
  constexpr double tol = 1e-9;
  int bound_fail = 0, entropy_fail = 0, zero_fail = 0;
  double drift = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 7);
    const DensityMatrix rho = testing::random_density_any_rank(n, rng);
    const MixednessReport r = report(rho);
    const double dmax = 1.0 - 1.0 / static_cast<double>(n);

    if (r.geometric_measure < -tol || r.geometric_measure > dmax + tol) ++bound_fail;
    if (r.von_neumann_entropy < r.linear_entropy - tol || r.linear_entropy < -tol) ++entropy_fail;
    const bool d_zero = std::abs(r.geometric_measure) <= tol;
    const bool pure = std::abs(r.purity - 1.0) <= tol;
    if (d_zero != pure) ++zero_fail;

    for (int u = 0; u < 10; ++u) {
      const MixednessReport c = report(testing::conjugate(testing::random_unitary(n, rng), rho));
      drift = std::max({drift, std::abs(c.geometric_measure - r.geometric_measure),
                        std::abs(c.purity - r.purity),
                        std::abs(c.von_neumann_entropy - r.von_neumann_entropy),
                        std::abs(c.linear_entropy - r.linear_entropy),
                        std::abs(c.lambda_max - r.lambda_max)});
    }
  }
  return {bound_fail == 0 && entropy_fail == 0 && zero_fail == 0 && drift <= tol,
          "bound violations " + std::to_string(bound_fail) + ", entropy violations " +
              std::to_string(entropy_fail) + ", D=0/purity=1 mismatches " +
              std::to_string(zero_fail) + ", unitary drift " + fmt("%.3g", drift),
          {}};
}

// Checked as stated: D along the depolarizing path must not increase.
Outcome depolarizing_monotonicity() {
  Rng rng(1009);
  int violating_states = 0;
  int increasing_violations = 0;
  double worst_rise = 0.0;
  double worst_drop = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 7);
    const DensityMatrix rho = testing::random_density_any_rank(n, rng);
    double prev = pipeline_d(rho);
    bool violated = false;
    for (int step = 1; step <= 10; ++step) {
      const double d = pipeline_d(mix_with_identity(rho, 0.1 * step));
      const double rise = d - prev;
      worst_rise = std::max(worst_rise, rise);
      worst_drop = std::max(worst_drop, -rise);
      if (rise > 1e-10) violated = true;
      if (-rise > 1e-10) ++increasing_violations;
      prev = d;
    }
    if (violated) ++violating_states;
  }
  Outcome o;
  o.pass = violating_states == 0;
  o.detail = std::to_string(violating_states) + "/100 states increase, max step rise " +
             fmt("%.3g", worst_rise);
  o.notes.push_back("D is nondecreasing along the path toward 1/n on every state: " +
                    std::to_string(increasing_violations) + " decreasing steps, max drop " +
                    fmt("%.3g", worst_drop) + "; D(1/n) = 1-1/n is the maximum");
  return o;
}

Outcome cli_contract() {
  const auto outcomes = testing::run_golden(QMIX_CLI_PATH, QMIX_GOLDEN_DIR);
  int failed = 0;
  int validate_failures = 0;
  Outcome o;
  for (const auto& g : outcomes) {
    if (!g.passed) {
      ++failed;
      o.notes.push_back("golden case " + g.golden.name + " differs (exit " +
                        std::to_string(g.actual.exit_code) + ")");
    }
    if (g.golden.name.rfind("validate_", 0) == 0 && g.golden.expected_exit == 2) {
      ++validate_failures;
    }
  }
  const std::string fixture = std::string(QMIX_GOLDEN_DIR) + "/fixtures/random4.json";
  const std::string cmd =
      testing::command_line(QMIX_CLI_PATH, {"oracle", fixture, "--seed", "42"});
  const auto first = testing::run_command(cmd);
  const auto second = testing::run_command(cmd);
  const bool deterministic = first.exit_code == 0 && first.out == second.out;

  o.pass = failed == 0 && !outcomes.empty() && validate_failures >= 3 && deterministic;
  o.detail = std::to_string(outcomes.size() - static_cast<std::size_t>(failed)) + "/" +
             std::to_string(outcomes.size()) + " golden cases, " +
             std::to_string(validate_failures) + " validate failure modes, oracle " +
             (deterministic ? "deterministic" : "NOT deterministic");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "qubit closed form", 1.0, qubit_closed_form},
      {2, "qubit endpoints", 0.0, qubit_endpoints},
      {3, "maximal mixedness", 30.0, maximal_mixedness},
      {4, "uniform distance from 1/n", 0.0, uniform_distance},
      {5, "oracle equivalence", 60.0, oracle_equivalence},
      {6, "qubit grid oracle", 10.0, qubit_grid},
      {7, "eigensolver soundness", 0.0, eigensolver_soundness},
      {8, "measure inequalities", 0.0, measure_inequalities},
      {9, "depolarizing monotonicity", 0.0, depolarizing_monotonicity},
      {10, "CLI contract", 0.0, cli_contract},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0.0 && seconds >= c.budget_seconds) {
      o.pass = false;
      o.detail += ", over time budget " + fmt("%.0f s", c.budget_seconds);
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %-27s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                o.detail.c_str());
    for (const auto& note : o.notes) std::printf("       info: %s\n", note.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
