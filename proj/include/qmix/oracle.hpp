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

// Direct minimization of Tr(rho - |psi><psi|)^2 over pure states.
//
// Nothing here touches the Jacobi solver: candidates are sampled uniformly on
// the complex unit sphere and refined by the shifted power map
// psi <- (rho + 1) psi / |(rho + 1) psi|, whose fixed point is the top
// eigenvector of rho. Agreement with geometric_mixing() certifies the closed
// form independently.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "qmix/matrix.hpp"

namespace qmix {

// 64-bit Mersenne Twister with a Box-Muller normal transform. Both pieces are
// fully specified, so draws are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on the open interval (0, 1).
  double uniform();
  double normal();
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct OracleParams {
  int restarts = 200;
  int refine_iters = 500;
  std::uint64_t seed = 42;
};

struct OracleResult {
  double d_estimate;
  PureState best_state;
  int restarts_used;
  int refinement_iterations;
  std::uint64_t seed;
};

PureState sample_pure_state(std::size_t n, Rng& rng);

// Objective evaluated as purity + 1 - 2 <psi|rho|psi> and cross-checked
// against hs_distance_sq(rho, |psi><psi|) to within 1e-10.
double objective(const DensityMatrix& rho, const PureState& psi);

// One application of the shifted power map.
PureState power_refine_step(const DensityMatrix& rho, const PureState& psi);

// Seed for restart `index`; restarts draw from independent streams, so the
// minimum does not depend on evaluation order.
std::uint64_t restart_seed(std::uint64_t seed, int index) noexcept;

OracleResult minimize_over_pure(const DensityMatrix& rho, const OracleParams& params = {});

// Exhaustive search over psi = (cos(theta/2), e^{i phi} sin(theta/2)) with
// theta on [0, pi] (endpoints included) and phi on [0, 2 pi) (end excluded).
OracleResult grid_minimize_qubit(const DensityMatrix& rho, int theta_steps, int phi_steps);

}  // namespace qmix
