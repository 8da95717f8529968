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

#include "qmix/oracle.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "qmix/error.hpp"
#include "qmix/io.hpp"

namespace qmix {

namespace {

constexpr double kPathAgreement = 1e-10;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

double Rng::uniform() {
  // 53 random bits, offset by half an ulp so 0 is never produced.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double radius = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

PureState sample_pure_state(std::size_t n, Rng& rng) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  std::vector<Complex> amps(n);
  for (auto& a : amps) a = rng.complex_normal();
  return PureState::normalized(std::move(amps));
}

double objective(const DensityMatrix& rho, const PureState& psi) {
  if (rho.dim() != psi.dim()) {
    throw Error(ErrorCode::DimMismatch, "state of dimension " + std::to_string(psi.dim()) +
                                            " against matrix of dimension " +
                                            std::to_string(rho.dim()));
  }
  // Tr rho^2 + Tr rho_pure^2 - 2 Tr rho rho_pure with Tr rho_pure^2 = 1.
  const double decomposed = purity(rho) + 1.0 - 2.0 * expectation(rho, psi);
  const double direct = hs_distance_sq(rho, pure_projector(psi));
  if (std::abs(decomposed - direct) > kPathAgreement) {
    throw Error(ErrorCode::InternalDisagreement,
                "objective paths differ by " + short_real(decomposed - direct),
                std::abs(decomposed - direct));
  }
  return decomposed;
}

PureState power_refine_step(const DensityMatrix& rho, const PureState& psi) {
  const std::size_t n = rho.dim();
  std::vector<Complex> next(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = psi[i];
    for (std::size_t j = 0; j < n; ++j) acc += rho(i, j) * psi[j];
    next[i] = acc;
  }
  return PureState::normalized(std::move(next));
}

std::uint64_t restart_seed(std::uint64_t seed, int index) noexcept {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index)));
}

OracleResult minimize_over_pure(const DensityMatrix& rho, const OracleParams& params) {
  if (params.restarts < 1) throw Error(ErrorCode::InvalidArgument, "restarts must be >= 1");
  if (params.refine_iters < 0) throw Error(ErrorCode::InvalidArgument, "refine_iters must be >= 0");

  std::optional<OracleResult> best;
  for (int r = 0; r < params.restarts; ++r) {
    Rng rng(restart_seed(params.seed, r));
    PureState psi = sample_pure_state(rho.dim(), rng);
    for (int k = 0; k < params.refine_iters; ++k) psi = power_refine_step(rho, psi);
    const double value = objective(rho, psi);
    // Strict comparison keeps the lowest restart index among equal values.
    if (!best || value < best->d_estimate) {
      best = OracleResult{value, std::move(psi), params.restarts, params.refine_iters,
                          params.seed};
    }
  }
  return *std::move(best);
}

OracleResult grid_minimize_qubit(const DensityMatrix& rho, int theta_steps, int phi_steps) {
  if (rho.dim() != 2) {
    throw Error(ErrorCode::DimMismatch,
                "grid search needs a qubit, got dimension " + std::to_string(rho.dim()));
  }
  if (theta_steps < 2 || phi_steps < 2) {
    throw Error(ErrorCode::InvalidArgument, "grid needs at least 2 steps per angle");
  }

  std::optional<OracleResult> best;
  for (int t = 0; t < theta_steps; ++t) {
    const double theta = std::numbers::pi * t / (theta_steps - 1);
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    for (int p = 0; p < phi_steps; ++p) {
      const double phi = 2.0 * std::numbers::pi * p / phi_steps;
      PureState psi({c, std::polar(s, phi)});
      const double value = objective(rho, psi);
      if (!best || value < best->d_estimate) {
        best = OracleResult{value, std::move(psi), theta_steps * phi_steps, 0, 0};
      }
    }
  }
  return *std::move(best);
}

}  // namespace qmix
