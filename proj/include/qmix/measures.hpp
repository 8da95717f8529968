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

// Scalar mixedness measures.
//
// The geometric measure D is the minimal squared Hilbert-Schmidt distance from
// a state to the set of pure states. It is attained at the top eigenvector
// and equals the squared Euclidean distance between the descending spectrum
// and (1, 0, ..., 0):
//
//   D = sum_i lambda_i^2 + 1 - 2 lambda_max
//     = (1 - lambda_max)^2 + sum_{i >= 2} lambda_i^2.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qmix/eigen.hpp"
#include "qmix/matrix.hpp"

namespace qmix {

struct MixednessReport {
  std::size_t dim = 0;
  double purity = 0.0;
  double von_neumann_entropy = 0.0;  // nats
  double linear_entropy = 0.0;
  double geometric_measure = 0.0;
  double lambda_max = 0.0;
  std::vector<double> eigenvalues;
};

// -sum lambda ln lambda with 0 ln 0 = 0 for lambda <= 1e-15.
double von_neumann_entropy(const Spectrum& s, double tol_psd = Tolerances{}.psd);

// 1 - Tr(rho^2); no eigendecomposition.
double linear_entropy(const DensityMatrix& rho);

double geometric_mixing(const Spectrum& s);

// 1 - 1/n, attained only by the maximally mixed state.
double max_geometric_mixing(std::size_t n);

MixednessReport report(const DensityMatrix& rho, const EigenOptions& options = {});

// Flat JSON object, every number printed with 17 significant digits.
std::string to_json(const MixednessReport& r);

}  // namespace qmix
