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

// Qubit states in the Bloch parameterization rho = (1 + a . sigma) / 2 with
// the standard Pauli matrices.

#pragma once

#include "qmix/matrix.hpp"

namespace qmix {

// Round-off excess over unit length accepted (and rescaled away).
inline constexpr double kBlochLengthTol = 1e-12;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double length() const noexcept;
};

const SquareMatrix& pauli_x();
const SquareMatrix& pauli_y();
const SquareMatrix& pauli_z();

DensityMatrix density_from_bloch(const BlochVector& a);

// a_k = Tr(rho sigma_k).
BlochVector bloch_from_density(const DensityMatrix& rho);

struct QubitEigenvalues {
  double first;   // (1 + a) / 2
  double second;  // (1 - a) / 2
};

QubitEigenvalues qubit_eigenvalues(double length);

// (1 - a)^2 / 2.
double qubit_geometric_mixing(double length);

}  // namespace qmix
