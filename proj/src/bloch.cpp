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

#include "qmix/bloch.hpp"

#include <cmath>
#include <string>

#include "qmix/error.hpp"
#include "qmix/io.hpp"

namespace qmix {

namespace {

void require_unit_range(double length) {
  if (!(length >= 0.0 && length <= 1.0)) {
    throw Error(ErrorCode::OutOfRange,
                "Bloch length " + short_real(length) + " outside [0, 1]", length);
  }
}

}  // namespace

double BlochVector::length() const noexcept { return std::sqrt(x * x + y * y + z * z); }

const SquareMatrix& pauli_x() {
  static const SquareMatrix m(2, {0.0, 1.0, 1.0, 0.0});
  return m;
}

const SquareMatrix& pauli_y() {
  static const SquareMatrix m(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
  return m;
}

const SquareMatrix& pauli_z() {
  static const SquareMatrix m(2, {1.0, 0.0, 0.0, -1.0});
  return m;
}

DensityMatrix density_from_bloch(const BlochVector& a) {
  BlochVector v = a;
  const double len = v.length();
  if (!std::isfinite(len) || len > 1.0 + kBlochLengthTol) {
    throw Error(ErrorCode::UnphysicalBloch,
                "Bloch vector length " + short_real(len) + " exceeds 1", len);
  }
  if (len > 1.0) {
    v.x /= len;
    v.y /= len;
    v.z /= len;
  }
  SquareMatrix m(2, {Complex(0.5 * (1.0 + v.z), 0.0), Complex(0.5 * v.x, -0.5 * v.y),
                     Complex(0.5 * v.x, 0.5 * v.y), Complex(0.5 * (1.0 - v.z), 0.0)});
  return validate_density(m);
}

BlochVector bloch_from_density(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw Error(ErrorCode::DimMismatch,
                "Bloch vector needs a qubit, got dimension " + std::to_string(rho.dim()));
  }
  const double tol = rho.tolerances().herm;
  const auto& m = rho.matrix();
  return {checked_real(trace(matmul(m, pauli_x())), tol, "Tr(rho sigma_x)"),
          checked_real(trace(matmul(m, pauli_y())), tol, "Tr(rho sigma_y)"),
          checked_real(trace(matmul(m, pauli_z())), tol, "Tr(rho sigma_z)")};
}

QubitEigenvalues qubit_eigenvalues(double length) {
  require_unit_range(length);
  return {0.5 * (1.0 + length), 0.5 * (1.0 - length)};
}

double qubit_geometric_mixing(double length) {
  require_unit_range(length);
  return 0.5 * (1.0 - length) * (1.0 - length);
}

}  // namespace qmix
