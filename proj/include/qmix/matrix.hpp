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

// Dense complex matrices, validated density matrices and pure states.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qmix {

using Complex = std::complex<double>;

struct Tolerances {
  double herm = 1e-9;
  double trace = 1e-9;
  double psd = 1e-9;
  double norm = 1e-9;
};

// Unvalidated n x n complex matrix, row-major.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t dim);
  SquareMatrix(std::size_t dim, std::vector<Complex> entries);

  static SquareMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  SquareMatrix adjoint() const;

  SquareMatrix& operator+=(const SquareMatrix& other);
  SquareMatrix& operator-=(const SquareMatrix& other);
  SquareMatrix& operator*=(Complex scale);

  friend SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs += rhs; }
  friend SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs -= rhs; }
  friend SquareMatrix operator*(SquareMatrix lhs, Complex scale) { return lhs *= scale; }
  friend SquareMatrix operator*(Complex scale, SquareMatrix rhs) { return rhs *= scale; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b);
Complex trace(const SquareMatrix& a);

// Largest entrywise modulus of a - b.
double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b);
double frobenius_norm(const SquareMatrix& a);

// Unit vector in C^n.
class PureState {
 public:
  // Throws NotNormalized unless | sum |psi_i|^2 - 1 | <= tol_norm.
  explicit PureState(std::vector<Complex> amplitudes, double tol_norm = Tolerances{}.norm);

  // Scales a nonzero vector to unit norm.
  static PureState normalized(std::vector<Complex> amplitudes);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

  bool operator==(const PureState&) const = default;

 private:
  std::vector<Complex> amplitudes_;
};

// Hermitian, unit-trace, positive-semidefinite matrix. Only obtainable through
// validate_density or the constructors below, so every instance satisfies the
// three axioms under the tolerances it carries.
class DensityMatrix {
 public:
  std::size_t dim() const noexcept { return matrix_.dim(); }
  const SquareMatrix& matrix() const noexcept { return matrix_; }
  const Tolerances& tolerances() const noexcept { return tol_; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

 private:
  DensityMatrix(SquareMatrix m, Tolerances tol) : matrix_(std::move(m)), tol_(tol) {}

  friend DensityMatrix validate_density(const SquareMatrix&, const Tolerances&);
  friend DensityMatrix pure_projector(const PureState&);
  friend DensityMatrix maximally_mixed(std::size_t);

  SquareMatrix matrix_;
  Tolerances tol_;
};

// Checks finiteness, hermiticity, unit trace and positivity in that order.
// The stored matrix is the Hermitian part (M + M^dagger) / 2.
DensityMatrix validate_density(const SquareMatrix& m, const Tolerances& tol = {});

DensityMatrix pure_projector(const PureState& psi);
DensityMatrix maximally_mixed(std::size_t n);

// Tr(rho^2).
double purity(const DensityMatrix& rho);

// Tr(rho1 - rho2)^2, clamped at zero.
double hs_distance_sq(const DensityMatrix& rho1, const DensityMatrix& rho2);

// <psi|rho|psi>.
double expectation(const DensityMatrix& rho, const PureState& psi);

// Re Tr(rho1 rho2), used by the expansion d^2 = P1 + P2 - 2 Re Tr(rho1 rho2).
double overlap(const DensityMatrix& rho1, const DensityMatrix& rho2);

// Returns z.real(), throwing InternalDisagreement when |z.imag()| > tol.
double checked_real(Complex z, double tol, const char* what);

}  // namespace qmix
