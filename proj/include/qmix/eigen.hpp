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

// Hermitian eigendecomposition by cyclic complex Jacobi rotations.

#pragma once

#include <cstddef>
#include <vector>

#include "qmix/matrix.hpp"

namespace qmix {

struct EigenOptions {
  // Absolute off-diagonal Frobenius threshold. When <= 0 the threshold is
  // relative_threshold * ||M||_F.
  double convergence_threshold = 0.0;
  double relative_threshold = 1e-12;
  int max_sweeps = 100;
  double tol_herm = Tolerances{}.herm;
};

// Eigenvalues in descending order; column k of `eigenvectors` belongs to
// eigenvalues[k]. Ties keep the order of the original diagonal index.
struct Spectrum {
  std::vector<double> eigenvalues;
  SquareMatrix eigenvectors{1};

  std::size_t dim() const noexcept { return eigenvalues.size(); }
};

Spectrum hermitian_eig(const SquareMatrix& m, const EigenOptions& options = {});

struct EigenPair {
  double value;
  PureState vector;
};

EigenPair max_eigpair(const Spectrum& s);

// Spectrum of a validated state with eigenvalues in [-tol_psd, 0) clamped to
// zero and values above one clamped to one. The list is rescaled to unit sum
// only if clamping moved the sum by more than tol_trace.
Spectrum density_spectrum(const DensityMatrix& rho, const EigenOptions& options = {});

}  // namespace qmix
