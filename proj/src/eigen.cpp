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

#include "qmix/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qmix/error.hpp"
#include "qmix/io.hpp"

namespace qmix {

namespace {

double off_diagonal_norm(const SquareMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Annihilates a(p, q) with the unitary U = P R acting on columns p, q, where
// P = diag(1, e^{-i phi}) makes the pivot real (a_pq = |a_pq| e^{i phi}) and R
// is the real Jacobi rotation of the resulting symmetric 2x2 block.
// Applies a <- U^dagger a U and v <- v U.
void rotate(SquareMatrix& a, SquareMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;

  const Complex phase = std::conj(apq) / mag;  // e^{-i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex upp = c;
  const Complex upq = s;
  const Complex uqp = -s * phase;
  const Complex uqq = c * phase;

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * upp + vkq * uqp;
    v(k, q) = vkp * upq + vkq * uqq;
  }
}

}  // namespace

Spectrum hermitian_eig(const SquareMatrix& m, const EigenOptions& options) {
  const std::size_t n = m.dim();

  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex e = m(i, j);
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
        throw Error(ErrorCode::NotFinite, "eigensolver input has a non-finite entry");
      }
      worst = std::max(worst, std::abs(e - std::conj(m(j, i))));
    }
  }
  if (worst > options.tol_herm) {
    throw Error(ErrorCode::NotHermitian,
                "eigensolver input deviates from Hermitian by " + short_real(worst), worst);
  }

  SquareMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  }
  SquareMatrix v = SquareMatrix::identity(n);

  const double threshold = options.convergence_threshold > 0.0
                               ? options.convergence_threshold
                               : options.relative_threshold * frobenius_norm(a);

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "no convergence after " + std::to_string(options.max_sweeps) + " sweeps",
                off_diagonal_norm(a));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors = SquareMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    s.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) s.eigenvectors(i, k) = v(i, order[k]);
  }
  return s;
}

EigenPair max_eigpair(const Spectrum& s) {
  if (s.eigenvalues.empty()) throw Error(ErrorCode::EmptySpectrum, "spectrum has no eigenvalues");
  const std::size_t n = s.dim();
  std::vector<Complex> column(n);
  for (std::size_t i = 0; i < n; ++i) column[i] = s.eigenvectors(i, 0);
  return {s.eigenvalues.front(), PureState::normalized(std::move(column))};
}

Spectrum density_spectrum(const DensityMatrix& rho, const EigenOptions& options) {
  const Tolerances& tol = rho.tolerances();
  EigenOptions opts = options;
  opts.tol_herm = tol.herm;
  Spectrum s = hermitian_eig(rho.matrix(), opts);

  for (double& lambda : s.eigenvalues) {
    if (lambda < -tol.psd) {
      throw Error(ErrorCode::NegativeEigenvalue,
                  "eigenvalue " + short_real(lambda) + " below -tol_psd", lambda);
    }
    lambda = std::clamp(lambda, 0.0, 1.0);
  }
  const double sum = std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
  if (std::abs(sum - 1.0) > tol.trace) {
    for (double& lambda : s.eigenvalues) lambda /= sum;
  }
  return s;
}

}  // namespace qmix
