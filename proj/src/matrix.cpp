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

#include "qmix/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmix/eigen.hpp"
#include "qmix/error.hpp"
#include "qmix/io.hpp"

namespace qmix {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::DimMismatch,
                std::string(what) + ": dimensions " + std::to_string(a) + " and " +
                    std::to_string(b));
  }
}

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Tr(A B) without forming the product.
Complex trace_of_product(const SquareMatrix& a, const SquareMatrix& b) {
  const std::size_t n = a.dim();
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sum += a(i, j) * b(j, i);
  }
  return sum;
}

}  // namespace

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorCode::EmptySpectrum: return "EmptySpectrum";
    case ErrorCode::InternalDisagreement: return "InternalDisagreement";
    case ErrorCode::UnphysicalBloch: return "UnphysicalBloch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

SquareMatrix::SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be >= 1");
}

SquareMatrix::SquareMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be >= 1");
  if (entries_.size() != dim * dim) {
    throw Error(ErrorCode::DimMismatch, "expected " + std::to_string(dim * dim) +
                                            " entries, got " + std::to_string(entries_.size()));
  }
}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::adjoint() const {
  SquareMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix sum");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& other) {
  require_same_dim(dim_, other.dim_, "matrix difference");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

SquareMatrix matmul(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "matmul");
  const std::size_t n = a.dim();
  SquareMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Complex trace(const SquareMatrix& a) {
  Complex sum{};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) worst = std::max(worst, std::abs(ea[k] - eb[k]));
  return worst;
}

double frobenius_norm(const SquareMatrix& a) {
  double sum = 0.0;
  for (const auto& e : a.entries()) sum += std::norm(e);
  return std::sqrt(sum);
}

PureState::PureState(std::vector<Complex> amplitudes, double tol_norm)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw Error(ErrorCode::InvalidArgument, "state dimension must be >= 1");
  double norm_sq = 0.0;
  for (const auto& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw Error(ErrorCode::NotFinite, "state amplitude is not finite");
    }
    norm_sq += std::norm(a);
  }
  const double deviation = std::abs(norm_sq - 1.0);
  if (deviation > tol_norm) {
    throw Error(ErrorCode::NotNormalized,
                "squared norm deviates from 1 by " + short_real(deviation), deviation);
  }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  double norm_sq = 0.0;
  for (const auto& a : amplitudes) norm_sq += std::norm(a);
  if (!(norm_sq > 0.0) || !std::isfinite(norm_sq)) {
    throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero or non-finite vector");
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amplitudes) a *= scale;
  return PureState(std::move(amplitudes));
}

double checked_real(Complex z, double tol, const char* what) {
  if (std::abs(z.imag()) > tol) {
    throw Error(ErrorCode::InternalDisagreement,
                std::string(what) + " has imaginary part " + short_real(z.imag()),
                std::abs(z.imag()));
  }
  return z.real();
}

DensityMatrix validate_density(const SquareMatrix& m, const Tolerances& tol) {
  const std::size_t n = m.dim();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        throw Error(ErrorCode::NotFinite, "entry " + entry_name(i, j) + " is not finite");
      }
    }
  }

  double worst_herm = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double dev = std::abs(m(i, j) - std::conj(m(j, i)));
      if (dev > worst_herm) {
        worst_herm = dev;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst_herm > tol.herm) {
    throw Error(ErrorCode::NotHermitian,
                "entry " + entry_name(wi, wj) + " deviates from conjugate transpose by " +
                    short_real(worst_herm),
                worst_herm);
  }

  SquareMatrix herm(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) herm(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  }

  const Complex tr = trace(herm);
  const double trace_dev = std::abs(tr.real() - 1.0);
  if (trace_dev > tol.trace || std::abs(tr.imag()) > tol.herm) {
    const double dev = std::abs(tr - 1.0);
    throw Error(ErrorCode::TraceNotOne,
                "trace " + short_real(tr.real()) + " deviates from 1 by " +
                    short_real(dev),
                dev);
  }

  EigenOptions opts;
  opts.tol_herm = tol.herm;
  const Spectrum s = hermitian_eig(herm, opts);
  const double lambda_min = s.eigenvalues.back();
  if (lambda_min < -tol.psd) {
    throw Error(ErrorCode::NotPositiveSemidefinite,
                "eigenvalue " + short_real(lambda_min) + " is negative", lambda_min);
  }

  return DensityMatrix(std::move(herm), tol);
}

DensityMatrix pure_projector(const PureState& psi) {
  const std::size_t n = psi.dim();
  SquareMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) p(i, j) = psi[i] * std::conj(psi[j]);
  }
  return DensityMatrix(std::move(p), Tolerances{});
}

DensityMatrix maximally_mixed(std::size_t n) {
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0 / static_cast<double>(n);
  return DensityMatrix(std::move(m), Tolerances{});
}

double purity(const DensityMatrix& rho) {
  return checked_real(trace_of_product(rho.matrix(), rho.matrix()), rho.tolerances().herm,
                      "purity");
}

double overlap(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_same_dim(rho1.dim(), rho2.dim(), "overlap");
  return checked_real(trace_of_product(rho1.matrix(), rho2.matrix()), rho1.tolerances().herm,
                      "Tr(rho1 rho2)");
}

double hs_distance_sq(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_same_dim(rho1.dim(), rho2.dim(), "hs_distance_sq");
  const SquareMatrix diff = rho1.matrix() - rho2.matrix();
  const double d2 =
      checked_real(trace_of_product(diff, diff), rho1.tolerances().herm, "Tr(rho1 - rho2)^2");
  return std::max(d2, 0.0);
}

double expectation(const DensityMatrix& rho, const PureState& psi) {
  require_same_dim(rho.dim(), psi.dim(), "expectation");
  const std::size_t n = rho.dim();
  Complex sum{};
  for (std::size_t i = 0; i < n; ++i) {
    Complex row{};
    for (std::size_t j = 0; j < n; ++j) row += rho(i, j) * psi[j];
    sum += std::conj(psi[i]) * row;
  }
  return checked_real(sum, rho.tolerances().herm, "<psi|rho|psi>");
}

}  // namespace qmix
