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

#include "qmix/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmix/error.hpp"
#include "qmix/io.hpp"

namespace qmix {

namespace {

constexpr double kZeroLogCutoff = 1e-15;
constexpr double kFormAgreement = 1e-12;
constexpr double kPurityAgreement = 1e-10;

}  // namespace

double von_neumann_entropy(const Spectrum& s, double tol_psd) {
  double entropy = 0.0;
  for (double lambda : s.eigenvalues) {
    if (lambda < -tol_psd) {
      throw Error(ErrorCode::NegativeEigenvalue,
                  "eigenvalue " + short_real(lambda) + " in entropy", lambda);
    }
    if (lambda <= kZeroLogCutoff) continue;
    entropy -= lambda * std::log(lambda);
  }
  return std::max(entropy, 0.0);
}

double linear_entropy(const DensityMatrix& rho) { return 1.0 - purity(rho); }

double geometric_mixing(const Spectrum& s) {
  if (s.eigenvalues.empty()) throw Error(ErrorCode::EmptySpectrum, "spectrum has no eigenvalues");

  const double lambda_max = s.eigenvalues.front();
  double sum_sq = 0.0;
  double tail_sq = 0.0;
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    const double sq = s.eigenvalues[i] * s.eigenvalues[i];
    sum_sq += sq;
    if (i > 0) tail_sq += sq;
  }
  const double expanded = sum_sq + 1.0 - 2.0 * lambda_max;
  const double distance = (1.0 - lambda_max) * (1.0 - lambda_max) + tail_sq;
  if (std::abs(expanded - distance) > kFormAgreement) {
    throw Error(ErrorCode::InternalDisagreement,
                "closed forms differ by " + short_real(expanded - distance),
                std::abs(expanded - distance));
  }
  return std::max(expanded, 0.0);
}

double max_geometric_mixing(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  return 1.0 - 1.0 / static_cast<double>(n);
}

MixednessReport report(const DensityMatrix& rho, const EigenOptions& options) {
  const Spectrum s = density_spectrum(rho, options);

  MixednessReport r;
  r.dim = rho.dim();
  r.purity = purity(rho);

  double spectral_purity = 0.0;
  for (double lambda : s.eigenvalues) spectral_purity += lambda * lambda;
  if (std::abs(spectral_purity - r.purity) > kPurityAgreement) {
    throw Error(ErrorCode::InternalDisagreement,
                "purity from spectrum and from Tr(rho^2) differ by " +
                    short_real(spectral_purity - r.purity),
                std::abs(spectral_purity - r.purity));
  }

  r.von_neumann_entropy = von_neumann_entropy(s, rho.tolerances().psd);
  r.linear_entropy = 1.0 - r.purity;
  r.geometric_measure = geometric_mixing(s);
  r.lambda_max = s.eigenvalues.front();
  r.eigenvalues = s.eigenvalues;
  return r;
}

std::string to_json(const MixednessReport& r) {
  std::string out = "{\"dim\": " + std::to_string(r.dim);
  out += ", \"purity\": " + format_real(r.purity);
  out += ", \"von_neumann_entropy\": " + format_real(r.von_neumann_entropy);
  out += ", \"linear_entropy\": " + format_real(r.linear_entropy);
  out += ", \"geometric_measure\": " + format_real(r.geometric_measure);
  out += ", \"lambda_max\": " + format_real(r.lambda_max);
  out += ", \"eigenvalues\": [";
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_real(r.eigenvalues[i]);
  }
  out += "]}";
  return out;
}

}  // namespace qmix
