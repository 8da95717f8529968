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

#include "qmix/qmix.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "qmix/bloch.hpp"
#include "qmix/error.hpp"
#include "qmix/io.hpp"
#include "qmix/measures.hpp"
#include "qmix/oracle.hpp"

struct qmix_matrix {
  qmix::SquareMatrix value;
};

struct qmix_density {
  qmix::DensityMatrix value;
};

namespace {

thread_local std::string g_last_error;
thread_local double g_last_magnitude = 0.0;

qmix_status to_status(qmix::ErrorCode code) {
  using qmix::ErrorCode;
  switch (code) {
    case ErrorCode::NotHermitian: return QMIX_ERR_NOT_HERMITIAN;
    case ErrorCode::TraceNotOne: return QMIX_ERR_TRACE_NOT_ONE;
    case ErrorCode::NotPositiveSemidefinite: return QMIX_ERR_NOT_PSD;
    case ErrorCode::NotFinite: return QMIX_ERR_NOT_FINITE;
    case ErrorCode::DimMismatch: return QMIX_ERR_DIM_MISMATCH;
    case ErrorCode::NotNormalized: return QMIX_ERR_NOT_NORMALIZED;
    case ErrorCode::NoConvergence: return QMIX_ERR_NO_CONVERGENCE;
    case ErrorCode::NegativeEigenvalue: return QMIX_ERR_NEGATIVE_EIGENVALUE;
    case ErrorCode::EmptySpectrum: return QMIX_ERR_EMPTY_SPECTRUM;
    case ErrorCode::InternalDisagreement: return QMIX_ERR_INTERNAL_DISAGREEMENT;
    case ErrorCode::UnphysicalBloch: return QMIX_ERR_UNPHYSICAL_BLOCH;
    case ErrorCode::OutOfRange: return QMIX_ERR_OUT_OF_RANGE;
    case ErrorCode::InvalidArgument: return QMIX_ERR_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return QMIX_ERR_PARSE;
    case ErrorCode::IoError: return QMIX_ERR_IO;
  }
  return QMIX_ERR_UNKNOWN;
}

qmix_status fail(qmix_status status, std::string message, double magnitude = 0.0) {
  g_last_error = std::move(message);
  g_last_magnitude = magnitude;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
qmix_status guarded(F&& body) {
  try {
    body();
    return QMIX_OK;
  } catch (const qmix::Error& e) {
    return fail(to_status(e.code()), e.what(), e.magnitude());
  } catch (const std::bad_alloc&) {
    return fail(QMIX_ERR_UNKNOWN, "out of memory");
  } catch (const std::exception& e) {
    return fail(QMIX_ERR_UNKNOWN, e.what());
  }
}

qmix_status null_argument(const char* name) {
  return fail(QMIX_ERR_INVALID_ARGUMENT, std::string("InvalidArgument: ") + name + " is NULL");
}

qmix::Tolerances to_tolerances(const qmix_tolerances* tol) {
  qmix::Tolerances t;
  if (tol) t = {tol->herm, tol->trace, tol->psd, tol->norm};
  return t;
}

std::vector<qmix::Complex> gather(std::size_t count, const double* re, const double* im) {
  std::vector<qmix::Complex> v(count);
  for (std::size_t k = 0; k < count; ++k) v[k] = {re[k], im ? im[k] : 0.0};
  return v;
}

void scatter(const qmix::SquareMatrix& m, double* re, double* im) {
  auto entries = m.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (re) re[k] = entries[k].real();
    if (im) im[k] = entries[k].imag();
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void fill_oracle(const qmix::OracleResult& r, qmix_oracle_result* out) {
  out->d_estimate = r.d_estimate;
  out->restarts_used = r.restarts_used;
  out->refinement_iterations = r.refinement_iterations;
  out->seed = r.seed;
}

}  // namespace

extern "C" {

const char* qmix_version(void) { return "0.1.0"; }

const char* qmix_status_name(qmix_status status) {
  switch (status) {
    case QMIX_OK: return "OK";
    case QMIX_ERR_NOT_HERMITIAN: return "NotHermitian";
    case QMIX_ERR_TRACE_NOT_ONE: return "TraceNotOne";
    case QMIX_ERR_NOT_PSD: return "NotPositiveSemidefinite";
    case QMIX_ERR_NOT_FINITE: return "NotFinite";
    case QMIX_ERR_DIM_MISMATCH: return "DimMismatch";
    case QMIX_ERR_NOT_NORMALIZED: return "NotNormalized";
    case QMIX_ERR_NO_CONVERGENCE: return "NoConvergence";
    case QMIX_ERR_NEGATIVE_EIGENVALUE: return "NegativeEigenvalue";
    case QMIX_ERR_EMPTY_SPECTRUM: return "EmptySpectrum";
    case QMIX_ERR_INTERNAL_DISAGREEMENT: return "InternalDisagreement";
    case QMIX_ERR_UNPHYSICAL_BLOCH: return "UnphysicalBloch";
    case QMIX_ERR_OUT_OF_RANGE: return "OutOfRange";
    case QMIX_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case QMIX_ERR_PARSE: return "ParseError";
    case QMIX_ERR_IO: return "IoError";
    case QMIX_ERR_UNKNOWN: break;
  }
  return "Unknown";
}

const char* qmix_last_error(void) { return g_last_error.c_str(); }

double qmix_last_error_magnitude(void) { return g_last_magnitude; }

void qmix_default_tolerances(qmix_tolerances* out) {
  if (!out) return;
  const qmix::Tolerances t;
  *out = {t.herm, t.trace, t.psd, t.norm};
}

void qmix_default_oracle_params(qmix_oracle_params* out) {
  if (!out) return;
  const qmix::OracleParams p;
  *out = {p.restarts, p.refine_iters, p.seed};
}

void qmix_string_free(char* s) { std::free(s); }

qmix_status qmix_matrix_create(size_t dim, const double* re, const double* im, qmix_matrix** out) {
  if (!re) return null_argument("re");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new qmix_matrix{qmix::SquareMatrix(dim, gather(dim * dim, re, im))};
  });
}

qmix_status qmix_matrix_parse_json(const char* text, qmix_matrix** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new qmix_matrix{qmix::parse_matrix_json(text)}; });
}

qmix_status qmix_matrix_load_json(const char* path, qmix_matrix** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new qmix_matrix{qmix::load_matrix_json(path)}; });
}

void qmix_matrix_free(qmix_matrix* m) { delete m; }

size_t qmix_matrix_dim(const qmix_matrix* m) { return m ? m->value.dim() : 0; }

qmix_status qmix_matrix_entries(const qmix_matrix* m, double* re, double* im) {
  if (!m) return null_argument("matrix");
  scatter(m->value, re, im);
  return QMIX_OK;
}

qmix_status qmix_density_validate(const qmix_matrix* m, const qmix_tolerances* tol,
                                  qmix_density** out) {
  if (!m) return null_argument("matrix");
  if (!out) return null_argument("out");
  return guarded(
      [&] { *out = new qmix_density{qmix::validate_density(m->value, to_tolerances(tol))}; });
}

qmix_status qmix_density_maximally_mixed(size_t dim, qmix_density** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new qmix_density{qmix::maximally_mixed(dim)}; });
}

qmix_status qmix_density_pure(size_t dim, const double* re, const double* im, qmix_density** out) {
  if (!re) return null_argument("re");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new qmix_density{qmix::pure_projector(qmix::PureState(gather(dim, re, im)))};
  });
}

qmix_status qmix_density_from_bloch(double ax, double ay, double az, qmix_density** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new qmix_density{qmix::density_from_bloch({ax, ay, az})}; });
}

void qmix_density_free(qmix_density* rho) { delete rho; }

size_t qmix_density_dim(const qmix_density* rho) { return rho ? rho->value.dim() : 0; }

qmix_status qmix_density_entries(const qmix_density* rho, double* re, double* im) {
  if (!rho) return null_argument("density");
  scatter(rho->value.matrix(), re, im);
  return QMIX_OK;
}

qmix_status qmix_purity(const qmix_density* rho, double* out) {
  if (!rho) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] { *out = qmix::purity(rho->value); });
}

qmix_status qmix_linear_entropy(const qmix_density* rho, double* out) {
  if (!rho) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] { *out = qmix::linear_entropy(rho->value); });
}

qmix_status qmix_hs_distance_sq(const qmix_density* a, const qmix_density* b, double* out) {
  if (!a || !b) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] { *out = qmix::hs_distance_sq(a->value, b->value); });
}

qmix_status qmix_analyze(const qmix_density* rho, qmix_report* out, double* eigenvalues) {
  if (!rho) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] {
    const qmix::MixednessReport r = qmix::report(rho->value);
    *out = {r.dim, r.purity, r.von_neumann_entropy, r.linear_entropy, r.geometric_measure,
            r.lambda_max};
    if (eigenvalues) std::copy(r.eigenvalues.begin(), r.eigenvalues.end(), eigenvalues);
  });
}

qmix_status qmix_report_json(const qmix_density* rho, char** out) {
  if (!rho) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] { *out = duplicate(qmix::to_json(qmix::report(rho->value))); });
}

double qmix_max_geometric_mixing(size_t dim) {
  return dim == 0 ? 0.0 : qmix::max_geometric_mixing(dim);
}

qmix_status qmix_oracle_minimize(const qmix_density* rho, const qmix_oracle_params* params,
                                 qmix_oracle_result* out, double* best_re, double* best_im) {
  if (!rho) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] {
    qmix::OracleParams p;
    if (params) p = {params->restarts, params->refine_iters, params->seed};
    const qmix::OracleResult r = qmix::minimize_over_pure(rho->value, p);
    fill_oracle(r, out);
    for (std::size_t i = 0; i < r.best_state.dim(); ++i) {
      if (best_re) best_re[i] = r.best_state[i].real();
      if (best_im) best_im[i] = r.best_state[i].imag();
    }
  });
}

qmix_status qmix_oracle_grid_qubit(const qmix_density* rho, int theta_steps, int phi_steps,
                                   qmix_oracle_result* out) {
  if (!rho) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] {
    fill_oracle(qmix::grid_minimize_qubit(rho->value, theta_steps, phi_steps), out);
  });
}

qmix_status qmix_bloch_from_density(const qmix_density* rho, double out[3]) {
  if (!rho) return null_argument("density");
  if (!out) return null_argument("out");
  return guarded([&] {
    const qmix::BlochVector a = qmix::bloch_from_density(rho->value);
    out[0] = a.x;
    out[1] = a.y;
    out[2] = a.z;
  });
}

qmix_status qmix_qubit_eigenvalues(double length, double* first, double* second) {
  if (!first || !second) return null_argument("out");
  return guarded([&] {
    const auto ev = qmix::qubit_eigenvalues(length);
    *first = ev.first;
    *second = ev.second;
  });
}

qmix_status qmix_qubit_geometric_mixing(double length, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = qmix::qubit_geometric_mixing(length); });
}

}  // extern "C"
