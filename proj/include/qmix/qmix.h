/*
 * Copyright 2026 The qmix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libqmix.
 *
 * Matrices and validated density matrices are opaque handles owned by the
 * caller and released with the matching *_free function. Every fallible call
 * returns a qmix_status; on failure qmix_last_error() describes the problem
 * (thread-local, valid until the next failing call on the same thread) and
 * qmix_last_error_magnitude() carries the offending deviation or eigenvalue.
 *
 * Arrays of complex entries are passed as separate real and imaginary arrays
 * of dim * dim doubles in row-major order. An imaginary array may be NULL on
 * input to mean "all zero".
 */

#ifndef QMIX_QMIX_H
#define QMIX_QMIX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QMIX_BUILDING_LIBRARY)
#    define QMIX_API __declspec(dllexport)
#  else
#    define QMIX_API __declspec(dllimport)
#  endif
#else
#  define QMIX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmix_status {
  QMIX_OK = 0,
  QMIX_ERR_NOT_HERMITIAN = 1,
  QMIX_ERR_TRACE_NOT_ONE = 2,
  QMIX_ERR_NOT_PSD = 3,
  QMIX_ERR_NOT_FINITE = 4,
  QMIX_ERR_DIM_MISMATCH = 5,
  QMIX_ERR_NOT_NORMALIZED = 6,
  QMIX_ERR_NO_CONVERGENCE = 7,
  QMIX_ERR_NEGATIVE_EIGENVALUE = 8,
  QMIX_ERR_EMPTY_SPECTRUM = 9,
  QMIX_ERR_INTERNAL_DISAGREEMENT = 10,
  QMIX_ERR_UNPHYSICAL_BLOCH = 11,
  QMIX_ERR_OUT_OF_RANGE = 12,
  QMIX_ERR_INVALID_ARGUMENT = 13,
  QMIX_ERR_PARSE = 14,
  QMIX_ERR_IO = 15,
  QMIX_ERR_UNKNOWN = 99
} qmix_status;

typedef struct qmix_matrix qmix_matrix;
typedef struct qmix_density qmix_density;

typedef struct qmix_tolerances {
  double herm;
  double trace;
  double psd;
  double norm;
} qmix_tolerances;

typedef struct qmix_report {
  size_t dim;
  double purity;
  double von_neumann_entropy; /* nats */
  double linear_entropy;
  double geometric_measure;
  double lambda_max;
} qmix_report;

typedef struct qmix_oracle_params {
  int restarts;
  int refine_iters;
  uint64_t seed;
} qmix_oracle_params;

typedef struct qmix_oracle_result {
  double d_estimate;
  int restarts_used;
  int refinement_iterations;
  uint64_t seed;
} qmix_oracle_result;

QMIX_API const char* qmix_version(void);
QMIX_API const char* qmix_status_name(qmix_status status);
QMIX_API const char* qmix_last_error(void);
QMIX_API double qmix_last_error_magnitude(void);

/* All four tolerances default to 1e-9. */
QMIX_API void qmix_default_tolerances(qmix_tolerances* out);
/* restarts = 200, refine_iters = 500, seed = 42. */
QMIX_API void qmix_default_oracle_params(qmix_oracle_params* out);

/* Strings returned through char** are heap-allocated; release them here. */
QMIX_API void qmix_string_free(char* s);

/* --- raw matrices ------------------------------------------------------ */

QMIX_API qmix_status qmix_matrix_create(size_t dim, const double* re, const double* im,
                                        qmix_matrix** out);
QMIX_API qmix_status qmix_matrix_parse_json(const char* text, qmix_matrix** out);
QMIX_API qmix_status qmix_matrix_load_json(const char* path, qmix_matrix** out);
QMIX_API void qmix_matrix_free(qmix_matrix* m);
QMIX_API size_t qmix_matrix_dim(const qmix_matrix* m);
QMIX_API qmix_status qmix_matrix_entries(const qmix_matrix* m, double* re, double* im);

/* --- density matrices -------------------------------------------------- */

/* tol may be NULL for defaults. */
QMIX_API qmix_status qmix_density_validate(const qmix_matrix* m, const qmix_tolerances* tol,
                                           qmix_density** out);
QMIX_API qmix_status qmix_density_maximally_mixed(size_t dim, qmix_density** out);
/* |psi><psi|; psi must have unit norm within 1e-9. */
QMIX_API qmix_status qmix_density_pure(size_t dim, const double* re, const double* im,
                                       qmix_density** out);
QMIX_API qmix_status qmix_density_from_bloch(double ax, double ay, double az, qmix_density** out);
QMIX_API void qmix_density_free(qmix_density* rho);
QMIX_API size_t qmix_density_dim(const qmix_density* rho);
QMIX_API qmix_status qmix_density_entries(const qmix_density* rho, double* re, double* im);

/* --- measures ---------------------------------------------------------- */

QMIX_API qmix_status qmix_purity(const qmix_density* rho, double* out);
QMIX_API qmix_status qmix_linear_entropy(const qmix_density* rho, double* out);
QMIX_API qmix_status qmix_hs_distance_sq(const qmix_density* a, const qmix_density* b,
                                         double* out);
/* eigenvalues may be NULL; otherwise it receives dim values, descending. */
QMIX_API qmix_status qmix_analyze(const qmix_density* rho, qmix_report* out, double* eigenvalues);
QMIX_API qmix_status qmix_report_json(const qmix_density* rho, char** out);
QMIX_API double qmix_max_geometric_mixing(size_t dim);

/* --- oracle ------------------------------------------------------------ */

/* params may be NULL for defaults; best_re/best_im may be NULL. */
QMIX_API qmix_status qmix_oracle_minimize(const qmix_density* rho,
                                          const qmix_oracle_params* params,
                                          qmix_oracle_result* out, double* best_re,
                                          double* best_im);
QMIX_API qmix_status qmix_oracle_grid_qubit(const qmix_density* rho, int theta_steps,
                                            int phi_steps, qmix_oracle_result* out);

/* --- qubits ------------------------------------------------------------ */

QMIX_API qmix_status qmix_bloch_from_density(const qmix_density* rho, double out[3]);
QMIX_API qmix_status qmix_qubit_eigenvalues(double length, double* first, double* second);
QMIX_API qmix_status qmix_qubit_geometric_mixing(double length, double* out);

#ifdef __cplusplus
}
#endif

#endif /* QMIX_QMIX_H */
