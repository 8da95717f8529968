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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qmix/eigen.hpp"
#include "qmix/error.hpp"
#include "qmix/matrix.hpp"
#include "support/testing.hpp"

using namespace qmix;
using qmix::testing::diag;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected qmix::Error");
  return ErrorCode::InvalidArgument;
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("validate_density accepts and rejects the basic examples") {
  const DensityMatrix half = validate_density(diag({0.5, 0.5}));
  CHECK(max_abs_diff(half.matrix(), maximally_mixed(2).matrix()) == 0.0);

  try {
    validate_density(diag({0.7, 0.4}));
    FAIL("trace 1.1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TraceNotOne);
    CHECK(e.magnitude() == doctest::Approx(0.1).epsilon(1e-12));
  }

  try {
    validate_density(diag({1.2, -0.2}));
    FAIL("negative eigenvalue accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPositiveSemidefinite);
    CHECK(e.magnitude() == doctest::Approx(-0.2).epsilon(1e-12));
  }

  SquareMatrix skew(2, {0.5, 0.2, 0.0, 0.5});
  try {
    validate_density(skew);
    FAIL("non-Hermitian accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
    CHECK(e.magnitude() == doctest::Approx(0.2));
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
}

TEST_CASE("validate_density edge cases") {
  SquareMatrix complex_diag(2, {Complex(0.5, 1e-3), 0.0, 0.0, 0.5});
  CHECK(code_of([&] { validate_density(complex_diag); }) == ErrorCode::NotHermitian);

  SquareMatrix nan_entry = diag({0.5, 0.5});
  nan_entry(0, 1) = std::nan("");
  CHECK(code_of([&] { validate_density(nan_entry); }) == ErrorCode::NotFinite);

  // Within tolerance on every axiom.
  SquareMatrix noisy(2, {Complex(0.5 + 4e-10, 0.0), Complex(0.0, 1e-10), 0.0,
                         Complex(0.5 - 1e-10, 0.0)});
  CHECK_NOTHROW(validate_density(noisy));

  // Looser tolerances admit what the defaults reject.
  Tolerances loose;
  loose.trace = 0.2;
  CHECK_NOTHROW(validate_density(diag({0.7, 0.4}), loose));

  CHECK(validate_density(diag({1.0})).dim() == 1);
  CHECK(code_of([] { SquareMatrix(0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { SquareMatrix(2, {1.0, 0.0, 0.0}); }) == ErrorCode::DimMismatch);
}

TEST_CASE("matmul examples") {
  Rng rng(7);
  const SquareMatrix a = testing::random_complex_matrix(3, rng);
  CHECK(max_abs_diff(matmul(a, SquareMatrix::identity(3)), a) == 0.0);

  const SquareMatrix sx(2, {0.0, 1.0, 1.0, 0.0});
  CHECK(max_abs_diff(matmul(sx, sx), SquareMatrix::identity(2)) == 0.0);

  for (int k = 0; k < 20; ++k) {
    const DensityMatrix p = pure_projector(sample_pure_state(4, rng));
    CHECK(max_abs_diff(matmul(p.matrix(), p.matrix()), p.matrix()) < 1e-14);
  }

  CHECK(code_of([] { matmul(SquareMatrix(2), SquareMatrix(3)); }) == ErrorCode::DimMismatch);
}

TEST_CASE("trace examples") {
  CHECK(trace(SquareMatrix::identity(5)) == Complex(5.0));
  CHECK(trace(SquareMatrix(2, {1.0, 0.0, 0.0, -1.0})) == Complex(0.0));
  Rng rng(11);
  for (int k = 0; k < 10; ++k) {
    CHECK(std::abs(trace(testing::random_density(3, rng).matrix()) - 1.0) < 1e-12);
  }
}

TEST_CASE("purity examples") {
  Rng rng(3);
  CHECK(purity(pure_projector(sample_pure_state(3, rng))) == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(purity(maximally_mixed(n)) == doctest::Approx(1.0 / n).epsilon(1e-15));
  }
  // Bloch length 0.6 along x: [[0.5, 0.3], [0.3, 0.5]].
  const DensityMatrix q = validate_density(SquareMatrix(2, {0.5, 0.3, 0.3, 0.5}));
  CHECK(std::abs(purity(q) - 0.68) < 1e-15);
  CHECK(std::abs(trace(matmul(q.matrix(), q.matrix())).real() - 0.68) < 1e-15);
}

TEST_CASE("hs_distance_sq examples") {
  Rng rng(5);
  const DensityMatrix rho = testing::random_density(4, rng);
  CHECK(hs_distance_sq(rho, rho) == 0.0);

  for (std::size_t n : {2u, 3u, 4u, 8u}) {
    const DensityMatrix p = pure_projector(sample_pure_state(n, rng));
    CHECK(std::abs(hs_distance_sq(maximally_mixed(n), p) - (1.0 - 1.0 / n)) < 1e-12);
  }

  const DensityMatrix ket0 = pure_projector(PureState({1.0, 0.0}));
  const DensityMatrix ket1 = pure_projector(PureState({0.0, 1.0}));
  CHECK(hs_distance_sq(ket0, ket1) == 2.0);

  CHECK(code_of([] { hs_distance_sq(maximally_mixed(2), maximally_mixed(3)); }) ==
        ErrorCode::DimMismatch);
}

TEST_CASE("pure_projector examples") {
  CHECK(pure_projector(PureState({1.0, 0.0})).matrix() == diag({1.0, 0.0}));

  const DensityMatrix plus = pure_projector(PureState({kInvSqrt2, kInvSqrt2}));
  for (const auto& e : plus.matrix().entries()) CHECK(std::abs(e - 0.5) < 1e-15);

  const DensityMatrix y = pure_projector(PureState({kInvSqrt2, Complex(0.0, kInvSqrt2)}));
  const SquareMatrix expected(2, {0.5, Complex(0.0, -0.5), Complex(0.0, 0.5), 0.5});
  CHECK(max_abs_diff(y.matrix(), expected) < 1e-15);

  CHECK(code_of([] { PureState({1.0, 1.0}); }) == ErrorCode::NotNormalized);
  CHECK(code_of([] { PureState::normalized({0.0, 0.0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("expectation examples") {
  Rng rng(13);
  for (std::size_t n = 1; n <= 5; ++n) {
    const PureState psi = sample_pure_state(n, rng);
    CHECK(std::abs(expectation(maximally_mixed(n), psi) - 1.0 / n) < 1e-15);
    CHECK(std::abs(expectation(pure_projector(psi), psi) - 1.0) < 1e-14);
  }

  // <psi|rho|psi> = Tr(rho |psi><psi|) both ways.
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 6;
    const DensityMatrix rho = testing::random_density(n, rng);
    const PureState psi = sample_pure_state(n, rng);
    const Complex tr = trace(matmul(rho.matrix(), pure_projector(psi).matrix()));
    CHECK(std::abs(expectation(rho, psi) - tr.real()) < 1e-12);
    CHECK(std::abs(tr.imag()) < 1e-12);
  }

  CHECK(code_of([&] { expectation(maximally_mixed(3), PureState({1.0, 0.0})); }) ==
        ErrorCode::DimMismatch);
}

TEST_CASE("maximally_mixed examples") {
  CHECK(maximally_mixed(2).matrix() == diag({0.5, 0.5}));
  const DensityMatrix m3 = maximally_mixed(3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(m3(i, i) == Complex(1.0 / 3.0));
  CHECK(purity(maximally_mixed(4)) == 0.25);
}

TEST_CASE("hs_distance_sq properties") {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + k % 5;
    const DensityMatrix a = testing::random_density_any_rank(n, rng);
    const DensityMatrix b = testing::random_density_any_rank(n, rng);
    const DensityMatrix c = testing::random_density_any_rank(n, rng);

    const double ab = hs_distance_sq(a, b);
    CHECK(ab >= 0.0);
    CHECK(ab == doctest::Approx(hs_distance_sq(b, a)).epsilon(1e-14));
    CHECK(ab > 1e-6);  // distinct random states

    const double ac = hs_distance_sq(a, c);
    const double bc = hs_distance_sq(b, c);
    CHECK(std::sqrt(ac) <= std::sqrt(ab) + std::sqrt(bc) + 1e-10);

    CHECK(std::abs(ab - (purity(a) + purity(b) - 2.0 * overlap(a, b))) < 1e-12);
  }
}

TEST_CASE("pure projectors validate and expectations stay inside the spectrum") {
  Rng rng(19);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + k % 8;
    const DensityMatrix p = pure_projector(sample_pure_state(n, rng));
    CHECK_NOTHROW(validate_density(p.matrix()));

    const DensityMatrix rho = testing::random_density_any_rank(n, rng);
    const Spectrum s = hermitian_eig(rho.matrix());
    const double e = expectation(rho, sample_pure_state(n, rng));
    CHECK(e >= s.eigenvalues.back() - 1e-12);
    CHECK(e <= s.eigenvalues.front() + 1e-12);
  }
}
