// Copyright 2026 The qcorr Authors
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
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qcorr/dynamics.hpp"
#include "qcorr/operator_core.hpp"
#include "support/random.hpp"

using namespace qcorr;
using namespace qcorr::testing;

namespace {

// Bell basis written out by hand: Phi+, Phi-, Psi+, Psi-.
ComplexMatrix bell_basis() {
  const double s = 1.0 / std::numbers::sqrt2;
  ComplexMatrix b = ComplexMatrix::Zero(4, 4);
  b(0, 0) = s;  b(3, 0) = s;
  b(0, 1) = s;  b(3, 1) = -s;
  b(1, 2) = s;  b(2, 2) = s;
  b(1, 3) = s;  b(2, 3) = -s;
  return b;
}

}  // namespace

TEST_CASE("hermitian_eig: Pauli and identity spectra") {
  const auto z = hermitian_eig(pauli::z());
  CHECK(z.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(z.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));

  const auto id = hermitian_eig(identity(2));
  CHECK(id.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(id.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig: interaction spectrum matches the Bell-basis oracle") {
  const ComplexMatrix h_i = example_hamiltonian().h_i();
  // Oracle: H_I is diagonal in the Bell basis.
  const ComplexMatrix b = bell_basis();
  const ComplexMatrix in_bell = b.adjoint() * h_i * b;
  CHECK(max_abs(in_bell - ComplexMatrix(in_bell.diagonal().asDiagonal())) < 1e-14);
  CHECK(in_bell(0, 0).real() == doctest::Approx(6.5));   // Phi+
  CHECK(in_bell(1, 1).real() == doctest::Approx(2.5));   // Phi-
  CHECK(in_bell(2, 2).real() == doctest::Approx(-1.5));  // Psi+
  CHECK(in_bell(3, 3).real() == doctest::Approx(-7.5));  // Psi-

  const auto eig = hermitian_eig(h_i);
  const double expected[] = {-7.5, -1.5, 2.5, 6.5};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(eig.eigenvalues(k) - expected[k]) < 1e-12);
}

TEST_CASE("hermitian_eig: rejects non-Hermitian input with measured defect") {
  ComplexMatrix m = pauli::x();
  m(0, 1) = 2.0;
  try {
    hermitian_eig(m);
    FAIL("expected NonHermitianInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonHermitianInput);
    CHECK(e.measured() == doctest::Approx(1.0));
  }
}

TEST_CASE("hermitian_eig: reconstruction and unitarity on random Hermitian matrices") {
  auto rng = make_rng(11);
  for (int draw = 0; draw < 1000; ++draw) {
    const Index d = draw % 2 == 0 ? 2 : 4;
    const ComplexMatrix m = random_hermitian(d, rng, 1.0 + draw % 7);
    const auto eig = hermitian_eig(m);
    const ComplexMatrix& v = eig.eigenvectors;
    const ComplexMatrix rebuilt = v * eig.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
    REQUIRE(max_abs(rebuilt - m) <= 1e-10);
    REQUIRE(max_abs(v.adjoint() * v - identity(d)) <= 1e-10);
    for (Index k = 1; k < d; ++k) REQUIRE(eig.eigenvalues(k - 1) <= eig.eigenvalues(k));
  }
}

TEST_CASE("matrix_function: exp, log and phase") {
  const ComplexMatrix zero = ComplexMatrix::Zero(3, 3);
  const ComplexMatrix e = matrix_function(zero, [](double x) { return Complex(std::exp(x), 0.0); });
  CHECK(max_abs(e - identity(3)) < 1e-15);

  CHECK(max_abs(matrix_log(identity(4))) < 1e-15);

  // exp(-i Z pi) = diag(e^{-i pi}, e^{i pi}) = -I
  const ComplexMatrix u = unitary_propagator(hermitian_eig(pauli::z()), std::numbers::pi);
  CHECK(max_abs(u + identity(2)) < 1e-14);
}

TEST_CASE("matrix_log: strict mode rejects singular input, restricted mode drops the kernel") {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(0, 0) = 1.0;
  try {
    matrix_log(p);
    FAIL("expected SingularLog");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularLog);
  }
  CHECK(max_abs(matrix_log(p, LogSupport::Restricted)) < 1e-15);

  ComplexMatrix q = ComplexMatrix::Zero(2, 2);
  q(0, 0) = 0.25;
  q(1, 1) = 0.5e-12;  // below tol.support
  const ComplexMatrix l = matrix_log(q, LogSupport::Restricted);
  CHECK(l(0, 0).real() == doctest::Approx(std::log(0.25)));
  CHECK(std::abs(l(1, 1)) < 1e-15);
}

TEST_CASE("unitary_propagator is unitary for random Hamiltonians") {
  auto rng = make_rng(12);
  for (int draw = 0; draw < 200; ++draw) {
    const ComplexMatrix h = random_hermitian(4, rng, 3.0);
    const double t = -5.0 + 0.05 * draw;
    const ComplexMatrix u = unitary_propagator(hermitian_eig(h), t);
    REQUIRE(max_abs(u.adjoint() * u - identity(4)) <= 1e-10);
  }
}

TEST_CASE("tensor: index convention and trace factorization") {
  CHECK(max_abs(tensor(identity(2), identity(2)) - identity(4)) == 0.0);

  const ComplexMatrix zi = tensor(pauli::z(), identity(2));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1.0, 1.0, -1.0, -1.0;
  CHECK(max_abs(zi - expected) == 0.0);

  auto rng = make_rng(13);
  for (int draw = 0; draw < 100; ++draw) {
    const ComplexMatrix a = random_complex(2, 2, rng);
    const ComplexMatrix b = random_complex(2, 2, rng);
    REQUIRE(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) < 1e-12);
  }
}

TEST_CASE("partial_trace: product rule, Bell marginal and trace preservation") {
  auto rng = make_rng(14);
  const Dims dims{2, 2};
  for (int draw = 0; draw < 200; ++draw) {
    const ComplexMatrix a = random_hermitian(2, rng);
    const ComplexMatrix b = random_hermitian(2, rng);
    const ComplexMatrix ab = tensor(a, b);
    REQUIRE(max_abs(partial_trace(ab, dims, Subsystem::S) - b.trace() * a) <= 1e-10);
    REQUIRE(max_abs(partial_trace(ab, dims, Subsystem::B) - a.trace() * b) <= 1e-10);

    const ComplexMatrix m = random_hermitian(4, rng);
    REQUIRE(std::abs(partial_trace(m, dims, Subsystem::S).trace() - m.trace()) < 1e-12);
    REQUIRE(std::abs(partial_trace(m, dims, Subsystem::B).trace() - m.trace()) < 1e-12);
  }

  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  CHECK(max_abs(partial_trace(bell, dims, Subsystem::S) - identity(2) / 2.0) < 1e-15);
  CHECK(max_abs(partial_trace(bell, dims, Subsystem::B) - identity(2) / 2.0) < 1e-15);
}

TEST_CASE("partial_trace: mixed dimensions and dimension mismatch") {
  // 2 x 3: Tr_B[A (x) B] = Tr[B] A still holds with unequal factors.
  auto rng = make_rng(15);
  const ComplexMatrix a = random_hermitian(2, rng);
  const ComplexMatrix b = random_hermitian(3, rng);
  const Dims dims{2, 3};
  CHECK(max_abs(partial_trace(tensor(a, b), dims, Subsystem::S) - b.trace() * a) < 1e-12);
  CHECK(max_abs(partial_trace(tensor(a, b), dims, Subsystem::B) - a.trace() * b) < 1e-12);

  CHECK_THROWS_AS(partial_trace(identity(4), Dims{2, 3}, Subsystem::S), Error);
}

TEST_CASE("norm: the three kinds") {
  CHECK(norm(pauli::x(), NormKind::Operator) == doctest::Approx(1.0));
  CHECK(norm(pauli::x(), NormKind::Trace) == doctest::Approx(2.0));
  CHECK(norm(pauli::x(), NormKind::Frobenius) == doctest::Approx(std::sqrt(2.0)));
  CHECK(norm(example_hamiltonian().h_i(), NormKind::Operator) == doctest::Approx(7.5).epsilon(1e-14));

  auto rng = make_rng(16);
  for (int draw = 0; draw < 500; ++draw) {
    const ComplexMatrix m = random_hermitian(draw % 2 ? 4 : 2, rng);
    const double fro = norm(m, NormKind::Frobenius);
    const double sum_sq = hermitian_eig(m).eigenvalues.squaredNorm();
    REQUIRE(std::abs(fro * fro - sum_sq) <= 1e-10 * sum_sq);
    REQUIRE(norm(m, NormKind::Operator) <= fro + 1e-12);
    REQUIRE(fro <= norm(m, NormKind::Trace) + 1e-12);
  }
}
