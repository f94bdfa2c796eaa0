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

#include "qcorr/correlation.hpp"
#include "qcorr/lab.hpp"
#include "support/random.hpp"

using namespace qcorr;
using namespace qcorr::testing;

namespace {

BipartiteState bell_state() {
  ComplexMatrix bell = ComplexMatrix::Zero(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  return make_state(bell, {2, 2});
}

}  // namespace

TEST_CASE("correlation_matrix: product, Bell, invariants") {
  auto rng = make_rng(31);
  for (int draw = 0; draw < 50; ++draw) {
    const auto product = random_product(rng);
    REQUIRE(max_abs(CorrelationMatrix(product).matrix()) <= 1e-15);
  }

  // Tr[chi^2] = Tr[rho^2] - 2 Tr[rho P] + Tr[P^2] = 1 - 2/4 + 1/4
  const double bell_oracle = std::sqrt(1.0 - 2.0 * 0.25 + 0.25);
  CHECK(chi_norm2(correlation_matrix(bell_state())) == doctest::Approx(bell_oracle).epsilon(1e-14));
  CHECK(bell_oracle == doctest::Approx(0.8660254).epsilon(1e-7));

  for (int draw = 0; draw < 300; ++draw) {
    const auto state = make_state(random_mixed_ensemble(4, draw, rng), {2, 2});
    const ComplexMatrix chi = CorrelationMatrix(state).matrix();
    REQUIRE(hermiticity_defect(chi) <= 1e-10);
    REQUIRE(std::abs(chi.trace()) <= 1e-12);
    REQUIRE(partial_trace(chi, {2, 2}, Subsystem::S).norm() <= 1e-10);
    REQUIRE(partial_trace(chi, {2, 2}, Subsystem::B).norm() <= 1e-10);
  }
}

TEST_CASE("correlation_matrix recovers the constant Example I chi across the sweep") {
  const ComplexMatrix chi = lab::fixtures::example1_chi();
  for (int k = 0; k <= 630; ++k) {
    const double x = 0.27 + 0.001 * k;
    const auto state = make_state(lab::fixtures::example1_state(x), {2, 2});
    REQUIRE(max_abs(CorrelationMatrix(state).matrix() - chi) <= 1e-14);
    REQUIRE(std::abs(chi_norm2(CorrelationMatrix(state)) - std::sqrt(0.02)) <= 1e-12);
  }
  // Entry-sum oracle: two entries of magnitude 0.1.
  CHECK(chi.norm() == doctest::Approx(std::sqrt(2 * 0.01)));
}

TEST_CASE("qmi: product, Bell, two-form consistency") {
  auto rng = make_rng(32);
  CHECK(std::abs(qmi(random_product(rng))) < 1e-12);
  CHECK(qmi(bell_state()) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
  CHECK(qmi(bell_state(), LogBase::Two) == doctest::Approx(2.0).epsilon(1e-13));

  const auto fixture = make_state(lab::fixtures::example2_rho0(), {2, 2});
  CHECK(std::abs(qmi(fixture) - qmi_relative_entropy_form(fixture)) <= 1e-9);

  for (int draw = 0; draw < 300; ++draw) {
    const auto state = make_state(random_mixed_ensemble(4, draw, rng), {2, 2});
    const double direct = qmi(state);
    REQUIRE(direct >= -1e-12);
    REQUIRE(std::abs(direct - qmi_relative_entropy_form(state)) <= 1e-9);
  }
}

TEST_CASE("qmi vanishes exactly when chi does") {
  auto rng = make_rng(33);
  for (int draw = 0; draw < 200; ++draw) {
    const auto product = random_product(rng);
    REQUIRE(is_product(product));
    REQUIRE(std::abs(qmi(product)) <= 1e-9);

    const auto correlated = make_state(random_mixed_ensemble(4, draw, rng), {2, 2});
    REQUIRE_FALSE(is_product(correlated));
    REQUIRE(qmi(correlated) > 1e-9);
  }
}

TEST_CASE("both measures are invariant under local unitaries") {
  auto rng = make_rng(34);
  for (int draw = 0; draw < 200; ++draw) {
    const auto state = make_state(random_mixed_ensemble(4, draw, rng), {2, 2});
    const ComplexMatrix u = tensor(random_unitary(2, rng), random_unitary(2, rng));
    const ComplexMatrix rotated = u * state.matrix() * u.adjoint();
    const auto moved = make_state(0.5 * (rotated + rotated.adjoint()), {2, 2});
    REQUIRE(std::abs(qmi(moved) - qmi(state)) <= 1e-9);
    REQUIRE(std::abs(chi_norm2(CorrelationMatrix(moved)) - chi_norm2(CorrelationMatrix(state))) <= 1e-9);
  }
}

TEST_CASE("covariance_table: Bell two-point values") {
  const OperatorBasis basis = pauli_basis(2);
  const CovarianceTable t = covariance_table(bell_state(), basis, basis);
  // <XX> = 1, <YY> = -1, <ZZ> = 1 with single-site means 0; 1/2 from normalization.
  CHECK(t.coefficients(1, 1) == doctest::Approx(0.5));
  CHECK(t.coefficients(2, 2) == doctest::Approx(-0.5));
  CHECK(t.coefficients(3, 3) == doctest::Approx(0.5));
  for (Index k = 0; k < 4; ++k) {
    CHECK(std::abs(t.coefficients(0, k)) < 1e-15);
    CHECK(std::abs(t.coefficients(k, 0)) < 1e-15);
  }
  CHECK(std::abs(t.coefficients(1, 2)) < 1e-15);
}

TEST_CASE("covariance_table: reconstruction and energy identity on random states") {
  const OperatorBasis basis = pauli_basis(2);
  auto rng = make_rng(35);

  CHECK(covariance_table(random_product(rng), basis, basis).coefficients.cwiseAbs().maxCoeff() < 1e-15);

  for (int draw = 0; draw < 300; ++draw) {
    const auto state = make_state(random_mixed_ensemble(4, draw, rng), {2, 2});
    const CovarianceTable t = covariance_table(state, basis, basis);
    const ComplexMatrix chi = CorrelationMatrix(state).matrix();
    REQUIRE(max_abs(reconstruct_correlation(t, basis, basis) - chi) <= 1e-10);
    REQUIRE(std::abs(t.sum_of_squares() - chi.squaredNorm()) <= 1e-10);
    REQUIRE(t.coefficients.row(0).cwiseAbs().maxCoeff() <= 1e-12);
    REQUIRE(t.coefficients.col(0).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("covariance_table: basis mismatch") {
  OperatorBasis wrong = pauli_basis(2);
  wrong.elements.pop_back();
  auto rng = make_rng(36);
  try {
    covariance_table(random_bipartite(rng), wrong, pauli_basis(2));
    FAIL("expected BasisMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasisMismatch);
  }
}
