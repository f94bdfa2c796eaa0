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
#include "qcorr/quantum_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qcorr {

ValidationReport inspect_density(const ComplexMatrix& m, const Tolerances& tol) {
  ValidationReport r;
  r.hermiticity_defect = hermiticity_defect(m);
  if (!(r.hermiticity_defect <= tol.hermiticity)) return r;
  r.min_eigenvalue = hermitian_eig(m, tol).eigenvalues.minCoeff();
  r.trace_deviation = std::abs(m.trace() - Complex(1.0, 0.0));
  return r;
}

DensityMatrix DensityMatrix::validate(const ComplexMatrix& m, const Tolerances& tol) {
  const ValidationReport r = inspect_density(m, tol);
  if (!(r.hermiticity_defect <= tol.hermiticity))
    throw Error(ErrorCode::NotHermitian,
                "hermiticity defect " + std::to_string(r.hermiticity_defect),
                r.hermiticity_defect);
  if (r.min_eigenvalue < -tol.positivity)
    throw Error(ErrorCode::NotPositive,
                "minimum eigenvalue " + std::to_string(r.min_eigenvalue),
                r.min_eigenvalue);
  if (r.trace_deviation > tol.trace)
    throw Error(ErrorCode::TraceNotOne,
                "trace deviation " + std::to_string(r.trace_deviation),
                r.trace_deviation);
  return DensityMatrix(m, r);
}

BipartiteState make_state(const ComplexMatrix& m, Dims dims, const Tolerances& tol) {
  if (m.rows() != dims.total() || m.cols() != dims.total())
    throw Error(ErrorCode::DimensionMismatch,
                "state is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    ", dims imply " + std::to_string(dims.total()));
  DensityMatrix rho = DensityMatrix::validate(m, tol);
  DensityMatrix rs = DensityMatrix::validate(partial_trace(m, dims, Subsystem::S), tol);
  DensityMatrix rb = DensityMatrix::validate(partial_trace(m, dims, Subsystem::B), tol);
  return BipartiteState(std::move(rho), std::move(rs), std::move(rb), dims);
}

ComplexMatrix BipartiteState::product_of_marginals() const {
  return tensor(rho_s_.matrix(), rho_b_.matrix());
}

double in_base(double nats, LogBase base) {
  return base == LogBase::Natural ? nats : nats / std::numbers::ln2;
}

double spectral_entropy(const RealVector& p, LogBase base, const Tolerances& tol) {
  double s = 0.0;
  for (Index k = 0; k < p.size(); ++k)
    if (p(k) > tol.support) s -= p(k) * std::log(p(k));
  return in_base(s, base);
}

double von_neumann_entropy(const DensityMatrix& rho, LogBase base, const Tolerances& tol) {
  return spectral_entropy(hermitian_eig(rho.matrix(), tol).eigenvalues, base, tol);
}

RelativeEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                 LogBase base, const Tolerances& tol) {
  if (rho.dim() != sigma.dim())
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(rho.dim()) + " vs " + std::to_string(sigma.dim()));
  const HermitianEig sig = hermitian_eig(sigma.matrix(), tol);
  // Weight of rho on the kernel of sigma.
  double leak = 0.0;
  for (Index k = 0; k < sig.eigenvalues.size(); ++k) {
    if (sig.eigenvalues(k) > tol.support) continue;
    const auto v = sig.eigenvectors.col(k);
    leak += (v.adjoint() * rho.matrix() * v)(0, 0).real();
  }
  if (leak > tol.positivity) return RelativeEntropy::infinite();

  const double neg_entropy = -von_neumann_entropy(rho, LogBase::Natural, tol);
  const double cross = trace_product(rho.matrix(), matrix_log(sig, LogSupport::Restricted, tol)).real();
  return RelativeEntropy::finite(in_base(neg_entropy - cross, base));
}

RealVector OperatorBasis::coefficients(const ComplexMatrix& m) const {
  RealVector c(static_cast<Index>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    c(static_cast<Index>(i)) = trace_product(m, elements[i]).real();
  return c;
}

ComplexMatrix OperatorBasis::reconstruct(const RealVector& coeffs) const {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (std::size_t i = 0; i < elements.size(); ++i)
    m += coeffs(static_cast<Index>(i)) * elements[i];
  return m;
}

OperatorBasis pauli_basis(Index d) {
  if (d != 2)
    throw Error(ErrorCode::UnsupportedDimension,
                "Pauli basis requires d == 2, got " + std::to_string(d),
                static_cast<double>(d));
  const double s = 1.0 / std::numbers::sqrt2;
  return {2, {s * identity(2), s * pauli::x(), s * pauli::y(), s * pauli::z()}};
}

DensityMatrix thermal_state(const ComplexMatrix& h, double beta, const Tolerances& tol) {
  const HermitianEig eig = hermitian_eig(h, tol);
  // Shifting by the ground energy keeps exp() in range at large beta.
  const double ground = eig.eigenvalues.minCoeff();
  RealVector w = (-beta * (eig.eigenvalues.array() - ground)).exp().matrix();
  w /= w.sum();
  const ComplexMatrix rho =
      eig.eigenvectors * w.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
  return DensityMatrix::validate(0.5 * (rho + rho.adjoint()), tol);
}

ThermalReference make_thermal_reference(const ComplexMatrix& h_s, const ComplexMatrix& h_b,
                                        double beta, const Tolerances& tol) {
  return {beta, thermal_state(h_s, beta, tol), thermal_state(h_b, beta, tol)};
}

}  // namespace qcorr
