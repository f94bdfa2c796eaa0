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
#include "qcorr/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qcorr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::SingularLog: return "SingularLog";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::SingularMarginal: return "SingularMarginal";
    case ErrorCode::ZeroChi: return "ZeroChi";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::FormMismatch: return "FormMismatch";
    case ErrorCode::SingularReference: return "SingularReference";
    case ErrorCode::NotThermalInitial: return "NotThermalInitial";
    case ErrorCode::InvalidStateInSweep: return "InvalidStateInSweep";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i <= j; ++i)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

HermitianEig hermitian_eig(const ComplexMatrix& m, const Tolerances& tol) {
  const double defect = hermiticity_defect(m);
  if (!(defect <= tol.hermiticity))
    throw Error(ErrorCode::NonHermitianInput,
                "hermiticity defect " + std::to_string(defect), defect);
  // Eigen only reads the lower triangle; symmetrize so round-off in the
  // upper triangle is not silently dropped.
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix matrix_function(const HermitianEig& eig,
                              const std::function<Complex(double)>& f) {
  const Index d = eig.eigenvalues.size();
  Eigen::VectorXcd fd(d);
  for (Index k = 0; k < d; ++k) fd(k) = f(eig.eigenvalues(k));
  return eig.eigenvectors * fd.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix matrix_function(const ComplexMatrix& m,
                              const std::function<Complex(double)>& f,
                              const Tolerances& tol) {
  return matrix_function(hermitian_eig(m, tol), f);
}

ComplexMatrix matrix_log(const HermitianEig& eig, LogSupport support,
                         const Tolerances& tol) {
  const double lowest = eig.eigenvalues.size() ? eig.eigenvalues.minCoeff() : 1.0;
  if (support == LogSupport::Strict && lowest <= tol.support)
    throw Error(ErrorCode::SingularLog,
                "smallest eigenvalue " + std::to_string(lowest), lowest);
  const double cutoff = tol.support;
  return matrix_function(eig, [cutoff](double x) -> Complex {
    return x > cutoff ? Complex(std::log(x), 0.0) : Complex(0.0, 0.0);
  });
}

ComplexMatrix matrix_log(const ComplexMatrix& m, LogSupport support,
                         const Tolerances& tol) {
  return matrix_log(hermitian_eig(m, tol), support, tol);
}

ComplexMatrix unitary_propagator(const HermitianEig& h_eig, double t) {
  return matrix_function(h_eig, [t](double e) { return std::polar(1.0, -e * t); });
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Subsystem keep) {
  const Index n = dims.total();
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "operator is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", dims imply " +
                    std::to_string(n));
  if (keep == Subsystem::S) {
    ComplexMatrix out = ComplexMatrix::Zero(dims.s, dims.s);
    for (Index i = 0; i < dims.s; ++i)
      for (Index j = 0; j < dims.s; ++j)
        out(i, j) = m.block(i * dims.b, j * dims.b, dims.b, dims.b).trace();
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(dims.b, dims.b);
  for (Index k = 0; k < dims.s; ++k)
    out += m.block(k * dims.b, k * dims.b, dims.b, dims.b);
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Tr[AB] = sum_ij A_ij B_ji
  return a.cwiseProduct(b.transpose()).sum();
}

double norm(const ComplexMatrix& m, NormKind kind, const Tolerances& tol) {
  switch (kind) {
    case NormKind::Frobenius:
      return m.norm();
    case NormKind::Trace:
      return hermitian_eig(m, tol).eigenvalues.cwiseAbs().sum();
    case NormKind::Operator:
      return hermitian_eig(m, tol).eigenvalues.cwiseAbs().maxCoeff();
  }
  return 0.0;
}

ComplexMatrix identity(Index d) { return ComplexMatrix::Identity(d, d); }

namespace pauli {
ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}
ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}
ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}
}  // namespace pauli

}  // namespace qcorr
