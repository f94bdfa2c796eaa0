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
#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "qcorr/errors.hpp"
#include "qcorr/tolerances.hpp"

// Dense operator substrate. Units are dimensionless with hbar = 1.
//
// Composite indices are S-major: for a bipartite space of dimensions
// (d_S, d_B), basis state |i_S, i_B> has index i_S * d_B + i_B, matching
// Eigen's kroneckerProduct(A_S, A_B) layout.

namespace qcorr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class Subsystem { S, B };

struct Dims {
  Index s = 2;
  Index b = 2;

  Index total() const { return s * b; }
  Index of(Subsystem which) const { return which == Subsystem::S ? s : b; }
  bool operator==(const Dims&) const = default;
};

struct HermitianEig {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors;  // columns are orthonormal eigenvectors
};

/// Largest entrywise |M - M^dagger|. Infinite for non-square input.
double hermiticity_defect(const ComplexMatrix& m);

/// Diagonalizes a Hermitian matrix. Throws NonHermitianInput when the
/// hermiticity defect exceeds tol.hermiticity.
HermitianEig hermitian_eig(const ComplexMatrix& m,
                           const Tolerances& tol = kDefaultTolerances);

/// V diag(f(lambda)) V^dagger. The result is complex-valued so that phase
/// functions such as exp(-i lambda t) can be applied through the same path.
ComplexMatrix matrix_function(const ComplexMatrix& m,
                              const std::function<Complex(double)>& f,
                              const Tolerances& tol = kDefaultTolerances);
ComplexMatrix matrix_function(const HermitianEig& eig,
                              const std::function<Complex(double)>& f);

enum class LogSupport {
  Strict,      // throw SingularLog if any eigenvalue <= tol.support
  Restricted,  // eigenvalues <= tol.support map to 0 (0 log 0 = 0)
};

ComplexMatrix matrix_log(const ComplexMatrix& m,
                         LogSupport support = LogSupport::Strict,
                         const Tolerances& tol = kDefaultTolerances);
ComplexMatrix matrix_log(const HermitianEig& eig, LogSupport support,
                         const Tolerances& tol = kDefaultTolerances);

/// exp(-i H t) for Hermitian H.
ComplexMatrix unitary_propagator(const HermitianEig& h_eig, double t);

/// Kronecker product A (x) B, S-major.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduces an operator on d_S * d_B to the subsystem `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Subsystem keep);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr[A B] without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class NormKind { Frobenius, Trace, Operator };

/// Frobenius works for any matrix; Trace and Operator norms assume Hermitian
/// input and are evaluated on the spectrum.
double norm(const ComplexMatrix& m, NormKind kind,
            const Tolerances& tol = kDefaultTolerances);

ComplexMatrix identity(Index d);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace qcorr
