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

#include "qcorr/quantum_state.hpp"

namespace qcorr {

/// chi = rho_SB - rho_S (x) rho_B. Hermitian, traceless, with vanishing
/// partial traces.
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(const BipartiteState& state);

  const ComplexMatrix& matrix() const { return matrix_; }
  Dims dims() const { return dims_; }

 private:
  ComplexMatrix matrix_;
  Dims dims_;
};

inline CorrelationMatrix correlation_matrix(const BipartiteState& state) {
  return CorrelationMatrix(state);
}

/// S(rho_S) + S(rho_B) - S(rho_SB).
double qmi(const BipartiteState& state, LogBase base = LogBase::Natural,
           const Tolerances& tol = kDefaultTolerances);

/// S(rho_SB || rho_S (x) rho_B); the second route to the same quantity.
double qmi_relative_entropy_form(const BipartiteState& state,
                                 LogBase base = LogBase::Natural,
                                 const Tolerances& tol = kDefaultTolerances);

double chi_norm2(const CorrelationMatrix& chi);

/// chi_norm2 below this is treated as a product state.
inline constexpr double kProductThreshold = 1e-9;

bool is_product(const BipartiteState& state);

/// Covariances <s_i (x) e_j> - <s_i><e_j> in a pair of local bases.
struct CovarianceTable {
  Eigen::MatrixXd coefficients;  // (d_S^2) x (d_B^2)

  double sum_of_squares() const { return coefficients.squaredNorm(); }
};

/// Throws BasisMismatch if a basis does not fit the state's dimensions.
CovarianceTable covariance_table(const BipartiteState& state, const OperatorBasis& basis_s,
                                 const OperatorBasis& basis_b);

/// sum_ij c_ij s_i (x) e_j
ComplexMatrix reconstruct_correlation(const CovarianceTable& table,
                                      const OperatorBasis& basis_s,
                                      const OperatorBasis& basis_b);

}  // namespace qcorr
