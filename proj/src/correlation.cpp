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
#include "qcorr/correlation.hpp"

#include <string>

namespace qcorr {

CorrelationMatrix::CorrelationMatrix(const BipartiteState& state)
    : matrix_(state.matrix() - state.product_of_marginals()), dims_(state.dims()) {}

double qmi(const BipartiteState& state, LogBase base, const Tolerances& tol) {
  const double s_s = von_neumann_entropy(state.rho_s(), LogBase::Natural, tol);
  const double s_b = von_neumann_entropy(state.rho_b(), LogBase::Natural, tol);
  const double s_sb = von_neumann_entropy(state.rho(), LogBase::Natural, tol);
  return in_base(s_s + s_b - s_sb, base);
}

double qmi_relative_entropy_form(const BipartiteState& state, LogBase base,
                                 const Tolerances& tol) {
  const DensityMatrix product = DensityMatrix::validate(state.product_of_marginals(), tol);
  // supp(rho_SB) is always inside supp(rho_S) (x) supp(rho_B).
  return relative_entropy(state.rho(), product, base, tol).value();
}

double chi_norm2(const CorrelationMatrix& chi) { return chi.matrix().norm(); }

bool is_product(const BipartiteState& state) {
  return chi_norm2(CorrelationMatrix(state)) <= kProductThreshold;
}

namespace {

void check_basis(const OperatorBasis& basis, Index d, const char* which) {
  const auto expected = static_cast<std::size_t>(d * d);
  if (basis.dim != d || basis.elements.size() != expected)
    throw Error(ErrorCode::BasisMismatch,
                std::string(which) + " basis has dim " + std::to_string(basis.dim) + " and " +
                    std::to_string(basis.elements.size()) + " elements, subsystem dim is " +
                    std::to_string(d));
}

}  // namespace

CovarianceTable covariance_table(const BipartiteState& state, const OperatorBasis& basis_s,
                                 const OperatorBasis& basis_b) {
  const Dims dims = state.dims();
  check_basis(basis_s, dims.s, "S");
  check_basis(basis_b, dims.b, "B");

  const RealVector mean_s = basis_s.coefficients(state.rho_s().matrix());
  const RealVector mean_b = basis_b.coefficients(state.rho_b().matrix());

  CovarianceTable table;
  table.coefficients.resize(mean_s.size(), mean_b.size());
  for (Index i = 0; i < mean_s.size(); ++i) {
    for (Index j = 0; j < mean_b.size(); ++j) {
      const ComplexMatrix joint = tensor(basis_s.elements[static_cast<std::size_t>(i)],
                                         basis_b.elements[static_cast<std::size_t>(j)]);
      const double two_point = trace_product(state.matrix(), joint).real();
      table.coefficients(i, j) = two_point - mean_s(i) * mean_b(j);
    }
  }
  return table;
}

ComplexMatrix reconstruct_correlation(const CovarianceTable& table,
                                      const OperatorBasis& basis_s,
                                      const OperatorBasis& basis_b) {
  const Index n = basis_s.dim * basis_b.dim;
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < table.coefficients.rows(); ++i)
    for (Index j = 0; j < table.coefficients.cols(); ++j)
      out += table.coefficients(i, j) * tensor(basis_s.elements[static_cast<std::size_t>(i)],
                                               basis_b.elements[static_cast<std::size_t>(j)]);
  return out;
}

}  // namespace qcorr
