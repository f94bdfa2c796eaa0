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

#include <optional>
#include <vector>

#include "qcorr/operator_core.hpp"

namespace qcorr {

/// Measured deviations of a candidate density matrix from validity.
struct ValidationReport {
  double hermiticity_defect = 0.0;
  double min_eigenvalue = 0.0;
  double trace_deviation = 0.0;  // |Tr rho - 1|
};

ValidationReport inspect_density(const ComplexMatrix& m,
                                 const Tolerances& tol = kDefaultTolerances);

/// Hermitian, positive semidefinite, unit-trace matrix. Only constructible
/// through validation.
class DensityMatrix {
 public:
  /// Throws NotHermitian, NotPositive or TraceNotOne with the measured
  /// violation attached.
  static DensityMatrix validate(const ComplexMatrix& m,
                                const Tolerances& tol = kDefaultTolerances);

  const ComplexMatrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }
  const ValidationReport& report() const { return report_; }

 private:
  DensityMatrix(ComplexMatrix m, ValidationReport r)
      : matrix_(std::move(m)), report_(r) {}

  ComplexMatrix matrix_;
  ValidationReport report_;
};

/// A density matrix on d_S * d_B with its validated marginals.
class BipartiteState {
 public:
  const DensityMatrix& rho() const { return rho_; }
  const ComplexMatrix& matrix() const { return rho_.matrix(); }
  Dims dims() const { return dims_; }
  const DensityMatrix& marginal(Subsystem which) const {
    return which == Subsystem::S ? rho_s_ : rho_b_;
  }
  const DensityMatrix& rho_s() const { return rho_s_; }
  const DensityMatrix& rho_b() const { return rho_b_; }

  /// rho_S (x) rho_B
  ComplexMatrix product_of_marginals() const;

 private:
  friend BipartiteState make_state(const ComplexMatrix&, Dims, const Tolerances&);
  BipartiteState(DensityMatrix rho, DensityMatrix rs, DensityMatrix rb, Dims d)
      : rho_(std::move(rho)), rho_s_(std::move(rs)), rho_b_(std::move(rb)), dims_(d) {}

  DensityMatrix rho_;
  DensityMatrix rho_s_;
  DensityMatrix rho_b_;
  Dims dims_;
};

BipartiteState make_state(const ComplexMatrix& m, Dims dims,
                          const Tolerances& tol = kDefaultTolerances);

enum class LogBase { Natural, Two };

/// Converts a natural-log quantity to the requested base.
double in_base(double nats, LogBase base);

/// Shannon entropy of a spectrum, 0 log 0 = 0 below tol.support.
double spectral_entropy(const RealVector& probabilities, LogBase base = LogBase::Natural,
                        const Tolerances& tol = kDefaultTolerances);

double von_neumann_entropy(const DensityMatrix& rho, LogBase base = LogBase::Natural,
                           const Tolerances& tol = kDefaultTolerances);

/// S(rho || sigma), either finite or +infinity when supp(rho) is not
/// contained in supp(sigma).
class RelativeEntropy {
 public:
  static RelativeEntropy finite(double v) { return RelativeEntropy(v); }
  static RelativeEntropy infinite() { return RelativeEntropy(std::nullopt); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::bad_optional_access for the infinite variant.
  double value() const { return value_.value(); }

 private:
  explicit RelativeEntropy(std::optional<double> v) : value_(v) {}
  std::optional<double> value_;
};

RelativeEntropy relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                                 LogBase base = LogBase::Natural,
                                 const Tolerances& tol = kDefaultTolerances);

/// Orthonormal Hermitian operator basis, Tr[e_i e_j] = delta_ij.
struct OperatorBasis {
  Index dim = 0;
  std::vector<ComplexMatrix> elements;

  /// Real coefficients Tr[M e_i] of a Hermitian operator.
  RealVector coefficients(const ComplexMatrix& m) const;
  ComplexMatrix reconstruct(const RealVector& coeffs) const;
};

/// {I, X, Y, Z} / sqrt(2). Only d == 2 is supported.
OperatorBasis pauli_basis(Index d);

/// exp(-beta H) / Z.
DensityMatrix thermal_state(const ComplexMatrix& h, double beta,
                            const Tolerances& tol = kDefaultTolerances);

struct ThermalReference {
  double beta = 1.0;
  DensityMatrix rho_star_s;
  DensityMatrix rho_star_b;

  ComplexMatrix product() const { return tensor(rho_star_s.matrix(), rho_star_b.matrix()); }
};

ThermalReference make_thermal_reference(const ComplexMatrix& h_s, const ComplexMatrix& h_b,
                                        double beta,
                                        const Tolerances& tol = kDefaultTolerances);

}  // namespace qcorr
