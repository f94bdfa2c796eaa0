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
#include "qcorr/lab.hpp"

namespace qcorr::lab::fixtures {

ComplexMatrix example1_chi() {
  ComplexMatrix chi = ComplexMatrix::Zero(4, 4);
  // |1,0> has S-major index 2, |0,1> has index 1.
  chi(2, 1) = 0.1;
  chi(1, 2) = 0.1;
  return chi;
}

ComplexMatrix example1_rho_s(double x) {
  ComplexMatrix m(2, 2);
  m << x, 0.1, 0.1, 1.0 - x;
  return m;
}

ComplexMatrix example1_rho_b(double x) {
  ComplexMatrix m(2, 2);
  m << 1.0 - x * x, 0.1, 0.1, x * x;
  return m;
}

ComplexMatrix example1_state(double x) {
  return tensor(example1_rho_s(x), example1_rho_b(x)) + example1_chi();
}

ComplexMatrix example2_rho0() {
  using C = Complex;
  // Upper triangle as printed (computational basis, S-major); the lower
  // triangle is its conjugate.
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 0.403041;
  m(0, 1) = C(-0.181049, -0.038525);
  m(0, 2) = C(0.012466, 0.12214);
  m(0, 3) = C(-0.044462, 0.058024);
  m(1, 1) = 0.314013;
  m(1, 2) = C(0.025204, -0.101876);
  m(1, 3) = C(0.053753, 0.030605);
  m(2, 2) = 0.065777;
  m(2, 3) = C(-0.018686, 0.024092);
  m(3, 3) = 0.217169;
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < i; ++j) m(i, j) = std::conj(m(j, i));
  return m;
}

HamiltonianDecomposition example2_hamiltonian(double coupling) {
  const HamiltonianDecomposition base = example_hamiltonian();
  if (coupling == 1.0) return base;
  return HamiltonianDecomposition::make(base.h_s(), base.h_b(), coupling * base.h_i());
}

const std::vector<ReferenceInterval>& reference_intervals() {
  // Published sign-disagreement intervals for the two-qubit run from
  // example2_rho0 under example_hamiltonian, t in [4, 8], dt = 4e-5.
  static const std::vector<ReferenceInterval> list = {
      {4.000, 4.008}, {4.088, 4.093}, {4.234, 4.238}, {4.371, 4.432}, {4.682, 4.702},
      {4.824, 4.829}, {5.094, 5.097}, {5.256, 5.275}, {5.480, 5.484}, {5.616, 5.628},
      {5.727, 5.732}, {6.018, 6.019}, {6.194, 6.198}, {6.315, 6.325}, {6.465, 6.476},
      {6.585, 6.587}, {6.885, 6.887}, {6.901, 6.931}, {7.051, 7.056}, {7.177, 7.218},
      {7.365, 7.374}, {7.496, 7.497}, {7.636, 7.643}, {7.893, 7.895},
  };
  return list;
}

const std::vector<ReferenceInterval>& highlighted_intervals() {
  static const std::vector<ReferenceInterval> list = {{4.371, 4.432}, {7.177, 7.218}};
  return list;
}

}  // namespace qcorr::lab::fixtures
