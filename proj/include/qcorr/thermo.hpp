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

#include <vector>

#include "qcorr/dynamics.hpp"

// Energetics of correlations. Entropic quantities here are always in
// natural-log units: the relations mix entropies with beta-weighted
// energies, which only balance with the natural logarithm.

namespace qcorr {

/// U_chi = Tr[rho H] - Tr[rho_S (x) rho_B H] = Tr[chi H_I]. Both forms are
/// evaluated; FormMismatch is thrown if they differ by more than 1e-10.
double binding_energy(const BipartiteState& state, const HamiltonianDecomposition& h);

inline constexpr double kBindingFormTolerance = 1e-10;

/// dU_chi/dt = Tr[(d chi/dt) H_I].
double binding_energy_rate(const BipartiteState& state, const HamiltonianDecomposition& h);

/// H_S + Tr_B[(I (x) rho_B) H_I] for which == S, and the mirror for B.
ComplexMatrix effective_hamiltonian(const BipartiteState& state,
                                    const HamiltonianDecomposition& h, Subsystem which);

/// Mean-field dressing with an explicit partner marginal.
ComplexMatrix effective_hamiltonian(const ComplexMatrix& partner_marginal,
                                    const HamiltonianDecomposition& h, Subsystem which);

/// One grid point of the heat balance dQ_S + dQ_B = -dU_chi, all per unit time.
struct HeatLedger {
  double time = 0.0;
  double dq_s = 0.0;
  double dq_b = 0.0;
  double du_chi = 0.0;
  double residual = 0.0;  // dq_s + dq_b + du_chi
};

/// Symmetric differences at interior points, one-sided at the ends. The
/// effective Hamiltonians use the marginals averaged over the two stencil
/// states, which is the midpoint of the step in state space.
std::vector<HeatLedger> heat_ledger(const Trajectory& traj, const HamiltonianDecomposition& h);

struct LedgerTotals {
  double heat = 0.0;           // integral of dq_s + dq_b
  double binding_change = 0.0;  // integral of du_chi
};

/// Trapezoid-weighted sums; with the ledger's stencil these telescope to
/// the endpoint differences.
LedgerTotals integrate_ledger(const std::vector<HeatLedger>& ledger, double dt);

/// dU_chi/dt = Tr[chi_hat H_I] d||chi||/dt + Tr[(d chi_hat/dt) H_I] ||chi||.
struct NormDecomposition {
  double term_norm_rate = 0.0;
  double term_direction_rate = 0.0;

  double sum() const { return term_norm_rate + term_direction_rate; }
};

/// Throws ZeroChi when ||chi||_2 <= 1e-12.
NormDecomposition du_decomposition_norm(const BipartiteState& state,
                                        const HamiltonianDecomposition& h);

/// dU_chi/dt = -(1/beta) dI/dt - (1/beta) dS(P || P*)/dt - Tr[(dP/dt) H_I],
/// P = rho_S (x) rho_B and P* the thermal product reference.
struct QmiDecomposition {
  double term_qmi = 0.0;
  double term_relent = 0.0;
  double term_local = 0.0;

  double sum() const { return term_qmi + term_relent + term_local; }
};

inline constexpr double kDefaultRelentStep = 4e-5;

/// The relative-entropy rate is a five-point finite difference of
/// S(P(t) || P*) over exactly propagated neighbours at spacing `step`.
/// Throws SingularReference for a rank-deficient reference and
/// std::invalid_argument for beta <= 0.
QmiDecomposition du_decomposition_qmi(const BipartiteState& state,
                                      const HamiltonianDecomposition& h,
                                      const ThermalReference& ref,
                                      double step = kDefaultRelentStep);

/// max |I(t) - RHS(t)| for
///   I(t) = -beta Tr[chi H_I] - S(P(t) || P(0)) - beta Tr[(P(t) - P(0)) H_I]
/// over the endpoint and 10 evenly spaced interior checkpoints. Throws
/// NotThermalInitial unless the first state equals the thermal product of
/// H_S, H_B at beta within 1e-10.
double integrated_qmi_identity(const Trajectory& traj, const HamiltonianDecomposition& h,
                               double beta);

/// 2 beta ||H_I|| (operator norm).
double area_law_bound(const HamiltonianDecomposition& h, double beta);

}  // namespace qcorr
