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
#include "qcorr/thermo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {

double binding_energy(const BipartiteState& state, const HamiltonianDecomposition& h) {
  const ComplexMatrix& ht = h.h_total();
  const double total_form = trace_product(state.matrix(), ht).real() -
                            trace_product(state.product_of_marginals(), ht).real();
  const double chi_form = trace_product(CorrelationMatrix(state).matrix(), h.h_i()).real();
  const double gap = std::abs(total_form - chi_form);
  if (gap > kBindingFormTolerance)
    throw Error(ErrorCode::FormMismatch,
                "binding energy forms differ by " + std::to_string(gap), gap);
  return chi_form;
}

double binding_energy_rate(const BipartiteState& state, const HamiltonianDecomposition& h) {
  return trace_product(correlation_derivative(state, h), h.h_i()).real();
}

ComplexMatrix effective_hamiltonian(const ComplexMatrix& partner_marginal,
                                    const HamiltonianDecomposition& h, Subsystem which) {
  const Dims dims = h.dims();
  const ComplexMatrix weight = which == Subsystem::S
                                   ? tensor(identity(dims.s), partner_marginal)
                                   : tensor(partner_marginal, identity(dims.b));
  ComplexMatrix dressed = h.local(which) + partial_trace(weight * h.h_i(), dims, which);
  return 0.5 * (dressed + dressed.adjoint());
}

ComplexMatrix effective_hamiltonian(const BipartiteState& state,
                                    const HamiltonianDecomposition& h, Subsystem which) {
  const Subsystem partner = which == Subsystem::S ? Subsystem::B : Subsystem::S;
  return effective_hamiltonian(state.marginal(partner).matrix(), h, which);
}

namespace {

double local_energy_step(const BipartiteState& before, const BipartiteState& after,
                         const HamiltonianDecomposition& h, Subsystem which) {
  const Subsystem partner = which == Subsystem::S ? Subsystem::B : Subsystem::S;
  const ComplexMatrix d_rho = after.marginal(which).matrix() - before.marginal(which).matrix();
  const ComplexMatrix partner_mid =
      0.5 * (after.marginal(partner).matrix() + before.marginal(partner).matrix());
  return trace_product(d_rho, effective_hamiltonian(partner_mid, h, which)).real();
}

HeatLedger ledger_entry(double time, const BipartiteState& before, const BipartiteState& after,
                        double span, const HamiltonianDecomposition& h) {
  HeatLedger e;
  e.time = time;
  e.dq_s = local_energy_step(before, after, h, Subsystem::S) / span;
  e.dq_b = local_energy_step(before, after, h, Subsystem::B) / span;
  e.du_chi = (binding_energy(after, h) - binding_energy(before, h)) / span;
  e.residual = e.dq_s + e.dq_b + e.du_chi;
  return e;
}

}  // namespace

std::vector<HeatLedger> heat_ledger(const Trajectory& traj, const HamiltonianDecomposition& h) {
  const std::size_t n = traj.states.size();
  std::vector<HeatLedger> out;
  if (n < 2) return out;
  out.reserve(n);
  const double dt = traj.dt;
  out.push_back(ledger_entry(traj.times[0], traj.states[0], traj.states[1], dt, h));
  for (std::size_t k = 1; k + 1 < n; ++k)
    out.push_back(ledger_entry(traj.times[k], traj.states[k - 1], traj.states[k + 1], 2.0 * dt, h));
  out.push_back(ledger_entry(traj.times[n - 1], traj.states[n - 2], traj.states[n - 1], dt, h));
  return out;
}

LedgerTotals integrate_ledger(const std::vector<HeatLedger>& ledger, double dt) {
  LedgerTotals totals;
  for (std::size_t k = 0; k < ledger.size(); ++k) {
    const double w = (k == 0 || k + 1 == ledger.size()) ? 0.5 * dt : dt;
    totals.heat += w * (ledger[k].dq_s + ledger[k].dq_b);
    totals.binding_change += w * ledger[k].du_chi;
  }
  return totals;
}

NormDecomposition du_decomposition_norm(const BipartiteState& state,
                                        const HamiltonianDecomposition& h) {
  const ComplexMatrix chi = CorrelationMatrix(state).matrix();
  const double n = chi.norm();
  if (n <= kZeroChiThreshold)
    throw Error(ErrorCode::ZeroChi, "||chi||_2 = " + std::to_string(n), n);
  const ComplexMatrix d_chi = correlation_derivative(state, h);
  const double d_norm = trace_product(chi, d_chi).real() / n;
  const ComplexMatrix chi_hat = chi / n;
  const ComplexMatrix d_chi_hat = d_chi / n - chi * (d_norm / (n * n));

  NormDecomposition out;
  out.term_norm_rate = trace_product(chi_hat, h.h_i()).real() * d_norm;
  out.term_direction_rate = trace_product(d_chi_hat, h.h_i()).real() * n;
  return out;
}

namespace {

void require_full_rank(const DensityMatrix& rho, const char* which, const Tolerances& tol) {
  const double lowest = hermitian_eig(rho.matrix(), tol).eigenvalues.minCoeff();
  if (lowest <= tol.support)
    throw Error(ErrorCode::SingularReference,
                std::string(which) + " reference eigenvalue " + std::to_string(lowest), lowest);
}

double product_relative_entropy(const ComplexMatrix& rho, Dims dims,
                                const DensityMatrix& reference) {
  const BipartiteState state = make_state(rho, dims);
  const DensityMatrix product = DensityMatrix::validate(state.product_of_marginals());
  return relative_entropy(product, reference).value();
}

}  // namespace

QmiDecomposition du_decomposition_qmi(const BipartiteState& state,
                                      const HamiltonianDecomposition& h,
                                      const ThermalReference& ref, double step) {
  if (!(ref.beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (!(step > 0.0)) throw std::invalid_argument("finite-difference step must be positive");
  require_full_rank(ref.rho_star_s, "S", kDefaultTolerances);
  require_full_rank(ref.rho_star_b, "B", kDefaultTolerances);

  const DensityMatrix reference = DensityMatrix::validate(ref.product());
  const Propagator propagator(h);
  auto relent_at = [&](double offset) {
    return product_relative_entropy(propagator.evolve(state.matrix(), offset), state.dims(),
                                    reference);
  };
  const double relent_rate = (-relent_at(2.0 * step) + 8.0 * relent_at(step) -
                              8.0 * relent_at(-step) + relent_at(-2.0 * step)) /
                             (12.0 * step);

  QmiDecomposition out;
  out.term_qmi = -qmi_rate(state, h) / ref.beta;
  out.term_relent = -relent_rate / ref.beta;
  out.term_local = -trace_product(product_derivative(state, h), h.h_i()).real();
  return out;
}

double integrated_qmi_identity(const Trajectory& traj, const HamiltonianDecomposition& h,
                               double beta) {
  if (traj.states.empty()) throw std::invalid_argument("empty trajectory");
  const BipartiteState& first = traj.states.front();
  const ComplexMatrix thermal = make_thermal_reference(h.h_s(), h.h_b(), beta).product();
  const double deviation = (first.matrix() - thermal).cwiseAbs().maxCoeff();
  if (deviation > 1e-10)
    throw Error(ErrorCode::NotThermalInitial,
                "initial state differs from thermal product by " + std::to_string(deviation),
                deviation);

  const ComplexMatrix p0 = first.product_of_marginals();
  const DensityMatrix p0_density = DensityMatrix::validate(p0);
  auto residual_at = [&](const BipartiteState& s) {
    const ComplexMatrix p = s.product_of_marginals();
    const double lhs = qmi(s);
    const double rhs = -beta * trace_product(CorrelationMatrix(s).matrix(), h.h_i()).real() -
                       relative_entropy(DensityMatrix::validate(p), p0_density).value() -
                       beta * trace_product(p - p0, h.h_i()).real();
    return std::abs(lhs - rhs);
  };

  const std::size_t last = traj.states.size() - 1;
  double worst = residual_at(traj.states[last]);
  constexpr int kInterior = 10;
  for (int j = 1; j <= kInterior; ++j) {
    const auto k = static_cast<std::size_t>(
        std::llround(static_cast<double>(j) * static_cast<double>(last) / (kInterior + 1)));
    worst = std::max(worst, residual_at(traj.states[k]));
  }
  return worst;
}

double area_law_bound(const HamiltonianDecomposition& h, double beta) {
  return 2.0 * beta * norm(h.h_i(), NormKind::Operator);
}

}  // namespace qcorr
