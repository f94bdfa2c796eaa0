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
#include "qcorr/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcorr {

namespace {

constexpr Complex kI{0.0, 1.0};

// i Tr[...] of an anti-Hermitian product is real; anything else is a bug.
double real_part_checked(Complex z, const char* what) {
  const double scale = std::max(1.0, std::abs(z.real()));
  if (std::abs(z.imag()) > 1e-10 * scale)
    throw Error(ErrorCode::FormMismatch,
                std::string(what) + " has imaginary residue " + std::to_string(z.imag()),
                z.imag());
  return z.real();
}

void require_hermitian(const ComplexMatrix& m, const char* name, const Tolerances& tol) {
  const double defect = hermiticity_defect(m);
  if (!(defect <= tol.hermiticity))
    throw Error(ErrorCode::NotHermitian,
                std::string(name) + " hermiticity defect " + std::to_string(defect), defect);
}

// (log a - log b) / (a - b), the divided difference of log.
double log_divided_difference(double a, double b) {
  const double diff = a - b;
  if (std::abs(diff) <= 1e-7 * std::max(a, b)) return 2.0 / (a + b);
  return std::log1p(diff / b) / diff;
}

}  // namespace

HamiltonianDecomposition HamiltonianDecomposition::make(const ComplexMatrix& h_s,
                                                        const ComplexMatrix& h_b,
                                                        const ComplexMatrix& h_i,
                                                        const Tolerances& tol) {
  require_hermitian(h_s, "H_S", tol);
  require_hermitian(h_b, "H_B", tol);
  require_hermitian(h_i, "H_I", tol);
  const Index n = h_s.rows() * h_b.rows();
  if (h_i.rows() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "H_I is " + std::to_string(h_i.rows()) + "-dimensional, expected " +
                    std::to_string(n));
  ComplexMatrix total =
      tensor(h_s, identity(h_b.rows())) + tensor(identity(h_s.rows()), h_b) + h_i;
  return HamiltonianDecomposition(h_s, h_b, h_i, std::move(total));
}

HamiltonianDecomposition example_hamiltonian() {
  using namespace pauli;
  const ComplexMatrix h_i = 2.5 * tensor(x(), x()) + 0.5 * tensor(y(), y()) + 4.5 * tensor(z(), z());
  return HamiltonianDecomposition::make(z(), -0.5 * z(), h_i);
}

Propagator::Propagator(const HamiltonianDecomposition& h, const Tolerances& tol)
    : eig_(hermitian_eig(h.h_total(), tol)) {}

ComplexMatrix Propagator::evolve(const ComplexMatrix& rho, double t) const {
  const ComplexMatrix u = unitary(t);
  const ComplexMatrix out = u * rho * u.adjoint();
  return 0.5 * (out + out.adjoint());
}

BipartiteState evolve(const BipartiteState& state0, const HamiltonianDecomposition& h, double t,
                      const Tolerances& tol) {
  return make_state(Propagator(h, tol).evolve(state0.matrix(), t), state0.dims(), tol);
}

ComplexMatrix state_derivative(const ComplexMatrix& rho, const HamiltonianDecomposition& h) {
  return -kI * commutator(h.h_total(), rho);
}

ComplexMatrix product_derivative(const BipartiteState& state, const HamiltonianDecomposition& h) {
  const ComplexMatrix drho = state_derivative(state.matrix(), h);
  const ComplexMatrix drho_s = partial_trace(drho, state.dims(), Subsystem::S);
  const ComplexMatrix drho_b = partial_trace(drho, state.dims(), Subsystem::B);
  return tensor(drho_s, state.rho_b().matrix()) + tensor(state.rho_s().matrix(), drho_b);
}

ComplexMatrix correlation_derivative(const BipartiteState& state,
                                     const HamiltonianDecomposition& h) {
  return state_derivative(state.matrix(), h) - product_derivative(state, h);
}

ComplexMatrix log_product_of_marginals(const BipartiteState& state, const RateOptions& opts) {
  const Tolerances& tol = opts.tol;
  const HermitianEig eig_s = hermitian_eig(state.rho_s().matrix(), tol);
  const HermitianEig eig_b = hermitian_eig(state.rho_b().matrix(), tol);
  const double lowest = std::min(eig_s.eigenvalues.minCoeff(), eig_b.eigenvalues.minCoeff());
  if (lowest > tol.support) {
    // log(A (x) B) = log A (x) I + I (x) log B for full-rank factors.
    return tensor(matrix_log(eig_s, LogSupport::Strict, tol), identity(state.dims().b)) +
           tensor(identity(state.dims().s), matrix_log(eig_b, LogSupport::Strict, tol));
  }
  if (opts.log_support == LogSupport::Strict)
    throw Error(ErrorCode::SingularMarginal,
                "marginal eigenvalue " + std::to_string(lowest), lowest);
  return matrix_log(state.product_of_marginals(), LogSupport::Restricted, tol);
}

double qmi_rate(const BipartiteState& state, const HamiltonianDecomposition& h,
                const RateOptions& opts) {
  const ComplexMatrix chi = CorrelationMatrix(state).matrix();
  const ComplexMatrix log_p = log_product_of_marginals(state, opts);
  const double nats =
      real_part_checked(kI * trace_product(commutator(h.h_i(), chi), log_p), "qmi_rate");
  return in_base(nats, opts.base);
}

double qmi_rate_full_form(const BipartiteState& state, const HamiltonianDecomposition& h,
                          const RateOptions& opts) {
  const ComplexMatrix chi = CorrelationMatrix(state).matrix();
  const ComplexMatrix p = state.product_of_marginals();
  const HermitianEig eig = hermitian_eig(p, opts.tol);
  const double lowest = eig.eigenvalues.minCoeff();
  if (lowest <= opts.tol.support)
    throw Error(ErrorCode::SingularMarginal,
                "product of marginals has eigenvalue " + std::to_string(lowest), lowest);

  const ComplexMatrix log_p = matrix_log(eig, LogSupport::Strict, opts.tol);
  // Frechet derivative of log at P in the direction dP/dt.
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix dlog = v.adjoint() * product_derivative(state, h) * v;
  for (Index i = 0; i < dlog.rows(); ++i)
    for (Index j = 0; j < dlog.cols(); ++j)
      dlog(i, j) *= log_divided_difference(eig.eigenvalues(i), eig.eigenvalues(j));
  dlog = v * dlog * v.adjoint();

  const Complex total =
      kI * (trace_product(commutator(h.h_total(), chi), log_p) + kI * trace_product(chi, dlog));
  return in_base(real_part_checked(total, "qmi_rate_full_form"), opts.base);
}

double chi_norm2_rate(const BipartiteState& state, const HamiltonianDecomposition& h) {
  const ComplexMatrix chi = CorrelationMatrix(state).matrix();
  const ComplexMatrix p = state.product_of_marginals();
  const Complex unitary_part = 2.0 * kI * trace_product(commutator(h.h_total(), chi), p);
  const Complex marginal_part = -2.0 * trace_product(product_derivative(state, h), chi);
  return real_part_checked(unitary_part + marginal_part, "chi_norm2_rate");
}

double chi_norm_rate(const BipartiteState& state, const HamiltonianDecomposition& h) {
  const double n = chi_norm2(CorrelationMatrix(state));
  if (n <= kZeroChiThreshold)
    throw Error(ErrorCode::ZeroChi, "||chi||_2 = " + std::to_string(n), n);
  return chi_norm2_rate(state, h) / (2.0 * n);
}

double proportionality_gap(const BipartiteState& state) {
  const Index d = state.dims().total();
  const ComplexMatrix diff =
      state.product_of_marginals() - identity(d) / static_cast<double>(d);
  return static_cast<double>(d) * norm(diff, NormKind::Operator);
}

std::size_t grid_size(double t_min, double t_max, double dt) {
  if (!(dt > 0.0) || !(t_max > t_min))
    throw std::invalid_argument("time grid needs dt > 0 and t_min < t_max");
  // Tolerate t_max landing a hair below a grid point.
  return static_cast<std::size_t>(std::floor((t_max - t_min) / dt + 1e-9)) + 1;
}

Trajectory sweep(const BipartiteState& state0, const HamiltonianDecomposition& h, double t_min,
                 double t_max, double dt, const SweepOptions& opts) {
  const std::size_t n = grid_size(t_min, t_max, dt);
  if (n > opts.max_points)
    throw Error(ErrorCode::GridTooLarge,
                std::to_string(n) + " points exceeds cap " + std::to_string(opts.max_points),
                static_cast<double>(n));

  const Tolerances& tol = opts.rates.tol;
  const Propagator propagator(h, tol);

  Trajectory traj;
  traj.t_min = t_min;
  traj.dt = dt;
  traj.times.reserve(n);
  traj.states.reserve(n);
  traj.qmi.reserve(n);
  traj.chi_norm.reserve(n);
  traj.qmi_rate.reserve(n);
  traj.chi_norm2_rate.reserve(n);

  // Each grid point depends only on state0 and t, so the loop body is
  // order-independent.
  for (std::size_t k = 0; k < n; ++k) {
    const double t = t_min + static_cast<double>(k) * dt;
    BipartiteState state = make_state(propagator.evolve(state0.matrix(), t), state0.dims(), tol);
    traj.times.push_back(t);
    traj.qmi.push_back(qmi(state, opts.rates.base, tol));
    traj.chi_norm.push_back(chi_norm2(CorrelationMatrix(state)));
    traj.qmi_rate.push_back(qmi_rate(state, h, opts.rates));
    traj.chi_norm2_rate.push_back(chi_norm2_rate(state, h));
    traj.states.push_back(std::move(state));
  }
  return traj;
}

int thresholded_sign(double r, double zero_eps) {
  if (std::abs(r) < zero_eps) return 0;
  return r > 0.0 ? 1 : -1;
}

std::vector<DiscrepancyInterval> discrepancy_scan(const Trajectory& traj, double zero_eps) {
  std::vector<DiscrepancyInterval> out;
  const std::size_t n = std::min(traj.qmi_rate.size(), traj.chi_norm2_rate.size());
  std::size_t k = 0;
  while (k < n) {
    auto opposite = [&](std::size_t i) {
      return thresholded_sign(traj.qmi_rate[i], zero_eps) *
                 thresholded_sign(traj.chi_norm2_rate[i], zero_eps) ==
             -1;
    };
    if (!opposite(k)) {
      ++k;
      continue;
    }
    std::size_t last = k;
    while (last + 1 < n && opposite(last + 1)) ++last;
    out.push_back({traj.times[k], traj.times[last], k, last});
    k = last + 1;
  }
  return out;
}

}  // namespace qcorr
