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

#include <cstddef>
#include <vector>

#include "qcorr/correlation.hpp"

namespace qcorr {

/// H_SB = H_S (x) I + I (x) H_B + H_I.
class HamiltonianDecomposition {
 public:
  /// Validates hermiticity and shapes; throws NotHermitian / DimensionMismatch.
  static HamiltonianDecomposition make(const ComplexMatrix& h_s, const ComplexMatrix& h_b,
                                       const ComplexMatrix& h_i,
                                       const Tolerances& tol = kDefaultTolerances);

  const ComplexMatrix& h_s() const { return h_s_; }
  const ComplexMatrix& h_b() const { return h_b_; }
  const ComplexMatrix& h_i() const { return h_i_; }
  const ComplexMatrix& h_total() const { return h_total_; }
  /// h_s (x) I + I (x) h_b
  ComplexMatrix h_local() const { return h_total_ - h_i_; }
  const ComplexMatrix& local(Subsystem which) const {
    return which == Subsystem::S ? h_s_ : h_b_;
  }
  Dims dims() const { return {h_s_.rows(), h_b_.rows()}; }

 private:
  HamiltonianDecomposition(ComplexMatrix hs, ComplexMatrix hb, ComplexMatrix hi, ComplexMatrix ht)
      : h_s_(std::move(hs)), h_b_(std::move(hb)), h_i_(std::move(hi)), h_total_(std::move(ht)) {}

  ComplexMatrix h_s_;
  ComplexMatrix h_b_;
  ComplexMatrix h_i_;
  ComplexMatrix h_total_;
};

/// Two qubits: H_S = Z, H_B = -Z/2, H_I = 5/2 XX + 1/2 YY + 9/2 ZZ.
HamiltonianDecomposition example_hamiltonian();

/// exp(-i H_total t) from a single eigendecomposition.
class Propagator {
 public:
  explicit Propagator(const HamiltonianDecomposition& h,
                      const Tolerances& tol = kDefaultTolerances);

  ComplexMatrix unitary(double t) const { return unitary_propagator(eig_, t); }
  /// U rho U^dagger, re-symmetrized against round-off.
  ComplexMatrix evolve(const ComplexMatrix& rho, double t) const;

 private:
  HermitianEig eig_;
};

BipartiteState evolve(const BipartiteState& state0, const HamiltonianDecomposition& h, double t,
                      const Tolerances& tol = kDefaultTolerances);

/// d rho / dt = -i [H_total, rho].
ComplexMatrix state_derivative(const ComplexMatrix& rho, const HamiltonianDecomposition& h);

/// d/dt (rho_S (x) rho_B) under the closed evolution.
ComplexMatrix product_derivative(const BipartiteState& state, const HamiltonianDecomposition& h);

/// d chi / dt.
ComplexMatrix correlation_derivative(const BipartiteState& state,
                                     const HamiltonianDecomposition& h);

struct RateOptions {
  LogBase base = LogBase::Natural;
  /// Strict surfaces singular marginals as SingularMarginal errors;
  /// Restricted drops eigenvalues at or below tol.support from the log.
  LogSupport log_support = LogSupport::Restricted;
  Tolerances tol = kDefaultTolerances;
};

/// log(rho_S (x) rho_B).
ComplexMatrix log_product_of_marginals(const BipartiteState& state,
                                       const RateOptions& opts = {});

/// dI/dt = i Tr[[H_I, chi] log(rho_S (x) rho_B)].
double qmi_rate(const BipartiteState& state, const HamiltonianDecomposition& h,
                const RateOptions& opts = {});

/// The unsimplified rate
///   i Tr[[H_SB, chi] log P + i chi d(log P)/dt],  P = rho_S (x) rho_B,
/// with the derivative of the matrix log taken exactly in P's eigenbasis.
/// Requires full-rank marginals.
double qmi_rate_full_form(const BipartiteState& state, const HamiltonianDecomposition& h,
                          const RateOptions& opts = {});

/// d||chi||_2^2/dt = 2i Tr[[H_SB, chi] P] - 2 Tr[dP/dt chi].
double chi_norm2_rate(const BipartiteState& state, const HamiltonianDecomposition& h);

/// d||chi||_2/dt. Throws ZeroChi when ||chi||_2 <= 1e-12.
double chi_norm_rate(const BipartiteState& state, const HamiltonianDecomposition& h);

inline constexpr double kZeroChiThreshold = 1e-12;

/// d_SB * || rho_S (x) rho_B - I / d_SB || (operator norm). Small values
/// mean dI/dt ~ (d_SB / 2) d||chi||^2/dt is expected to hold.
double proportionality_gap(const BipartiteState& state);

struct Trajectory {
  double t_min = 0.0;
  double dt = 0.0;
  std::vector<double> times;
  std::vector<BipartiteState> states;
  std::vector<double> qmi;
  std::vector<double> chi_norm;
  std::vector<double> qmi_rate;
  std::vector<double> chi_norm2_rate;

  std::size_t size() const { return times.size(); }
};

struct SweepOptions {
  RateOptions rates;
  std::size_t max_points = 10'000'000;
};

/// Number of grid points t_min + k dt with k dt <= t_max - t_min.
std::size_t grid_size(double t_min, double t_max, double dt);

/// Exact evolution over a uniform grid. Throws GridTooLarge above
/// opts.max_points and std::invalid_argument for an empty grid.
Trajectory sweep(const BipartiteState& state0, const HamiltonianDecomposition& h, double t_min,
                 double t_max, double dt, const SweepOptions& opts = {});

struct DiscrepancyInterval {
  double t_start = 0.0;
  double t_end = 0.0;
  std::size_t first = 0;  // grid indices, inclusive
  std::size_t last = 0;
};

inline constexpr double kDefaultZeroEps = 1e-9;

/// -1, 0 or +1, with |r| < zero_eps mapped to 0.
int thresholded_sign(double r, double zero_eps);

/// Maximal runs of grid points where sign(dI/dt) * sign(d||chi||^2/dt) == -1.
std::vector<DiscrepancyInterval> discrepancy_scan(const Trajectory& traj,
                                                  double zero_eps = kDefaultZeroEps);

}  // namespace qcorr
