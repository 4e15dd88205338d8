// Copyright 2026 The fluxswap Authors
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

#include <span>
#include <stdexcept>
#include <vector>

#include "fluxswap/matrix.hpp"

namespace fluxswap::dynamics {

/// Raised when a fixed-step integration loses trace (step too large) or
/// produces non-finite values.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integrator substeps per unit of omega_R t used when a grid is built
/// from a step density.
inline constexpr double kDefaultStepsPerUnitTime = 200.0;
/// |tr rho - 1| above this aborts an integration.
inline constexpr double kTraceAbortTolerance = 1e-6;
/// Truncation is trusted while the retained trace stays at or above this.
inline constexpr double kTruncationThreshold = 0.99;

/// Sample times t_start + i (t_end - t_start) / (n_samples - 1), with a
/// fixed number of integrator substeps between consecutive samples.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 1.0;
  std::size_t n_samples = 2;
  std::size_t substeps = 1;

  void validate() const;
  double spacing() const noexcept;
  double step() const noexcept { return spacing() / static_cast<double>(substeps); }
  std::vector<double> times() const;

  /// Grid whose substep count gives at least `steps_per_unit` integrator
  /// steps per unit of time.
  static TimeGrid with_step_density(double t_start, double t_end, std::size_t n_samples,
                                    double steps_per_unit = kDefaultStepsPerUnitTime);

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;
};

enum class StateKind { pure, mixed };

struct Trajectory {
  std::vector<double> times;
  /// Column vectors for pure runs, square density matrices for mixed runs.
  std::vector<ComplexMatrix> states;
  DimSpec dims;
  StateKind kind = StateKind::pure;
  /// Smallest squared norm (pure) or trace (mixed) over all samples.
  double min_trace_observed = 1.0;

  /// Density matrix at sample i (outer product for pure runs).
  ComplexMatrix density(std::size_t i) const;
};

/// Exact propagation of a pure state under a time-independent Hermitian h.
/// One eigendecomposition serves all sample times.
Trajectory evolve_unitary(const ComplexMatrix& h, const ComplexMatrix& psi0, const TimeGrid& grid,
                          DimSpec dims = {});

/// -i [h, rho] + sum_k (A_k rho A_k^dagger - {A_k^dagger A_k, rho} / 2).
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           std::span<const ComplexMatrix> collapse);

/// Classical fourth-order Runge-Kutta integration of the Lindblad equation,
/// grid.substeps steps between samples, each sample re-Hermitized.
Trajectory evolve_master(const ComplexMatrix& rho0, const ComplexMatrix& h,
                         std::span<const ComplexMatrix> collapse, const TimeGrid& grid,
                         DimSpec dims = {});

/// Throws std::invalid_argument unless rho is Hermitian, positive and of
/// unit trace within `tolerance`.
void require_density_matrix(const ComplexMatrix& rho, double tolerance = 1e-10);

/// (rho + rho^dagger) / 2
ComplexMatrix hermitize(const ComplexMatrix& rho);

struct TruncationReport {
  /// Smallest trace (or squared norm) seen along the trajectory.
  double min_trace = 1.0;
  /// Smallest weight carried by Fock levels below the cutoff, i.e. the
  /// trace with the top retained photon level projected out. Equals
  /// min_trace when the trajectory has no field factor.
  double min_retained_weight = 1.0;
  bool valid = true;
};

/// The last factor of traj.dims is taken as the field. Valid when both
/// minima reach `threshold`.
TruncationReport check_truncation(const Trajectory& traj,
                                  double threshold = kTruncationThreshold);

}  // namespace fluxswap::dynamics
