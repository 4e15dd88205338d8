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

// The swapping protocol over a grid of BSM times: evolve both branches,
// measure the fields in the Bell basis, tabulate the diagnostics.

#pragma once

#include <optional>

#include "fluxswap/config.hpp"
#include "fluxswap/dynamics.hpp"
#include "fluxswap/series.hpp"

namespace fluxswap::experiments {

struct ProtocolDiagnostics {
  /// Worst truncation figures over both branches.
  double min_trace = 1.0;
  double min_retained_weight = 1.0;
  bool truncation_valid = true;
  /// Smallest eigenvalue of any branch density matrix (0 for pure runs).
  double min_eigenvalue = 0.0;
  /// Largest |tr rho - 1| (or |<psi|psi> - 1|) seen on either branch.
  double max_trace_deviation = 0.0;
  std::size_t samples = 0;
  /// BSM times whose success probability fell below the threshold.
  std::size_t undefined_points = 0;
};

struct ProtocolResult {
  SeriesTable table;
  ProtocolDiagnostics diagnostics;
  /// Sliding max of NQQ, present when cfg.envelope_window > 0. Windowed
  /// runs get one envelope per window, concatenated.
  std::optional<SeriesTable> envelope;
  /// Branch trajectories, kept only when requested.
  std::optional<dynamics::Trajectory> branch1;
  std::optional<dynamics::Trajectory> branch2;
};

struct ProtocolOptions {
  bool keep_trajectories = false;
};

/// Throws ConfigError for invalid configs and dynamics::IntegrationError
/// when the integrator loses trace. An invalid truncation does not throw;
/// it is reported in the diagnostics.
ProtocolResult run_protocol(const ExperimentConfig& cfg, const ProtocolOptions& options = {});

/// Hamiltonian of one branch for the chosen model.
ComplexMatrix branch_hamiltonian(const ExperimentConfig& cfg, const BranchConfig& branch);

/// Initial pure state of a branch as a column vector.
ComplexMatrix branch_initial_state(const BranchConfig& branch);

/// Branch evolution over cfg.sample_times().
dynamics::Trajectory evolve_branch(const ExperimentConfig& cfg, const BranchConfig& branch);

}  // namespace fluxswap::experiments
