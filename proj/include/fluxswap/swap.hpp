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

// Bell-state measurement on the two field modes and the induced map on
// the qubit pair.
//
// Joint basis of the two branches: |mu k nu l> = |mu>_1 |k>_1 |nu>_2 |l>_2
// (qubit 1, field 1, qubit 2, field 2). The two-qubit output basis is
// |mu nu> ordered gg, ge, eg, ee.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fluxswap/matrix.hpp"

namespace fluxswap::swap {

/// Success probability at or below this marks the outcome undefined.
inline constexpr double kUndefinedThreshold = 1e-8;
/// Largest Choi matrix dimension choi_matrix() will build.
inline constexpr std::size_t kMaxChoiDim = 1024;
/// Choi spectra above -kCpTolerance certify complete positivity.
inline constexpr double kCpTolerance = 1e-10;

/// Bell states of two field modes restricted to the {0, 1} photon sector.
enum class BellState {
  psi_minus,  ///< (|01> - |10>)/sqrt 2, the heralding outcome
  psi_plus,   ///< (|01> + |10>)/sqrt 2
  phi_plus,   ///< (|00> + |11>)/sqrt 2
  phi_minus,  ///< (|00> - |11>)/sqrt 2
};

/// The chosen Bell state embedded in the truncated two-mode Fock space,
/// dimension (n_max + 1)^2, basis index k (n_max + 1) + l.
ComplexMatrix bell_state(BellState which, std::size_t n_max);
/// (|0>|1> - |1>|0>)/sqrt 2.
ComplexMatrix bell_state_01(std::size_t n_max);

struct SwapOutcome {
  ComplexMatrix rho_qq_unnormalized;  ///< 4 x 4
  double success_probability = 0.0;   ///< trace of rho_qq_unnormalized
  std::optional<ComplexMatrix> rho_qq;
  bool defined = false;
  /// Unnormalized two-qubit vector, set when both inputs were pure.
  std::optional<ComplexMatrix> psi_qq_unnormalized;
};

/// Wraps an unnormalized two-qubit operator; normalizes when the success
/// probability exceeds `threshold`.
SwapOutcome make_outcome(ComplexMatrix rho_unnormalized, double threshold = kUndefinedThreshold);

/// Dimensions {2, n_max + 1, 2, n_max + 1} of the joint two-branch space.
DimSpec joint_dims(std::size_t n_max);
/// Factor order taking (Q1, R1, Q2, R2) to (Q1, Q2, R1, R2).
inline constexpr std::array<std::size_t, 4> kQubitsFirst = {0, 2, 1, 3};
/// Reorder a joint operator or vector from (Q1 R1 Q2 R2) to (Q1 Q2 R1 R2).
ComplexMatrix reorder_qubits_first(const ComplexMatrix& joint, std::size_t n_max);

/// Direct evaluation for product pure states |psi1> (x) |psi2>: the
/// two-qubit amplitude of |mu nu> is sum_kl conj(B_kl) psi1(mu,k) psi2(nu,l).
SwapOutcome bsm_project_pure(const ComplexMatrix& psi1, const ComplexMatrix& psi2,
                             BellState which = BellState::psi_minus);

/// Projection-and-reduction path for an arbitrary joint density matrix:
/// reorder to (QQ)(RR), sandwich with I_4 (x) |B><B|, trace the fields.
SwapOutcome bsm_project_mixed(const ComplexMatrix& rho_joint, const DimSpec& dims,
                              BellState which = BellState::psi_minus);

/// Same map for a product input rho1 (x) rho2 without forming the joint
/// matrix; only the {0, 1} photon blocks of each branch contribute.
SwapOutcome bsm_project_product(const ComplexMatrix& rho1, const ComplexMatrix& rho2,
                                BellState which = BellState::psi_minus);

/// Single Kraus operator of the heralded swap,
/// A = (1/sqrt 2) sum_{mu nu} (|mu nu><mu 0 nu 1| - |mu nu><mu 1 nu 0|).
struct KrausOp {
  ComplexMatrix matrix;  ///< 4 x [2 (n_max + 1)]^2
  std::size_t n_max = 0;
};

KrausOp kraus_operator(std::size_t n_max);
/// A rho A^dagger.
ComplexMatrix apply_kraus(const KrausOp& op, const ComplexMatrix& rho);

/// The channel on a single joint basis operator |i><j|, from its
/// coordinate form; a 4 x 4 matrix.
ComplexMatrix channel_on_basis(std::size_t n_max, std::size_t i, std::size_t j);

/// Choi-Jamiolkowski matrix sum_ij Lambda(|i><j|) (x) |i><j|, built with the
/// unnormalized maximally entangled vector sum_i |i>|i>. Output factor first.
/// Throws std::length_error above kMaxChoiDim.
ComplexMatrix choi_matrix(std::size_t n_max);

struct CpReport {
  double min_eigenvalue = 0.0;
  bool is_cp = false;
};

CpReport verify_cp(const ComplexMatrix& choi);

/// Kraus operators from the spectral decomposition of a Choi matrix laid
/// out as (output (x) input): A_n[a, i] = sqrt(d_n) chi_n[a dim_in + i]
/// for every eigenvalue d_n above `cutoff`.
std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix& choi, std::size_t dim_out,
                                           std::size_t dim_in, double cutoff = kCpTolerance);

}  // namespace fluxswap::swap
