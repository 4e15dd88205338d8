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

// Qubit-resonator Hamiltonians and dissipators.
//
// Internal units: hbar = 1 and the resonator frequency omega_R = 1, so
// times are omega_R t and lifetimes are omega_R T. Device-level
// constructors take SI inputs and convert once.
//
// Basis of one branch: qubit factor first (|g> = 0, |e> = 1), then the
// Fock factor |0> ... |n_max>. The pseudo-spin operator sigma_z is
// |e><e| - |g><g|, sigma_- = |g><e|.

#pragma once

#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fluxswap/matrix.hpp"

namespace fluxswap::model {

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace constants {
inline constexpr double kPlanck = 6.62607015e-34;           // J s
inline constexpr double kHbar = kPlanck / (2.0 * std::numbers::pi);
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
/// h / 2e, the superconducting flux quantum.
inline constexpr double kFluxQuantumSuperconducting = kPlanck / (2.0 * kElementaryCharge);
/// h / e, the normal-electron flux quantum.
inline constexpr double kFluxQuantumNormal = kPlanck / kElementaryCharge;
}  // namespace constants

enum class QubitLevel { ground = 0, excited = 1 };

/// rf-SQUID flux qubit coupled to an LC resonator. SI units.
struct SuperconductingDeviceParams {
  double critical_current = 0.0;        ///< I_c (A)
  double beta_l = 0.0;                  ///< 2 pi L I_c / phi_0, must exceed 1
  double static_flux = 0.0;             ///< phi^cl (Wb)
  double flux_quantum = constants::kFluxQuantumSuperconducting;
  double tunneling_energy = 0.0;        ///< B_x (J)
  double resonator_capacitance = 0.0;   ///< C_R (F)
  double resonator_omega = 0.0;         ///< omega_R (rad/s)

  void validate() const;
};

/// Semiconducting quantum-ring flux qubit. SI units.
struct SemiconductingDeviceParams {
  double persistent_current = 0.0;  ///< I_0 (A)
  double static_flux = 0.0;         ///< phi^cl (Wb)
  double flux_quantum = constants::kFluxQuantumNormal;
  double tunneling_energy = 0.0;    ///< B_x (J)

  void validate() const;
};

/// Dimensionless parameters of one qubit-resonator branch.
struct SystemParams {
  double omega_q = 1.0;  ///< qubit frequency / omega_R
  double omega_r = 1.0;
  double g_tilde = 0.0;  ///< coupling / omega_R
  double theta = std::numbers::pi / 2.0;
  std::size_t n_max = 10;
  /// Resonator and qubit lifetimes in units of 1/omega_R. Absent means
  /// not specified; +inf disables the corresponding channel.
  std::optional<double> t_r;
  std::optional<double> t_q;

  void validate() const;
  std::size_t field_dim() const noexcept { return n_max + 1; }
  std::size_t dim() const noexcept { return 2 * (n_max + 1); }
  /// Order-of-magnitude qubit-field interaction time, pi / g_tilde.
  double interaction_time() const noexcept { return std::numbers::pi / g_tilde; }
};

/// Longitudinal bias energy 2 I_c sqrt(6 (beta_L - 1)) (phi_0 / 2 - phi).
double bz_superconducting(const SuperconductingDeviceParams& p, double flux);
double bz_superconducting(const SuperconductingDeviceParams& p);
/// 2 I_0 (phi_0 / 2 - phi^cl).
double bz_semiconducting(const SemiconductingDeviceParams& p);

struct QubitSplitting {
  double energy = 0.0;  ///< hbar omega_Q, same unit as the inputs
  double theta = 0.0;   ///< mixing angle in [0, pi]
};

/// hbar omega_Q = sqrt(B_z^2 + B_x^2), theta = atan2(B_x, B_z) folded to [0, pi].
QubitSplitting derive_qubit(double bz_cl, double bx);

/// Coupling I_c sqrt(3 (beta_L - 1) / (hbar omega_R C_R)), divided by omega_R.
double derive_coupling(const SuperconductingDeviceParams& p);

/// Capacitance that yields coupling `g_tilde` (in units of omega_R) for the
/// remaining device parameters; inverse of derive_coupling.
double capacitance_for_coupling(const SuperconductingDeviceParams& p, double g_tilde);

/// Full dimensionless branch parameters from a superconducting device.
SystemParams from_device(const SuperconductingDeviceParams& p, std::size_t n_max);

// Single-factor operators.
ComplexMatrix annihilation(std::size_t n_max);
ComplexMatrix number_operator(std::size_t n_max);
ComplexMatrix sigma_z();
ComplexMatrix sigma_x();
ComplexMatrix sigma_minus();
ComplexMatrix sigma_plus();
/// sigma_z (x) (-1)^{a^dagger a}.
ComplexMatrix parity(std::size_t n_max);
/// sigma_+ sigma_- (x) I + I (x) a^dagger a.
ComplexMatrix excitation_number(std::size_t n_max);

/// |level, photons> in the branch basis.
ComplexMatrix branch_state(QubitLevel level, std::size_t photons, std::size_t n_max);

/// Rabi-model branch Hamiltonian
/// (omega_Q/2) sz + omega_R (a^dag a + 1/2) - g (sz cos th - sx sin th)(a + a^dag).
ComplexMatrix build_h_qr(const SystemParams& p);

/// Rotating-wave (Jaynes-Cummings) variant; only defined for theta = pi/2.
ComplexMatrix build_h_jc(const SystemParams& p);

/// {I (x) a / sqrt(T_R), sigma_- (x) I / sqrt(T_Q)}. Channels with infinite
/// lifetime are omitted. Throws ModelError when a lifetime is missing or
/// not positive.
std::vector<ComplexMatrix> build_collapse_ops(const SystemParams& p);

/// 1/T_QR = (1/T_Q + 1/T_R) / 2.
double estimate_decay_time(double t_q, double t_r);

}  // namespace fluxswap::model
