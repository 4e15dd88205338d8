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

#include "fluxswap/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fluxswap/hilbert.hpp"

namespace fluxswap::model {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ModelError(msg);
}

bool is_positive_lifetime(double t) { return t > 0.0; }

}  // namespace

void SuperconductingDeviceParams::validate() const {
  require(beta_l > 1.0, "beta_L must exceed 1");
  require(critical_current > 0.0, "critical current must be positive");
  require(resonator_capacitance > 0.0, "resonator capacitance must be positive");
  require(resonator_omega > 0.0, "resonator frequency must be positive");
}

void SemiconductingDeviceParams::validate() const {
  require(persistent_current > 0.0, "persistent current must be positive");
}

void SystemParams::validate() const {
  require(n_max >= 1, "n_max must be at least 1");
  require(g_tilde >= 0.0 && std::isfinite(g_tilde), "g_tilde must be finite and non-negative");
  require(theta >= 0.0 && theta <= std::numbers::pi, "theta must lie in [0, pi]");
  require(omega_r > 0.0 && std::isfinite(omega_r), "omega_r must be positive");
  require(std::isfinite(omega_q), "omega_q must be finite");
  require(!t_r || is_positive_lifetime(*t_r), "T_R must be positive");
  require(!t_q || is_positive_lifetime(*t_q), "T_Q must be positive");
}

double bz_superconducting(const SuperconductingDeviceParams& p, double flux) {
  require(p.beta_l > 1.0, "bz_superconducting: beta_L must exceed 1");
  return 2.0 * p.critical_current * std::sqrt(6.0 * (p.beta_l - 1.0)) *
         (p.flux_quantum / 2.0 - flux);
}

double bz_superconducting(const SuperconductingDeviceParams& p) {
  return bz_superconducting(p, p.static_flux);
}

double bz_semiconducting(const SemiconductingDeviceParams& p) {
  return 2.0 * p.persistent_current * (p.flux_quantum / 2.0 - p.static_flux);
}

QubitSplitting derive_qubit(double bz_cl, double bx) {
  require(!(bz_cl == 0.0 && bx == 0.0), "derive_qubit: degenerate qubit (B_z = B_x = 0)");
  QubitSplitting q;
  q.energy = std::hypot(bz_cl, bx);
  double th = std::atan2(bx, bz_cl);
  // Fold into [0, pi]: (B_z, B_x) and (-B_z, -B_x) describe the same
  // operator up to an overall sign of the pseudo-spin.
  if (th < 0.0) th += std::numbers::pi;
  q.theta = th;
  return q;
}

double derive_coupling(const SuperconductingDeviceParams& p) {
  require(p.beta_l > 1.0, "derive_coupling: beta_L must exceed 1");
  require(p.resonator_capacitance > 0.0 && p.resonator_omega > 0.0,
          "derive_coupling: C_R and omega_R must be positive");
  const double g = p.critical_current *
                   std::sqrt(3.0 * (p.beta_l - 1.0) /
                             (constants::kHbar * p.resonator_omega * p.resonator_capacitance));
  return g / p.resonator_omega;
}

double capacitance_for_coupling(const SuperconductingDeviceParams& p, double g_tilde) {
  require(p.beta_l > 1.0, "capacitance_for_coupling: beta_L must exceed 1");
  require(g_tilde > 0.0, "capacitance_for_coupling: target coupling must be positive");
  const double g = g_tilde * p.resonator_omega;
  return 3.0 * (p.beta_l - 1.0) * p.critical_current * p.critical_current /
         (constants::kHbar * p.resonator_omega * g * g);
}

SystemParams from_device(const SuperconductingDeviceParams& p, std::size_t n_max) {
  p.validate();
  const auto q = derive_qubit(bz_superconducting(p), p.tunneling_energy);
  SystemParams s;
  s.omega_q = q.energy / (constants::kHbar * p.resonator_omega);
  s.theta = q.theta;
  s.g_tilde = derive_coupling(p);
  s.n_max = n_max;
  return s;
}

ComplexMatrix annihilation(std::size_t n_max) {
  const std::size_t d = n_max + 1;
  ComplexMatrix a(d, d);
  for (std::size_t n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix number_operator(std::size_t n_max) {
  const std::size_t d = n_max + 1;
  ComplexMatrix m(d, d);
  for (std::size_t n = 0; n < d; ++n) m(n, n) = static_cast<double>(n);
  return m;
}

ComplexMatrix sigma_z() { return ComplexMatrix::diagonal({-1.0, 1.0}); }
ComplexMatrix sigma_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix sigma_minus() { return {{0.0, 1.0}, {0.0, 0.0}}; }
ComplexMatrix sigma_plus() { return {{0.0, 0.0}, {1.0, 0.0}}; }

ComplexMatrix parity(std::size_t n_max) {
  ComplexMatrix field(n_max + 1, n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) field(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return hilbert::kron(sigma_z(), field);
}

ComplexMatrix excitation_number(std::size_t n_max) {
  return hilbert::kron(sigma_plus() * sigma_minus(), ComplexMatrix::identity(n_max + 1)) +
         hilbert::kron(ComplexMatrix::identity(2), number_operator(n_max));
}

ComplexMatrix branch_state(QubitLevel level, std::size_t photons, std::size_t n_max) {
  require(photons <= n_max, "branch_state: photon number exceeds n_max");
  const std::size_t q = level == QubitLevel::excited ? 1 : 0;
  return hilbert::basis_vector(2 * (n_max + 1), q * (n_max + 1) + photons);
}

namespace {

ComplexMatrix uncoupled_part(const SystemParams& p) {
  const std::size_t d = p.field_dim();
  const ComplexMatrix id_f = ComplexMatrix::identity(d);
  ComplexMatrix field = number_operator(p.n_max) + ComplexMatrix::identity(d) * 0.5;
  return hilbert::kron(sigma_z(), id_f) * (p.omega_q / 2.0) +
         hilbert::kron(ComplexMatrix::identity(2), field) * p.omega_r;
}

}  // namespace

ComplexMatrix build_h_qr(const SystemParams& p) {
  p.validate();
  const ComplexMatrix a = annihilation(p.n_max);
  const ComplexMatrix quadrature = a + a.adjoint();
  const ComplexMatrix qubit_part =
      sigma_z() * std::cos(p.theta) - sigma_x() * std::sin(p.theta);
  ComplexMatrix h = uncoupled_part(p) - hilbert::kron(qubit_part, quadrature) * p.g_tilde;
  return h;
}

ComplexMatrix build_h_jc(const SystemParams& p) {
  p.validate();
  require(std::abs(p.theta - std::numbers::pi / 2.0) <= 1e-12,
          "build_h_jc: the rotating-wave model requires theta = pi/2");
  const ComplexMatrix a = annihilation(p.n_max);
  const ComplexMatrix interaction =
      hilbert::kron(sigma_plus(), a) + hilbert::kron(sigma_minus(), a.adjoint());
  return uncoupled_part(p) + interaction * p.g_tilde;
}

std::vector<ComplexMatrix> build_collapse_ops(const SystemParams& p) {
  p.validate();
  require(p.t_r.has_value() && p.t_q.has_value(),
          "build_collapse_ops: both T_R and T_Q must be given (use inf to disable a channel)");
  std::vector<ComplexMatrix> ops;
  const std::size_t d = p.field_dim();
  if (std::isfinite(*p.t_r)) {
    ops.push_back(hilbert::kron(ComplexMatrix::identity(2), annihilation(p.n_max)) *
                  (1.0 / std::sqrt(*p.t_r)));
  }
  if (std::isfinite(*p.t_q)) {
    ops.push_back(hilbert::kron(sigma_minus(), ComplexMatrix::identity(d)) *
                  (1.0 / std::sqrt(*p.t_q)));
  }
  return ops;
}

double estimate_decay_time(double t_q, double t_r) {
  require(t_q > 0.0 && t_r > 0.0, "estimate_decay_time: lifetimes must be positive");
  return 2.0 / (1.0 / t_q + 1.0 / t_r);
}

}  // namespace fluxswap::model
