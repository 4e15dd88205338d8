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

#include "fluxswap/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fluxswap/hilbert.hpp"
#include "fluxswap/kernels.hpp"

namespace fluxswap::dynamics {

void TimeGrid::validate() const {
  if (!(t_end > t_start) || !std::isfinite(t_start) || !std::isfinite(t_end)) {
    throw std::invalid_argument("TimeGrid: t_end must exceed t_start");
  }
  if (n_samples < 1 || substeps < 1) {
    throw std::invalid_argument("TimeGrid: sample and substep counts must be at least 1");
  }
}

double TimeGrid::spacing() const noexcept {
  if (n_samples < 2) return t_end - t_start;
  return (t_end - t_start) / static_cast<double>(n_samples - 1);
}

std::vector<double> TimeGrid::times() const {
  std::vector<double> t(n_samples);
  const double dt = spacing();
  for (std::size_t i = 0; i < n_samples; ++i) t[i] = t_start + static_cast<double>(i) * dt;
  return t;
}

TimeGrid TimeGrid::with_step_density(double t_start, double t_end, std::size_t n_samples,
                                     double steps_per_unit) {
  TimeGrid g{t_start, t_end, n_samples, 1};
  g.substeps = static_cast<std::size_t>(std::max(1.0, std::ceil(g.spacing() * steps_per_unit - 1e-9)));
  g.validate();
  return g;
}

ComplexMatrix Trajectory::density(std::size_t i) const {
  const ComplexMatrix& s = states.at(i);
  return kind == StateKind::pure ? ComplexMatrix::projector(s) : s;
}

namespace {

DimSpec default_dims(DimSpec dims, std::size_t n, const char* what) {
  if (dims.count() == 0) return DimSpec{n};
  dims.check(n, what);
  return dims;
}

double squared_norm(const ComplexMatrix& v) {
  double s = 0.0;
  for (const auto& z : v.entries()) s += std::norm(z);
  return s;
}

// Shared pieces of the Lindblad generator, prepared once per integration.
struct Generator {
  ComplexMatrix k_eff;
  std::vector<ComplexMatrix> collapse;
  std::vector<ComplexMatrix> collapse_adj;

  Generator(const ComplexMatrix& h, std::span<const ComplexMatrix> ops) : k_eff(h) {
    for (const auto& a : ops) {
      if (a.rows() != h.rows() || a.cols() != h.cols()) {
        throw DimensionError("lindblad: collapse operator shape differs from Hamiltonian");
      }
      collapse.push_back(a);
      collapse_adj.push_back(a.adjoint());
      k_eff -= (collapse_adj.back() * a) * Complex(0.0, 0.5);
    }
  }

  ComplexMatrix operator()(const ComplexMatrix& rho) const {
    return kernels::lindblad_rhs(rho, k_eff, collapse, collapse_adj);
  }
};

void axpy_into(ComplexMatrix& out, const ComplexMatrix& x, double a, const ComplexMatrix& y) {
  out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * y[i];
}

}  // namespace

Trajectory evolve_unitary(const ComplexMatrix& h, const ComplexMatrix& psi0, const TimeGrid& grid,
                          DimSpec dims) {
  grid.validate();
  if (!psi0.is_column() || psi0.rows() != h.rows() || !h.is_square()) {
    throw DimensionError("evolve_unitary: state and Hamiltonian dimensions differ");
  }
  const double norm0 = squared_norm(psi0);
  if (std::abs(norm0 - 1.0) > 1e-10) {
    throw std::invalid_argument("evolve_unitary: initial state is not normalized");
  }
  Trajectory traj;
  traj.dims = default_dims(std::move(dims), h.rows(), "evolve_unitary");
  traj.kind = StateKind::pure;
  traj.times = grid.times();
  const hilbert::SpectralPropagator prop(h);
  traj.states.reserve(traj.times.size());
  traj.min_trace_observed = norm0;
  for (double t : traj.times) {
    traj.states.push_back(prop.apply(psi0, t - grid.t_start));
    traj.min_trace_observed = std::min(traj.min_trace_observed, squared_norm(traj.states.back()));
  }
  return traj;
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           std::span<const ComplexMatrix> collapse) {
  if (!rho.is_square() || rho.rows() != h.rows() || !h.is_square()) {
    throw DimensionError("lindblad_rhs: state and Hamiltonian dimensions differ");
  }
  return Generator(h, collapse)(rho);
}

ComplexMatrix hermitize(const ComplexMatrix& rho) {
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < rho.rows(); ++i) {
    for (std::size_t j = 0; j < rho.cols(); ++j) {
      out(i, j) = 0.5 * (rho(i, j) + std::conj(rho(j, i)));
    }
  }
  return out;
}

void require_density_matrix(const ComplexMatrix& rho, double tolerance) {
  if (!rho.is_square()) throw DimensionError("density matrix must be square");
  if (rho.hermiticity_error() > tolerance) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex(1.0)) > tolerance) {
    throw std::invalid_argument("density matrix does not have unit trace");
  }
  const auto ev = hilbert::hermitian_eigenvalues(hermitize(rho));
  if (ev.front() < -tolerance) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
}

Trajectory evolve_master(const ComplexMatrix& rho0, const ComplexMatrix& h,
                         std::span<const ComplexMatrix> collapse, const TimeGrid& grid,
                         DimSpec dims) {
  grid.validate();
  if (!h.is_square() || rho0.rows() != h.rows() || !rho0.is_square()) {
    throw DimensionError("evolve_master: state and Hamiltonian dimensions differ");
  }
  require_density_matrix(rho0);
  const Generator rhs(h, collapse);

  Trajectory traj;
  traj.dims = default_dims(std::move(dims), h.rows(), "evolve_master");
  traj.kind = StateKind::mixed;
  traj.times = grid.times();
  traj.states.reserve(traj.times.size());

  const double step = grid.step();
  ComplexMatrix rho = hermitize(rho0);
  ComplexMatrix stage;
  traj.min_trace_observed = rho.trace().real();
  traj.states.push_back(rho);
  for (std::size_t s = 1; s < traj.times.size(); ++s) {
    for (std::size_t k = 0; k < grid.substeps; ++k) {
      const ComplexMatrix k1 = rhs(rho);
      axpy_into(stage, rho, step / 2.0, k1);
      const ComplexMatrix k2 = rhs(stage);
      axpy_into(stage, rho, step / 2.0, k2);
      const ComplexMatrix k3 = rhs(stage);
      axpy_into(stage, rho, step, k3);
      const ComplexMatrix k4 = rhs(stage);
      for (std::size_t i = 0; i < rho.size(); ++i) {
        rho[i] += (step / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
      }
    }
    rho = hermitize(rho);
    const double tr = rho.trace().real();
    if (!std::isfinite(tr) || std::abs(tr - 1.0) > kTraceAbortTolerance) {
      throw IntegrationError("evolve_master: trace drifted to " + std::to_string(tr) + " at t = " +
                             std::to_string(traj.times[s]) + "; reduce the step");
    }
    traj.min_trace_observed = std::min(traj.min_trace_observed, tr);
    traj.states.push_back(rho);
  }
  return traj;
}

TruncationReport check_truncation(const Trajectory& traj, double threshold) {
  TruncationReport rep;
  const bool has_field = traj.dims.count() >= 2;
  const std::size_t field_dim = has_field ? traj.dims.dims.back() : 0;
  for (const auto& s : traj.states) {
    double total = 0.0;
    double top = 0.0;
    const std::size_t n = s.rows();
    for (std::size_t i = 0; i < n; ++i) {
      const double p = traj.kind == StateKind::pure ? std::norm(s[i]) : s(i, i).real();
      total += p;
      if (has_field && i % field_dim == field_dim - 1) top += p;
    }
    rep.min_trace = std::min(rep.min_trace, total);
    rep.min_retained_weight = std::min(rep.min_retained_weight, total - top);
  }
  rep.valid = rep.min_trace >= threshold && rep.min_retained_weight >= threshold;
  return rep;
}

}  // namespace fluxswap::dynamics
