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

#include "fluxswap/master_propagator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fluxswap/hilbert.hpp"
#include "fluxswap/kernels.hpp"

namespace fluxswap::dynamics {

ComplexMatrix liouvillian(const ComplexMatrix& h, std::span<const ComplexMatrix> collapse) {
  if (!h.is_square()) throw DimensionError("liouvillian: Hamiltonian must be square");
  const std::size_t d = h.rows();
  const ComplexMatrix id = ComplexMatrix::identity(d);
  ComplexMatrix l = (hilbert::kron(h, id) - hilbert::kron(id, h.transpose())) * Complex(0.0, -1.0);
  for (const auto& a : collapse) {
    if (a.rows() != d || a.cols() != d) {
      throw DimensionError("liouvillian: collapse operator shape differs from Hamiltonian");
    }
    const ComplexMatrix ada = a.adjoint() * a;
    l += hilbert::kron(a, a.conj());
    l -= hilbert::kron(ada, id) * 0.5;
    l -= hilbert::kron(id, ada.transpose()) * 0.5;
  }
  return l;
}

MasterPropagator::MasterPropagator(const ComplexMatrix& h, std::span<const ComplexMatrix> collapse,
                                   double step)
    : dim_(h.rows()), step_(step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("MasterPropagator: step must be positive");
  }
  const ComplexMatrix hl = liouvillian(h, collapse) * step;
  const std::size_t n = hl.rows();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  // Horner: I + hL (I + hL/2 (I + hL/3 (I + hL/4)))
  ComplexMatrix acc = id + hl * 0.25;
  acc = id + (hl * acc) * (1.0 / 3.0);
  acc = id + (hl * acc) * 0.5;
  acc = id + hl * acc;
  pow2_.push_back(std::move(acc));
}

const ComplexMatrix& MasterPropagator::pow2(std::size_t k) {
  while (pow2_.size() <= k) {
    const ComplexMatrix& last = pow2_.back();
    pow2_.push_back(last * last);
  }
  return pow2_[k];
}

const ComplexMatrix& MasterPropagator::power(std::uint64_t n_steps) {
  if (auto it = power_cache_.find(n_steps); it != power_cache_.end()) return it->second;
  ComplexMatrix acc = ComplexMatrix::identity(dim_ * dim_);
  bool first = true;
  for (std::size_t k = 0; (n_steps >> k) != 0; ++k) {
    if ((n_steps >> k) & 1U) {
      acc = first ? pow2(k) : pow2(k) * acc;
      first = false;
    }
  }
  return power_cache_.emplace(n_steps, std::move(acc)).first->second;
}

ComplexMatrix MasterPropagator::apply(const ComplexMatrix& map, const ComplexMatrix& rho) const {
  auto v = kernels::matvec(map, rho.entries());
  return ComplexMatrix(dim_, dim_, std::move(v));
}

ComplexMatrix MasterPropagator::advance(const ComplexMatrix& rho, std::uint64_t n_steps) {
  if (rho.rows() != dim_ || !rho.is_square()) {
    throw DimensionError("MasterPropagator::advance: state has wrong dimension");
  }
  if (auto it = power_cache_.find(n_steps); it != power_cache_.end()) {
    return hermitize(apply(it->second, rho));
  }
  ComplexMatrix out = rho;
  for (std::size_t k = 0; (n_steps >> k) != 0; ++k) {
    if ((n_steps >> k) & 1U) out = apply(pow2(k), out);
  }
  return hermitize(out);
}

std::uint64_t MasterPropagator::steps_between(double t0, double t1) const {
  const double ratio = (t1 - t0) / step_;
  const double rounded = std::round(ratio);
  if (ratio < -0.5 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, std::abs(ratio))) {
    throw std::invalid_argument("MasterPropagator: time span " + std::to_string(t1 - t0) +
                                " is not a whole number of steps");
  }
  return static_cast<std::uint64_t>(rounded);
}

Trajectory MasterPropagator::evolve(const ComplexMatrix& rho0, const TimeGrid& grid, DimSpec dims) {
  grid.validate();
  if (std::abs(grid.step() - step_) > 1e-12 * step_) {
    throw std::invalid_argument("MasterPropagator::evolve: grid step differs from propagator step");
  }
  if (rho0.rows() != dim_ || !rho0.is_square()) {
    throw DimensionError("MasterPropagator::evolve: state has wrong dimension");
  }
  require_density_matrix(rho0);
  Trajectory traj;
  if (dims.count() == 0) {
    traj.dims = DimSpec{dim_};
  } else {
    dims.check(dim_, "MasterPropagator::evolve");
    traj.dims = std::move(dims);
  }
  traj.kind = StateKind::mixed;
  traj.times = grid.times();
  traj.states.reserve(traj.times.size());
  const ComplexMatrix& sample_map = power(grid.substeps);
  ComplexMatrix rho = hermitize(rho0);
  traj.min_trace_observed = rho.trace().real();
  traj.states.push_back(rho);
  for (std::size_t s = 1; s < traj.times.size(); ++s) {
    rho = hermitize(apply(sample_map, rho));
    const double tr = rho.trace().real();
    if (!std::isfinite(tr) || std::abs(tr - 1.0) > kTraceAbortTolerance) {
      throw IntegrationError("MasterPropagator: trace drifted to " + std::to_string(tr) +
                             "; reduce the step");
    }
    traj.min_trace_observed = std::min(traj.min_trace_observed, tr);
    traj.states.push_back(rho);
  }
  return traj;
}

}  // namespace fluxswap::dynamics
