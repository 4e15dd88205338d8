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

// The Lindblad generator is linear and time independent, so one classical
// RK4 step is the fixed matrix
//
//   P = I + hL + (hL)^2/2 + (hL)^3/6 + (hL)^4/24
//
// acting on vec(rho). Powers of P advance the same fixed-step scheme over
// many steps at the cost of a few dense products, which is what makes
// lifetime-scale runs (omega_R t ~ 1e5) affordable.
//
// vec() is row-major: vec(rho)[i d + j] = rho(i, j), so
// vec(A rho B) = (A (x) B^T) vec(rho).

#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "fluxswap/dynamics.hpp"
#include "fluxswap/matrix.hpp"

namespace fluxswap::dynamics {

/// Superoperator of -i[h, .] + sum_k D[A_k] in the row-major vec convention.
ComplexMatrix liouvillian(const ComplexMatrix& h, std::span<const ComplexMatrix> collapse);

class MasterPropagator {
 public:
  MasterPropagator(const ComplexMatrix& h, std::span<const ComplexMatrix> collapse, double step);

  std::size_t dim() const noexcept { return dim_; }
  double step() const noexcept { return step_; }
  const ComplexMatrix& step_map() const noexcept { return pow2_.front(); }

  /// P^n.
  const ComplexMatrix& power(std::uint64_t n_steps);
  /// P^n applied to rho, through P^n itself when power(n) was built, else
  /// through cached binary powers. The result is re-Hermitized.
  ComplexMatrix advance(const ComplexMatrix& rho, std::uint64_t n_steps);

  /// Same sampling contract as evolve_master; the grid step must equal step().
  Trajectory evolve(const ComplexMatrix& rho0, const TimeGrid& grid, DimSpec dims = {});

  /// Fixed step count from time t0 to t1; throws if the span is not an
  /// integer multiple of the step within 1e-9 relative.
  std::uint64_t steps_between(double t0, double t1) const;

 private:
  const ComplexMatrix& pow2(std::size_t k);
  ComplexMatrix apply(const ComplexMatrix& map, const ComplexMatrix& rho) const;

  std::size_t dim_ = 0;
  double step_ = 0.0;
  std::vector<ComplexMatrix> pow2_;  // P^(2^k)
  std::map<std::uint64_t, ComplexMatrix> power_cache_;
};

}  // namespace fluxswap::dynamics
