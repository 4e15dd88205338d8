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

// Dense kernels in two flavours. `serial` is the reference; `parallel`
// splits the outer loop across OpenMP threads. Each output entry is
// accumulated in the same order in both, so results agree bit for bit.

#pragma once

#include <span>

#include "fluxswap/matrix.hpp"

namespace fluxswap::kernels {

/// Operands at or above this many output entries go to the parallel path.
inline constexpr std::size_t kParallelThreshold = 64 * 64;

namespace serial {

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out);
void matvec(const ComplexMatrix& m, std::span<const Complex> v, std::span<Complex> out);
void kron(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out);
/// out = -i (K rho - (K rho)^dagger) + sum_k A_k rho A_k^dagger, with
/// K = H - (i/2) sum_k A_k^dagger A_k. rho must be Hermitian.
void lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& k_eff,
                  std::span<const ComplexMatrix> collapse,
                  std::span<const ComplexMatrix> collapse_adj, ComplexMatrix& out);

}  // namespace serial

namespace parallel {

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out);
void matvec(const ComplexMatrix& m, std::span<const Complex> v, std::span<Complex> out);
void kron(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out);
void lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& k_eff,
                  std::span<const ComplexMatrix> collapse,
                  std::span<const ComplexMatrix> collapse_adj, ComplexMatrix& out);

}  // namespace parallel

// Size-dispatching front ends.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& k_eff,
                           std::span<const ComplexMatrix> collapse,
                           std::span<const ComplexMatrix> collapse_adj);

}  // namespace fluxswap::kernels
