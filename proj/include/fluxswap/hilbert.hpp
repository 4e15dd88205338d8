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
#include <vector>

#include "fluxswap/matrix.hpp"

namespace fluxswap::hilbert {

/// Default Hermiticity tolerance for spectral routines, max |M - M^dagger|.
inline constexpr double kHermitianTolerance = 1e-12;

/// Standard Kronecker product, a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// Left fold of kron over the list.
ComplexMatrix kron(std::span<const ComplexMatrix> factors);

/// Trace out every subsystem not listed in `keep`. The kept subsystems
/// stay in their original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const DimSpec& dims,
                            std::span<const std::size_t> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho, const DimSpec& dims,
                            std::initializer_list<std::size_t> keep);

/// Transpose the indices of a single subsystem.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const DimSpec& dims,
                                std::size_t subsystem);
/// Transpose the indices of every listed subsystem.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const DimSpec& dims,
                                std::span<const std::size_t> subsystems);

/// Reorder tensor factors: factor `order[p]` of the input becomes factor
/// p of the output. Works on square operators and on column vectors.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, const DimSpec& dims,
                                 std::span<const std::size_t> order);
/// Dimensions after permute_subsystems with the same order.
DimSpec permuted_dims(const DimSpec& dims, std::span<const std::size_t> order);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  ///< ascending
  ComplexMatrix eigenvectors;       ///< columns, unitary
};

/// Spectral decomposition of a Hermitian matrix. Throws NotHermitianError
/// when max |M - M^dagger| exceeds `tolerance`.
EigenDecomposition hermitian_eig(const ComplexMatrix& m,
                                 double tolerance = kHermitianTolerance);
/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double tolerance = kHermitianTolerance);

/// exp(-i h t) for a time-independent Hermitian h, via one eigendecomposition
/// that is reused across calls.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const ComplexMatrix& h);

  std::size_t dim() const noexcept { return basis_.rows(); }
  const std::vector<double>& energies() const noexcept { return energies_; }

  /// Full unitary at time t.
  ComplexMatrix unitary(double t) const;
  /// exp(-i h t) psi without forming the unitary.
  ComplexMatrix apply(const ComplexMatrix& psi, double t) const;

 private:
  std::vector<double> energies_;
  ComplexMatrix basis_;
  ComplexMatrix basis_adj_;
};

/// U = V exp(-i Lambda t) V^dagger.
ComplexMatrix propagator(const ComplexMatrix& h, double t);

/// Computational basis vector |index> of dimension dim.
ComplexMatrix basis_vector(std::size_t dim, std::size_t index);
/// Flat index of a multi-index over `dims`, first factor most significant.
std::size_t flat_index(const DimSpec& dims, std::span<const std::size_t> digits);

}  // namespace fluxswap::hilbert
