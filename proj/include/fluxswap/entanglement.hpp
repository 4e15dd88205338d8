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

#include <vector>

#include "fluxswap/matrix.hpp"

namespace fluxswap::entanglement {

/// Partial-transpose eigenvalues with magnitude below this count as zero.
inline constexpr double kZeroEigenvalue = 1e-12;

enum class TransposedBlock { first, second };

struct NegativityReport {
  double value = 0.0;
  std::vector<double> negative_eigenvalues;
  DimSpec dims;
  std::size_t split = 0;
};

/// max(0, -sum of negative eigenvalues of rho^{T_B}), where the bipartition
/// puts subsystems [0, split) in A and [split, n) in B. Column vectors are
/// accepted and treated as pure states.
NegativityReport negativity(const ComplexMatrix& rho, const DimSpec& dims, std::size_t split,
                            TransposedBlock block = TransposedBlock::second);

/// Two-factor shorthand: dims {d_a, d_b}, split 1.
double negativity_value(const ComplexMatrix& rho, std::size_t d_a, std::size_t d_b);

struct QqProbabilities {
  double gg = 0.0;
  double ge = 0.0;
  double eg = 0.0;
  double ee = 0.0;

  double sum() const noexcept { return gg + ge + eg + ee; }
};

/// Diagonal of a normalized two-qubit state (4-vector or 4 x 4 matrix) in
/// the gg, ge, eg, ee basis. Throws std::invalid_argument when the input
/// deviates from unit trace by more than 1e-6.
QqProbabilities qq_probabilities(const ComplexMatrix& state);

}  // namespace fluxswap::entanglement
