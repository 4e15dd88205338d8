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

#include "fluxswap/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <numeric>
#include <stdexcept>

#include "fluxswap/dynamics.hpp"
#include "fluxswap/hilbert.hpp"

namespace fluxswap::entanglement {

NegativityReport negativity(const ComplexMatrix& rho, const DimSpec& dims, std::size_t split,
                            TransposedBlock block) {
  if (split == 0 || split >= dims.count()) {
    throw DimensionError("negativity: split must leave both blocks non-empty");
  }
  const ComplexMatrix dm = rho.is_column() ? ComplexMatrix::projector(rho) : rho;
  dims.check(dm.rows(), "negativity");
  std::vector<std::size_t> chosen;
  if (block == TransposedBlock::second) {
    for (std::size_t s = split; s < dims.count(); ++s) chosen.push_back(s);
  } else {
    for (std::size_t s = 0; s < split; ++s) chosen.push_back(s);
  }
  // Partial transposition maps Hermitian to Hermitian; re-symmetrize so
  // rounding in the input cannot trip the eigensolver's check.
  const ComplexMatrix pt = dynamics::hermitize(hilbert::partial_transpose(dm, dims, chosen));
  NegativityReport rep;
  rep.dims = dims;
  rep.split = split;
  for (double ev : hilbert::hermitian_eigenvalues(pt, 1e-9)) {
    if (ev < -kZeroEigenvalue) rep.negative_eigenvalues.push_back(ev);
  }
  const double neg_sum =
      std::accumulate(rep.negative_eigenvalues.begin(), rep.negative_eigenvalues.end(), 0.0);
  rep.value = std::max(0.0, -neg_sum);
  return rep;
}

double negativity_value(const ComplexMatrix& rho, std::size_t d_a, std::size_t d_b) {
  return negativity(rho, DimSpec{d_a, d_b}, 1).value;
}

QqProbabilities qq_probabilities(const ComplexMatrix& state) {
  double p[4];
  if (state.is_column() && state.rows() == 4) {
    for (std::size_t i = 0; i < 4; ++i) p[i] = std::norm(state[i]);
  } else if (state.rows() == 4 && state.cols() == 4) {
    for (std::size_t i = 0; i < 4; ++i) p[i] = state(i, i).real();
  } else {
    throw DimensionError("qq_probabilities: expected a 4-vector or a 4 x 4 matrix");
  }
  const double total = p[0] + p[1] + p[2] + p[3];
  if (std::abs(total - 1.0) > 1e-6) {
    throw std::invalid_argument("qq_probabilities: state is not normalized (total " +
                                std::to_string(total) + ")");
  }
  return {p[0], p[1], p[2], p[3]};
}

}  // namespace fluxswap::entanglement
