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

#include "fluxswap/kernels.hpp"

#include "kernel_tiles.hpp"

namespace fluxswap::kernels::serial {

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  detail::check_matmul(a, b, out);
  detail::matmul_rows(a, b, out, 0, a.rows());
}

void matvec(const ComplexMatrix& m, std::span<const Complex> v, std::span<Complex> out) {
  if (m.cols() != v.size() || m.rows() != out.size()) {
    throw DimensionError("matvec: shape mismatch");
  }
  detail::matvec_rows(m, v, out, 0, m.rows());
}

void kron(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  out = ComplexMatrix(a.rows() * b.rows(), a.cols() * b.cols());
  detail::kron_rows(a, b, out, 0, a.rows());
}

void lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& k_eff,
                  std::span<const ComplexMatrix> collapse,
                  std::span<const ComplexMatrix> collapse_adj, ComplexMatrix& out) {
  detail::check_lindblad(rho, k_eff, collapse, collapse_adj);
  ComplexMatrix x;
  matmul(k_eff, rho, x);
  out = ComplexMatrix(rho.rows(), rho.cols());
  detail::anti_hermitian_part_rows(x, out, 0, rho.rows());
  ComplexMatrix y;
  ComplexMatrix z;
  for (std::size_t k = 0; k < collapse.size(); ++k) {
    matmul(collapse[k], rho, y);
    matmul(y, collapse_adj[k], z);
    out += z;
  }
}

}  // namespace fluxswap::kernels::serial
