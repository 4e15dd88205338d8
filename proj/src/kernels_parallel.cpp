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

#include <omp.h>

#include "fluxswap/kernels.hpp"

#include "kernel_tiles.hpp"

namespace fluxswap::kernels {

namespace parallel {

void matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  detail::check_matmul(a, b, out);
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  const auto block = static_cast<std::ptrdiff_t>(detail::kRowBlock);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i0 = 0; i0 < rows; i0 += block) {
    const auto i1 = std::min(i0 + block, rows);
    detail::matmul_rows(a, b, out, static_cast<std::size_t>(i0), static_cast<std::size_t>(i1));
  }
}

void matvec(const ComplexMatrix& m, std::span<const Complex> v, std::span<Complex> out) {
  if (m.cols() != v.size() || m.rows() != out.size()) {
    throw DimensionError("matvec: shape mismatch");
  }
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i0 = 0; i0 < rows; i0 += 32) {
    const auto i1 = std::min<std::ptrdiff_t>(i0 + 32, rows);
    detail::matvec_rows(m, v, out, static_cast<std::size_t>(i0), static_cast<std::size_t>(i1));
  }
}

void kron(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  out = ComplexMatrix(a.rows() * b.rows(), a.cols() * b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    detail::kron_rows(a, b, out, static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1);
  }
}

void lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& k_eff,
                  std::span<const ComplexMatrix> collapse,
                  std::span<const ComplexMatrix> collapse_adj, ComplexMatrix& out) {
  detail::check_lindblad(rho, k_eff, collapse, collapse_adj);
  ComplexMatrix x;
  matmul(k_eff, rho, x);
  out = ComplexMatrix(rho.rows(), rho.cols());
  const auto rows = static_cast<std::ptrdiff_t>(rho.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    detail::anti_hermitian_part_rows(x, out, static_cast<std::size_t>(i),
                                     static_cast<std::size_t>(i) + 1);
  }
  ComplexMatrix y;
  ComplexMatrix z;
  for (std::size_t k = 0; k < collapse.size(); ++k) {
    matmul(collapse[k], rho, y);
    matmul(y, collapse_adj[k], z);
    out += z;
  }
}

}  // namespace parallel

namespace {

bool use_parallel(std::size_t work) {
  return work >= kParallelThreshold && omp_get_max_threads() > 1 && !omp_in_parallel();
}

}  // namespace

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out;
  if (use_parallel(a.rows() * b.cols())) {
    parallel::matmul(a, b, out);
  } else {
    serial::matmul(a, b, out);
  }
  return out;
}

std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v) {
  std::vector<Complex> out(m.rows());
  if (use_parallel(m.rows() * m.cols())) {
    parallel::matvec(m, v, out);
  } else {
    serial::matvec(m, v, out);
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out;
  if (use_parallel(a.size() * b.size())) {
    parallel::kron(a, b, out);
  } else {
    serial::kron(a, b, out);
  }
  return out;
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& k_eff,
                           std::span<const ComplexMatrix> collapse,
                           std::span<const ComplexMatrix> collapse_adj) {
  ComplexMatrix out;
  if (use_parallel(rho.size())) {
    parallel::lindblad_rhs(rho, k_eff, collapse, collapse_adj, out);
  } else {
    serial::lindblad_rhs(rho, k_eff, collapse, collapse_adj, out);
  }
  return out;
}

}  // namespace fluxswap::kernels
