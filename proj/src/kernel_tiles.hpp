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

// Loop bodies shared by the serial and parallel kernels. Callers only
// choose how the outer index range is distributed.

#pragma once

#include <algorithm>
#include <cstddef>

#include "fluxswap/kernels.hpp"

namespace fluxswap::kernels::detail {

inline constexpr std::size_t kRowBlock = 16;
inline constexpr std::size_t kInnerBlock = 64;
inline constexpr std::size_t kColBlock = 128;

inline void check_matmul(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: inner dimensions differ");
  }
  if (out.rows() != a.rows() || out.cols() != b.cols()) {
    out = ComplexMatrix(a.rows(), b.cols());
  } else {
    std::fill(out.entries().begin(), out.entries().end(), Complex{});
  }
}

// Rows [i0, i1) of out += a * b. Entry (i, j) accumulates over k in
// ascending order regardless of blocking. Complex products are spelled
// out in real arithmetic so the compiler never emits the Annex G
// NaN-recovery call.
inline void matmul_rows(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out,
                        std::size_t i0, std::size_t i1) {
  const std::size_t inner = a.cols();
  const std::size_t n = b.cols();
  const double* ad = reinterpret_cast<const double*>(a.data());
  const double* bd = reinterpret_cast<const double*>(b.data());
  double* od = reinterpret_cast<double*>(out.data());
  for (std::size_t kk = 0; kk < inner; kk += kInnerBlock) {
    const std::size_t k_end = std::min(kk + kInnerBlock, inner);
    for (std::size_t jj = 0; jj < n; jj += kColBlock) {
      const std::size_t j_end = std::min(jj + kColBlock, n);
      for (std::size_t i = i0; i < i1; ++i) {
        double* orow = od + 2 * i * n;
        for (std::size_t k = kk; k < k_end; ++k) {
          const double ar = ad[2 * (i * inner + k)];
          const double ai = ad[2 * (i * inner + k) + 1];
          if (ar == 0.0 && ai == 0.0) continue;
          const double* brow = bd + 2 * k * n;
          for (std::size_t j = jj; j < j_end; ++j) {
            const double br = brow[2 * j];
            const double bi = brow[2 * j + 1];
            orow[2 * j] += ar * br - ai * bi;
            orow[2 * j + 1] += ar * bi + ai * br;
          }
        }
      }
    }
  }
}

inline void matvec_rows(const ComplexMatrix& m, std::span<const Complex> v, std::span<Complex> out,
                        std::size_t i0, std::size_t i1) {
  const std::size_t n = m.cols();
  const double* md = reinterpret_cast<const double*>(m.data());
  const double* vd = reinterpret_cast<const double*>(v.data());
  for (std::size_t i = i0; i < i1; ++i) {
    const double* row = md + 2 * i * n;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      re += row[2 * k] * vd[2 * k] - row[2 * k + 1] * vd[2 * k + 1];
      im += row[2 * k] * vd[2 * k + 1] + row[2 * k + 1] * vd[2 * k];
    }
    out[i] = Complex(re, im);
  }
}

// Rows [r0, r1) of a (x) b.
inline void kron_rows(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out,
                      std::size_t r0, std::size_t r1) {
  for (std::size_t ia = r0; ia < r1; ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex s = a(ia, ja);
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        Complex* dst = &out(ia * b.rows() + ib, ja * b.cols());
        const Complex* src = &b(ib, 0);
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          dst[jb] = s * src[jb];
        }
      }
    }
  }
}

// out(i, j) = -i (x(i, j) - conj(x(j, i))) for rows [i0, i1).
inline void anti_hermitian_part_rows(const ComplexMatrix& x, ComplexMatrix& out, std::size_t i0,
                                     std::size_t i1) {
  const std::size_t n = x.cols();
  for (std::size_t i = i0; i < i1; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex d = x(i, j) - std::conj(x(j, i));
      out(i, j) = Complex(d.imag(), -d.real());
    }
  }
}

inline void check_lindblad(const ComplexMatrix& rho, const ComplexMatrix& k_eff,
                           std::span<const ComplexMatrix> collapse,
                           std::span<const ComplexMatrix> collapse_adj) {
  if (!rho.is_square() || k_eff.rows() != rho.rows() || k_eff.cols() != rho.cols()) {
    throw DimensionError("lindblad_rhs: generator and state dimensions differ");
  }
  if (collapse.size() != collapse_adj.size()) {
    throw DimensionError("lindblad_rhs: collapse operator lists differ in length");
  }
  for (std::size_t k = 0; k < collapse.size(); ++k) {
    if (collapse[k].rows() != rho.rows() || collapse[k].cols() != rho.cols() ||
        collapse_adj[k].rows() != rho.rows() || collapse_adj[k].cols() != rho.cols()) {
      throw DimensionError("lindblad_rhs: collapse operator has wrong shape");
    }
  }
}

}  // namespace fluxswap::kernels::detail
