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

#include "fluxswap/hilbert.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "fluxswap/kernels.hpp"

namespace fluxswap::hilbert {

namespace {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Digits of every flat index, first factor most significant.
std::vector<std::vector<std::size_t>> all_digits(const DimSpec& dims) {
  const std::size_t n = dims.total();
  std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(dims.count()));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rem = i;
    for (std::size_t s = dims.count(); s-- > 0;) {
      out[i][s] = rem % dims.dims[s];
      rem /= dims.dims[s];
    }
  }
  return out;
}

void require_square(const ComplexMatrix& m, const DimSpec& dims, const char* what) {
  if (!m.is_square()) throw DimensionError(std::string(what) + ": matrix is not square");
  dims.check(m.rows(), what);
}

std::vector<std::size_t> sorted_unique(std::span<const std::size_t> idx, std::size_t count,
                                       const char* what) {
  std::vector<std::size_t> v(idx.begin(), idx.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (!v.empty() && v.back() >= count) {
    throw DimensionError(std::string(what) + ": subsystem index out of range");
  }
  return v;
}

}  // namespace

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) { return kernels::kron(a, b); }

ComplexMatrix kron(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) return ComplexMatrix::identity(1);
  ComplexMatrix acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i]);
  return acc;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const DimSpec& dims,
                            std::span<const std::size_t> keep) {
  require_square(rho, dims, "partial_trace");
  const auto kept = sorted_unique(keep, dims.count(), "partial_trace");
  std::vector<bool> is_kept(dims.count(), false);
  for (auto k : kept) is_kept[k] = true;

  // Split every flat index into (kept part, traced part).
  const auto digits = all_digits(dims);
  const std::size_t n = rho.rows();
  std::vector<std::size_t> kept_index(n);
  std::vector<std::size_t> traced_index(n);
  std::size_t kept_dim = 1;
  for (auto k : kept) kept_dim *= dims.dims[k];
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ki = 0;
    std::size_t ti = 0;
    for (std::size_t s = 0; s < dims.count(); ++s) {
      if (is_kept[s]) {
        ki = ki * dims.dims[s] + digits[i][s];
      } else {
        ti = ti * dims.dims[s] + digits[i][s];
      }
    }
    kept_index[i] = ki;
    traced_index[i] = ti;
  }

  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (traced_index[r] == traced_index[c]) {
        out(kept_index[r], kept_index[c]) += rho(r, c);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const DimSpec& dims,
                            std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, dims, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const DimSpec& dims,
                                std::size_t subsystem) {
  const std::size_t one[] = {subsystem};
  return partial_transpose(rho, dims, one);
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const DimSpec& dims,
                                std::span<const std::size_t> subsystems) {
  require_square(rho, dims, "partial_transpose");
  const auto chosen = sorted_unique(subsystems, dims.count(), "partial_transpose");
  const auto digits = all_digits(dims);
  const std::size_t n = rho.rows();
  ComplexMatrix out(n, n);
  std::vector<std::size_t> rd(dims.count());
  std::vector<std::size_t> cd(dims.count());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      rd = digits[r];
      cd = digits[c];
      for (auto s : chosen) std::swap(rd[s], cd[s]);
      out(flat_index(dims, rd), flat_index(dims, cd)) = rho(r, c);
    }
  }
  return out;
}

DimSpec permuted_dims(const DimSpec& dims, std::span<const std::size_t> order) {
  if (order.size() != dims.count()) {
    throw DimensionError("permute_subsystems: order length differs from subsystem count");
  }
  std::vector<bool> seen(dims.count(), false);
  DimSpec out;
  for (auto o : order) {
    if (o >= dims.count() || seen[o]) {
      throw DimensionError("permute_subsystems: order is not a permutation");
    }
    seen[o] = true;
    out.dims.push_back(dims.dims[o]);
  }
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, const DimSpec& dims,
                                 std::span<const std::size_t> order) {
  const DimSpec out_dims = permuted_dims(dims, order);
  dims.check(m.rows(), "permute_subsystems");
  const bool vector = m.is_column();
  if (!vector && !m.is_square()) {
    throw DimensionError("permute_subsystems: operand must be square or a column vector");
  }
  const auto digits = all_digits(dims);
  const std::size_t n = m.rows();
  std::vector<std::size_t> mapped(n);
  std::vector<std::size_t> nd(dims.count());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < order.size(); ++p) nd[p] = digits[i][order[p]];
    mapped[i] = flat_index(out_dims, nd);
  }
  if (vector) {
    ComplexMatrix out(n, 1);
    for (std::size_t i = 0; i < n; ++i) out[mapped[i]] = m[i];
    return out;
  }
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(mapped[r], mapped[c]) = m(r, c);
  }
  return out;
}

EigenDecomposition hermitian_eig(const ComplexMatrix& m, double tolerance) {
  if (!m.is_square()) throw DimensionError("hermitian_eig: matrix is not square");
  const double err = m.hermiticity_error();
  if (!(err <= tolerance)) {
    throw NotHermitianError("hermitian_eig: max |M - M^dagger| = " + std::to_string(err));
  }
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::Map<const RowMajorMatrix> view(m.data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(view);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  }
  EigenDecomposition out;
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  out.eigenvectors = ComplexMatrix(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      out.eigenvectors(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
          solver.eigenvectors()(r, c);
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double tolerance) {
  if (!m.is_square()) throw DimensionError("hermitian_eigenvalues: matrix is not square");
  const double err = m.hermiticity_error();
  if (!(err <= tolerance)) {
    throw NotHermitianError("hermitian_eigenvalues: max |M - M^dagger| = " + std::to_string(err));
  }
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::Map<const RowMajorMatrix> view(m.data(), n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(view, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
  }
  return {solver.eigenvalues().data(), solver.eigenvalues().data() + n};
}

SpectralPropagator::SpectralPropagator(const ComplexMatrix& h) {
  auto eig = hermitian_eig(h);
  energies_ = std::move(eig.eigenvalues);
  basis_ = std::move(eig.eigenvectors);
  basis_adj_ = basis_.adjoint();
}

ComplexMatrix SpectralPropagator::unitary(double t) const {
  const std::size_t n = dim();
  ComplexMatrix scaled = basis_;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      scaled(r, c) *= std::polar(1.0, -energies_[c] * t);
    }
  }
  return scaled * basis_adj_;
}

ComplexMatrix SpectralPropagator::apply(const ComplexMatrix& psi, double t) const {
  if (!psi.is_column() || psi.rows() != dim()) {
    throw DimensionError("SpectralPropagator::apply: state has wrong dimension");
  }
  auto coeffs = kernels::matvec(basis_adj_, psi.entries());
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] *= std::polar(1.0, -energies_[k] * t);
  return ComplexMatrix::column(kernels::matvec(basis_, coeffs));
}

ComplexMatrix propagator(const ComplexMatrix& h, double t) { return SpectralPropagator(h).unitary(t); }

ComplexMatrix basis_vector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("basis_vector: index out of range");
  ComplexMatrix v(dim, 1);
  v[index] = 1.0;
  return v;
}

std::size_t flat_index(const DimSpec& dims, std::span<const std::size_t> digits) {
  std::size_t idx = 0;
  for (std::size_t s = 0; s < dims.count(); ++s) idx = idx * dims.dims[s] + digits[s];
  return idx;
}

}  // namespace fluxswap::hilbert
