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

// Serial reference kernels against their OpenMP counterparts.
//
//   ./bench_kernels --benchmark_filter=matmul
//   OMP_NUM_THREADS=4 ./bench_kernels

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fluxswap/kernels.hpp"
#include "fluxswap/model.hpp"

namespace {

using fluxswap::Complex;
using fluxswap::ComplexMatrix;
namespace kernels = fluxswap::kernels;

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (auto& x : m.entries()) x = Complex(u(rng), u(rng));
  return m;
}

ComplexMatrix random_density(std::size_t dim, unsigned seed) {
  ComplexMatrix g = random_matrix(dim, dim, seed);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return rho;
}

template <auto Kernel>
void bm_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = random_matrix(n, n, 1);
  const ComplexMatrix b = random_matrix(n, n, 2);
  ComplexMatrix out(n, n);
  for (auto _ : state) {
    Kernel(a, b, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

template <auto Kernel>
void bm_matvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix m = random_matrix(n, n, 3);
  const ComplexMatrix v = random_matrix(n, 1, 4);
  std::vector<Complex> out(n);
  for (auto _ : state) {
    Kernel(m, v.entries(), out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Kernel>
void bm_kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ComplexMatrix a = random_matrix(n, n, 5);
  const ComplexMatrix b = random_matrix(n, n, 6);
  ComplexMatrix out(n * n, n * n);
  for (auto _ : state) {
    Kernel(a, b, out);
    benchmark::DoNotOptimize(out.data());
  }
}

// Branch generator at cutoff n_max, the shape the integrator sees.
template <auto Kernel>
void bm_lindblad(benchmark::State& state) {
  fluxswap::model::SystemParams p;
  p.g_tilde = 0.2;
  p.n_max = static_cast<std::size_t>(state.range(0));
  p.t_r = 50.0;
  p.t_q = 100.0;
  const ComplexMatrix h = fluxswap::model::build_h_qr(p);
  const auto collapse = fluxswap::model::build_collapse_ops(p);
  std::vector<ComplexMatrix> adj;
  ComplexMatrix k_eff = h;
  for (const auto& a : collapse) {
    adj.push_back(a.adjoint());
    k_eff -= Complex(0.0, 0.5) * (adj.back() * a);
  }
  const ComplexMatrix rho = random_density(h.rows(), 7);
  ComplexMatrix out(h.rows(), h.rows());
  for (auto _ : state) {
    Kernel(rho, k_eff, collapse, adj, out);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(bm_matmul<kernels::serial::matmul>)->Name("matmul/serial")->Arg(64)->Arg(128)->Arg(256)->Arg(484);
BENCHMARK(bm_matmul<kernels::parallel::matmul>)->Name("matmul/parallel")->Arg(64)->Arg(128)->Arg(256)->Arg(484);
BENCHMARK(bm_matvec<kernels::serial::matvec>)->Name("matvec/serial")->Arg(484)->Arg(1024);
BENCHMARK(bm_matvec<kernels::parallel::matvec>)->Name("matvec/parallel")->Arg(484)->Arg(1024);
BENCHMARK(bm_kron<kernels::serial::kron>)->Name("kron/serial")->Arg(8)->Arg(22);
BENCHMARK(bm_kron<kernels::parallel::kron>)->Name("kron/parallel")->Arg(8)->Arg(22);
BENCHMARK(bm_lindblad<kernels::serial::lindblad_rhs>)->Name("lindblad_rhs/serial")->Arg(10)->Arg(40);
BENCHMARK(bm_lindblad<kernels::parallel::lindblad_rhs>)->Name("lindblad_rhs/parallel")->Arg(10)->Arg(40);

BENCHMARK_MAIN();
