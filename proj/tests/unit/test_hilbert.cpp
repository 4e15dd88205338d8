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

#include <doctest.h>

#include <array>
#include <numeric>

#include "fluxswap/hilbert.hpp"
#include "testkit.hpp"

using fluxswap::Complex;
using fluxswap::ComplexMatrix;
using fluxswap::DimSpec;
namespace hilbert = fluxswap::hilbert;

namespace {

// Partial trace over the second factor, straight from the definition.
ComplexMatrix trace_second(const ComplexMatrix& rho, std::size_t da, std::size_t db) {
  ComplexMatrix out(da, da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k) out(i, j) += rho(i * db + k, j * db + k);
  return out;
}

ComplexMatrix trace_first(const ComplexMatrix& rho, std::size_t da, std::size_t db) {
  ComplexMatrix out(db, db);
  for (std::size_t k = 0; k < db; ++k)
    for (std::size_t l = 0; l < db; ++l)
      for (std::size_t i = 0; i < da; ++i) out(k, l) += rho(i * db + k, i * db + l);
  return out;
}

}  // namespace

TEST_SUITE("hilbert") {
  TEST_CASE("kron matches the definition and folds left") {
    testkit::Rng rng(21);
    const ComplexMatrix a = testkit::random_matrix(rng, 2, 3);
    const ComplexMatrix b = testkit::random_matrix(rng, 4, 2);
    const ComplexMatrix c = testkit::random_matrix(rng, 3, 3);
    CHECK(testkit::max_diff(hilbert::kron(a, b), testkit::kron2(a, b)) == 0.0);
    const std::array<ComplexMatrix, 3> f{a, b, c};
    CHECK(testkit::max_diff(hilbert::kron(f), testkit::kron2(testkit::kron2(a, b), c)) < 1e-14);
  }

  TEST_CASE("property: mixed-product rule (A x B)(C x D) = AC x BD") {
    testkit::Rng rng(22);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t m = rng.index(1, 4), n = rng.index(1, 4);
      const ComplexMatrix a = testkit::random_matrix(rng, m, m), c = testkit::random_matrix(rng, m, m);
      const ComplexMatrix b = testkit::random_matrix(rng, n, n), d = testkit::random_matrix(rng, n, n);
      const ComplexMatrix lhs = hilbert::kron(a, b) * hilbert::kron(c, d);
      CHECK(testkit::max_diff(lhs, hilbert::kron(a * c, b * d)) < 1e-12);
    }
  }

  TEST_CASE("partial trace against loop oracles") {
    testkit::Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t da = rng.index(1, 4), db = rng.index(1, 5);
      const ComplexMatrix rho = testkit::random_density(rng, da * db);
      const DimSpec dims{da, db};
      CHECK(testkit::max_diff(hilbert::partial_trace(rho, dims, {0}), trace_second(rho, da, db)) < 1e-13);
      CHECK(testkit::max_diff(hilbert::partial_trace(rho, dims, {1}), trace_first(rho, da, db)) < 1e-13);
    }
  }

  TEST_CASE("property: tracing a product state returns the kept factor") {
    testkit::Rng rng(24);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t d0 = rng.index(1, 3), d1 = rng.index(1, 3), d2 = rng.index(1, 3);
      const ComplexMatrix r0 = testkit::random_density(rng, d0);
      const ComplexMatrix r1 = testkit::random_density(rng, d1);
      const ComplexMatrix r2 = testkit::random_density(rng, d2);
      const ComplexMatrix joint = testkit::kron2(testkit::kron2(r0, r1), r2);
      const DimSpec dims{d0, d1, d2};
      CHECK(testkit::max_diff(hilbert::partial_trace(joint, dims, {1}), r1) < 1e-13);
      CHECK(testkit::max_diff(hilbert::partial_trace(joint, dims, {0, 2}), testkit::kron2(r0, r2)) < 1e-13);
      CHECK(testkit::max_diff(hilbert::partial_trace(joint, dims, {0, 1, 2}), joint) == 0.0);
      CHECK(std::abs(hilbert::partial_trace(joint, dims, std::span<const std::size_t>{})(0, 0) - 1.0) < 1e-13);
    }
  }

  TEST_CASE("partial trace rejects bad inputs") {
    const ComplexMatrix rho = ComplexMatrix::identity(6);
    CHECK_THROWS_AS(hilbert::partial_trace(rho, DimSpec{2, 2}, {0}), fluxswap::DimensionError);
    CHECK_THROWS(hilbert::partial_trace(rho, DimSpec{2, 3}, {2}));
    // repeated indices collapse to one
    CHECK(hilbert::partial_trace(rho, DimSpec{2, 3}, {1, 1}) == hilbert::partial_trace(rho, DimSpec{2, 3}, {1}));
  }

  TEST_CASE("partial transpose against the loop oracle and as an involution") {
    testkit::Rng rng(25);
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t da = rng.index(1, 4), db = rng.index(1, 4);
      const ComplexMatrix rho = testkit::random_matrix(rng, da * db, da * db);
      const DimSpec dims{da, db};
      const ComplexMatrix pt = hilbert::partial_transpose(rho, dims, 1);
      CHECK(testkit::max_diff(pt, testkit::pt_second(rho, da, db)) == 0.0);
      CHECK(testkit::max_diff(hilbert::partial_transpose(pt, dims, 1), rho) == 0.0);
      const std::array<std::size_t, 2> both{0, 1};
      CHECK(testkit::max_diff(hilbert::partial_transpose(rho, dims, both), rho.transpose()) == 0.0);
    }
  }

  TEST_CASE("permute subsystems") {
    testkit::Rng rng(26);
    const ComplexMatrix a = testkit::random_density(rng, 2);
    const ComplexMatrix b = testkit::random_density(rng, 3);
    const ComplexMatrix c = testkit::random_density(rng, 2);
    const DimSpec dims{2, 3, 2};
    const std::array<std::size_t, 3> order{2, 0, 1};
    const ComplexMatrix joint = testkit::kron2(testkit::kron2(a, b), c);
    const ComplexMatrix perm = hilbert::permute_subsystems(joint, dims, order);
    CHECK(testkit::max_diff(perm, testkit::kron2(testkit::kron2(c, a), b)) < 1e-15);
    CHECK(hilbert::permuted_dims(dims, order) == DimSpec{2, 2, 3});

    const ComplexMatrix va = testkit::random_state(rng, 2), vb = testkit::random_state(rng, 3),
                        vc = testkit::random_state(rng, 2);
    const ComplexMatrix pv = hilbert::permute_subsystems(
        testkit::kron2(testkit::kron2(va, vb), vc), dims, order);
    CHECK(testkit::max_diff(pv, testkit::kron2(testkit::kron2(vc, va), vb)) < 1e-15);

    // order then inverse order is the identity
    const std::array<std::size_t, 3> inverse{1, 2, 0};
    const ComplexMatrix back = hilbert::permute_subsystems(perm, DimSpec{2, 2, 3}, inverse);
    CHECK(testkit::max_diff(back, joint) == 0.0);
    const std::array<std::size_t, 3> bad{0, 0, 1};
    CHECK_THROWS(hilbert::permute_subsystems(joint, dims, bad));
  }

  TEST_CASE("hermitian eigendecomposition") {
    testkit::Rng rng(27);
    for (std::size_t n : {1u, 2u, 5u, 22u}) {
      const ComplexMatrix h = testkit::random_hermitian(rng, n);
      const auto e = hilbert::hermitian_eig(h);
      for (std::size_t i = 1; i < n; ++i) CHECK(e.eigenvalues[i - 1] <= e.eigenvalues[i]);
      const ComplexMatrix& v = e.eigenvectors;
      std::vector<Complex> diag(e.eigenvalues.begin(), e.eigenvalues.end());
      const ComplexMatrix rebuilt = testkit::mul(testkit::mul(v, ComplexMatrix::diagonal(diag)), testkit::dagger(v));
      CHECK(testkit::max_diff(rebuilt, h) < 1e-12);
      CHECK(testkit::max_diff(testkit::mul(testkit::dagger(v), v), testkit::eye(n)) < 1e-12);
      double tr = 0.0;
      for (double x : e.eigenvalues) tr += x;
      CHECK(tr == doctest::Approx(h.trace().real()).epsilon(1e-12));
    }
    ComplexMatrix nh{{1.0, 2.0}, {0.0, 1.0}};
    CHECK_THROWS_AS(hilbert::hermitian_eig(nh), fluxswap::NotHermitianError);
  }

  TEST_CASE("spectral propagator against a Taylor-series exponential") {
    testkit::Rng rng(28);
    const ComplexMatrix h = testkit::random_hermitian(rng, 6);
    const hilbert::SpectralPropagator prop(h);
    for (double t : {0.0, 0.3, 2.5, -1.7}) {
      const ComplexMatrix ref = testkit::expm_taylor(h, t);
      CHECK(testkit::max_diff(prop.unitary(t), ref) < 1e-11);
      CHECK(testkit::max_diff(hilbert::propagator(h, t), ref) < 1e-11);
      const ComplexMatrix psi = testkit::random_state(rng, 6);
      CHECK(testkit::max_diff(prop.apply(psi, t), testkit::mul(ref, psi)) < 1e-11);
    }
  }

  TEST_CASE("basis vectors and flat indices") {
    const ComplexMatrix e = hilbert::basis_vector(4, 2);
    CHECK(e(2, 0) == Complex(1.0));
    CHECK(e.frobenius_norm() == 1.0);
    const std::array<std::size_t, 3> digits{1, 2, 0};
    CHECK(hilbert::flat_index(DimSpec{2, 3, 2}, digits) == 1 * 6 + 2 * 2 + 0);
    CHECK_THROWS(hilbert::basis_vector(3, 3));
  }
}
