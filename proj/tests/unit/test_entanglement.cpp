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

#include <cmath>

#include "fluxswap/entanglement.hpp"
#include "testkit.hpp"

using fluxswap::Complex;
using fluxswap::ComplexMatrix;
using fluxswap::DimSpec;
namespace ent = fluxswap::entanglement;

namespace {

ComplexMatrix singlet() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::column({0.0, s, -s, 0.0});
}

ComplexMatrix werner(double p) {
  return p * testkit::outer_of(singlet()) + (1.0 - p) * 0.25 * ComplexMatrix::identity(4);
}

}  // namespace

TEST_SUITE("entanglement") {
  TEST_CASE("anchors") {
    CHECK(std::abs(ent::negativity_value(testkit::outer_of(singlet()), 2, 2) - 0.5) <= 1e-12);
    const auto r = ent::negativity(singlet(), DimSpec{2, 2}, 1);
    CHECK(std::abs(r.value - 0.5) <= 1e-12);
    REQUIRE(r.negative_eigenvalues.size() == 1);
    CHECK(r.negative_eigenvalues[0] == doctest::Approx(-0.5));
    CHECK(r.split == 1);
    for (double p : {0.0, 1.0 / 3.0, 0.5, 1.0})
      CHECK(std::abs(ent::negativity_value(werner(p), 2, 2) - std::max(0.0, (3 * p - 1) / 4)) <= 1e-10);
  }

  TEST_CASE("property: product states have zero negativity") {
    testkit::Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t da = rng.index(2, 4), db = rng.index(2, 5);
      const ComplexMatrix rho = testkit::kron2(testkit::random_density(rng, da), testkit::random_density(rng, db));
      const auto r = ent::negativity(rho, DimSpec{da, db}, 1);
      CHECK(r.value <= 1e-10);
      CHECK(r.negative_eigenvalues.empty());
    }
  }

  TEST_CASE("property: local unitaries leave negativity unchanged") {
    testkit::Rng rng(62);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t da = 2, db = rng.index(2, 5);
      const ComplexMatrix rho = testkit::random_density(rng, da * db, rng.index(1, 2));
      const ComplexMatrix u = testkit::kron2(testkit::random_unitary(rng, da), testkit::random_unitary(rng, db));
      const ComplexMatrix rot = testkit::mul(testkit::mul(u, rho), testkit::dagger(u));
      CHECK(ent::negativity_value(rot, da, db) == doctest::Approx(ent::negativity_value(rho, da, db)).epsilon(1e-10));
    }
  }

  TEST_CASE("property: transposing either block gives the same value") {
    testkit::Rng rng(63);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t da = rng.index(2, 3), db = rng.index(2, 4);
      const ComplexMatrix rho = testkit::random_density(rng, da * db, rng.index(1, 3));
      const DimSpec dims{da, db};
      const double a = ent::negativity(rho, dims, 1, ent::TransposedBlock::first).value;
      const double b = ent::negativity(rho, dims, 1, ent::TransposedBlock::second).value;
      CHECK(std::abs(a - b) < 1e-10);
    }
  }

  TEST_CASE("property: pure states against Schmidt oracles") {
    testkit::Rng rng(64);
    for (int trial = 0; trial < 30; ++trial) {
      const ComplexMatrix qq = testkit::random_state(rng, 4);
      CHECK(ent::negativity_value(qq, 2, 2) == doctest::Approx(testkit::pure_qq_negativity(qq)).epsilon(1e-10));
      const std::size_t d = rng.index(2, 8);
      const ComplexMatrix qf = testkit::random_state(rng, 2 * d);
      CHECK(ent::negativity(qf, DimSpec{2, d}, 1).value ==
            doctest::Approx(testkit::pure_qubit_field_negativity(qf, d)).epsilon(1e-10));
    }
  }

  TEST_CASE("alpha|ge> + beta|eg> has N = |alpha||beta|") {
    testkit::Rng rng(65);
    for (int trial = 0; trial < 20; ++trial) {
      const double a = rng.uniform(0.0, 1.0);
      const double b = std::sqrt(1.0 - a * a);
      const Complex phase = std::polar(1.0, rng.uniform(0.0, 6.28));
      const ComplexMatrix s = ComplexMatrix::column({0.0, a, b * phase, 0.0});
      CHECK(ent::negativity_value(s, 2, 2) == doctest::Approx(a * b).epsilon(1e-10));
      const auto p = ent::qq_probabilities(s);
      CHECK(p.ge == doctest::Approx(a * a));
      CHECK(p.eg == doctest::Approx(b * b));
    }
    const double h = 1.0 / std::sqrt(2.0);
    const ComplexMatrix max = ComplexMatrix::column({0.0, h, h, 0.0});
    CHECK(ent::negativity_value(max, 2, 2) == doctest::Approx(0.5));
  }

  TEST_CASE("multi-factor bipartitions") {
    // singlet between factors 0 and 2 of a three-qubit state with a spectator in the middle
    ComplexMatrix psi(8, 1);
    const double s = 1.0 / std::sqrt(2.0);
    psi(0 * 4 + 0 * 2 + 1, 0) = s;   // |0 0 1>
    psi(1 * 4 + 0 * 2 + 0, 0) = -s;  // |1 0 0>
    CHECK(ent::negativity(psi, DimSpec{2, 2, 2}, 1).value == doctest::Approx(0.5));
    CHECK(ent::negativity(psi, DimSpec{2, 2, 2}, 2).value == doctest::Approx(0.5));
    CHECK_THROWS_AS(ent::negativity(psi, DimSpec{2, 2, 2}, 0), fluxswap::DimensionError);
    CHECK_THROWS_AS(ent::negativity(psi, DimSpec{2, 2, 2}, 3), fluxswap::DimensionError);
    CHECK_THROWS_AS(ent::negativity(psi, DimSpec{2, 3}, 1), fluxswap::DimensionError);
  }

  TEST_CASE("two-qubit probabilities") {
    const auto eg = ent::qq_probabilities(ComplexMatrix::column({0.0, 0.0, 1.0, 0.0}));
    CHECK(eg.eg == 1.0);
    CHECK(eg.gg + eg.ge + eg.ee == 0.0);
    const double h = 1.0 / std::sqrt(2.0);
    const auto sym = ent::qq_probabilities(ComplexMatrix::column({0.0, h, h, 0.0}));
    CHECK(sym.ge == doctest::Approx(0.5));
    CHECK(sym.eg == doctest::Approx(0.5));
    testkit::Rng rng(66);
    for (int trial = 0; trial < 10; ++trial)
      CHECK(std::abs(ent::qq_probabilities(testkit::random_density(rng, 4)).sum() - 1.0) <= 1e-10);
    CHECK_THROWS(ent::qq_probabilities(ComplexMatrix::column({1.0, 1.0, 0.0, 0.0})));
    CHECK_THROWS(ent::qq_probabilities(ComplexMatrix::identity(3)));
  }
}
