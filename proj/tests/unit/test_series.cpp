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
#include <limits>

#include "fluxswap/series.hpp"
#include "testkit.hpp"

namespace ex = fluxswap::experiments;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<double> brute_envelope(const std::vector<double>& v, std::size_t w) {
  std::vector<double> out;
  for (std::size_t i = 0; i + w <= v.size(); ++i) {
    double m = kNaN;
    for (std::size_t k = i; k < i + w; ++k)
      if (!std::isnan(v[k]) && (std::isnan(m) || v[k] > m)) m = v[k];
    out.push_back(m);
  }
  return out;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("CSV layout") {
    ex::SeriesTable t;
    t.name = "demo";
    t.columns = {"omega_r_t", "N1", "NQQ"};
    t.add_row({0.0, 0.25, kNaN});
    t.add_row({0.5, 1.0 / 3.0, -0.0});
    CHECK(ex::to_csv(t) == "omega_r_t,N1,NQQ\n0,0.25,NaN\n0.5,0.333333333333,0\n");
    CHECK_THROWS(t.add_row({0.5, 1.0, 1.0}));
    CHECK_THROWS(t.add_row({1.0, 1.0}));
    CHECK(t.column("N1")[0] == 0.25);
    CHECK_THROWS(t.column("N9"));
  }

  TEST_CASE("envelope of a constant is the constant") {
    std::vector<double> t, v;
    for (int i = 0; i < 50; ++i) {
      t.push_back(i);
      v.push_back(0.3);
    }
    const ex::SeriesTable e = ex::envelope(t, v, 7);
    CHECK(e.rows.size() == 44);
    for (const auto& r : e.rows) CHECK(r[1] == 0.3);
    CHECK(e.rows.front()[0] == doctest::Approx(3.0));
  }

  TEST_CASE("envelope of |sin| sampled densely is close to one") {
    std::vector<double> t, v;
    for (int i = 0; i < 5000; ++i) {
      t.push_back(i * 0.01);
      v.push_back(std::abs(std::sin(t.back())));
    }
    // a window longer than one period of |sin| (pi)
    const ex::SeriesTable e = ex::envelope(t, v, 400);
    for (const auto& r : e.rows) CHECK(r[1] > 1.0 - 1e-4);
  }

  TEST_CASE("property: sliding max matches brute force, NaN skipped") {
    testkit::Rng rng(81);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = rng.index(3, 200);
      std::vector<double> t, v;
      for (std::size_t i = 0; i < n; ++i) {
        t.push_back(static_cast<double>(i));
        v.push_back(rng.uniform() < 0.1 ? kNaN : rng.uniform(-1, 1));
      }
      const std::size_t w = rng.index(3, n);
      const ex::SeriesTable e = ex::envelope(t, v, w);
      const auto ref = brute_envelope(v, w);
      REQUIRE(e.rows.size() == ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i) {
        if (std::isnan(ref[i])) {
          CHECK(std::isnan(e.rows[i][1]));
        } else {
          CHECK(e.rows[i][1] == ref[i]);
        }
      }
    }
  }

  TEST_CASE("envelope argument checks") {
    const std::vector<double> t{0, 1, 2, 3}, v{1, 2, 3, 4};
    CHECK_THROWS(ex::envelope(t, v, 2));
    CHECK_THROWS(ex::envelope(t, v, 5));
    ex::SeriesTable tab;
    tab.name = "x";
    tab.columns = {"omega_r_t", "N1"};
    for (int i = 0; i < 4; ++i) tab.add_row({double(i), double(i)});
    const ex::SeriesTable e = ex::envelope(tab, "N1", 3);
    CHECK(e.columns[1] == "N1_envelope");
    CHECK(e.rows.back()[1] == 3.0);
  }
}
