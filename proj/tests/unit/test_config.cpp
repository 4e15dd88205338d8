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
#include <filesystem>
#include <numbers>

#include "fluxswap/config.hpp"
#include "fluxswap/figures.hpp"
#include "testkit.hpp"

namespace ex = fluxswap::experiments;
using ex::ConfigError;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    ex::parse_config(text, "t.conf");
  } catch (const ConfigError& e) {
    return e.line();
  }
  return 9999;
}

std::string error_text(const std::string& text) {
  try {
    ex::parse_config(text, "t.conf");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

ex::ExperimentConfig random_config(testkit::Rng& rng) {
  ex::ExperimentConfig c;
  c.name = "cfg" + std::to_string(rng.index(0, 1000));
  c.decoherence = rng.coin();
  c.hamiltonian = rng.coin() ? ex::HamiltonianKind::rabi : ex::HamiltonianKind::jaynes_cummings;
  c.omega_r_ghz = rng.uniform(1.0, 100.0);
  const std::size_t n_max = rng.index(1, 12);
  for (ex::BranchConfig* b : {&c.branch1, &c.branch2}) {
    b->omega_q = rng.uniform(0.5, 1.5);
    b->g_tilde = rng.uniform(0.0, 0.5);
    b->theta = c.hamiltonian == ex::HamiltonianKind::rabi ? rng.uniform(0.0, std::numbers::pi)
                                                          : std::numbers::pi / 2.0;
    b->n_max = n_max;
    if (c.decoherence || rng.coin()) {
      b->t_r_us = rng.coin() ? std::numeric_limits<double>::infinity() : rng.uniform(0.01, 5.0);
      b->t_q_us = rng.uniform(0.01, 5.0);
    }
    b->initial = {rng.coin() ? fluxswap::model::QubitLevel::excited : fluxswap::model::QubitLevel::ground,
                  rng.index(0, n_max)};
  }
  c.grid.t_start = rng.uniform(0.0, 10.0);
  c.grid.t_end = c.grid.t_start + rng.uniform(1.0, 200.0);
  c.grid.n_samples = rng.index(2, 3000);
  c.grid.substeps = rng.index(1, 50);
  if (rng.coin()) {
    c.windows.count = rng.index(2, 20);
    const double gap = (c.grid.t_end - c.grid.t_start) / static_cast<double>(c.windows.count - 1);
    c.windows.span = rng.uniform(0.01, 0.9) * gap;
  }
  c.outputs.clear();
  for (ex::Series s : ex::all_series())
    if (rng.coin()) c.outputs.push_back(s);
  if (c.outputs.empty()) c.outputs.push_back(ex::Series::nqq);
  c.envelope_window = rng.coin() ? 0 : rng.index(3, c.grid.n_samples);
  return c;
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("defaults and a minimal file") {
    const ex::ExperimentConfig c = ex::parse_config("", "empty.conf");
    CHECK(c.name == "empty.conf");
    CHECK(c.grid.t_start == 0.0);
    CHECK(c.grid.t_end == 100.0);
    CHECK(c.grid.n_samples == 2000);
    CHECK(c.grid.step() <= 1.0 / 200.0 + 1e-15);
    CHECK(c.outputs.size() == 9);
    CHECK(c.branch1.n_max == 10);
    CHECK(c.branch1.theta == std::numbers::pi / 2.0);
  }

  TEST_CASE("values, comments and number forms") {
    const std::string text =
        "\xEF\xBB\xBF# header\n"
        "name = demo   # trailing comment\n"
        "hamiltonian = jc\n"
        "outputs = NQQ, P_eg ,NQQ\n"
        "grid.t_end = 2pi\n"
        "grid.samples = 11\n"
        "grid.steps_per_unit = 10\n"
        "branch1.g_tilde = 0.03\n"
        "branch1.theta = pi/2\n"
        "branch2.theta = 0.5*pi\n"
        "branch2.initial = g1\n"
        "branch1.t_r_us = inf\n"
        "branch1.t_q_us = 1e0\n";
    const ex::ExperimentConfig c = ex::parse_config(text, "demo.conf");
    CHECK(c.name == "demo");
    CHECK(c.hamiltonian == ex::HamiltonianKind::jaynes_cummings);
    REQUIRE(c.outputs.size() == 2);
    CHECK(c.outputs[1] == ex::Series::p_eg);
    CHECK(c.grid.t_end == doctest::Approx(2.0 * std::numbers::pi));
    CHECK(c.grid.substeps == static_cast<std::size_t>(std::ceil(2.0 * std::numbers::pi / 10.0 * 10.0 - 1e-9)));
    CHECK(c.branch2.initial.level == fluxswap::model::QubitLevel::ground);
    CHECK(c.branch2.initial.photons == 1);
    CHECK(std::isinf(*c.branch1.t_r_us));
  }

  TEST_CASE("errors point at the offending line") {
    CHECK(error_line("name = a\nbogus = 1\n") == 2);
    CHECK(error_line("grid.samples = 10\n\ngrid.samples = 12\n") == 3);
    CHECK(error_line("grid.t_end = fast\n") == 1);
    CHECK(error_line("# c\nno equals sign\n") == 2);
    CHECK(error_line("branch1.initial = x3\n") == 1);
    CHECK(error_line("branch3.g_tilde = 1\n") == 1);
    CHECK(error_line("outputs = N1, N7\n") == 1);
    CHECK(error_line("decoherence = maybe\n") == 1);
    CHECK(error_line("grid.samples = -3\n") == 1);
    CHECK(error_line("grid.substeps = 3\ngrid.steps_per_unit = 5\n") == 2);
    CHECK(error_text("x = 1\n").rfind("t.conf:1:", 0) == 0);
  }

  TEST_CASE("consistency checks") {
    CHECK(error_line("branch1.initial = e11\n") == 0);
    CHECK(error_line("branch1.n_max = 4\n") == 0);
    CHECK(error_line("hamiltonian = jc\nbranch1.theta = 1\n") == 0);
    CHECK(error_line("decoherence = true\n") == 0);
    CHECK(error_line("grid.windows = 3\ngrid.window_span = 60\n") == 0);
    CHECK(error_line("grid.windows = 3\n") == 0);
    CHECK(error_line("envelope_window = 2\n") == 0);
    CHECK(error_line("envelope_window = 5000\n") == 0);
    CHECK(error_line("omega_r_ghz = 0\n") == 0);
    CHECK(error_line("grid.t_end = -1\n") == 0);
    CHECK(error_text("decoherence = true\n").find("t_r_us") != std::string::npos);
  }

  TEST_CASE("lifetime conversion") {
    CHECK(ex::lifetime_to_dimensionless(0.3, 50.0) == doctest::Approx(94247.7796).epsilon(1e-9));
    CHECK(ex::lifetime_to_dimensionless(1.0, 50.0) == doctest::Approx(314159.2654).epsilon(1e-9));
    ex::BranchConfig b;
    b.t_r_us = 0.3;
    b.t_q_us = std::numeric_limits<double>::infinity();
    const auto p = b.system_params(50.0);
    CHECK(*p.t_r == doctest::Approx(2.0 * std::numbers::pi * 50e9 * 0.3e-6));
    CHECK(std::isinf(*p.t_q));
  }

  TEST_CASE("windowed sample times") {
    ex::ExperimentConfig c = ex::parse_config(
        "grid.t_end = 100\ngrid.samples = 3\ngrid.windows = 3\ngrid.window_span = 4\n", "w");
    const std::vector<double> t = c.sample_times();
    const std::vector<double> want{0, 2, 4, 50, 52, 54, 100, 102, 104};
    REQUIRE(t.size() == want.size());
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i] == doctest::Approx(want[i]));
    CHECK(c.sample_spacing() == doctest::Approx(2.0));
  }

  TEST_CASE("property: text form round-trips") {
    testkit::Rng rng(71);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const ex::ExperimentConfig c = random_config(rng);
      try {
        c.validate();
      } catch (const ConfigError&) {
        continue;
      }
      const std::string text = ex::to_config_text(c);
      const ex::ExperimentConfig back = ex::parse_config(text, "rt");
      CHECK(back == c);
      CHECK(ex::to_config_text(back) == text);
      ++checked;
    }
    CHECK(checked > 100);
  }

  TEST_CASE("every figure curve is expressible as a config file") {
    for (ex::FigureId id : ex::all_figures()) {
      for (const ex::Curve& curve : ex::figure_curves(id)) {
        const std::string text = ex::to_config_text(curve.config);
        CHECK(ex::parse_config(text, "fig") == curve.config);
        const std::filesystem::path shipped =
            std::filesystem::path(FLUXSWAP_CONFIG_DIR) / (curve.config.name + ".conf");
        REQUIRE(std::filesystem::exists(shipped));
        CHECK(ex::load_config(shipped) == curve.config);
      }
    }
  }

  TEST_CASE("series and state names") {
    for (ex::Series s : ex::all_series()) CHECK(ex::parse_series(ex::series_name(s)) == s);
    CHECK_FALSE(ex::parse_series("N3").has_value());
    CHECK(ex::to_string(*ex::parse_initial_state("g12")) == "g12");
    CHECK_FALSE(ex::parse_initial_state("e").has_value());
    CHECK_FALSE(ex::parse_initial_state("f0").has_value());
    CHECK_THROWS_AS(ex::load_config("/nonexistent/x.conf"), ConfigError);
  }
}
