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

// Experiment description and its text format.
//
// The file is UTF-8, one `key = value` per line, `#` starts a comment.
// Keys are flat with dotted sections (branch1.g_tilde). See
// docs/config-format.md for the full grammar.

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fluxswap/dynamics.hpp"
#include "fluxswap/model.hpp"

namespace fluxswap::experiments {

/// Malformed or inconsistent configuration. `line()` is 0 when the problem
/// is not tied to a single line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, std::size_t line, const std::string& msg);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class Series { n1, n2, nqq, p_gg, p_ge, p_eg, p_ee, success_prob, min_trace };

std::string_view series_name(Series s);
std::optional<Series> parse_series(std::string_view name);
std::vector<Series> all_series();

enum class HamiltonianKind { rabi, jaynes_cummings };

struct InitialState {
  model::QubitLevel level = model::QubitLevel::excited;
  std::size_t photons = 0;

  friend bool operator==(const InitialState&, const InitialState&) = default;
};

/// "e0", "g1", ...
std::optional<InitialState> parse_initial_state(std::string_view text);
std::string to_string(const InitialState& s);

/// One qubit-resonator branch. Lifetimes are physical (microseconds) and
/// converted with the experiment's resonator frequency.
struct BranchConfig {
  double omega_q = 1.0;
  double g_tilde = 0.2;
  double theta = std::numbers::pi / 2.0;
  std::size_t n_max = 10;
  std::optional<double> t_r_us;
  std::optional<double> t_q_us;
  InitialState initial;

  model::SystemParams system_params(double omega_r_ghz) const;
  friend bool operator==(const BranchConfig&, const BranchConfig&) = default;
};

/// Sparse sampling for lifetime-scale runs: `count` windows of length
/// `span` starting at evenly spaced times between grid.t_start and
/// grid.t_end, each holding grid.n_samples samples.
struct WindowSpec {
  std::size_t count = 0;
  double span = 0.0;

  bool enabled() const noexcept { return count > 0; }
  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

struct ExperimentConfig {
  std::string name = "experiment";
  BranchConfig branch1;
  BranchConfig branch2;
  dynamics::TimeGrid grid = dynamics::TimeGrid::with_step_density(0.0, 100.0, 2000);
  WindowSpec windows;
  bool decoherence = false;
  HamiltonianKind hamiltonian = HamiltonianKind::rabi;
  std::vector<Series> outputs = all_series();
  /// Samples per envelope window; 0 disables the envelope table.
  std::size_t envelope_window = 0;
  /// Resonator frequency omega_R / 2 pi in GHz.
  double omega_r_ghz = 50.0;

  /// Throws ConfigError (line 0) on inconsistent settings.
  void validate() const;
  /// Sample times of the run, window by window when windows are enabled.
  std::vector<double> sample_times() const;

  /// Spacing between consecutive samples inside one window (or the grid).
  double sample_spacing() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// omega_R T for a lifetime T in microseconds and omega_R / 2 pi in GHz.
double lifetime_to_dimensionless(double microseconds, double omega_r_ghz);

ExperimentConfig parse_config(std::string_view text, const std::string& source = "config");
ExperimentConfig load_config(const std::filesystem::path& path);
/// Text that parse_config maps back to an equal config.
std::string to_config_text(const ExperimentConfig& cfg);

}  // namespace fluxswap::experiments
