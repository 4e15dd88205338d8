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

#include "fluxswap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "fluxswap/config.hpp"
#include "fluxswap/dynamics.hpp"
#include "fluxswap/figures.hpp"
#include "fluxswap/hilbert.hpp"
#include "fluxswap/protocol.hpp"
#include "fluxswap/series.hpp"
#include "fluxswap/swap.hpp"

namespace fluxswap::experiments {

namespace {

// Ginibre G, rho = G G^dagger / tr.
ComplexMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return rho;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

struct CommonFlags {
  std::string out_dir = ".";
  std::size_t n_max = 0;
  std::size_t substeps = 0;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--out", f.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--nmax", f.n_max, "Fock cutoff for both branches")->check(CLI::PositiveNumber);
  cmd->add_option("--substeps", f.substeps, "Integrator steps between samples")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"csv"}))
      ->capture_default_str();
}

void write_table(const SeriesTable& t, const std::filesystem::path& dir, std::ostream& out) {
  const auto path = dir / (t.name + ".csv");
  write_csv_file(t, path);
  out << "wrote " << path.string() << " (" << t.rows.size() << " rows)\n";
}

void report(const std::string& label, const ProtocolDiagnostics& d, std::ostream& out) {
  out << label << ": samples " << d.samples << ", undefined " << d.undefined_points
      << ", min trace " << fmt(d.min_trace) << ", min retained weight "
      << fmt(d.min_retained_weight) << ", min eigenvalue " << fmt(d.min_eigenvalue)
      << (d.truncation_valid ? "" : "  [truncation INVALID]") << '\n';
}

int do_figure(const std::string& which, const CommonFlags& flags, bool emit_config,
              std::ostream& out, std::ostream& err) {
  std::vector<FigureId> ids;
  if (which == "all") {
    ids = all_figures();
  } else if (auto id = parse_figure_id(which)) {
    ids.push_back(*id);
  } else {
    err << "unknown figure '" << which << "' (expected fig2 ... fig8 or all)\n";
    return kExitConfigError;
  }
  FigureOverrides ov;
  if (flags.n_max) ov.n_max = flags.n_max;
  if (flags.substeps) ov.substeps = flags.substeps;
  const std::filesystem::path dir(flags.out_dir);
  std::filesystem::create_directories(dir);
  bool valid = true;
  for (FigureId id : ids) {
    if (emit_config) {
      for (const Curve& c : figure_curves(id, ov)) {
        const auto path = dir / (c.config.name + ".conf");
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        f << "# " << figure_name(id) << (c.label.empty() ? "" : " curve " + c.label) << '\n'
          << to_config_text(c.config);
        out << "wrote " << path.string() << '\n';
      }
      continue;
    }
    const FigureResult r = run_figure(id, ov);
    for (const auto& t : r.tables) write_table(t, dir, out);
    for (const auto& c : r.curves) {
      report(std::string(figure_name(id)) + (c.label.empty() ? "" : " " + c.label), c.diagnostics,
             out);
    }
    valid = valid && r.truncation_valid();
  }
  if (!valid) {
    err << "truncation check failed: retained weight below " << dynamics::kTruncationThreshold
        << "; raise --nmax\n";
    return kExitTruncationInvalid;
  }
  return kExitOk;
}

int do_run(const std::string& path, const CommonFlags& flags, std::ostream& out,
           std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config(path);
    if (flags.n_max) cfg.branch1.n_max = cfg.branch2.n_max = flags.n_max;
    if (flags.substeps) cfg.grid.substeps = flags.substeps;
    cfg.validate();
  } catch (const ConfigError& e) {
    err << e.what() << '\n';
    return kExitConfigError;
  }
  const ProtocolResult r = run_protocol(cfg);
  const std::filesystem::path dir(flags.out_dir);
  std::filesystem::create_directories(dir);
  write_table(r.table, dir, out);
  if (r.envelope) write_table(*r.envelope, dir, out);
  report(cfg.name, r.diagnostics, out);
  if (!r.diagnostics.truncation_valid) {
    err << "truncation check failed: retained weight below " << dynamics::kTruncationThreshold
        << "; raise n_max\n";
    return kExitTruncationInvalid;
  }
  return kExitOk;
}

int do_verify(std::vector<std::size_t> n_values, std::size_t samples, std::uint64_t seed,
              std::ostream& out) {
  if (n_values.empty()) n_values = {1, 2, 3};
  bool ok = true;
  for (const ChannelCheck& c : verify_channel(n_values, samples, seed)) {
    out << "n_max " << c.n_max << ": Choi dim " << c.choi_dim << ", rank " << c.choi_rank
        << ", top eigenvalue " << fmt(c.choi_top_eigenvalue) << ", min eigenvalue "
        << fmt(c.min_eigenvalue) << ", Kraus-vs-projection max deviation "
        << fmt(c.max_kraus_deviation) << " over " << c.samples << " states, |A A^dag - I4| "
        << fmt(c.kraus_identity_error) << '\n';
    ok = ok && c.choi_rank == 1 && c.min_eigenvalue >= -swap::kCpTolerance &&
         c.max_kraus_deviation <= 1e-12;
  }
  out << (ok ? "channel is completely positive with a single Kraus operator\n"
             : "channel verification FAILED\n");
  return ok ? kExitOk : kExitRuntimeError;
}

}  // namespace

std::vector<ChannelCheck> verify_channel(std::span<const std::size_t> n_max_values,
                                         std::size_t samples, std::uint64_t seed) {
  std::vector<ChannelCheck> out;
  std::mt19937_64 rng(seed);
  for (std::size_t n_max : n_max_values) {
    ChannelCheck c;
    c.n_max = n_max;
    c.samples = samples;
    const std::size_t d = n_max + 1;
    const std::size_t joint = 4 * d * d;
    if (4 * joint <= swap::kMaxChoiDim) {
      const ComplexMatrix j = swap::choi_matrix(n_max);
      c.choi_dim = j.rows();
      const auto ev = hilbert::hermitian_eigenvalues(j);
      c.choi_rank = static_cast<std::size_t>(
          std::count_if(ev.begin(), ev.end(), [](double x) { return x > swap::kCpTolerance; }));
      c.choi_top_eigenvalue = ev.back();
      c.min_eigenvalue = ev.front();
    }
    const swap::KrausOp a = swap::kraus_operator(n_max);
    const ComplexMatrix aad = a.matrix * a.matrix.adjoint();
    c.kraus_identity_error = (aad - ComplexMatrix::identity(4)).max_abs();
    const DimSpec dims = swap::joint_dims(n_max);
    for (std::size_t s = 0; s < samples; ++s) {
      const ComplexMatrix rho = random_density(joint, rng);
      const ComplexMatrix via_kraus = swap::apply_kraus(a, rho);
      const ComplexMatrix via_projection = swap::bsm_project_mixed(rho, dims).rho_qq_unnormalized;
      c.max_kraus_deviation =
          std::max(c.max_kraus_deviation, (via_kraus - via_projection).frobenius_norm());
    }
    out.push_back(c);
  }
  return out;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement swapping between flux qubits: figure data and channel checks",
               "fluxswap"};
  app.require_subcommand(1);

  CommonFlags fig_flags;
  std::string fig_id;
  bool emit_config = false;
  CLI::App* fig = app.add_subcommand("figure", "Write the data series of a figure as CSV");
  fig->add_option("id", fig_id, "fig2 ... fig8, or all")->required();
  fig->add_flag("--emit-config", emit_config, "Write the curve configs instead of running");
  add_common(fig, fig_flags);

  CommonFlags run_flags;
  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "Run an experiment described by a config file");
  run->add_option("config", config_path, "Config file")->required();
  add_common(run, run_flags);

  std::vector<std::size_t> verify_n;
  std::size_t verify_samples = 50;
  std::uint64_t verify_seed = 20260101;
  CLI::App* verify = app.add_subcommand("verify", "Check complete positivity of the swap channel");
  verify->add_option("--nmax", verify_n, "Cutoffs to check (default 1 2 3)");
  verify->add_option("--samples", verify_samples, "Random density matrices per cutoff")
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "Random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run with --help for usage\n";
    return kExitConfigError;
  }

  try {
    if (*fig) return do_figure(fig_id, fig_flags, emit_config, out, err);
    if (*run) return do_run(config_path, run_flags, out, err);
    return do_verify(verify_n, verify_samples, verify_seed, out);
  } catch (const ConfigError& e) {
    err << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace fluxswap::experiments
