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

#include "fluxswap/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "fluxswap/entanglement.hpp"
#include "fluxswap/hilbert.hpp"
#include "fluxswap/master_propagator.hpp"
#include "fluxswap/model.hpp"
#include "fluxswap/swap.hpp"

namespace fluxswap::experiments {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Parameters that fix a branch's generator; the initial state is excluded
// so two branches with equal physics share one propagator.
bool same_physics(const BranchConfig& a, const BranchConfig& b) {
  BranchConfig x = a;
  x.initial = b.initial;
  return x == b;
}

// Propagates one parameter set; shared between branches when possible.
class BranchEngine {
 public:
  BranchEngine(const ExperimentConfig& cfg, const BranchConfig& branch) : cfg_(cfg) {
    const model::SystemParams p = branch.system_params(cfg.omega_r_ghz);
    h_ = branch_hamiltonian(cfg, branch);
    dims_ = DimSpec{2, p.field_dim()};
    if (cfg.decoherence) {
      collapse_ = model::build_collapse_ops(p);
      const double step = cfg.windows.enabled()
                              ? cfg.sample_spacing() / static_cast<double>(cfg.grid.substeps)
                              : cfg.grid.step();
      master_ = std::make_unique<dynamics::MasterPropagator>(h_, collapse_, step);
    } else {
      spectral_ = std::make_unique<hilbert::SpectralPropagator>(h_);
    }
  }

  dynamics::Trajectory run(const ComplexMatrix& psi0) {
    if (!cfg_.windows.enabled()) {
      if (master_) return master_->evolve(ComplexMatrix::outer(psi0, psi0), cfg_.grid, dims_);
      return dynamics::evolve_unitary(h_, psi0, cfg_.grid, dims_);
    }
    dynamics::Trajectory traj;
    traj.dims = dims_;
    traj.times = cfg_.sample_times();
    traj.states.reserve(traj.times.size());
    if (spectral_) {
      traj.kind = dynamics::StateKind::pure;
      for (double t : traj.times) {
        traj.states.push_back(spectral_->apply(psi0, t - cfg_.grid.t_start));
        traj.min_trace_observed =
            std::min(traj.min_trace_observed, traj.states.back().frobenius_norm() *
                                                  traj.states.back().frobenius_norm());
      }
      return traj;
    }
    traj.kind = dynamics::StateKind::mixed;
    const std::size_t per_window = cfg_.grid.n_samples;
    ComplexMatrix rho = ComplexMatrix::outer(psi0, psi0);
    master_->power(cfg_.grid.substeps);
    std::uint64_t at = 0;
    for (std::size_t s = 0; s < traj.times.size(); ++s) {
      const std::size_t w = s / per_window;
      const std::size_t i = s % per_window;
      const double window_start = traj.times[w * per_window];
      const std::uint64_t target = master_->steps_between(cfg_.grid.t_start, window_start) +
                                   static_cast<std::uint64_t>(i) * cfg_.grid.substeps;
      if (target > at) rho = master_->advance(rho, target - at);
      at = target;
      const double tr = rho.trace().real();
      if (!std::isfinite(tr) || std::abs(tr - 1.0) > dynamics::kTraceAbortTolerance) {
        throw dynamics::IntegrationError("trace drifted to " + std::to_string(tr) +
                                         " at omega_R t = " + std::to_string(traj.times[s]));
      }
      traj.min_trace_observed = std::min(traj.min_trace_observed, tr);
      traj.states.push_back(rho);
    }
    return traj;
  }

 private:
  const ExperimentConfig& cfg_;
  ComplexMatrix h_;
  DimSpec dims_;
  std::vector<ComplexMatrix> collapse_;
  std::unique_ptr<hilbert::SpectralPropagator> spectral_;
  std::unique_ptr<dynamics::MasterPropagator> master_;
};

double state_trace(const ComplexMatrix& s) {
  if (s.is_column()) {
    const double n = s.frobenius_norm();
    return n * n;
  }
  return s.trace().real();
}

struct SampleValues {
  double n1 = 0.0;
  double n2 = 0.0;
  double nqq = kNaN;
  entanglement::QqProbabilities p{kNaN, kNaN, kNaN, kNaN};
  double success = 0.0;
  double min_trace = 1.0;
  double min_eigenvalue = 0.0;
  bool defined = false;
};

SampleValues evaluate(const ComplexMatrix& s1, const ComplexMatrix& s2, const DimSpec& dims) {
  SampleValues v;
  v.n1 = entanglement::negativity(s1, dims, 1).value;
  v.n2 = entanglement::negativity(s2, dims, 1).value;
  v.min_trace = std::min(state_trace(s1), state_trace(s2));
  swap::SwapOutcome out = s1.is_column() ? swap::bsm_project_pure(s1, s2)
                                         : swap::bsm_project_product(s1, s2);
  v.success = out.success_probability;
  v.defined = out.defined;
  if (out.defined) {
    v.nqq = entanglement::negativity_value(*out.rho_qq, 2, 2);
    v.p = entanglement::qq_probabilities(*out.rho_qq);
  }
  if (!s1.is_column()) {
    v.min_eigenvalue = std::min(hilbert::hermitian_eigenvalues(s1).front(),
                                hilbert::hermitian_eigenvalues(s2).front());
  }
  return v;
}

double pick(const SampleValues& v, Series s) {
  switch (s) {
    case Series::n1: return v.n1;
    case Series::n2: return v.n2;
    case Series::nqq: return v.nqq;
    case Series::p_gg: return v.p.gg;
    case Series::p_ge: return v.p.ge;
    case Series::p_eg: return v.p.eg;
    case Series::p_ee: return v.p.ee;
    case Series::success_prob: return v.success;
    case Series::min_trace: return v.min_trace;
  }
  return kNaN;
}

}  // namespace

ComplexMatrix branch_hamiltonian(const ExperimentConfig& cfg, const BranchConfig& branch) {
  const model::SystemParams p = branch.system_params(cfg.omega_r_ghz);
  return cfg.hamiltonian == HamiltonianKind::rabi ? model::build_h_qr(p) : model::build_h_jc(p);
}

ComplexMatrix branch_initial_state(const BranchConfig& branch) {
  return model::branch_state(branch.initial.level, branch.initial.photons, branch.n_max);
}

dynamics::Trajectory evolve_branch(const ExperimentConfig& cfg, const BranchConfig& branch) {
  cfg.validate();
  BranchEngine engine(cfg, branch);
  return engine.run(branch_initial_state(branch));
}

ProtocolResult run_protocol(const ExperimentConfig& cfg, const ProtocolOptions& options) {
  cfg.validate();

  dynamics::Trajectory t1;
  dynamics::Trajectory t2;
  try {
    BranchEngine e1(cfg, cfg.branch1);
    t1 = e1.run(branch_initial_state(cfg.branch1));
    if (cfg.branch2 == cfg.branch1) {
      t2 = t1;
    } else if (same_physics(cfg.branch1, cfg.branch2)) {
      t2 = e1.run(branch_initial_state(cfg.branch2));
    } else {
      BranchEngine e2(cfg, cfg.branch2);
      t2 = e2.run(branch_initial_state(cfg.branch2));
    }
  } catch (const std::invalid_argument& e) {
    // incommensurate window layout and similar setup problems
    throw ConfigError(cfg.name, 0, e.what());
  }

  const std::size_t n = t1.times.size();
  std::vector<SampleValues> values(n);
  const DimSpec dims = t1.dims;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    values[static_cast<std::size_t>(i)] =
        evaluate(t1.states[static_cast<std::size_t>(i)], t2.states[static_cast<std::size_t>(i)], dims);
  }

  ProtocolResult result;
  result.table.name = cfg.name;
  result.table.columns.push_back("omega_r_t");
  for (Series s : cfg.outputs) result.table.columns.emplace_back(series_name(s));
  result.table.rows.reserve(n);

  ProtocolDiagnostics& d = result.diagnostics;
  d.samples = n;
  d.min_eigenvalue = t1.kind == dynamics::StateKind::mixed ? 1.0 : 0.0;
  std::vector<double> nqq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SampleValues& v = values[i];
    std::vector<double> row{t1.times[i]};
    for (Series s : cfg.outputs) row.push_back(pick(v, s));
    result.table.add_row(std::move(row));
    nqq[i] = v.nqq;
    if (!v.defined) ++d.undefined_points;
    if (t1.kind == dynamics::StateKind::mixed) d.min_eigenvalue = std::min(d.min_eigenvalue, v.min_eigenvalue);
    d.max_trace_deviation =
        std::max({d.max_trace_deviation, std::abs(state_trace(t1.states[i]) - 1.0),
                  std::abs(state_trace(t2.states[i]) - 1.0)});
  }

  for (const dynamics::Trajectory* t : {&t1, &t2}) {
    const dynamics::TruncationReport r = dynamics::check_truncation(*t);
    d.min_trace = std::min(d.min_trace, r.min_trace);
    d.min_retained_weight = std::min(d.min_retained_weight, r.min_retained_weight);
    d.truncation_valid = d.truncation_valid && r.valid;
  }

  if (cfg.envelope_window > 0) {
    SeriesTable env;
    env.name = cfg.name + "_envelope";
    env.columns = {"omega_r_t", "NQQ_envelope"};
    const std::size_t block = cfg.windows.enabled() ? cfg.grid.n_samples : n;
    for (std::size_t start = 0; start < n; start += block) {
      const std::vector<double> times(t1.times.begin() + static_cast<std::ptrdiff_t>(start),
                                      t1.times.begin() + static_cast<std::ptrdiff_t>(start + block));
      const std::vector<double> vals(nqq.begin() + static_cast<std::ptrdiff_t>(start),
                                     nqq.begin() + static_cast<std::ptrdiff_t>(start + block));
      for (auto& row : envelope(times, vals, cfg.envelope_window, "NQQ").rows) env.add_row(row);
    }
    result.envelope = std::move(env);
  }

  if (options.keep_trajectories) {
    result.branch1 = std::move(t1);
    result.branch2 = std::move(t2);
  }
  return result;
}

}  // namespace fluxswap::experiments
