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

#include "fluxswap/figures.hpp"

#include <exception>
#include <numbers>
#include <stdexcept>

namespace fluxswap::experiments {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::pair<FigureId, std::string_view> kFigureNames[] = {
    {FigureId::fig2, "fig2"}, {FigureId::fig3, "fig3"}, {FigureId::fig4, "fig4"},
    {FigureId::fig5, "fig5"}, {FigureId::fig6, "fig6"}, {FigureId::fig7, "fig7"},
    {FigureId::fig8, "fig8"},
};

const InitialState kE0{model::QubitLevel::excited, 0};
const InitialState kG1{model::QubitLevel::ground, 1};

ExperimentConfig base(const std::string& name, InitialState i1, InitialState i2) {
  ExperimentConfig c;
  c.name = name;
  c.branch1.initial = i1;
  c.branch2.initial = i2;
  return c;
}

void with_lifetimes(ExperimentConfig& c) {
  c.decoherence = true;
  for (BranchConfig* b : {&c.branch1, &c.branch2}) {
    b->t_r_us = 0.3;
    b->t_q_us = 1.0;
  }
}

std::vector<Curve> build(FigureId id) {
  std::vector<Curve> out;
  switch (id) {
    case FigureId::fig2:
      for (auto [label, g] : {std::pair{"g0.1", 0.1}, {"g0.2", 0.2}, {"g0.4", 0.4}}) {
        ExperimentConfig c = base(std::string("fig2_") + label, kE0, kE0);
        c.branch1.g_tilde = c.branch2.g_tilde = g;
        c.outputs = {Series::n1};
        out.push_back({label, c});
      }
      break;
    case FigureId::fig3:
      for (auto [label, th] : {std::pair{"theta_pi_8", kPi / 8.0}, {"theta_pi_4", kPi / 4.0},
                               {"theta_pi_2", kPi / 2.0}}) {
        ExperimentConfig c = base(std::string("fig3_") + label, kE0, kE0);
        c.branch1.theta = c.branch2.theta = th;
        c.outputs = {Series::n1};
        out.push_back({label, c});
      }
      break;
    case FigureId::fig4:
      out.push_back({"", base("fig4", kE0, kG1)});
      break;
    case FigureId::fig5: {
      ExperimentConfig c = base("fig5", kE0, kE0);
      c.branch2.g_tilde = 0.202;
      out.push_back({"", c});
      break;
    }
    case FigureId::fig6:
    case FigureId::fig7: {
      const bool six = id == FigureId::fig6;
      const std::string fig = six ? "fig6" : "fig7";
      ExperimentConfig a = base(fig + "_A", kE0, six ? kG1 : kE0);
      with_lifetimes(a);
      a.outputs = {Series::nqq, Series::success_prob};
      ExperimentConfig b = base(fig + "_B", kE0, six ? kG1 : kE0);
      b.outputs = a.outputs;
      out.push_back({"A", a});
      out.push_back({"B", b});
      break;
    }
    case FigureId::fig8:
      for (auto [label, i2] : {std::pair{"e0g1", kG1}, {"e0e0", kE0}}) {
        ExperimentConfig c = base(std::string("fig8_") + label, kE0, i2);
        with_lifetimes(c);
        c.grid.t_start = 0.0;
        c.grid.t_end = 1.2e5;
        c.grid.n_samples = 401;
        c.grid.substeps = 20;
        c.windows = {13, 40.0};
        c.envelope_window = 401;
        c.outputs = {Series::nqq, Series::success_prob};
        out.push_back({label, c});
      }
      break;
  }
  return out;
}

// Columns of `src` (after the time) appended to `dst`, renamed with `suffix`.
void merge_columns(SeriesTable& dst, const SeriesTable& src, const std::vector<std::string>& names,
                   const std::string& suffix) {
  if (dst.rows.empty()) {
    dst.columns = {"omega_r_t"};
    for (const auto& r : src.rows) dst.rows.push_back({r.front()});
  }
  if (dst.rows.size() != src.rows.size()) throw std::logic_error("curves disagree on sample times");
  for (const auto& n : names) {
    const std::size_t idx = src.column_index(n);
    dst.columns.push_back(suffix.empty() ? n : n + "_" + suffix);
    for (std::size_t i = 0; i < src.rows.size(); ++i) dst.rows[i].push_back(src.rows[i][idx]);
  }
}

}  // namespace

std::string_view figure_name(FigureId id) {
  for (const auto& [f, n] : kFigureNames) {
    if (f == id) return n;
  }
  return "?";
}

std::optional<FigureId> parse_figure_id(std::string_view text) {
  for (const auto& [f, n] : kFigureNames) {
    if (n == text) return f;
  }
  return std::nullopt;
}

std::vector<FigureId> all_figures() {
  std::vector<FigureId> out;
  for (const auto& entry : kFigureNames) out.push_back(entry.first);
  return out;
}

std::vector<Curve> figure_curves(FigureId id, const FigureOverrides& overrides) {
  std::vector<Curve> curves = build(id);
  for (Curve& c : curves) {
    if (overrides.n_max) c.config.branch1.n_max = c.config.branch2.n_max = *overrides.n_max;
    if (overrides.substeps) c.config.grid.substeps = *overrides.substeps;
    c.config.validate();
  }
  return curves;
}

bool FigureResult::truncation_valid() const {
  for (const auto& c : curves) {
    if (!c.diagnostics.truncation_valid) return false;
  }
  return true;
}

const SeriesTable& FigureResult::table(const std::string& name) const {
  for (const auto& t : tables) {
    if (t.name == name) return t;
  }
  throw std::out_of_range("figure has no table '" + name + "'");
}

FigureResult run_figure(FigureId id, const FigureOverrides& overrides) {
  const std::vector<Curve> curves = figure_curves(id, overrides);
  std::vector<ProtocolResult> runs(curves.size());
  std::vector<std::exception_ptr> errors(curves.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(curves.size()); ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      runs[k] = run_protocol(curves[k].config);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  FigureResult fr;
  fr.id = id;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    fr.curves.push_back({curves[i].label, runs[i].diagnostics});
  }
  const std::string fig(figure_name(id));
  switch (id) {
    case FigureId::fig2:
    case FigureId::fig3: {
      SeriesTable t;
      t.name = fig + "_negativities";
      for (std::size_t i = 0; i < curves.size(); ++i) {
        merge_columns(t, runs[i].table, {"N1"}, curves[i].label);
      }
      fr.tables.push_back(std::move(t));
      break;
    }
    case FigureId::fig4:
    case FigureId::fig5: {
      SeriesTable neg;
      neg.name = fig + "_negativities";
      merge_columns(neg, runs[0].table, {"N1", "N2", "NQQ"}, "");
      SeriesTable prob;
      prob.name = fig + "_probabilities";
      merge_columns(prob, runs[0].table, {"P_gg", "P_ge", "P_eg", "P_ee", "success_prob"}, "");
      fr.tables.push_back(std::move(neg));
      fr.tables.push_back(std::move(prob));
      break;
    }
    case FigureId::fig6:
    case FigureId::fig7: {
      SeriesTable t;
      t.name = fig + "_negativity";
      for (std::size_t i = 0; i < curves.size(); ++i) {
        merge_columns(t, runs[i].table, {"NQQ"}, curves[i].label);
      }
      fr.tables.push_back(std::move(t));
      break;
    }
    case FigureId::fig8: {
      SeriesTable env;
      env.name = fig + "_envelope";
      SeriesTable samples;
      samples.name = fig + "_samples";
      for (std::size_t i = 0; i < curves.size(); ++i) {
        merge_columns(env, *runs[i].envelope, {"NQQ_envelope"}, curves[i].label);
        merge_columns(samples, runs[i].table, {"NQQ", "success_prob"}, curves[i].label);
      }
      fr.tables.push_back(std::move(env));
      fr.tables.push_back(std::move(samples));
      break;
    }
  }
  return fr;
}

}  // namespace fluxswap::experiments
