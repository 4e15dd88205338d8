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

// Per-figure experiment definitions. Each curve is an ordinary
// ExperimentConfig, so every figure can also be run from a config file.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fluxswap/config.hpp"
#include "fluxswap/protocol.hpp"
#include "fluxswap/series.hpp"

namespace fluxswap::experiments {

enum class FigureId { fig2, fig3, fig4, fig5, fig6, fig7, fig8 };

std::string_view figure_name(FigureId id);
/// "fig2" ... "fig8"; std::nullopt otherwise.
std::optional<FigureId> parse_figure_id(std::string_view text);
std::vector<FigureId> all_figures();

struct FigureOverrides {
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> substeps;
};

struct Curve {
  std::string label;
  ExperimentConfig config;
};

/// The configs behind a figure, overrides applied.
std::vector<Curve> figure_curves(FigureId id, const FigureOverrides& overrides = {});

struct CurveRun {
  std::string label;
  ProtocolDiagnostics diagnostics;
};

struct FigureResult {
  FigureId id = FigureId::fig2;
  std::vector<SeriesTable> tables;
  std::vector<CurveRun> curves;

  bool truncation_valid() const;
  const SeriesTable& table(const std::string& name) const;
};

/// Runs every curve (concurrently) and assembles the figure's tables.
FigureResult run_figure(FigureId id, const FigureOverrides& overrides = {});

}  // namespace fluxswap::experiments
