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

#include "fluxswap/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fluxswap::experiments {

ConfigError::ConfigError(const std::string& source, std::size_t line, const std::string& msg)
    : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + msg
                                  : source + ": " + msg),
      line_(line) {}

namespace {

constexpr std::pair<Series, std::string_view> kSeriesNames[] = {
    {Series::n1, "N1"},           {Series::n2, "N2"},
    {Series::nqq, "NQQ"},         {Series::p_gg, "P_gg"},
    {Series::p_ge, "P_ge"},       {Series::p_eg, "P_eg"},
    {Series::p_ee, "P_ee"},       {Series::success_prob, "success_prob"},
    {Series::min_trace, "min_trace"},
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_plain_number(std::string_view s) {
  s = trim(s);
  if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
  double v = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (!s.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || begin == end) return std::nullopt;
  return v;
}

// Plain numbers, "inf", "pi", "<x>pi", "<x>*pi" and "pi/<x>".
std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  constexpr double pi = std::numbers::pi;
  if (s == "pi") return pi;
  if (s.starts_with("pi/")) {
    auto d = parse_plain_number(s.substr(3));
    if (!d || *d == 0.0) return std::nullopt;
    return pi / *d;
  }
  if (s.ends_with("pi")) {
    std::string_view head = trim(s.substr(0, s.size() - 2));
    if (head.ends_with('*')) head = trim(head.substr(0, head.size() - 1));
    auto x = parse_plain_number(head);
    if (!x) return std::nullopt;
    return *x * pi;
  }
  return parse_plain_number(s);
}

std::optional<std::size_t> parse_count(std::string_view s) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::optional<bool> parse_bool(std::string_view s) {
  s = trim(s);
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  return std::nullopt;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  // shortest text that parses back to the same double
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

class Parser {
 public:
  explicit Parser(const std::string& source) : source_(source) {}

  [[noreturn]] void fail(std::size_t line, const std::string& msg) const {
    throw ConfigError(source_, line, msg);
  }

  double number(std::size_t line, std::string_view key, std::string_view value) const {
    auto v = parse_number(value);
    if (!v || std::isnan(*v)) fail(line, "'" + std::string(key) + "' expects a number, got '" +
                                             std::string(value) + "'");
    return *v;
  }

  std::size_t count(std::size_t line, std::string_view key, std::string_view value) const {
    auto v = parse_count(value);
    if (!v) fail(line, "'" + std::string(key) + "' expects a non-negative integer, got '" +
                           std::string(value) + "'");
    return *v;
  }

  bool flag(std::size_t line, std::string_view key, std::string_view value) const {
    auto v = parse_bool(value);
    if (!v) fail(line, "'" + std::string(key) + "' expects true or false, got '" +
                           std::string(value) + "'");
    return *v;
  }

  void branch_key(BranchConfig& b, std::size_t line, std::string_view field, std::string_view key,
                  std::string_view value) const {
    if (field == "omega_q") {
      b.omega_q = number(line, key, value);
    } else if (field == "g_tilde") {
      b.g_tilde = number(line, key, value);
    } else if (field == "theta") {
      b.theta = number(line, key, value);
    } else if (field == "n_max") {
      b.n_max = count(line, key, value);
    } else if (field == "t_r_us") {
      b.t_r_us = number(line, key, value);
    } else if (field == "t_q_us") {
      b.t_q_us = number(line, key, value);
    } else if (field == "initial") {
      auto s = parse_initial_state(value);
      if (!s) fail(line, "'" + std::string(key) + "' expects a state like e0 or g1, got '" +
                             std::string(value) + "'");
      b.initial = *s;
    } else {
      fail(line, "unknown key '" + std::string(key) + "'");
    }
  }

 private:
  std::string source_;
};

}  // namespace

std::string_view series_name(Series s) {
  for (const auto& [id, name] : kSeriesNames) {
    if (id == s) return name;
  }
  return "?";
}

std::optional<Series> parse_series(std::string_view name) {
  name = trim(name);
  for (const auto& [id, n] : kSeriesNames) {
    if (n == name) return id;
  }
  return std::nullopt;
}

std::vector<Series> all_series() {
  std::vector<Series> out;
  for (const auto& entry : kSeriesNames) out.push_back(entry.first);
  return out;
}

std::optional<InitialState> parse_initial_state(std::string_view text) {
  text = trim(text);
  if (text.size() < 2) return std::nullopt;
  InitialState s;
  if (text[0] == 'e') {
    s.level = model::QubitLevel::excited;
  } else if (text[0] == 'g') {
    s.level = model::QubitLevel::ground;
  } else {
    return std::nullopt;
  }
  auto n = parse_count(text.substr(1));
  if (!n) return std::nullopt;
  s.photons = *n;
  return s;
}

std::string to_string(const InitialState& s) {
  return (s.level == model::QubitLevel::excited ? "e" : "g") + std::to_string(s.photons);
}

double lifetime_to_dimensionless(double microseconds, double omega_r_ghz) {
  return 2.0 * std::numbers::pi * omega_r_ghz * 1e9 * microseconds * 1e-6;
}

model::SystemParams BranchConfig::system_params(double omega_r_ghz) const {
  model::SystemParams p;
  p.omega_q = omega_q;
  p.g_tilde = g_tilde;
  p.theta = theta;
  p.n_max = n_max;
  if (t_r_us) p.t_r = lifetime_to_dimensionless(*t_r_us, omega_r_ghz);
  if (t_q_us) p.t_q = lifetime_to_dimensionless(*t_q_us, omega_r_ghz);
  return p;
}

double ExperimentConfig::sample_spacing() const {
  if (windows.enabled()) {
    return grid.n_samples < 2 ? windows.span
                              : windows.span / static_cast<double>(grid.n_samples - 1);
  }
  return grid.spacing();
}

std::vector<double> ExperimentConfig::sample_times() const {
  if (!windows.enabled()) return grid.times();
  std::vector<double> t;
  t.reserve(windows.count * grid.n_samples);
  const double gap = windows.count < 2
                         ? 0.0
                         : (grid.t_end - grid.t_start) / static_cast<double>(windows.count - 1);
  const double dt = sample_spacing();
  for (std::size_t w = 0; w < windows.count; ++w) {
    const double start = grid.t_start + static_cast<double>(w) * gap;
    for (std::size_t i = 0; i < grid.n_samples; ++i) t.push_back(start + static_cast<double>(i) * dt);
  }
  return t;
}

void ExperimentConfig::validate() const {
  auto fail = [&](const std::string& msg) { throw ConfigError(name, 0, msg); };
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  for (const BranchConfig* b : {&branch1, &branch2}) {
    const std::string which = b == &branch1 ? "branch1" : "branch2";
    try {
      b->system_params(omega_r_ghz).validate();
    } catch (const model::ModelError& e) {
      fail(which + ": " + e.what());
    }
    if (b->initial.photons > b->n_max) {
      fail(which + ": initial photon number exceeds n_max");
    }
    if (decoherence && (!b->t_r_us || !b->t_q_us)) {
      fail(which + ": decoherence needs t_r_us and t_q_us (inf disables a channel)");
    }
    if (hamiltonian == HamiltonianKind::jaynes_cummings &&
        std::abs(b->theta - std::numbers::pi / 2.0) > 1e-12) {
      fail(which + ": the jc Hamiltonian requires theta = pi/2");
    }
  }
  if (branch1.n_max != branch2.n_max) fail("both branches must share n_max");
  if (!(omega_r_ghz > 0.0) || !std::isfinite(omega_r_ghz)) fail("omega_r_ghz must be positive");
  if (outputs.empty()) fail("outputs must list at least one series");
  if (windows.enabled()) {
    if (!(windows.span > 0.0)) fail("grid.window_span must be positive");
    if (grid.n_samples < 2) fail("windowed runs need at least 2 samples per window");
    if (windows.count >= 2) {
      const double gap = (grid.t_end - grid.t_start) / static_cast<double>(windows.count - 1);
      if (!(gap > windows.span)) fail("windows overlap: spacing must exceed grid.window_span");
    }
  }
  if (envelope_window > 0) {
    const std::size_t available = grid.n_samples;
    if (envelope_window < 3) fail("envelope_window must be at least 3 samples");
    if (envelope_window > available) fail("envelope_window exceeds the samples per window");
  }
}

ExperimentConfig parse_config(std::string_view text, const std::string& source) {
  Parser p(source);
  ExperimentConfig cfg;
  cfg.name = source;
  std::optional<double> t_start, t_end, steps_per_unit;
  std::optional<std::size_t> samples, substeps;
  std::map<std::string, std::size_t> seen;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) p.fail(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) p.fail(line_no, "missing key before '='");
    if (value.empty()) p.fail(line_no, "missing value for '" + std::string(key) + "'");
    if (auto [it, fresh] = seen.emplace(std::string(key), line_no); !fresh) {
      p.fail(line_no, "duplicate key '" + std::string(key) + "' (first set on line " +
                          std::to_string(it->second) + ")");
    }

    if (key == "name") {
      cfg.name = std::string(value);
    } else if (key == "decoherence") {
      cfg.decoherence = p.flag(line_no, key, value);
    } else if (key == "hamiltonian") {
      if (value == "rabi") {
        cfg.hamiltonian = HamiltonianKind::rabi;
      } else if (value == "jc") {
        cfg.hamiltonian = HamiltonianKind::jaynes_cummings;
      } else {
        p.fail(line_no, "'hamiltonian' expects rabi or jc, got '" + std::string(value) + "'");
      }
    } else if (key == "omega_r_ghz") {
      cfg.omega_r_ghz = p.number(line_no, key, value);
    } else if (key == "envelope_window") {
      cfg.envelope_window = p.count(line_no, key, value);
    } else if (key == "outputs") {
      cfg.outputs.clear();
      std::set<Series> unique;
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = trim(rest.substr(0, comma));
        auto s = parse_series(item);
        if (!s) p.fail(line_no, "unknown output series '" + std::string(item) + "'");
        if (unique.insert(*s).second) cfg.outputs.push_back(*s);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    } else if (key == "grid.t_start") {
      t_start = p.number(line_no, key, value);
    } else if (key == "grid.t_end") {
      t_end = p.number(line_no, key, value);
    } else if (key == "grid.samples") {
      samples = p.count(line_no, key, value);
    } else if (key == "grid.substeps") {
      substeps = p.count(line_no, key, value);
    } else if (key == "grid.steps_per_unit") {
      steps_per_unit = p.number(line_no, key, value);
    } else if (key == "grid.windows") {
      cfg.windows.count = p.count(line_no, key, value);
    } else if (key == "grid.window_span") {
      cfg.windows.span = p.number(line_no, key, value);
    } else if (key.starts_with("branch1.")) {
      p.branch_key(cfg.branch1, line_no, key.substr(8), key, value);
    } else if (key.starts_with("branch2.")) {
      p.branch_key(cfg.branch2, line_no, key.substr(8), key, value);
    } else {
      p.fail(line_no, "unknown key '" + std::string(key) + "'");
    }
  }

  if (substeps && steps_per_unit) {
    p.fail(seen.at("grid.steps_per_unit"), "give either grid.substeps or grid.steps_per_unit");
  }
  cfg.grid.t_start = t_start.value_or(0.0);
  cfg.grid.t_end = t_end.value_or(100.0);
  cfg.grid.n_samples = samples.value_or(2000);
  if (substeps) {
    cfg.grid.substeps = *substeps;
  } else {
    const double density = steps_per_unit.value_or(dynamics::kDefaultStepsPerUnitTime);
    if (!(density > 0.0)) p.fail(seen.at("grid.steps_per_unit"), "steps per unit must be positive");
    cfg.grid.substeps = static_cast<std::size_t>(
        std::max(1.0, std::ceil(cfg.sample_spacing() * density - 1e-9)));
  }
  cfg.name = std::string(trim(cfg.name));
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(source, 0, e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

std::string to_config_text(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "name = " << cfg.name << '\n';
  os << "hamiltonian = " << (cfg.hamiltonian == HamiltonianKind::rabi ? "rabi" : "jc") << '\n';
  os << "decoherence = " << (cfg.decoherence ? "true" : "false") << '\n';
  os << "omega_r_ghz = " << format_number(cfg.omega_r_ghz) << '\n';
  os << "outputs = ";
  for (std::size_t i = 0; i < cfg.outputs.size(); ++i) {
    os << (i ? "," : "") << series_name(cfg.outputs[i]);
  }
  os << '\n';
  os << "envelope_window = " << cfg.envelope_window << '\n';
  os << "grid.t_start = " << format_number(cfg.grid.t_start) << '\n';
  os << "grid.t_end = " << format_number(cfg.grid.t_end) << '\n';
  os << "grid.samples = " << cfg.grid.n_samples << '\n';
  os << "grid.substeps = " << cfg.grid.substeps << '\n';
  if (cfg.windows.enabled()) {
    os << "grid.windows = " << cfg.windows.count << '\n';
    os << "grid.window_span = " << format_number(cfg.windows.span) << '\n';
  }
  for (int i = 1; i <= 2; ++i) {
    const BranchConfig& b = i == 1 ? cfg.branch1 : cfg.branch2;
    const std::string pre = "branch" + std::to_string(i) + ".";
    os << pre << "omega_q = " << format_number(b.omega_q) << '\n';
    os << pre << "g_tilde = " << format_number(b.g_tilde) << '\n';
    os << pre << "theta = " << format_number(b.theta) << '\n';
    os << pre << "n_max = " << b.n_max << '\n';
    if (b.t_r_us) os << pre << "t_r_us = " << format_number(*b.t_r_us) << '\n';
    if (b.t_q_us) os << pre << "t_q_us = " << format_number(*b.t_q_us) << '\n';
    os << pre << "initial = " << to_string(b.initial) << '\n';
  }
  return os.str();
}

}  // namespace fluxswap::experiments
