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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fluxswap::experiments {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitTruncationInvalid = 2,
  kExitRuntimeError = 3,
};

/// One truncation's worth of swap-channel checks.
struct ChannelCheck {
  std::size_t n_max = 0;
  std::size_t choi_dim = 0;
  /// Eigenvalues above the CP tolerance.
  std::size_t choi_rank = 0;
  double choi_top_eigenvalue = 0.0;
  double min_eigenvalue = 0.0;
  /// max over random inputs of ||A rho A^dagger - projection path||_F.
  double max_kraus_deviation = 0.0;
  /// max |(A A^dagger - I_4)_ij|.
  double kraus_identity_error = 0.0;
  std::size_t samples = 0;
};

std::vector<ChannelCheck> verify_channel(std::span<const std::size_t> n_max_values,
                                         std::size_t samples, std::uint64_t seed);

/// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace fluxswap::experiments
