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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fluxswap/cli.hpp"

namespace ex = fluxswap::experiments;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("fluxswap_cli_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ex::cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("missing config file is a config error") {
    const Run r = cli({"run", "/nonexistent/none.conf"});
    CHECK(r.code == ex::kExitConfigError);
    CHECK(r.err.find("none.conf") != std::string::npos);
  }

  TEST_CASE("malformed config reports file and line") {
    TempDir d;
    write(d.path / "bad.conf", "name = bad\ngrid.samples = lots\n");
    const Run r = cli({"run", (d.path / "bad.conf").string(), "--out", d.path.string()});
    CHECK(r.code == ex::kExitConfigError);
    CHECK(r.err.find("bad.conf:2:") != std::string::npos);
  }

  TEST_CASE("truncation failure exits with its own code") {
    TempDir d;
    write(d.path / "tiny.conf",
          "name = tiny\ngrid.t_end = 20\ngrid.samples = 21\nbranch1.n_max = 1\nbranch2.n_max = 1\n");
    const Run r = cli({"run", (d.path / "tiny.conf").string(), "--out", d.path.string()});
    CHECK(r.code == ex::kExitTruncationInvalid);
    CHECK(fs::exists(d.path / "tiny.csv"));
  }

  TEST_CASE("run writes the series and honours --nmax") {
    TempDir d;
    write(d.path / "ok.conf", "name = ok\ngrid.t_end = 5\ngrid.samples = 11\noutputs = N1, NQQ\n");
    const Run r = cli({"run", (d.path / "ok.conf").string(), "--out", d.path.string(), "--nmax", "4"});
    CHECK(r.code == ex::kExitOk);
    std::ifstream f(d.path / "ok.csv");
    std::string header;
    std::getline(f, header);
    CHECK(header == "omega_r_t,N1,NQQ");
  }

  TEST_CASE("figure writes its tables") {
    TempDir d;
    const Run r = cli({"figure", "fig4", "--out", d.path.string(), "--nmax", "6"});
    CHECK(r.code == ex::kExitOk);
    CHECK(fs::exists(d.path / "fig4_negativities.csv"));
    CHECK(fs::exists(d.path / "fig4_probabilities.csv"));
  }

  TEST_CASE("emitted configs run back through the run command") {
    TempDir d;
    REQUIRE(cli({"figure", "fig3", "--emit-config", "--out", d.path.string()}).code == ex::kExitOk);
    int seen = 0;
    for (const auto& e : fs::directory_iterator(d.path)) {
      if (e.path().extension() != ".conf") continue;
      ++seen;
      const Run r = cli({"run", e.path().string(), "--out", d.path.string(), "--nmax", "4",
                         "--substeps", "3"});
      CHECK(r.code != ex::kExitConfigError);
    }
    CHECK(seen == 3);
  }

  TEST_CASE("bad arguments") {
    CHECK(cli({"figure", "fig9"}).code == ex::kExitConfigError);
    CHECK(cli({}).code == ex::kExitConfigError);
    CHECK(cli({"figure", "fig4", "--format", "json"}).code == ex::kExitConfigError);
    CHECK(cli({"verify", "--nmax", "0"}).code != ex::kExitOk);
    CHECK(cli({"--help"}).code == ex::kExitOk);
  }

  TEST_CASE("verify reports a rank one Choi matrix") {
    const Run r = cli({"verify", "--nmax", "1", "2", "--samples", "10"});
    CHECK(r.code == ex::kExitOk);
    CHECK(r.out.find("rank 1,") != std::string::npos);
    CHECK(r.out.find("n_max 2") != std::string::npos);
  }

  TEST_CASE("verify_channel numbers") {
    const std::vector<std::size_t> n{1, 3};
    const auto checks = ex::verify_channel(n, 20, 5);
    REQUIRE(checks.size() == 2);
    for (const auto& c : checks) {
      CHECK(c.choi_rank == 1);
      CHECK(c.choi_top_eigenvalue == doctest::Approx(4.0).epsilon(1e-12));
      CHECK(c.max_kraus_deviation < 1e-12);
      CHECK(c.kraus_identity_error < 1e-12);
    }
    CHECK(checks[0].choi_dim == 64);
  }
}
