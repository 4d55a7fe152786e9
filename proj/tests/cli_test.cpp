// Copyright 2026 The hopfadams Authors. All Rights Reserved.
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

#include <hopfadams/convolution.hpp>
#include <hopfadams/serialize.hpp>
#include <hopfadams/ssym.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hopfadams_cli/run.hpp"

using namespace hopfadams;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_in_process(cli::RunConfig cfg) {
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

cli::RunConfig config(const std::string& command) {
  cli::RunConfig cfg;
  cfg.command = command;
  cfg.use_cache = false;
  return cfg;
}

Outcome run_binary(const std::string& args) {
  const std::string cmd = std::string("\"") + HOPFADAMS_CLI_PATH + "\" " + args + " 2>/dev/null";
  Outcome o{0, {}, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("hopfadams-cli-" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("degree parsing") {
  CHECK(cli::parse_degree("3") == MultiDegree{3});
  CHECK(cli::parse_degree("[1,2]") == MultiDegree{1, 2});
  CHECK_THROWS_AS(cli::parse_degree("x"), cli::UsageError);
  CHECK(cli::parse_degree_list("1,2") == std::vector<MultiDegree>{MultiDegree{1}, MultiDegree{2}});
  CHECK(cli::parse_degree_list("[1,0],[0,1]") == std::vector<MultiDegree>{MultiDegree{1, 0}, MultiDegree{0, 1}});
}

TEST_CASE("cache keys") {
  cli::RunConfig cfg = config("build");
  cfg.bound = 5;
  CHECK(cli::cache_key(cfg) == "ssym-b5.json");
  cfg.instance = "tensor";
  cfg.generators = {MultiDegree{1}, MultiDegree{2}};
  CHECK(cli::cache_key(cfg) == "tensor-1_2-b5.json");
}

TEST_CASE("adams matrix in the T basis under the right order") {
  cli::RunConfig cfg = config("adams");
  cfg.n_values = {2};
  cfg.degree = MultiDegree{3};
  cfg.basis = "T";
  cfg.order = "precR";
  const Outcome o = run_in_process(cfg);
  CHECK(o.code == 0);
  CHECK(o.out.find("T:123 T:213 T:132 T:231 T:312 T:321") != std::string::npos);
  CHECK(o.out.find("T:213     0     2     1    -1     1     1") != std::string::npos);
}

TEST_CASE("machine-readable output agrees with the library") {
  const HopfData h = build_ssym(3);
  const ConvolutionContext ctx(h);
  const Matrix psi = adams(ctx, 2).block(3);
  cli::RunConfig cfg = config("adams");
  cfg.n_values = {2};
  cfg.degree = MultiDegree{3};
  cfg.format = "json";
  const Outcome o = run_in_process(cfg);
  REQUIRE(o.code == 0);
  const Json doc = Json::parse(o.out);
  CHECK(doc["passed"] == true);
  const Json& m = doc["sections"][0]["matrix"];
  REQUIRE(m.size() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(m[i][j].get<std::string>() == to_pq_string(psi(i, j)));

  cfg.format = "csv";
  const Outcome c = run_in_process(cfg);
  REQUIRE(c.code == 0);
  std::istringstream lines(c.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto last = line.rfind(',');
    const auto mid = line.rfind(',', last - 1);
    const auto first = line.rfind(',', mid - 1);
    const std::string r = line.substr(first + 1, mid - first - 1), col = line.substr(mid + 1, last - mid - 1);
    const std::size_t i = h.basis().local_index(h.basis().index(r));
    const std::size_t j = h.basis().local_index(h.basis().index(col));
    CHECK(parse_scalar(line.substr(last + 1)).value == psi(i, j));
    ++rows;
  }
  CHECK(rows == 36);
}

TEST_CASE("charpoly and classify") {
  cli::RunConfig cfg = config("charpoly");
  cfg.n_values = {2};
  cfg.degree = MultiDegree{3};
  const Outcome o = run_in_process(cfg);
  CHECK(o.code == 0);
  CHECK(o.out.find("MATCH") != std::string::npos);
  CHECK(o.out.find("(x-2)^2 (x-4) (x-8)") != std::string::npos);

  cli::RunConfig k = config("classify");
  k.bound = 3;
  const Outcome c = run_in_process(k);
  CHECK(c.code == 0);
  CHECK(c.out.find("213") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_in_process(config("hilbert")).code == 0);
  cli::RunConfig bad = config("adams");
  bad.degree = MultiDegree{9};
  bad.bound = 3;
  const Outcome o = run_in_process(bad);
  CHECK(o.code == 2);
  CHECK(o.err.find("exceeds the bound") != std::string::npos);
  CHECK(run_in_process(config("nonsense")).code == 2);
  cli::RunConfig basis = config("adams");
  basis.basis = "Q";
  CHECK(run_in_process(basis).code == 2);
  cli::RunConfig missing = config("adams");
  missing.instance = "/nonexistent/algebra.json";
  CHECK(run_in_process(missing).code == 2);

  // The plex PBW construction on permutations fails its coproduct condition.
  cli::RunConfig pbw = config("pbw");
  pbw.bound = 4;
  const Outcome p = run_in_process(pbw);
  CHECK(p.code == 1);
  CHECK(p.out.find("FAIL") != std::string::npos);
  pbw.letter_order = "degree";
  CHECK(run_in_process(pbw).code == 0);
}

TEST_CASE("the binary") {
  const Outcome ok = run_binary("adams --n 2 --degree 3 --no-cache");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("F:123     4     1     1     1     1     0") != std::string::npos);
  CHECK(run_binary("adams --degree 9 --bound 3 --no-cache").code == 2);
  CHECK(run_binary("").code == 2);
  CHECK(run_binary("adams --bogus").code == 2);
  CHECK(run_binary("pbw --bound 4 --no-cache").code == 1);
}

TEST_CASE("cached rebuild is bit-identical") {
  const fs::path dir = scratch_dir();
  cli::RunConfig cfg = config("build");
  cfg.bound = 4;
  cfg.use_cache = true;
  cfg.cache_dir = dir;
  REQUIRE(run_in_process(cfg).code == 0);
  const fs::path cached = dir / "ssym-b4.json";
  REQUIRE(fs::exists(cached));
  const std::string first = slurp(cached);

  cli::RunConfig fresh = config("build");
  fresh.bound = 4;
  fresh.output = dir / "fresh.json";
  REQUIRE(run_in_process(fresh).code == 0);
  CHECK(slurp(dir / "fresh.json") == first);

  fs::remove(cached);
  REQUIRE(run_in_process(cfg).code == 0);
  CHECK(slurp(cached) == first);

  cli::RunConfig use = config("adams");
  use.use_cache = true;
  use.cache_dir = dir;
  use.bound = 4;
  use.degree = MultiDegree{4};
  use.n_values = {3};
  const Outcome from_cache = run_in_process(use);
  use.use_cache = false;
  CHECK(from_cache.out == run_in_process(use).out);

  cli::RunConfig saved = config("verify");
  saved.instance = (dir / "fresh.json").string();
  saved.bound = 3;
  saved.n_values = {2};
  const Outcome v = run_in_process(saved);
  CHECK(v.code == 0);
  fs::remove_all(dir);
}
