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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hopfadams_cli/run.hpp"

namespace {

struct Flags {
  std::string instance = "ssym";
  std::string generators;
  unsigned bound = 0;
  std::string degree;
  std::vector<long> n_values;
  std::string basis = "F";
  std::string order = "natural";
  std::string letter_order = "plex";
  std::vector<std::string> letters;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  std::string output;
};

void add_common(CLI::App& sub, Flags& f) {
  sub.add_option("--instance", f.instance, "ssym, tensor, shuffle, or a path to a saved algebra");
  sub.add_option("--generators", f.generators, "generator degrees of tensor/shuffle, e.g. 1,2 or [1,0],[0,1]");
  sub.add_option("--bound", f.bound, "degree bound (part-sum)");
  sub.add_option("--degree", f.degree, "degree, e.g. 3 or [1,2]");
  sub.add_option("--n", f.n_values, "integers n (or k for eulerian), comma separated")->delimiter(',');
  sub.add_option("--basis", f.basis, "F, M, T or pbw");
  sub.add_option("--order", f.order, "natural, precL or precR");
  sub.add_option("--letter-order", f.letter_order, "order on connected permutations: plex or degree");
  sub.add_option("--letters", f.letters, "basis labels used as PBW letters, smallest first")->delimiter(',');
  sub.add_option("--format", f.format, "text, json or csv");
  sub.add_option("--cache-dir", f.cache_dir, "cache directory (overrides HOPFADAMS_CACHE_DIR)");
  sub.add_flag("--no-cache", f.no_cache, "build fresh and do not touch the cache");
  sub.add_option("--output", f.output, "build: also write the algebra to this path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adams operators, PBW bases and spectra of connected graded Hopf algebras"};
  app.require_subcommand(1);
  Flags flags;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"build", "construct an algebra and store it in the cache"},
      {"verify", "bialgebra, antipode, Eulerian, spectral and PBW checks"},
      {"adams", "matrix of Psi_n on one degree"},
      {"antipode", "matrix of the antipode on one degree"},
      {"eulerian", "matrices of the Eulerian idempotents on one degree"},
      {"charpoly", "exact and predicted characteristic polynomials of Psi_n"},
      {"hilbert", "Hilbert series, primitive dimensions and multiplicities"},
      {"pbw", "construct a PBW basis from letters"},
      {"classify", "connected and Lyndon permutations and their orders"}};
  for (const auto& [name, help] : commands) add_common(*app.add_subcommand(name, help), flags);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  hopfadams::cli::RunConfig cfg;
  cfg.command = app.get_subcommands().front()->get_name();
  const CLI::App& sub = *app.get_subcommands().front();
  try {
    cfg.instance = flags.instance;
    if (!flags.generators.empty()) cfg.generators = hopfadams::cli::parse_degree_list(flags.generators);
    if (sub.count("--bound")) cfg.bound = flags.bound;
    if (!flags.degree.empty()) cfg.degree = hopfadams::cli::parse_degree(flags.degree);
  } catch (const hopfadams::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  cfg.n_values = flags.n_values;
  cfg.basis = flags.basis;
  cfg.order = flags.order;
  cfg.letter_order = flags.letter_order;
  cfg.letters = flags.letters;
  cfg.format = flags.format;
  if (!flags.cache_dir.empty()) cfg.cache_dir = flags.cache_dir;
  cfg.use_cache = !flags.no_cache;
  if (!flags.output.empty()) cfg.output = flags.output;
  return hopfadams::cli::run(cfg, std::cout, std::cerr);
}
