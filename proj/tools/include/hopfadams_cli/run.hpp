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

#ifndef HOPFADAMS_CLI_RUN_HPP
#define HOPFADAMS_CLI_RUN_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfadams/grading.hpp"

namespace hopfadams::cli {

/// Bad flags, unknown selectors, unreadable or malformed input. Exit status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  /// build, verify, adams, antipode, eulerian, charpoly, hilbert, pbw, classify.
  std::string command;
  /// ssym, tensor, shuffle, or a path to a saved algebra.
  std::string instance = "ssym";
  /// Generator degrees of the tensor and shuffle instances; empty means {1, 2}.
  std::vector<MultiDegree> generators;
  std::optional<unsigned> bound;
  std::optional<MultiDegree> degree;
  std::vector<long> n_values;
  /// F, M, T or pbw.
  std::string basis = "F";
  /// natural, precL or precR.
  std::string order = "natural";
  /// plex or degree: the order on connected permutations used as letters.
  std::string letter_order = "plex";
  /// Basis labels to use as letters in `pbw`; empty selects a default set.
  std::vector<std::string> letters;
  /// text, json or csv.
  std::string format = "text";
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;
  std::optional<std::filesystem::path> output;
};

/// Runs one command. Returns 0 when everything checked passes, 1 when a
/// verification fails, 2 on a usage or input error (reported on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// "3" or "[1,2]".
MultiDegree parse_degree(const std::string& text);
/// "1,2" for rank one, or "[1,0],[0,1]".
std::vector<MultiDegree> parse_degree_list(const std::string& text);

/// HOPFADAMS_CACHE_DIR when set, else $XDG_CACHE_HOME/hopfadams, else
/// ~/.cache/hopfadams, else ./.hopfadams-cache.
std::filesystem::path default_cache_dir();
/// File name of the cached algebra for a built-in instance, e.g.
/// "ssym-b5.json" or "tensor-1_2-b5.json".
std::string cache_key(const RunConfig& config);

}  // namespace hopfadams::cli

#endif  // HOPFADAMS_CLI_RUN_HPP
