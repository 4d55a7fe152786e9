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

#ifndef HOPFADAMS_SERIALIZE_HPP
#define HOPFADAMS_SERIALIZE_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfadams/convolution.hpp"
#include "hopfadams/hopf.hpp"
#include "hopfadams/pbw.hpp"
#include "hopfadams/report.hpp"
#include "hopfadams/ssym.hpp"
#include "hopfadams/words.hpp"

namespace hopfadams {

using Json = nlohmann::json;

/// A JSON document does not describe valid data. `pointer()` is a JSON
/// pointer to the offending entry, e.g. "/product/12/2/0/1".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string pointer, const std::string& message);
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Keys: grading_rank, degree_bound, degrees, basis, product, coproduct,
/// unit. Degrees key the basis as "[m]" or "[a,b]". Products that vanish are
/// omitted; scalars are canonical "p/q" strings.
Json hopf_to_json(const HopfData& h);

struct LoadedHopf {
  HopfData hopf;
  /// Non-fatal findings such as fractions not in lowest terms.
  std::vector<std::string> warnings;
};

/// Inverse of hopf_to_json. Missing products within the bound are zero.
/// Throws SchemaError on any structural problem, including a degree-zero
/// stratum that is not exactly the unit and terms of the wrong degree.
LoadedHopf hopf_from_json(const Json& doc);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& doc);

/// Throws std::runtime_error if the file cannot be written or read.
void save_hopf(const HopfData& h, const std::filesystem::path& path);
LoadedHopf load_hopf(const std::filesystem::path& path);

/// {"degree": "[3]", "labels": [...], "matrix": [[row of "p/q"]...]} per
/// stratum, rows and columns in basis order.
Json graded_map_to_json(const ConvolutionContext& ctx, const GradedMap& f);
/// Generators with degrees and heights, then per degree the sorted
/// sequences with z_V in the ambient basis.
Json pbw_to_json(const PBWBasis& basis);
/// pbw_to_json plus the alphabet, each generator's defining word and the
/// construction log.
Json pbw_to_json(const PBWConstruction& construction);

/// Letter indices.
Json word_to_json(const Word& w);
/// [{"label", "degree", "rank"}] in letter index order.
Json alphabet_to_json(const Alphabet& alphabet);
/// One-line entries, e.g. [2,3,1].
Json permutation_to_json(const Permutation& p);
Json report_to_json(const Report& report);

}  // namespace hopfadams

#endif  // HOPFADAMS_SERIALIZE_HPP
