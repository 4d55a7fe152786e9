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

#ifndef HOPFADAMS_PBW_HPP
#define HOPFADAMS_PBW_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfadams/convolution.hpp"
#include "hopfadams/hopf.hpp"
#include "hopfadams/matrix.hpp"
#include "hopfadams/report.hpp"
#include "hopfadams/sequences.hpp"
#include "hopfadams/words.hpp"

namespace hopfadams {

/// The products z_V fail to form a basis in some degree.
class NotABasis : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The family {z_V} over sorted sequences V, with per-stratum change of basis
/// to the ambient basis. Keeps a reference to the HopfData.
class PBWBasis {
 public:
  /// Expands z_V for every sorted sequence up to the bound. Throws NotABasis
  /// when a stratum's sequence count differs from its dimension or the
  /// expansion matrix is singular, and std::invalid_argument when a
  /// generator is not homogeneous of its declared degree.
  static PBWBasis build(const HopfData& h, GeneratorFamily family, unsigned bound);

  const HopfData& hopf() const { return *hopf_; }
  const GeneratorFamily& family() const { return family_; }
  unsigned bound() const { return bound_; }
  std::size_t strata() const { return sequences_.size(); }
  /// Ascending under the right sequence order.
  const std::vector<Sequence>& sequences(std::size_t stratum) const { return sequences_.at(stratum); }
  /// Column k holds z_V for V = sequences(stratum)[k] in the ambient basis.
  const Matrix& expansion(std::size_t stratum) const { return expansion_.at(stratum); }
  const Matrix& inverse(std::size_t stratum) const { return inverse_.at(stratum); }
  std::optional<std::size_t> position(std::size_t stratum, const Sequence& v) const;

  /// Product of the generators along v, in the given order (v need not be sorted).
  Element z(const Sequence& v) const;
  /// Coordinates in the z_V basis; keys are sorted sequences.
  std::map<Sequence, Scalar> decompose(const Element& a) const;

 private:
  const HopfData* hopf_ = nullptr;
  GeneratorFamily family_;
  unsigned bound_ = 0;
  std::vector<std::vector<Sequence>> sequences_;
  std::vector<Matrix> expansion_;
  std::vector<Matrix> inverse_;
};

/// Change of f into the z_V basis, stratum by stratum.
GradedMap to_pbw_basis(const PBWBasis& basis, const GradedMap& f);

struct TriangularReport {
  MultiDegree degree;
  std::vector<Sequence> order;
  Matrix matrix;
  std::vector<Scalar> diagonal;
  bool triangular = true;
  bool diagonal_matches = true;
  std::string first_violation;
  bool passed() const { return triangular && diagonal_matches; }
};

/// The matrix of f in the z_V basis ordered ascending under the right order
/// must be upper triangular with the expected diagonal. One report per
/// stratum covered by both the context and the basis.
std::vector<TriangularReport> triangular_check(const ConvolutionContext& ctx, const PBWBasis& basis,
                                               const GradedMap& f,
                                               const std::function<Scalar(const Sequence&)>& expected_diagonal);
Report summarize(const std::vector<TriangularReport>& reports, const std::string& title);

/// Coproduct support, finite heights and commutation conditions. The
/// commutation check uses the unit coefficient form and records the
/// measured coefficient of z_mu z_nu in z_nu z_mu.
Report verify_pbw_conditions(const HopfData& h, const PBWBasis& basis);

struct PBWOptions {
  /// Reject alphabets whose order is not degree-compatible.
  bool require_degree_compatible = true;
};

struct PBWLogEntry {
  MultiDegree degree;
  std::size_t words = 0;
  std::size_t kernel_dim = 0;
  std::vector<Word> reducible;
  std::vector<Word> new_generators;
};

struct PBWConstruction {
  Alphabet alphabet;
  PBWBasis basis;
  /// Defining Lyndon word of each generator, in family order.
  std::vector<Word> generator_words;
  std::vector<PBWLogEntry> log;
  std::vector<std::string> notes;
  std::string log_text() const;
};

/// The evaluation map on words over `alphabet` (letter x to images[x]) is
/// reduced degree by degree: leading words of its kernel are the reducible
/// words, the irreducible Lyndon words become generators z = image of the
/// bracketing, ordered pseudo-lexicographically. Throws std::domain_error if
/// evaluation is not onto some stratum, if a power of a generator is
/// reducible, or (unless disabled) if the alphabet is not
/// degree-compatible; NotABasis if the resulting family is not a basis.
PBWConstruction construct_pbw(const HopfData& h, const Alphabet& alphabet, const std::vector<Element>& images,
                              unsigned bound, const PBWOptions& options = {});

}  // namespace hopfadams

#endif  // HOPFADAMS_PBW_HPP
