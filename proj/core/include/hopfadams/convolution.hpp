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

#ifndef HOPFADAMS_CONVOLUTION_HPP
#define HOPFADAMS_CONVOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfadams/hopf.hpp"
#include "hopfadams/matrix.hpp"
#include "hopfadams/report.hpp"

namespace hopfadams {

/// A HopfData together with the part-sum bound up to which graded maps are
/// represented. Holds a reference; the HopfData must outlive the context.
class ConvolutionContext {
 public:
  /// Throws std::invalid_argument if bound exceeds the HopfData bound.
  ConvolutionContext(const HopfData& hopf, unsigned bound);
  explicit ConvolutionContext(const HopfData& hopf) : ConvolutionContext(hopf, hopf.bound()) {}

  const HopfData& hopf() const { return *hopf_; }
  unsigned bound() const { return bound_; }
  /// Number of leading strata of the basis with part-sum at most the bound.
  std::size_t strata() const { return strata_; }

 private:
  const HopfData* hopf_;
  unsigned bound_;
  std::size_t strata_;
};

/// Degree-preserving linear map: one square matrix per stratum, columns
/// holding images of basis vectors in the stratum's basis order.
class GradedMap {
 public:
  GradedMap() = default;
  explicit GradedMap(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {}

  std::size_t strata() const { return blocks_.size(); }
  const Matrix& block(std::size_t s) const { return blocks_.at(s); }
  Matrix& block(std::size_t s) { return blocks_.at(s); }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  GradedMap& operator+=(const GradedMap& other);
  GradedMap& operator-=(const GradedMap& other);
  GradedMap& operator*=(const Scalar& s);
  friend GradedMap operator+(GradedMap a, const GradedMap& b) { return a += b; }
  friend GradedMap operator-(GradedMap a, const GradedMap& b) { return a -= b; }
  friend GradedMap operator*(GradedMap a, const Scalar& s) { return a *= s; }
  friend GradedMap operator*(const Scalar& s, GradedMap a) { return a *= s; }
  friend bool operator==(const GradedMap&, const GradedMap&) = default;

 private:
  std::vector<Matrix> blocks_;
};

/// Composition f o g, stratum by stratum.
GradedMap compose(const GradedMap& f, const GradedMap& g);
/// Image of an element; components above the map's strata raise DegreeOverflow.
Element apply(const ConvolutionContext& ctx, const GradedMap& f, const Element& a);

GradedMap identity_map(const ConvolutionContext& ctx);
/// eta o epsilon: identity on the unit, zero on positive degrees.
GradedMap unit_map(const ConvolutionContext& ctx);
GradedMap zero_map(const ConvolutionContext& ctx);

/// mu o (f (x) g) o Delta. Throws std::invalid_argument when either map does
/// not cover exactly the context's strata.
GradedMap convolve(const ConvolutionContext& ctx, const GradedMap& f, const GradedMap& g);
/// f^{*n} for n >= 0 by binary powering.
GradedMap convolution_power(const ConvolutionContext& ctx, const GradedMap& f, unsigned long n);

/// Sum over n of (eta o epsilon - id)^{*n}, truncated at the bound.
GradedMap antipode(const ConvolutionContext& ctx);
/// id^{*n} for n >= 0 and S^{*(-n)} for n < 0.
GradedMap adams(const ConvolutionContext& ctx, long n);
/// Sum over r >= 1 of (-1)^{r-1}/r (id - eta o epsilon)^{*r}.
GradedMap log_identity(const ConvolutionContext& ctx);
/// (1/n!) log(id)^{*n}.
GradedMap eulerian_idempotent(const ConvolutionContext& ctx, unsigned n);
/// e^{(0)}, ..., e^{(bound)} sharing one log computation.
std::vector<GradedMap> eulerian_idempotents(const ConvolutionContext& ctx);

/// First entry where two maps differ, e.g. "degree [3], column F:132, row
/// F:312: 2 vs 1"; nullopt when equal.
std::optional<std::string> first_difference(const ConvolutionContext& ctx, const GradedMap& a, const GradedMap& b);

Report check_eulerian_expansion(const ConvolutionContext& ctx, const std::vector<long>& n_values);
/// Completeness, idempotence and orthogonality of the Eulerian family.
/// Only expected to hold on commutative or cocommutative instances.
Report check_idempotent_system(const ConvolutionContext& ctx);

}  // namespace hopfadams

#endif  // HOPFADAMS_CONVOLUTION_HPP
