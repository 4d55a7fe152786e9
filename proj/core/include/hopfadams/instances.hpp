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

#ifndef HOPFADAMS_INSTANCES_HPP
#define HOPFADAMS_INSTANCES_HPP

#include <string>
#include <vector>

#include "hopfadams/grading.hpp"
#include "hopfadams/hopf.hpp"
#include "hopfadams/report.hpp"

namespace hopfadams {

enum class InstanceKind { Tensor, Shuffle };

/// Generators are named "a", "b", ... in the given order; a word's label is
/// the concatenation of its letters and the empty word is "1".
struct InstanceSpec {
  InstanceKind kind = InstanceKind::Tensor;
  std::vector<MultiDegree> generator_degrees;
  unsigned bound = 0;
};

/// Free algebra on primitive generators: concatenation product, coproduct
/// by unshuffling (cocommutative). Throws std::invalid_argument on an empty
/// generator list, a zero degree, mixed ranks or more than 26 generators.
HopfData build_tensor_hopf(const InstanceSpec& spec);
/// Shuffle product with deconcatenation coproduct (commutative).
HopfData build_shuffle_hopf(const InstanceSpec& spec);
HopfData build_instance(const InstanceSpec& spec);

/// The word bases of a tensor and a shuffle instance on the same generators
/// are dual: <ab, c> = <a (x) b, Delta c> and <Delta a, b (x) c> = <a, bc>
/// for all words within the bound.
Report check_duality(const HopfData& tensor, const HopfData& shuffle);

/// x y = y x for all basis pairs within the bound.
bool is_commutative(const HopfData& h);
/// Each coproduct is invariant under swapping the legs.
bool is_cocommutative(const HopfData& h);

}  // namespace hopfadams

#endif  // HOPFADAMS_INSTANCES_HPP
