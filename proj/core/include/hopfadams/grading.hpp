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

#ifndef HOPFADAMS_GRADING_HPP
#define HOPFADAMS_GRADING_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hopfadams {

/// Element of the grading monoid N^k. The rank k is fixed per algebra.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<unsigned> parts);
  MultiDegree(std::initializer_list<unsigned> parts);

  static MultiDegree zero(std::size_t rank);
  /// The degree m in N^1.
  static MultiDegree scalar(unsigned m) { return MultiDegree{m}; }

  std::size_t rank() const { return parts_.size(); }
  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned operator[](std::size_t i) const { return parts_[i]; }
  unsigned total() const;
  bool is_zero() const;

  MultiDegree& operator+=(const MultiDegree& other);
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }

  /// `a - b` when b <= a componentwise, otherwise nullopt.
  friend std::optional<MultiDegree> subtract(const MultiDegree& a, const MultiDegree& b);
  /// Componentwise a <= b.
  friend bool divides(const MultiDegree& a, const MultiDegree& b);

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;

  std::string to_string() const;

 private:
  std::vector<unsigned> parts_;
};

std::ostream& operator<<(std::ostream& os, const MultiDegree& d);

/// N(gamma): the largest r such that gamma is a sum of r nonzero degrees.
/// On N^k this is the part-sum.
unsigned max_parts(const MultiDegree& degree);

/// Graded-lexicographic comparison: part-sum first, then lexicographic on
/// parts. Throws std::invalid_argument on rank mismatch.
std::strong_ordering graded_compare(const MultiDegree& a, const MultiDegree& b);

/// Strict weak ordering adaptor for graded_compare, for use in std::map.
struct GradedLess {
  bool operator()(const MultiDegree& a, const MultiDegree& b) const {
    return graded_compare(a, b) < 0;
  }
};

/// All degrees of the given rank with part-sum <= bound, in graded order.
std::vector<MultiDegree> degrees_up_to(std::size_t rank, unsigned bound);

}  // namespace hopfadams

#endif  // HOPFADAMS_GRADING_HPP
