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

#ifndef HOPFADAMS_HOPF_HPP
#define HOPFADAMS_HOPF_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfadams/grading.hpp"
#include "hopfadams/matrix.hpp"
#include "hopfadams/report.hpp"
#include "hopfadams/scalar.hpp"
#include "hopfadams/words.hpp"

namespace hopfadams {

/// Global index of a basis label within a HopfData.
using BasisIndex = std::size_t;

/// Raised when a product or evaluation would leave the truncation bound.
class DegreeOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Sparse linear combination of basis vectors. Zero coefficients are never
/// stored.
class Element {
 public:
  Element() = default;
  static Element basis(BasisIndex i, const Scalar& c = Scalar(1));

  void add(BasisIndex i, const Scalar& c);
  Scalar coefficient(BasisIndex i) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<BasisIndex, Scalar>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::map<BasisIndex, Scalar> terms_;
};

struct TensorTerm {
  BasisIndex left;
  BasisIndex right;
  Scalar coeff;
  friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

/// Element of H (x) H in canonical form: sorted by (left, right), merged,
/// zero terms dropped. Equality of canonical tensors is syntactic equality.
class Tensor {
 public:
  void add(BasisIndex left, BasisIndex right, const Scalar& c);
  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(BasisIndex left, BasisIndex right) const;
  const std::map<std::pair<BasisIndex, BasisIndex>, Scalar>& terms() const { return terms_; }
  std::vector<TensorTerm> to_terms() const;
  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::map<std::pair<BasisIndex, BasisIndex>, Scalar> terms_;
};

/// One homogeneous component: its degree, labels and global index offset.
struct Stratum {
  MultiDegree degree;
  std::vector<std::string> labels;
  BasisIndex offset = 0;
  std::size_t dim() const { return labels.size(); }
};

/// Per-degree bases up to a part-sum bound, in graded order. The first
/// stratum is the zero degree and holds exactly the unit label.
class GradedBasis {
 public:
  GradedBasis() = default;
  /// Strata may be given in any order; empty strata are dropped. Throws
  /// std::invalid_argument on duplicates, rank mismatch, a missing or
  /// non-singleton degree-zero stratum, or a degree beyond the bound.
  GradedBasis(std::size_t rank, unsigned bound, std::vector<std::pair<MultiDegree, std::vector<std::string>>> strata);

  std::size_t rank() const { return rank_; }
  unsigned bound() const { return bound_; }
  std::size_t size() const { return total_; }
  const std::vector<Stratum>& strata() const { return strata_; }
  const Stratum& stratum(std::size_t s) const { return strata_.at(s); }
  std::optional<std::size_t> stratum_of_degree(const MultiDegree& d) const;
  std::size_t stratum_of(BasisIndex i) const { return stratum_index_.at(i); }
  std::size_t local_index(BasisIndex i) const { return i - strata_[stratum_of(i)].offset; }
  const MultiDegree& degree_of(BasisIndex i) const { return strata_[stratum_of(i)].degree; }
  const std::string& label(BasisIndex i) const;
  std::optional<BasisIndex> find(const std::string& label) const;
  BasisIndex index(const std::string& label) const;

  friend bool operator==(const GradedBasis& a, const GradedBasis& b) {
    return a.rank_ == b.rank_ && a.bound_ == b.bound_ && a.labels_ == b.labels_ &&
           a.degrees_ == b.degrees_;
  }

 private:
  std::size_t rank_ = 1;
  unsigned bound_ = 0;
  std::size_t total_ = 0;
  std::vector<Stratum> strata_;
  std::vector<std::size_t> stratum_index_;
  std::vector<std::string> labels_;
  std::vector<MultiDegree> degrees_;
  std::unordered_map<std::string, BasisIndex> by_label_;
};

/// A connected graded Hopf algebra given by structure constants on a
/// graded basis, truncated at a part-sum bound. Immutable once built.
///
/// Products of basis pairs whose degree sum exceeds the bound are not
/// represented; asking for them raises DegreeOverflow. The counit is
/// forced by connectedness: 1 on the unit, 0 on positive degrees.
class HopfData {
 public:
  HopfData() = default;
  explicit HopfData(GradedBasis basis);

  const GradedBasis& basis() const { return basis_; }
  unsigned bound() const { return basis_.bound(); }
  BasisIndex unit() const { return 0; }
  Scalar counit(BasisIndex i) const { return i == unit() ? Scalar(1) : Scalar(0); }

  /// Product of two basis vectors; throws DegreeOverflow beyond the bound.
  const Element& product(BasisIndex i, BasisIndex j) const;
  const Tensor& coproduct(BasisIndex i) const { return coproduct_.at(i); }

  /// Builders used while constructing an instance.
  void set_product(BasisIndex i, BasisIndex j, Element value);
  void set_coproduct(BasisIndex i, Tensor value);
  /// True when the product of i and j lies within the bound.
  bool product_in_bound(BasisIndex i, BasisIndex j) const;
  /// True when set_product was called for this in-bound pair.
  bool has_product(BasisIndex i, BasisIndex j) const;

  friend bool operator==(const HopfData&, const HopfData&) = default;

 private:
  std::size_t slot(BasisIndex i, BasisIndex j) const;

  GradedBasis basis_;
  // Stratum pair -> first slot of its block in products_, row-major within the block.
  std::vector<std::vector<std::size_t>> pair_slot_;
  std::vector<Element> products_;
  std::vector<bool> product_set_;
  std::vector<Tensor> coproduct_;
};

Element multiply(const HopfData& h, const Element& a, const Element& b);
/// Linear extension of the stored coproduct, in canonical tensor form.
Tensor comultiply(const HopfData& h, const Element& a);
/// Componentwise product in H (x) H: (a1 (x) a2)(b1 (x) b2) = a1 b1 (x) a2 b2.
Tensor multiply(const HopfData& h, const Tensor& a, const Tensor& b);

/// Commutator ab - ba.
Element commutator(const HopfData& h, const Element& a, const Element& b);

/// Image of a word under the algebra map sending letter x to images[x];
/// the empty word maps to the unit. Throws std::invalid_argument for a
/// letter without an image and DegreeOverflow beyond the bound.
Element evaluate_word(const HopfData& h, const std::vector<Element>& images, const Word& w);
/// Recursive commutator of the children; a leaf maps to its image.
Element evaluate_word(const HopfData& h, const std::vector<Element>& images, const ShirshovTree& t);

/// Degree of a nonzero homogeneous element, or nullopt if zero or mixed.
std::optional<MultiDegree> homogeneous_degree(const HopfData& h, const Element& a);

/// Coordinates of the component of `a` in stratum s, as a dense vector.
std::vector<Scalar> component(const HopfData& h, const Element& a, std::size_t stratum);
Element from_component(const HopfData& h, std::size_t stratum, std::span<const Scalar> coords);

/// Full axiom sweep over basis vectors within the bound: grading,
/// connectedness, unit, counit, associativity, coassociativity and
/// multiplicativity of the coproduct. The first violated identity is
/// reported with a witness.
Report verify_bialgebra(const HopfData& h);

/// Text rendering of an element, e.g. "F:132 + 2 F:312".
std::string to_string(const HopfData& h, const Element& a);
std::string to_string(const HopfData& h, const Tensor& t);

}  // namespace hopfadams

#endif  // HOPFADAMS_HOPF_HPP
