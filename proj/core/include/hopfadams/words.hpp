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

#ifndef HOPFADAMS_WORDS_HPP
#define HOPFADAMS_WORDS_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfadams/grading.hpp"

namespace hopfadams {

using Letter = std::uint32_t;

struct LetterInfo {
  std::string label;
  MultiDegree degree;
};

/// Finite graded alphabet with a strict total order on its letters.
///
/// Letters are identified by insertion index. The order is given by a rank
/// per letter (smaller rank = smaller letter); by default it is the insertion
/// order. Letters may be appended after construction, which is how
/// alphabets that grow with degree are materialized.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<LetterInfo> letters);

  /// Appends a letter ranked above all existing letters.
  Letter add(std::string label, MultiDegree degree);
  /// Replaces the order: `ranks[i]` is the rank of letter i; must be a
  /// permutation of 0..size-1.
  void set_order(std::vector<std::size_t> ranks);

  std::size_t size() const { return letters_.size(); }
  const LetterInfo& letter(Letter x) const { return letters_.at(x); }
  std::size_t rank(Letter x) const { return ranks_.at(x); }
  /// Letters from smallest to largest.
  std::vector<Letter> sorted_letters() const;

  /// deg(x1) <_Gamma deg(x2) implies x1 < x2 for all letters.
  bool is_degree_compatible() const;

 private:
  std::vector<LetterInfo> letters_;
  std::vector<std::size_t> ranks_;
};

/// Finite sequence of letters; the empty word is the identity.
using Word = std::vector<Letter>;

MultiDegree word_degree(const Alphabet& alphabet, const Word& w);

/// Pseudo-lexicographic order: a proper extension is smaller than its prefix
/// (u = v w with w nonempty gives u < v); otherwise the first differing
/// letter decides. Throws std::out_of_range for letters outside the alphabet.
std::strong_ordering pseudo_lex_compare(const Alphabet& alphabet, const Word& u, const Word& v);

/// u nonempty and w v < u for every factorization u = v w with v, w nonempty.
/// Throws std::invalid_argument for the empty word.
bool is_lyndon(const Alphabet& alphabet, const Word& u);

/// (u_L, u_R) with u_R the greatest proper suffix of u. Throws
/// std::invalid_argument when u has fewer than two letters.
std::pair<Word, Word> shirshov_factorize(const Alphabet& alphabet, const Word& u);

/// Unique factorization into Lyndon words, nondecreasing under the
/// pseudo-lexicographic order (Duval's algorithm, adapted to this order).
std::vector<Word> lyndon_factorize(const Alphabet& alphabet, const Word& u);

/// Binary bracketing of a Lyndon word along its Shirshov factorizations.
class ShirshovTree {
 public:
  static ShirshovTree leaf(Letter x);
  static ShirshovTree node(ShirshovTree left, ShirshovTree right);

  bool is_leaf() const { return !left_; }
  Letter letter() const { return letter_; }
  const ShirshovTree& left() const { return *left_; }
  const ShirshovTree& right() const { return *right_; }
  /// Left-to-right leaf word.
  Word frontier() const;
  /// e.g. "[[a,b],c]" using letter labels.
  std::string to_string(const Alphabet& alphabet) const;

 private:
  Letter letter_ = 0;
  std::shared_ptr<const ShirshovTree> left_;
  std::shared_ptr<const ShirshovTree> right_;
};

/// Throws std::invalid_argument if u is not Lyndon.
ShirshovTree bracket_tree(const Alphabet& alphabet, const Word& u);

/// All words of exactly the given degree, in ascending pseudo-lex order.
std::vector<Word> words_of_degree(const Alphabet& alphabet, const MultiDegree& degree);

std::string word_to_string(const Alphabet& alphabet, const Word& w, const std::string& sep = ".");

}  // namespace hopfadams

#endif  // HOPFADAMS_WORDS_HPP
