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

#ifndef HOPFADAMS_SSYM_HPP
#define HOPFADAMS_SSYM_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hopfadams/hopf.hpp"
#include "hopfadams/matrix.hpp"
#include "hopfadams/sequences.hpp"
#include "hopfadams/words.hpp"

namespace hopfadams {

/// Permutation in one-line notation over {1, ..., m}; the empty one is the
/// identity for the direct sum.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless the entries are a permutation of 1..m.
  explicit Permutation(std::vector<unsigned> one_line);
  /// "231", or comma separated ("10,1,2,...") for ten or more letters. The
  /// empty string is the empty permutation.
  static Permutation parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  unsigned operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<unsigned>& entries() const { return entries_; }
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on one-line words, for ordered containers; unrelated to prec.
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<unsigned> entries_;
};

/// All permutations of size m in lexicographic order.
std::vector<Permutation> permutations_of(unsigned m);
/// Position of p in permutations_of(p.size()).
std::size_t lex_rank(const Permutation& p);

Permutation direct_sum(const Permutation& a, const Permutation& b);
/// Order-preserving relabeling of distinct values onto 1..n.
Permutation standardize(std::span<const unsigned> values);
Permutation inverse(const Permutation& p);

bool is_connected(const Permutation& p);
/// Maximal splitting p = p1 x ... x pr into connected permutations.
std::vector<Permutation> connected_split(const Permutation& p);
/// p1 x ... x pr.
Permutation join(const std::vector<Permutation>& parts);

enum class PermOrder { Prec, PrecL, PrecR };

/// Pseudo-lexicographic order on one-line words over the positive integers.
std::strong_ordering prec_compare(const Permutation& a, const Permutation& b);

/// Order on connected permutations used as letters. DegreeFirst compares
/// sizes before prec, which makes the letter order degree-compatible.
enum class LetterOrder { PseudoLex, DegreeFirst };

std::strong_ordering letter_compare(LetterOrder order, const Permutation& a, const Permutation& b);
/// Pseudo-lexicographic order on connected splittings over the letter
/// order. Agrees with prec_compare under PseudoLex.
std::strong_ordering phi_compare(LetterOrder order, const Permutation& a, const Permutation& b);

struct PermClass {
  bool connected = false;
  bool lyndon = false;
  /// The Lyndon decomposition, nondecreasing under prec.
  std::vector<Permutation> factors;
  std::size_t length() const { return factors.size(); }
};

PermClass classify(const Permutation& p, LetterOrder letters = LetterOrder::PseudoLex);

/// Prec is phi_compare; PrecL and PrecR compare Lyndon decompositions.
std::strong_ordering perm_compare(PermOrder order, const Permutation& a, const Permutation& b,
                                  LetterOrder letters = LetterOrder::PseudoLex);
/// Permutations of size m sorted ascending under the given order.
std::vector<Permutation> sorted_permutations(unsigned m, PermOrder order,
                                             LetterOrder letters = LetterOrder::PseudoLex);

/// Label of F_p in the built algebra, e.g. "F:231"; the unit is "1".
std::string f_label(const Permutation& p);

/// The shifted shuffles of a and b (b's values raised by the size of a), in
/// lexicographic order.
std::vector<Permutation> shifted_shuffles(const Permutation& a, const Permutation& b);
/// Deconcatenate and standardize: pairs (std(prefix), std(suffix)).
std::vector<std::pair<Permutation, Permutation>> deconcatenations(const Permutation& p);

/// The algebra of permutations in the fundamental basis, sizes 0..bound,
/// permutations of each size in lexicographic order.
HopfData build_ssym(unsigned bound);

BasisIndex f_index(const HopfData& h, const Permutation& p);
Element f_product(const HopfData& h, const Permutation& a, const Permutation& b);
Tensor f_coproduct(const HopfData& h, const Permutation& p);

enum class WeakSide { Left, Right };
enum class ZetaDirection { Up, Down };

/// u <= w in the weak order: inversions by positions (Right) or by values
/// (Left) are nested.
bool weak_leq(WeakSide side, const Permutation& u, const Permutation& w);

/// Columns are M_p in F coordinates, permutations in lexicographic order,
/// for the convention F_u = sum of M_w over w >= u (Up) or w <= u (Down).
Matrix m_to_f(unsigned m, WeakSide side = WeakSide::Right, ZetaDirection direction = ZetaDirection::Up);

/// Connected permutations up to the bound as an alphabet under the letter
/// order, with letter labels "231", and the matching F images in `images`.
struct ConnectedAlphabet {
  Alphabet alphabet;
  std::vector<Permutation> letters;
  std::vector<Element> images;
};
ConnectedAlphabet connected_alphabet(const HopfData& h, unsigned bound,
                                     LetterOrder order = LetterOrder::PseudoLex);

/// T_p in the fundamental basis.
Element t_element(const HopfData& h, const Permutation& p, LetterOrder order = LetterOrder::PseudoLex);
/// Lyndon permutations up to the bound, ascending under phi_compare, with
/// their T elements and infinite heights. Labels are one-line strings.
GeneratorFamily t_family(const HopfData& h, unsigned bound, LetterOrder order = LetterOrder::PseudoLex);
/// The sequence of family indices for the Lyndon decomposition of p.
Sequence t_sequence(const GeneratorFamily& family, const Permutation& p,
                    LetterOrder order = LetterOrder::PseudoLex);

/// Columns are T_p in F coordinates for the given column order.
Matrix t_to_f(const HopfData& h, const std::vector<Permutation>& order,
              LetterOrder letters = LetterOrder::PseudoLex);

}  // namespace hopfadams

#endif  // HOPFADAMS_SSYM_HPP
