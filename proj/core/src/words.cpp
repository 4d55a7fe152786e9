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

#include "hopfadams/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hopfadams {

Alphabet::Alphabet(std::vector<LetterInfo> letters) {
  for (auto& l : letters) add(std::move(l.label), std::move(l.degree));
}

Letter Alphabet::add(std::string label, MultiDegree degree) {
  if (degree.is_zero()) throw std::invalid_argument("Alphabet: letter '" + label + "' has zero degree");
  if (!letters_.empty() && degree.rank() != letters_.front().degree.rank())
    throw std::invalid_argument("Alphabet: letter '" + label + "' has mismatched grading rank");
  letters_.push_back({std::move(label), std::move(degree)});
  ranks_.push_back(ranks_.size());
  return static_cast<Letter>(letters_.size() - 1);
}

void Alphabet::set_order(std::vector<std::size_t> ranks) {
  if (ranks.size() != letters_.size()) throw std::invalid_argument("Alphabet: order has wrong size");
  std::vector<std::size_t> sorted = ranks;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw std::invalid_argument("Alphabet: order is not a permutation");
  ranks_ = std::move(ranks);
}

std::vector<Letter> Alphabet::sorted_letters() const {
  std::vector<Letter> out(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) out[ranks_[i]] = static_cast<Letter>(i);
  return out;
}

bool Alphabet::is_degree_compatible() const {
  for (std::size_t a = 0; a < letters_.size(); ++a)
    for (std::size_t b = 0; b < letters_.size(); ++b)
      if (graded_compare(letters_[a].degree, letters_[b].degree) < 0 && ranks_[a] > ranks_[b]) return false;
  return true;
}

MultiDegree word_degree(const Alphabet& alphabet, const Word& w) {
  if (alphabet.size() == 0) {
    if (!w.empty()) throw std::out_of_range("word_degree: letter outside the alphabet");
    return MultiDegree::zero(1);
  }
  MultiDegree d = MultiDegree::zero(alphabet.letter(0).degree.rank());
  for (Letter x : w) d += alphabet.letter(x).degree;
  return d;
}

std::strong_ordering pseudo_lex_compare(const Alphabet& alphabet, const Word& u, const Word& v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ru = alphabet.rank(u[i]);
    const std::size_t rv = alphabet.rank(v[i]);
    if (ru != rv) return ru <=> rv;
  }
  for (std::size_t i = n; i < u.size(); ++i) (void)alphabet.rank(u[i]);
  for (std::size_t i = n; i < v.size(); ++i) (void)alphabet.rank(v[i]);
  // The longer word extends the shorter one and is therefore smaller.
  return v.size() <=> u.size();
}

namespace {

bool less(const Alphabet& a, const Word& u, const Word& v) { return pseudo_lex_compare(a, u, v) < 0; }

}  // namespace

bool is_lyndon(const Alphabet& alphabet, const Word& u) {
  if (u.empty()) throw std::invalid_argument("is_lyndon: empty word");
  for (Letter x : u) (void)alphabet.rank(x);
  for (std::size_t k = 1; k < u.size(); ++k) {
    Word rotated(u.begin() + static_cast<std::ptrdiff_t>(k), u.end());
    rotated.insert(rotated.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k));
    if (!less(alphabet, rotated, u)) return false;
  }
  return true;
}

std::pair<Word, Word> shirshov_factorize(const Alphabet& alphabet, const Word& u) {
  if (u.size() < 2) throw std::invalid_argument("shirshov_factorize: word must have at least two letters");
  std::size_t best = 1;
  for (std::size_t k = 2; k < u.size(); ++k) {
    Word a(u.begin() + static_cast<std::ptrdiff_t>(k), u.end());
    Word b(u.begin() + static_cast<std::ptrdiff_t>(best), u.end());
    if (less(alphabet, b, a)) best = k;
  }
  const auto split = u.begin() + static_cast<std::ptrdiff_t>(best);
  return {Word(u.begin(), split), Word(split, u.end())};
}

std::vector<Word> lyndon_factorize(const Alphabet& alphabet, const Word& u) {
  for (Letter x : u) (void)alphabet.rank(x);
  // Duval's algorithm with letter comparison reversed: under the reversed
  // letter order the pseudo-lexicographic order is the opposite of the
  // ordinary lexicographic one, so the factors come out nondecreasing here.
  auto before = [&](Letter a, Letter b) { return alphabet.rank(a) > alphabet.rank(b); };
  std::vector<Word> out;
  const std::size_t n = u.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && !before(u[j], u[k])) {
      if (before(u[k], u[j]))
        k = i;
      else
        ++k;
      ++j;
    }
    const std::size_t period = j - k;
    while (i <= k) {
      out.emplace_back(u.begin() + static_cast<std::ptrdiff_t>(i),
                       u.begin() + static_cast<std::ptrdiff_t>(i + period));
      i += period;
    }
  }
  return out;
}

ShirshovTree ShirshovTree::leaf(Letter x) {
  ShirshovTree t;
  t.letter_ = x;
  return t;
}

ShirshovTree ShirshovTree::node(ShirshovTree left, ShirshovTree right) {
  ShirshovTree t;
  t.left_ = std::make_shared<const ShirshovTree>(std::move(left));
  t.right_ = std::make_shared<const ShirshovTree>(std::move(right));
  return t;
}

Word ShirshovTree::frontier() const {
  if (is_leaf()) return {letter_};
  Word w = left_->frontier();
  Word r = right_->frontier();
  w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::string ShirshovTree::to_string(const Alphabet& alphabet) const {
  if (is_leaf()) return alphabet.letter(letter_).label;
  return "[" + left_->to_string(alphabet) + "," + right_->to_string(alphabet) + "]";
}

ShirshovTree bracket_tree(const Alphabet& alphabet, const Word& u) {
  if (u.empty() || !is_lyndon(alphabet, u)) throw std::invalid_argument("bracket_tree: word is not Lyndon");
  if (u.size() == 1) return ShirshovTree::leaf(u.front());
  auto [left, right] = shirshov_factorize(alphabet, u);
  return ShirshovTree::node(bracket_tree(alphabet, left), bracket_tree(alphabet, right));
}

namespace {

void extend_words(const Alphabet& alphabet, const MultiDegree& remaining, Word& prefix, std::vector<Word>& out) {
  if (remaining.is_zero()) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t x = 0; x < alphabet.size(); ++x) {
    auto rest = subtract(remaining, alphabet.letter(static_cast<Letter>(x)).degree);
    if (!rest) continue;
    prefix.push_back(static_cast<Letter>(x));
    extend_words(alphabet, *rest, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> words_of_degree(const Alphabet& alphabet, const MultiDegree& degree) {
  std::vector<Word> out;
  Word prefix;
  extend_words(alphabet, degree, prefix, out);
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return less(alphabet, a, b); });
  return out;
}

std::string word_to_string(const Alphabet& alphabet, const Word& w, const std::string& sep) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += alphabet.letter(w[i]).label;
  }
  return s;
}

}  // namespace hopfadams
