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

#include <hopfadams/words.hpp>

#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"

using namespace hopfadams;

namespace {

Alphabet letters(int k) {
  std::vector<LetterInfo> info;
  for (int i = 0; i < k; ++i) info.push_back({std::string(1, static_cast<char>('1' + i)), MultiDegree{1}});
  return Alphabet(info);
}

Word word(const std::vector<int>& w) { return Word(w.begin(), w.end()); }

std::vector<int> ints(const Word& w) { return std::vector<int>(w.begin(), w.end()); }

std::vector<std::vector<int>> words_up_to(int k, int length, int from = 0) {
  std::vector<std::vector<int>> out;
  for (int n = from; n <= length; ++n)
    for (auto& w : oracle::all_words(k, n)) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("pseudo-lexicographic examples over the positive integers") {
  const Alphabet z = letters(3);
  CHECK(pseudo_lex_compare(z, word({0, 1, 2}), word({0, 1})) < 0);
  CHECK(pseudo_lex_compare(z, word({0, 2, 1}), word({0})) < 0);
  CHECK(pseudo_lex_compare(z, word({0}), word({1, 0, 2})) < 0);
  CHECK(pseudo_lex_compare(z, word({1, 2}), word({1, 2})) == 0);
  CHECK(pseudo_lex_compare(z, word({}), word({0})) > 0);
  CHECK_THROWS_AS(pseudo_lex_compare(z, word({5}), word({0})), std::out_of_range);
}

TEST_CASE("pseudo-lexicographic order is a strict total order") {
  const Alphabet ab = letters(2);
  const auto small = words_up_to(2, 4);
  for (const auto& u : small)
    for (const auto& v : small) {
      const auto uv = pseudo_lex_compare(ab, word(u), word(v));
      CHECK((uv == 0) == (u == v));
      CHECK((uv < 0) == (pseudo_lex_compare(ab, word(v), word(u)) > 0));
      if (uv < 0)
        for (const auto& w : small)
          if (pseudo_lex_compare(ab, word(v), word(w)) < 0) CHECK(pseudo_lex_compare(ab, word(u), word(w)) < 0);
    }
  const auto all = words_up_to(2, 6);
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (const auto& v : all) CHECK((pseudo_lex_compare(ab, word(all[i]), word(v)) < 0) == oracle::plex_less(all[i], v));
}

TEST_CASE("Lyndon examples") {
  const Alphabet xy = letters(2);
  CHECK(is_lyndon(xy, word({0})));
  CHECK(is_lyndon(xy, word({1})));
  CHECK(is_lyndon(xy, word({1, 0})));
  CHECK_FALSE(is_lyndon(xy, word({0, 1})));
  CHECK_FALSE(is_lyndon(xy, word({0, 0})));
  CHECK_THROWS_AS(is_lyndon(xy, word({})), std::invalid_argument);
}

TEST_CASE("is_lyndon agrees with the rotation definition") {
  for (int k : {2, 3}) {
    const Alphabet a = letters(k);
    for (const auto& u : words_up_to(k, k == 2 ? 8 : 5, 1)) CHECK(is_lyndon(a, word(u)) == oracle::is_lyndon(u));
  }
}

TEST_CASE("Shirshov factorization") {
  const Alphabet xy = letters(2);
  auto [l, r] = shirshov_factorize(xy, word({1, 0}));
  CHECK(l == word({1}));
  CHECK(r == word({0}));
  // yyx: of the suffixes yx and x, the first letter y > x decides.
  auto [l2, r2] = shirshov_factorize(xy, word({1, 1, 0}));
  CHECK(l2 == word({1}));
  CHECK(r2 == word({1, 0}));
  CHECK_THROWS_AS(shirshov_factorize(xy, word({0})), std::invalid_argument);

  for (const auto& u : words_up_to(2, 8, 2)) {
    const auto [ul, ur] = shirshov_factorize(xy, word(u));
    CHECK(ints(ur) == oracle::greatest_proper_suffix(u));
    Word joined = ul;
    joined.insert(joined.end(), ur.begin(), ur.end());
    CHECK(joined == word(u));
    const bool split_lyndon =
        oracle::is_lyndon(ints(ul)) && oracle::is_lyndon(ints(ur)) && oracle::plex_less(ints(ur), ints(ul));
    CHECK(is_lyndon(xy, word(u)) == split_lyndon);
  }
}

TEST_CASE("Lyndon factorization is the unique nondecreasing one") {
  const Alphabet xy = letters(2);
  CHECK(lyndon_factorize(xy, word({})).empty());
  CHECK(lyndon_factorize(xy, word({1})) == std::vector<Word>{word({1})});
  for (const auto& u : words_up_to(2, 8, 1)) {
    const auto candidates = oracle::lyndon_factorizations(u);
    REQUIRE(candidates.size() == 1);
    const auto got = lyndon_factorize(xy, word(u));
    REQUIRE(got.size() == candidates[0].size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(ints(got[i]) == candidates[0][i]);
  }
  const Alphabet abc = letters(3);
  for (const auto& u : words_up_to(3, 5, 1)) {
    const auto candidates = oracle::lyndon_factorizations(u);
    REQUIRE(candidates.size() == 1);
    const auto got = lyndon_factorize(abc, word(u));
    REQUIRE(got.size() == candidates[0].size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(ints(got[i]) == candidates[0][i]);
  }
}

TEST_CASE("words on connected permutations") {
  // 1 below 21: the single letter 1 is smaller than 2.
  const Alphabet c(std::vector<LetterInfo>{{"1", MultiDegree{1}}, {"21", MultiDegree{2}}});
  const Word w{1, 0};
  CHECK(is_lyndon(c, w));
  const auto [l, r] = shirshov_factorize(c, w);
  CHECK(l == Word{1});
  CHECK(r == Word{0});
  const ShirshovTree t = bracket_tree(c, w);
  CHECK(t.to_string(c) == "[21,1]");
  CHECK(lyndon_factorize(c, Word{0, 1}) == std::vector<Word>{Word{0}, Word{1}});
}

TEST_CASE("bracket trees follow the Shirshov splits") {
  const Alphabet xy = letters(2);
  CHECK(bracket_tree(xy, word({0})).is_leaf());
  CHECK_THROWS_AS(bracket_tree(xy, word({0, 1})), std::invalid_argument);
  for (const auto& u : words_up_to(2, 7, 2)) {
    if (!oracle::is_lyndon(u)) continue;
    const ShirshovTree t = bracket_tree(xy, word(u));
    CHECK(t.frontier() == word(u));
    auto check_node = [&](auto&& self, const ShirshovTree& node) -> void {
      if (node.is_leaf()) return;
      const auto [l, r] = shirshov_factorize(xy, node.frontier());
      CHECK(node.left().frontier() == l);
      CHECK(node.right().frontier() == r);
      self(self, node.left());
      self(self, node.right());
    };
    check_node(check_node, t);
  }
  CHECK(bracket_tree(xy, word({1, 1, 0})).to_string(xy) == "[2,[2,1]]");
}

TEST_CASE("words of a degree are listed ascending and without repeats") {
  const Alphabet g(std::vector<LetterInfo>{{"a", MultiDegree{1}}, {"b", MultiDegree{2}}});
  std::vector<std::size_t> counts;
  for (unsigned m = 0; m <= 7; ++m) {
    const auto ws = words_of_degree(g, MultiDegree{m});
    counts.push_back(ws.size());
    for (std::size_t i = 1; i < ws.size(); ++i) CHECK(pseudo_lex_compare(g, ws[i - 1], ws[i]) < 0);
    for (const auto& w : ws) CHECK(word_degree(g, w) == MultiDegree{m});
  }
  CHECK(counts == std::vector<std::size_t>{1, 1, 2, 3, 5, 8, 13, 21});
}

TEST_CASE("alphabet order and degree compatibility") {
  Alphabet g(std::vector<LetterInfo>{{"a", MultiDegree{1}}, {"b", MultiDegree{2}}});
  CHECK(g.is_degree_compatible());
  g.set_order({1, 0});
  CHECK(g.sorted_letters() == std::vector<Letter>{1, 0});
  CHECK_FALSE(g.is_degree_compatible());
  CHECK(pseudo_lex_compare(g, Word{1}, Word{0}) < 0);
  const Letter c = g.add("c", MultiDegree{3});
  CHECK(g.rank(c) == 2);
  CHECK(word_to_string(g, Word{0, 1, c}) == "a.b.c");
  CHECK(word_degree(g, Word{}) == MultiDegree{0});
}
