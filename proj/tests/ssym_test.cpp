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

#include <hopfadams/convolution.hpp>
#include <hopfadams/instances.hpp>
#include <hopfadams/ssym.hpp>

#include <doctest.h>

#include <algorithm>

#include "bridge.hpp"
#include "oracles.hpp"

using namespace hopfadams;
using bridge::F;

namespace {

const HopfData& ssym5() {
  static const HopfData h = build_ssym(5);
  return h;
}

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<std::string> names(const std::vector<Permutation>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// Columns are images in M coordinates of the M basis, lexicographic order.
Matrix psi2_in_m(const HopfData& h, unsigned m) {
  const ConvolutionContext ctx(h, m);
  const Matrix change = m_to_f(m);
  return *inverse(change) * adams(ctx, 2).block(m) * change;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK(direct_sum(P("12"), P("231")) == P("12453"));
  CHECK(direct_sum(Permutation(), P("21")) == P("21"));
  CHECK(direct_sum(P("21"), Permutation()) == P("21"));
  CHECK(direct_sum(P("1"), P("1")) == P("12"));
  CHECK(P("231").to_string() == "231");
  CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").size() == 10);
  CHECK_THROWS_AS(P("13"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK(inverse(P("231")) == P("312"));
  CHECK(standardize(std::vector<unsigned>{7, 2, 9}) == P("213"));
  CHECK(permutations_of(3).size() == 6);
  CHECK(lex_rank(P("312")) == 4);
  CHECK(connected_split(P("13254")) == std::vector<Permutation>{P("1"), P("21"), P("21")});
  CHECK(join({P("1"), P("21"), P("21")}) == P("13254"));
}

TEST_CASE("connectivity and splitting agree with the oracle") {
  for (int m = 0; m <= 6; ++m)
    for (const auto& p : oracle::all_perms(m)) {
      const Permutation q = bridge::perm(p);
      CHECK(is_connected(q) == oracle::is_connected(p));
      std::vector<oracle::Perm> split;
      for (const auto& part : connected_split(q)) split.push_back(bridge::perm(part));
      CHECK(split == oracle::connected_split(p));
    }
}

TEST_CASE("classification of small permutations") {
  std::vector<std::string> connected, lyndon_only, other;
  for (unsigned m = 1; m <= 3; ++m)
    for (const auto& p : permutations_of(m)) {
      const PermClass c = classify(p);
      if (c.connected) {
        CHECK(c.lyndon);
        connected.push_back(p.to_string());
      } else if (c.lyndon) {
        lyndon_only.push_back(p.to_string());
      } else {
        other.push_back(p.to_string());
      }
    }
  CHECK(connected == std::vector<std::string>{"1", "21", "231", "312", "321"});
  CHECK(lyndon_only == std::vector<std::string>{"213"});
  CHECK(other == std::vector<std::string>{"12", "123", "132"});
  CHECK(names(classify(P("132")).factors) == std::vector<std::string>{"1", "21"});
  CHECK(classify(P("123")).length() == 3);
  CHECK(names(classify(P("321")).factors) == std::vector<std::string>{"321"});
  CHECK(classify(Permutation()).length() == 0);
}

TEST_CASE("Lyndon permutations agree with the product definition") {
  std::vector<std::size_t> counts;
  for (int m = 1; m <= 5; ++m) {
    std::size_t n = 0;
    for (const auto& p : oracle::all_perms(m)) {
      const PermClass c = classify(bridge::perm(p));
      CHECK(c.lyndon == oracle::is_lyndon_perm(p));
      CHECK(c.length() == oracle::lyndon_length(p));
      CHECK(join(c.factors) == bridge::perm(p));
      for (std::size_t i = 1; i < c.factors.size(); ++i)
        CHECK(prec_compare(c.factors[i - 1], c.factors[i]) <= 0);
      for (const auto& f : c.factors) CHECK(classify(f).lyndon);
      n += c.lyndon;
    }
    counts.push_back(n);
  }
  CHECK(counts == std::vector<std::size_t>{1, 1, 4, 17, 92});
}

TEST_CASE("the product order is pseudo-lexicographic on one-line words") {
  const std::vector<Permutation> chain{P("123"), P("12"), P("132"), P("1"), P("213"),
                                       P("21"),  P("231"), P("312"), P("321")};
  for (std::size_t i = 1; i < chain.size(); ++i) CHECK(prec_compare(chain[i - 1], chain[i]) < 0);
  for (int m = 1; m <= 4; ++m)
    for (const auto& a : oracle::all_perms(m))
      for (int k = 1; k <= 4; ++k)
        for (const auto& b : oracle::all_perms(k)) {
          std::vector<int> ua(a.begin(), a.end()), ub(b.begin(), b.end());
          const auto c = prec_compare(bridge::perm(a), bridge::perm(b));
          CHECK((c < 0) == oracle::plex_less(ua, ub));
          CHECK(phi_compare(LetterOrder::PseudoLex, bridge::perm(a), bridge::perm(b)) == c);
        }
}

TEST_CASE("Lyndon permutations are Lyndon words on connected letters") {
  for (int m = 1; m <= 4; ++m)
    for (const auto& p : oracle::all_perms(m))
      CHECK(oracle::is_lyndon_perm(p) == oracle::is_lyndon_perm_word(oracle::connected_split(p)));
}

TEST_CASE("orders on the symmetric group of degree three") {
  CHECK(names(sorted_permutations(3, PermOrder::Prec)) ==
        std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
  CHECK(names(sorted_permutations(3, PermOrder::PrecL)) ==
        std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
  CHECK(names(sorted_permutations(3, PermOrder::PrecR)) ==
        std::vector<std::string>{"123", "213", "132", "231", "312", "321"});
}

TEST_CASE("smaller degrees come first under the sequence orders") {
  for (PermOrder o : {PermOrder::PrecL, PermOrder::PrecR})
    for (unsigned m = 1; m <= 3; ++m)
      for (const auto& a : permutations_of(m))
        for (const auto& b : permutations_of(m + 1)) CHECK(perm_compare(o, a, b) < 0);
}

TEST_CASE("the left order matches the product order within one degree") {
  for (unsigned m = 1; m <= 5; ++m) {
    const auto ps = permutations_of(m);
    for (const auto& a : ps)
      for (const auto& b : ps) CHECK(perm_compare(PermOrder::PrecL, a, b) == prec_compare(a, b));
  }
}

TEST_CASE("fundamental basis structure") {
  const HopfData& h = ssym5();
  CHECK(f_label(P("231")) == "F:231");
  CHECK(f_label(Permutation()) == "1");
  CHECK(f_product(h, P("1"), P("1")) == F(h, "12") + F(h, "21"));
  CHECK(f_product(h, Permutation(), P("231")) == F(h, "231"));
  CHECK(f_product(h, P("21"), P("1")) == F(h, "213") + F(h, "231") + F(h, "321"));
  CHECK(shifted_shuffles(P("12"), P("1")).size() == 3);
  CHECK(shifted_shuffles(P("21"), P("21")).size() == 6);
  Tensor d21;
  d21.add(f_index(h, P("21")), h.unit(), 1);
  d21.add(f_index(h, P("1")), f_index(h, P("1")), 1);
  d21.add(h.unit(), f_index(h, P("21")), 1);
  CHECK(f_coproduct(h, P("21")) == d21);
  CHECK(deconcatenations(P("231")).size() == 4);
  CHECK(deconcatenations(P("231"))[1] == std::pair{P("1"), P("21")});
  std::vector<std::size_t> dims;
  for (const auto& s : h.basis().strata()) dims.push_back(s.dim());
  CHECK(dims == std::vector<std::size_t>{1, 1, 2, 6, 24, 120});
  CHECK_FALSE(is_commutative(h));
  CHECK_FALSE(is_cocommutative(h));
  CHECK(multiply(h, F(h, "1"), F(h, "21")) != multiply(h, F(h, "21"), F(h, "1")));
}

TEST_CASE("second Adams operator in the fundamental basis of degree three") {
  const HopfData& h = ssym5();
  const ConvolutionContext ctx(h, 3);
  const GradedMap psi = adams(ctx, 2);
  CHECK(apply(ctx, psi, F(h, "123")) == F(h, "123", 4) + F(h, "132") + F(h, "213") + F(h, "231") + F(h, "312"));
  CHECK(apply(ctx, psi, F(h, "231")) ==
        F(h, "123") + F(h, "132", 2) + F(h, "231", 2) + F(h, "312", 2) + F(h, "321"));
  CHECK(apply(ctx, psi, F(h, "321")) == F(h, "132") + F(h, "213") + F(h, "231") + F(h, "312") + F(h, "321", 4));
}

TEST_CASE("monomial basis") {
  CHECK(m_to_f(1) == Matrix::identity(1));
  for (unsigned m = 1; m <= 4; ++m)
    for (WeakSide side : {WeakSide::Left, WeakSide::Right})
      for (ZetaDirection dir : {ZetaDirection::Up, ZetaDirection::Down}) {
        const Matrix c = m_to_f(m, side, dir);
        for (std::size_t i = 0; i < c.rows(); ++i) CHECK(c(i, i) == 1);
        CHECK(inverse(c).has_value());
      }
  CHECK(weak_leq(WeakSide::Right, P("123"), P("321")));
  // Position inversions: 213 {(1,2)}, 231 {(1,3),(2,3)}, 312 {(1,2),(1,3)}.
  CHECK(weak_leq(WeakSide::Right, P("213"), P("312")));
  CHECK_FALSE(weak_leq(WeakSide::Right, P("213"), P("231")));
  CHECK_FALSE(weak_leq(WeakSide::Right, P("213"), P("132")));
  // Value inversions: 213 {(1,2)}, 231 {(1,2),(1,3)}, 312 {(1,3),(2,3)}.
  CHECK(weak_leq(WeakSide::Left, P("213"), P("231")));
  CHECK_FALSE(weak_leq(WeakSide::Left, P("213"), P("312")));

  const Matrix m = psi2_in_m(ssym5(), 3);
  // Lexicographic order: 123, 132, 213, 231, 312, 321.
  const Matrix expected{{2, 0, 0, 1, 1, 0}, {0, 2, 0, 2, 0, 1}, {0, 0, 2, 0, 2, 1},
                        {0, 0, 0, 3, 1, 2}, {0, 0, 0, 1, 3, 2}, {0, 0, 0, 0, 0, 8}};
  CHECK(m == expected);
}

TEST_CASE("T basis expansions") {
  const HopfData& h = ssym5();
  CHECK(t_element(h, Permutation()) == Element::basis(h.unit()));
  CHECK(t_element(h, P("12")) == F(h, "12") + F(h, "21"));
  CHECK(t_element(h, P("123")) ==
        F(h, "123") + F(h, "132") + F(h, "213") + F(h, "231") + F(h, "312") + F(h, "321"));
  CHECK(t_element(h, P("213")) == F(h, "132", -1) + F(h, "213") + F(h, "231") + F(h, "312", -1));
  CHECK(t_element(h, P("132")) == F(h, "132") + F(h, "312") + F(h, "321"));
  for (const char* c : {"231", "312", "321"}) CHECK(t_element(h, P(c)) == F(h, c));
  for (int m = 0; m <= 4; ++m)
    for (const auto& p : oracle::all_perms(m))
      CHECK(t_element(h, bridge::perm(p)) == bridge::element(h, oracle::t_element(p)));
}

TEST_CASE("T family and sequences") {
  const HopfData& h = ssym5();
  const GeneratorFamily fam = t_family(h, 4);
  CHECK(fam.size() == 23);
  CHECK(fam.all_heights_infinite());
  CHECK(fam[0].label == "1");
  for (std::size_t i = 1; i < fam.size(); ++i)
    CHECK(phi_compare(LetterOrder::PseudoLex, P(fam[i - 1].label.c_str()), P(fam[i].label.c_str())) < 0);
  const Sequence v = t_sequence(fam, P("132"));
  CHECK(sequence_to_string(fam, v) == "(1,21)");
  const auto order = sorted_permutations(3, PermOrder::PrecR);
  const Matrix t = t_to_f(h, order);
  CHECK(t.column(1) == component(h, t_element(h, P("213")), 3));
}

TEST_CASE("connected alphabets") {
  const HopfData& h = ssym5();
  std::vector<std::size_t> counts(6, 0);
  const ConnectedAlphabet ca = connected_alphabet(h, 5);
  for (const auto& p : ca.letters) counts[p.size()]++;
  CHECK(counts == std::vector<std::size_t>{0, 1, 1, 3, 13, 71});
  CHECK(ca.alphabet.letter(0).label == "1");
  CHECK_FALSE(ca.alphabet.is_degree_compatible());
  CHECK(connected_alphabet(h, 5, LetterOrder::DegreeFirst).alphabet.is_degree_compatible());
  CHECK(letter_compare(LetterOrder::PseudoLex, P("2341"), P("321")) < 0);
  CHECK(letter_compare(LetterOrder::DegreeFirst, P("2341"), P("321")) > 0);
}

TEST_CASE("the algebra of permutations is a Hopf algebra") {
  const Report r = verify_bialgebra(build_ssym(4));
  CHECK_MESSAGE(r.passed(), r.to_text());
}
